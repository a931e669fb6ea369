#include <doctest.h>

#include "hyperinv/errors.hpp"
#include "hyperinv/serialization.hpp"
#include "test_util.hpp"

using namespace hyperinv;
using testutil::random_tensor;

TEST_CASE("tensor document round trip is exact") {
  SeededRng rng(111);
  for (int rep = 0; rep < 10; ++rep) {
    const int rank = 2 + static_cast<int>(rng.below(3));
    const int dim = 2 + static_cast<int>(rng.below(2));
    auto t = random_tensor(rng, rank, dim,
                           rep % 2 ? Variance::covariant : Variance::contravariant);
    // exercise awkward magnitudes
    t[0] = 1e-300;
    t[1] = -0.0;
    if (t.size() > 2) t[2] = 1.0 / 3.0;
    const std::string text = emit_tensor_document(t);
    const auto doc = parse_tensor_document(text);
    CHECK(doc.tensor.rank() == t.rank());
    CHECK(doc.tensor.dim() == t.dim());
    CHECK(doc.tensor.variance() == t.variance());
    for (std::size_t i = 0; i < t.size(); ++i) {
      // bit-exact round trip
      CHECK(doc.tensor[i] == t[i]);
    }
  }
}

TEST_CASE("tensor document validation") {
  SUBCASE("unknown fields are rejected") {
    CHECK_THROWS_AS(parse_tensor_document(R"({"rank":2,"dim":2,"layout":"row-major",
      "variance":"covariant","data":[1,0,0,1],"color":"red"})"),
                    ParseError);
  }
  SUBCASE("wrong data length") {
    CHECK_THROWS_AS(parse_tensor_document(R"({"rank":2,"dim":2,"layout":"row-major",
      "variance":"covariant","data":[1,0,0]})"),
                    ParseError);
  }
  SUBCASE("bad layout") {
    CHECK_THROWS_AS(parse_tensor_document(R"({"rank":1,"dim":2,"layout":"column-major",
      "variance":"covariant","data":[1,0]})"),
                    ParseError);
  }
  SUBCASE("symmetric flag is checked") {
    CHECK_THROWS_AS(parse_tensor_document(R"({"rank":2,"dim":2,"layout":"row-major",
      "variance":"covariant","data":[1,5,0,1],"symmetric":true})"),
                    ParseError);
    const auto ok = parse_tensor_document(R"({"rank":2,"dim":2,"layout":"row-major",
      "variance":"covariant","data":[1,5,5,1],"symmetric":true})");
    CHECK(ok.symmetric.has_value());
    CHECK(*ok.symmetric);
  }
  SUBCASE("malformed JSON carries the origin in the message") {
    try {
      parse_tensor_document("{nope", "input.json");
      CHECK(false);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("input.json") != std::string::npos);
    }
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_tensor_document("/nonexistent/tensor.json"), ParseError);
  }
}

TEST_CASE("expansion documents") {
  const auto exp = build_expansion(4, 2);
  SUBCASE("json form") {
    const std::string text = emit_expansion_json(exp);
    CHECK(text.find("\"rank\": 4") != std::string::npos);
    CHECK(text.find("\"order\": 2") != std::string::npos);
    CHECK(text.find("\"prefactor_denominator\": 2") != std::string::npos);
    CHECK(text.find("\"coefficient\": -4") != std::string::npos);
    // emitted term coefficients must sum to zero for order >= 2
    CHECK(exp.coefficient_sum() == 0);
  }
  SUBCASE("latex form") {
    const std::string text = emit_expansion_latex(exp);
    CHECK(text.find("\\frac{1}{2}") != std::string::npos);
    CHECK(text.find("\\begin{pmatrix}") != std::string::npos);
    CHECK(text.find("- 4\\,") != std::string::npos);
  }
  SUBCASE("deterministic output") {
    CHECK(emit_expansion_json(exp) == emit_expansion_json(build_expansion(4, 2)));
  }
}
