#include <cmath>

#include <doctest.h>

#include "hyperinv/errors.hpp"
#include "hyperinv/invariant.hpp"
#include "hyperinv/special_cases.hpp"
#include "test_util.hpp"

using namespace hyperinv;
using testutil::random_symmetric_tensor;
using testutil::random_tensor;

namespace {

HyperMatrix diag3(double x, double y) {
  HyperMatrix a(3, 2, Variance::covariant);
  a.at({0, 0, 0}) = x;
  a.at({1, 1, 1}) = y;
  return a;
}

}  // namespace

TEST_CASE("det_rank4_d2") {
  SUBCASE("diagonal") {
    HyperMatrix A(4, 2, Variance::covariant);
    A.at({0, 0, 0, 0}) = 2.0;
    A.at({1, 1, 1, 1}) = 3.0;
    CHECK(det_rank4_d2(A) == doctest::Approx(6.0));
  }
  SUBCASE("single positive cross term") {
    HyperMatrix A(4, 2, Variance::covariant);
    A.at({0, 0, 1, 1}) = 1.0;
    A.at({1, 1, 0, 0}) = 1.0;
    CHECK(det_rank4_d2(A) == doctest::Approx(1.0));
  }
  SUBCASE("agrees with the alternating-sum and epsilon routes") {
    SeededRng rng(81);
    const auto A = random_tensor(rng, 4, 2);
    const double d1 = det_rank4_d2(A);
    CHECK(d1 == doctest::Approx(discriminant(A, 2)).epsilon(1e-10));
    CHECK(d1 == doctest::Approx(epsilon_det(A)).epsilon(1e-10));
  }
  SUBCASE("shape check") {
    HyperMatrix A(4, 3, Variance::covariant);
    CHECK_THROWS_AS(det_rank4_d2(A), std::invalid_argument);
  }
}

TEST_CASE("c2_sym_rank4_d2") {
  SUBCASE("unit diagonal") {
    HyperMatrix G(4, 2, Variance::covariant);
    G.at({0, 0, 0, 0}) = 1.0;
    G.at({1, 1, 1, 1}) = 1.0;
    CHECK(c2_sym_rank4_d2(G) == doctest::Approx(1.0));
  }
  SUBCASE("full mixed orbit") {
    HyperMatrix G(4, 2, Variance::covariant);
    G.at({0, 0, 0, 0}) = 1.0;
    G.at({1, 1, 1, 1}) = 1.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            if (i + j + k + l == 2) G.at({i, j, k, l}) = 1.0;
    CHECK(c2_sym_rank4_d2(G) == doctest::Approx(4.0));
  }
  SUBCASE("equals the general determinant on symmetric input") {
    SeededRng rng(82);
    const auto G = random_symmetric_tensor(rng, 4, 2);
    CHECK(c2_sym_rank4_d2(G) == doctest::Approx(det_rank4_d2(G)).epsilon(1e-12));
  }
  SUBCASE("rejects non-symmetric input") {
    SeededRng rng(83);
    const auto A = random_tensor(rng, 4, 2);
    CHECK_THROWS_AS(c2_sym_rank4_d2(A), std::invalid_argument);
  }
}

TEST_CASE("thirdrank_discriminants_d2") {
  SUBCASE("diagonal") {
    const auto a = diag3(1.0, 1.0);
    const auto [c1, c2] = thirdrank_discriminants_d2(a);
    CHECK(c1 == doctest::Approx(2.0));
    CHECK(c2 == doctest::Approx(1.0));
  }
  SUBCASE("pure off-diagonal orbit") {
    SeededRng rng(84);
    HyperMatrix a(3, 2, Variance::covariant);
    a.at({0, 0, 1}) = 1.0;
    a.at({0, 1, 0}) = 2.0;
    a.at({1, 0, 0}) = 3.0;
    a.at({1, 1, 0}) = 4.0;
    a.at({1, 0, 1}) = 5.0;
    a.at({0, 1, 1}) = 6.0;
    const auto [c1, c2] = thirdrank_discriminants_d2(a);
    CHECK(c1 == 0.0);
    CHECK(c2 == doctest::Approx(-(1.0 * 4.0 + 2.0 * 5.0 + 3.0 * 6.0) / 3.0));
  }
  SUBCASE("agrees with the signed-tuple oracle on symmetric input") {
    SeededRng rng(85);
    const auto a = random_symmetric_tensor(rng, 3, 2);
    const auto delta = make_unit_delta(3, 2);
    const auto [c1, c2] = thirdrank_discriminants_d2(a);
    CHECK(c1 == doctest::Approx(discriminant_oracle(a, delta, 1)).epsilon(1e-12));
    CHECK(c2 == doctest::Approx(discriminant_oracle(a, delta, 2)).epsilon(1e-12));
  }
}

TEST_CASE("thirdrank_pseudo_inverse") {
  SUBCASE("entry formulas") {
    SeededRng rng(86);
    const auto a = random_symmetric_tensor(rng, 3, 2);
    const auto [c1, c2] = thirdrank_discriminants_d2(a);
    (void)c1;
    const auto res = thirdrank_pseudo_inverse(a);
    CHECK(res.inverse.at({0, 0, 0}) == doctest::Approx(a.at({1, 1, 1}) / c2));
    CHECK(res.inverse.at({0, 0, 1}) == doctest::Approx(-a.at({1, 1, 0}) / (3.0 * c2)));
  }
  SUBCASE("diagonal slots contract to one") {
    SeededRng rng(87);
    const auto a = random_symmetric_tensor(rng, 3, 2);
    const auto res = thirdrank_pseudo_inverse(a);
    for (int i = 0; i < 2; ++i) {
      double acc = 0.0;
      for (int k1 = 0; k1 < 2; ++k1)
        for (int k2 = 0; k2 < 2; ++k2) acc += a.at({i, k1, k2}) * res.inverse.at({i, k1, k2});
      CHECK(acc == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  SUBCASE("generic defect is macroscopic") {
    SeededRng rng(88);
    int nonzero = 0;
    for (int rep = 0; rep < 50; ++rep) {
      const auto a = random_symmetric_tensor(rng, 3, 2);
      try {
        if (thirdrank_pseudo_inverse(a).defect > 1e-6) ++nonzero;
      } catch (const SingularError&) {
      }
    }
    CHECK(nonzero >= 49);
  }
}

TEST_CASE("thirdrank_det_d2") {
  SUBCASE("unit diagonal") {
    CHECK(thirdrank_det_d2(diag3(1.0, 1.0)) == doctest::Approx(1.0 / 18.0));
  }
  SUBCASE("pure off-diagonal symmetric value") {
    HyperMatrix a(3, 2, Variance::covariant);
    a.at({0, 0, 1}) = a.at({0, 1, 0}) = a.at({1, 0, 0}) = 1.0;
    a.at({0, 1, 1}) = a.at({1, 0, 1}) = a.at({1, 1, 0}) = 1.0;
    CHECK(thirdrank_det_d2(a) == doctest::Approx(-3.0 / 18.0));
  }
  SUBCASE("eighteen times the determinant is the hyperdeterminant") {
    SeededRng rng(89);
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_symmetric_tensor(rng, 3, 2);
      CHECK(18.0 * thirdrank_det_d2(a) ==
            doctest::Approx(cayley_hyperdet(a)).epsilon(1e-10));
    }
  }
}

TEST_CASE("thirdrank_inverse_d2") {
  SUBCASE("diagonal input inverts entrywise") {
    const auto inv = thirdrank_inverse_d2(diag3(1.0, 1.0));
    CHECK(inv.at({0, 0, 0}) == doctest::Approx(1.0));
    CHECK(inv.at({1, 1, 1}) == doctest::Approx(1.0));
    CHECK(inv.at({0, 0, 1}) == doctest::Approx(0.0));
  }
  SUBCASE("leading numerator structure") {
    SeededRng rng(90);
    const auto a = random_symmetric_tensor(rng, 3, 2);
    const double a000 = a.at({0, 0, 0}), a001 = a.at({0, 0, 1}), a011 = a.at({0, 1, 1}),
                 a111 = a.at({1, 1, 1});
    const double bracket = 18.0 * thirdrank_det_d2(a);
    const auto inv = thirdrank_inverse_d2(a);
    CHECK(inv.at({0, 0, 0}) ==
          doctest::Approx((a000 * a111 * a111 + 2.0 * a011 * a011 * a011 -
                           3.0 * a001 * a011 * a111) /
                          bracket)
              .epsilon(1e-10));
    CHECK(inv.at({0, 0, 1}) ==
          doctest::Approx((2.0 * a111 * a001 * a001 - a000 * a011 * a111 -
                           a001 * a011 * a011) /
                          bracket)
              .epsilon(1e-10));
  }
  SUBCASE("defining contraction") {
    SeededRng rng(91);
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_symmetric_tensor(rng, 3, 2);
      double scale = a.max_abs();
      scale = scale * scale * scale * scale;
      if (std::fabs(thirdrank_det_d2(a)) <= 1e-6 * scale) continue;
      const auto inv = thirdrank_inverse_d2(a);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          double acc = 0.0;
          for (int k1 = 0; k1 < 2; ++k1)
            for (int k2 = 0; k2 < 2; ++k2) acc += inv.at({i, k1, k2}) * a.at({j, k1, k2});
          CHECK(acc == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
        }
    }
  }
  SUBCASE("normalization: full contraction equals the dimension") {
    SeededRng rng(92);
    const auto a = random_symmetric_tensor(rng, 3, 2);
    const auto inv = thirdrank_inverse_d2(a);
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += inv[i] * a[i];
    CHECK(acc == doctest::Approx(2.0).epsilon(1e-9));
  }
}

TEST_CASE("odd_rank_epsilon_det") {
  SUBCASE("vanishes identically") {
    SeededRng rng(93);
    for (auto [r, d] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}}) {
      for (int rep = 0; rep < 20; ++rep) {
        const auto a = random_tensor(rng, r, d);
        double scale = 1.0;
        for (int i = 0; i < d; ++i) scale *= a.max_abs();
        CHECK(std::fabs(odd_rank_epsilon_det(a)) <= 1e-12 * scale);
      }
    }
  }
  SUBCASE("zero tensor gives exactly zero") {
    HyperMatrix a(3, 2, Variance::covariant);
    CHECK(odd_rank_epsilon_det(a) == 0.0);
  }
  SUBCASE("even rank rejected") {
    HyperMatrix a(4, 2, Variance::covariant);
    CHECK_THROWS_AS(odd_rank_epsilon_det(a), std::invalid_argument);
  }
}

TEST_CASE("cayley_hyperdet") {
  SUBCASE("diagonal") { CHECK(cayley_hyperdet(diag3(1.0, 1.0)) == doctest::Approx(1.0)); }
  SUBCASE("single square pair") {
    HyperMatrix a(3, 2, Variance::covariant);
    a.at({0, 0, 1}) = 1.0;
    a.at({1, 1, 0}) = 1.0;
    CHECK(cayley_hyperdet(a) == doctest::Approx(1.0));
  }
  SUBCASE("slot-permutation invariance on symmetric input") {
    SeededRng rng(94);
    const auto a = random_symmetric_tensor(rng, 3, 2);
    const double base = cayley_hyperdet(a);
    for (const auto& p : lex_permutations(3)) {
      HyperMatrix moved(3, 2, Variance::covariant);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) {
            const int idx[3] = {i, j, k};
            moved.at({idx[p[0]], idx[p[1]], idx[p[2]]}) = a.at({i, j, k});
          }
      CHECK(cayley_hyperdet(moved) == base);
    }
  }
}

TEST_CASE("g_matrix") {
  SUBCASE("diagonal input") {
    const auto res = g_matrix(diag3(1.0, 1.0));
    CHECK(res.g.at({0, 0}) == doctest::Approx(0.0));
    CHECK(res.g.at({0, 1}) == doctest::Approx(1.0));
    CHECK(res.g.at({1, 0}) == doctest::Approx(1.0));
    CHECK(res.g.at({1, 1}) == doctest::Approx(0.0));
    CHECK(res.det_g == doctest::Approx(-1.0));
  }
  SUBCASE("entry formulas on general input") {
    SeededRng rng(95);
    const auto a = random_tensor(rng, 3, 2);
    const auto res = g_matrix(a);
    auto v = [&](int i, int j, int k) { return a.at({i, j, k}); };
    CHECK(res.g.at({0, 0}) ==
          doctest::Approx(2.0 * (v(0, 0, 0) * v(0, 1, 1) - v(0, 0, 1) * v(0, 1, 0))));
    CHECK(res.g.at({0, 1}) == doctest::Approx(v(0, 0, 0) * v(1, 1, 1) - v(0, 0, 1) * v(1, 1, 0) -
                                              v(0, 1, 0) * v(1, 0, 1) + v(0, 1, 1) * v(1, 0, 0)));
    CHECK(res.g.at({1, 1}) ==
          doctest::Approx(2.0 * (v(1, 1, 1) * v(1, 0, 0) - v(1, 1, 0) * v(1, 0, 1))));
  }
  SUBCASE("determinant is minus the hyperdeterminant, general input") {
    SeededRng rng(96);
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_tensor(rng, 3, 2);
      CHECK(g_matrix(a).det_g == doctest::Approx(-cayley_hyperdet(a)).epsilon(1e-10));
    }
  }
}

TEST_CASE("sixth_rank_embed and det") {
  SUBCASE("leading components") {
    SeededRng rng(97);
    const auto a = random_tensor(rng, 3, 2);
    const auto A6 = sixth_rank_embed(a);
    CHECK(A6.at({0, 0, 0, 0, 0, 0}) == doctest::Approx(a.at({0, 0, 0}) * a.at({0, 0, 0})));
    CHECK(A6.at({0, 0, 0, 0, 1, 1}) ==
          doctest::Approx(0.5 * (a.at({0, 0, 0}) * a.at({0, 1, 1}) +
                                 a.at({0, 0, 1}) * a.at({0, 1, 0}))));
  }
  SUBCASE("embedding determinant recovers the hyperdeterminant") {
    SeededRng rng(98);
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_symmetric_tensor(rng, 3, 2);
      CHECK(sixth_rank_det_d2(sixth_rank_embed(a)) ==
            doctest::Approx(0.75 * cayley_hyperdet(a)).epsilon(1e-10));
    }
  }
  SUBCASE("determinant routes agree on arbitrary rank-6 input") {
    SeededRng rng(99);
    const auto A6 = random_tensor(rng, 6, 2);
    CHECK(sixth_rank_det_d2(A6) == doctest::Approx(epsilon_det(A6)).epsilon(1e-10));
    const auto delta = make_unit_delta(6, 2);
    CHECK(sixth_rank_det_d2(A6) ==
          doctest::Approx(discriminant_oracle(A6, delta, 2)).epsilon(1e-10));
  }
  SUBCASE("zero tensor") {
    HyperMatrix A6(6, 2, Variance::covariant);
    CHECK(sixth_rank_det_d2(A6) == 0.0);
  }
}

TEST_CASE("full equality chain on symmetric third-rank input") {
  SeededRng rng(100);
  for (int rep = 0; rep < 30; ++rep) {
    const auto a = random_symmetric_tensor(rng, 3, 2);
    const double c = cayley_hyperdet(a);
    const double s = std::max(1.0, std::fabs(c));
    CHECK(std::fabs(18.0 * thirdrank_det_d2(a) - c) / s <= 1e-10);
    CHECK(std::fabs(-g_matrix(a).det_g - c) / s <= 1e-10);
    CHECK(std::fabs((4.0 / 3.0) * sixth_rank_det_d2(sixth_rank_embed(a)) - c) / s <= 1e-10);
  }
}
