#include <cmath>

#include <doctest.h>

#include "hyperinv/calculus.hpp"
#include "hyperinv/errors.hpp"
#include "hyperinv/special_cases.hpp"
#include "test_util.hpp"

using namespace hyperinv;
using testutil::random_symmetric_tensor;
using testutil::random_tensor;

TEST_CASE("grad_A") {
  SUBCASE("rank 2, order 1 gradient is the identity") {
    SeededRng rng(51);
    const auto a = random_tensor(rng, 2, 3);
    const auto g = grad_A(a, 1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(g.at({i, j}) == doctest::Approx(i == j ? 1.0 : 0.0));
  }
  SUBCASE("rank 2, order 2 gradient closed form") {
    SeededRng rng(50);
    const auto a = random_tensor(rng, 2, 3);
    const auto g = grad_A(a, 2);
    const double tr = trace_power(a, 1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(g.at({i, j}) ==
              doctest::Approx((i == j ? tr : 0.0) - a.at({j, i})).epsilon(1e-12));
  }
  SUBCASE("rank 4 d=2 determinant gradient entries") {
    SeededRng rng(52);
    const auto A = random_tensor(rng, 4, 2);
    const auto g = grad_A(A, 2);
    CHECK(g.at({0, 0, 0, 0}) == doctest::Approx(A.at({1, 1, 1, 1})).epsilon(1e-12));
    CHECK(g.at({0, 0, 0, 1}) == doctest::Approx(-A.at({1, 1, 1, 0})).epsilon(1e-12));
  }
  SUBCASE("matches finite differences") {
    SeededRng rng(53);
    for (int r : {2, 4}) {
      const auto A = random_tensor(rng, r, 2);
      const auto delta = make_unit_delta(r, 2);
      for (int s = 1; s <= 3; ++s) {
        const auto g = grad_A(A, s);
        const auto fd = fd_gradient(
            [&](const HyperMatrix& x) { return discriminant_oracle(x, delta, s); }, A, 1e-5);
        const double denom = std::max(1.0, g.max_abs());
        for (std::size_t i = 0; i < g.size(); ++i)
          CHECK(std::fabs(g[i] - fd[i]) / denom <= 1e-5);
      }
    }
  }
  SUBCASE("Euler identity: A . grad = s c_s") {
    SeededRng rng(54);
    const auto A = random_tensor(rng, 4, 3);
    for (int s = 1; s <= 3; ++s) {
      const auto g = grad_A(A, s);
      double acc = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) acc += g[i] * A[i];
      CHECK(acc == doctest::Approx(s * discriminant(A, s)).epsilon(1e-10));
    }
  }
}

TEST_CASE("grad_Delta") {
  SUBCASE("rank 2, order 1 gives the matrix back") {
    SeededRng rng(55);
    const auto a = random_tensor(rng, 2, 3);
    const auto g = grad_Delta(a, 1);
    CHECK(g.variance() == Variance::covariant);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(g[i] == doctest::Approx(a[i]));
  }
  SUBCASE("rank 2, order d gives c_d times the identity") {
    SeededRng rng(56);
    const auto a = random_tensor(rng, 2, 3);
    const auto g = grad_Delta(a, 3);
    const double cd = discriminant_from_traces(a, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(g.at({i, j}) == doctest::Approx(i == j ? cd : 0.0).epsilon(1e-10));
  }
  SUBCASE("rank 4, order 1 gives the tensor back") {
    SeededRng rng(57);
    const auto A = random_tensor(rng, 4, 2);
    const auto g = grad_Delta(A, 1);
    for (std::size_t i = 0; i < A.size(); ++i) CHECK(g[i] == doctest::Approx(A[i]));
  }
  SUBCASE("Euler identity in the unit slot") {
    SeededRng rng(58);
    const auto A = random_tensor(rng, 4, 2);
    for (int s = 1; s <= 3; ++s) {
      const auto g = grad_Delta(A, s);
      double acc = 0.0;
      for (int i = 0; i < 2; ++i) acc += g.at({i, i, i, i});
      CHECK(acc == doctest::Approx(s * discriminant(A, s)).epsilon(1e-10));
    }
  }
  SUBCASE("non-unit backgrounds are rejected") {
    SeededRng rng(59);
    const auto A = random_tensor(rng, 2, 2);
    const auto bad = random_tensor(rng, 2, 2, Variance::contravariant);
    CHECK_THROWS_AS(grad_Delta(A, bad, 1), std::invalid_argument);
  }
}

TEST_CASE("char_poly") {
  SUBCASE("2x2 example") {
    HyperMatrix a(2, 2, Variance::covariant, {1, 2, 3, 4});
    const auto p = char_poly(a);
    REQUIRE(p.degree == 2);
    CHECK(p.coefficients[0] == 1.0);
    CHECK(p.coefficients[1] == doctest::Approx(5.0));
    CHECK(p.coefficients[2] == doctest::Approx(-2.0));
    // P(lambda) = lambda^2 - 5 lambda - 2
    CHECK(p.evaluate(1.0) == doctest::Approx(1.0 - 5.0 - 2.0));
  }
  SUBCASE("value at zero carries the alternating sign") {
    SeededRng rng(59);
    for (int d = 2; d <= 4; ++d) {
      const auto a = random_tensor(rng, 2, d);
      const auto p = char_poly(a);
      const double sgn = (d % 2 == 0) ? 1.0 : -1.0;
      CHECK(p.evaluate(0.0) ==
            doctest::Approx(sgn * discriminant_from_traces(a, d)).epsilon(1e-12));
    }
  }
  SUBCASE("pointwise defining identity") {
    SeededRng rng(60);
    const auto a = random_tensor(rng, 2, 4);
    const auto p = char_poly(a);
    for (int k = 0; k < 5; ++k) {
      const double lambda = rng.uniform(-2.0, 2.0);
      HyperMatrix shifted = a;
      for (int i = 0; i < 4; ++i) shifted[static_cast<std::size_t>(i) * 4 + i] -= lambda;
      CHECK(p.evaluate(lambda) ==
            doctest::Approx(discriminant_from_traces(shifted, 4)).epsilon(1e-9));
    }
  }
  SUBCASE("degree-4 shape: alternating signs") {
    HyperMatrix a(2, 4, Variance::covariant);
    for (int i = 0; i < 4; ++i) a.at({i, i}) = 1.0;
    const auto p = char_poly(a);
    // (lambda - 1)^4: c = 1, 4, 6, 4, 1
    CHECK(p.coefficients[1] == doctest::Approx(4.0));
    CHECK(p.coefficients[2] == doctest::Approx(6.0));
    CHECK(p.coefficients[3] == doctest::Approx(4.0));
    CHECK(p.coefficients[4] == doctest::Approx(1.0));
    CHECK(p.evaluate(1.0) == doctest::Approx(0.0));
  }
}

TEST_CASE("ch_residual_rank2") {
  SUBCASE("nilpotent matrix gives an exactly zero residual") {
    HyperMatrix a(2, 2, Variance::covariant, {0, 1, 0, 0});
    const auto r = ch_residual_rank2(a);
    for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i] == 0.0);
  }
  SUBCASE("d=1") {
    HyperMatrix a(2, 1, Variance::covariant, {3.5});
    CHECK(ch_residual_rank2(a).max_abs() == 0.0);
  }
  SUBCASE("random matrices up to d=5") {
    SeededRng rng(61);
    for (int d = 2; d <= 5; ++d) {
      const auto a = random_tensor(rng, 2, d);
      double scale = 1.0;
      for (int i = 0; i < d; ++i) scale *= a.max_abs();
      CHECK(ch_residual_rank2(a).max_abs() <= 1e-9 * scale);
    }
  }
}

TEST_CASE("inverse_rank2") {
  SUBCASE("gradient-layout inverse of a 2x2") {
    HyperMatrix a(2, 2, Variance::covariant, {1, 2, 3, 4});
    const auto inv = inverse_rank2(a);
    // gradient layout: entry (i,j) = cofactor(i,j)/det, so rows index the
    // first slot of the contraction a^{ik} a_{jk} = delta
    CHECK(inv.at({0, 0}) == doctest::Approx(-2.0));
    CHECK(inv.at({0, 1}) == doctest::Approx(1.5));
    CHECK(inv.at({1, 0}) == doctest::Approx(1.0));
    CHECK(inv.at({1, 1}) == doctest::Approx(-0.5));
  }
  SUBCASE("identity is self-inverse") {
    HyperMatrix a(2, 3, Variance::covariant);
    for (int i = 0; i < 3; ++i) a.at({i, i}) = 1.0;
    const auto inv = inverse_rank2(a);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(inv[i] == doctest::Approx(a[i]));
  }
  SUBCASE("defining contraction on random matrices") {
    SeededRng rng(62);
    for (int d = 2; d <= 5; ++d) {
      const auto a = random_tensor(rng, 2, d);
      const auto inv = inverse_rank2(a);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          double acc = 0.0;
          for (int k = 0; k < d; ++k) acc += inv.at({i, k}) * a.at({j, k});
          CHECK(acc == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
        }
    }
  }
  SUBCASE("singular input") {
    HyperMatrix a(2, 2, Variance::covariant, {1, 2, 2, 4});
    CHECK_THROWS_AS(inverse_rank2(a), SingularError);
  }
}

TEST_CASE("adjugate_epsilon") {
  SUBCASE("rank 2 cofactor layout") {
    HyperMatrix a(2, 2, Variance::covariant, {1, 2, 3, 4});
    const auto adj = adjugate_epsilon(a);
    CHECK(adj.at({0, 0}) == doctest::Approx(4.0));
    CHECK(adj.at({0, 1}) == doctest::Approx(-3.0));
    CHECK(adj.at({1, 0}) == doctest::Approx(-2.0));
    CHECK(adj.at({1, 1}) == doctest::Approx(1.0));
  }
  SUBCASE("rank 4 d=2 leading entry") {
    SeededRng rng(63);
    const auto A = random_tensor(rng, 4, 2);
    const auto adj = adjugate_epsilon(A);
    CHECK(adj.at({0, 0, 0, 0}) == doctest::Approx(A.at({1, 1, 1, 1})).epsilon(1e-12));
  }
  SUBCASE("equals the discriminant gradient") {
    SeededRng rng(64);
    for (int d : {2, 3}) {
      const auto A = random_tensor(rng, 4, d);
      const auto adj = adjugate_epsilon(A);
      const auto g = grad_A(A, d);
      for (std::size_t i = 0; i < adj.size(); ++i)
        CHECK(adj[i] == doctest::Approx(g[i]).epsilon(1e-10));
    }
  }
  SUBCASE("determinant recovery and odd rank rejection") {
    SeededRng rng(65);
    const auto A = random_tensor(rng, 4, 2);
    const auto adj = adjugate_epsilon(A);
    double acc = 0.0;
    for (std::size_t i = 0; i < A.size(); ++i) acc += adj[i] * A[i];
    CHECK(acc / 2.0 == doctest::Approx(epsilon_det(A)).epsilon(1e-12));
    const auto odd = random_tensor(rng, 3, 2);
    CHECK_THROWS_AS(adjugate_epsilon(odd), std::invalid_argument);
  }
}

TEST_CASE("inverse_even_rank") {
  SUBCASE("rank 4 diagonal example") {
    HyperMatrix A(4, 2, Variance::covariant);
    A.at({0, 0, 0, 0}) = 2.0;
    A.at({1, 1, 1, 1}) = 3.0;
    const auto inv = inverse_even_rank(A);
    CHECK(inv.at({0, 0, 0, 0}) == doctest::Approx(0.5));
    CHECK(inv.at({1, 1, 1, 1}) == doctest::Approx(1.0 / 3.0));
  }
  SUBCASE("the covariant unit inverts to the contravariant unit") {
    const auto unit_cov = make_unit_delta_covariant(4, 2);
    const auto inv = inverse_even_rank(unit_cov);
    CHECK(is_unit_delta(inv.with_variance(Variance::contravariant)));
  }
  SUBCASE("first-slot contractions on random input") {
    SeededRng rng(66);
    const auto A = random_tensor(rng, 4, 2);
    const auto inv = inverse_even_rank(A);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double acc = 0.0;
        for (int k1 = 0; k1 < 2; ++k1)
          for (int k2 = 0; k2 < 2; ++k2)
            for (int k3 = 0; k3 < 2; ++k3)
              acc += inv.at({i, k1, k2, k3}) * A.at({j, k1, k2, k3});
        CHECK(acc == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
      }
  }
}

TEST_CASE("newton_traces") {
  SUBCASE("first value is the first discriminant") {
    const double cs[] = {2.5};
    CHECK(newton_traces(cs, 2, 1).at(1) == doctest::Approx(2.5));
  }
  SUBCASE("rank 2 matches trace powers") {
    SeededRng rng(67);
    const auto a = random_tensor(rng, 2, 4);
    std::vector<double> cs;
    for (int s = 1; s <= 4; ++s) cs.push_back(discriminant_from_traces(a, s));
    const auto t = newton_traces(cs, 2, 4);
    for (int s = 1; s <= 4; ++s)
      CHECK(t.at(s) == doctest::Approx(trace_power(a, s) / s).epsilon(1e-10));
  }
  SUBCASE("second value identity") {
    const double cs[] = {3.0, 1.25};
    CHECK(newton_traces(cs, 4, 2).at(2) == doctest::Approx(0.5 * 9.0 - 1.25));
  }
}

TEST_CASE("power_tensor") {
  SUBCASE("first power is the tensor") {
    SeededRng rng(68);
    const auto A = random_tensor(rng, 4, 2);
    const auto P = power_tensor(A, 1);
    for (std::size_t i = 0; i < A.size(); ++i) CHECK(P[i] == doctest::Approx(A[i]));
  }
  SUBCASE("second power matches the explicit symmetric-case combination") {
    SeededRng rng(69);
    const auto G = random_symmetric_tensor(rng, 4, 2);
    const double g0 = G.at({0, 0, 0, 0}), g1 = G.at({0, 0, 0, 1}), g3 = G.at({0, 0, 1, 1}),
                 g7 = G.at({0, 1, 1, 1}), g15 = G.at({1, 1, 1, 1});
    const auto P = power_tensor(G, 2);
    // 4 * (one-contraction pattern) - 3 * (two-contraction pattern)
    const double p31_0000 = g0 * g0 + g1 * g7;
    const double p31_0001 = 0.25 * (4.0 * g0 * g1 + g1 * g15 + 3.0 * g3 * g7);
    const double p31_0011 = 0.5 * ((g0 + g15) * g3 + g1 * g1 + g7 * g7);
    const double p22_0000 = g0 * g0 + g3 * g3;
    const double p22_0001 = g0 * g1 + g3 * g7;
    const double p22_0011 = (1.0 / 3.0) * ((g0 + g15) * g3 + 2.0 * g1 * g1 + 2.0 * g7 * g7);
    CHECK(P.at({0, 0, 0, 0}) == doctest::Approx(4 * p31_0000 - 3 * p22_0000).epsilon(1e-10));
    CHECK(P.at({0, 0, 0, 1}) == doctest::Approx(4 * p31_0001 - 3 * p22_0001).epsilon(1e-10));
    CHECK(P.at({0, 0, 1, 1}) == doctest::Approx(4 * p31_0011 - 3 * p22_0011).epsilon(1e-10));
  }
  SUBCASE("contraction with the unit recovers s times the Newton value") {
    SeededRng rng(70);
    const auto A = random_symmetric_tensor(rng, 4, 2);
    std::vector<double> cs;
    for (int s = 1; s <= 3; ++s) cs.push_back(discriminant(A, s));
    const auto t = newton_traces(cs, 4, 3);
    for (int s = 1; s <= 3; ++s)
      CHECK(bracket_trace(A, s) == doctest::Approx(s * t.at(s)).epsilon(1e-10));
  }
}

TEST_CASE("bracket_trace") {
  SeededRng rng(71);
  const auto A = random_symmetric_tensor(rng, 4, 3);
  const double C1 = discriminant(A, 1), C2 = discriminant(A, 2), C3 = discriminant(A, 3);
  const double b1 = bracket_trace(A, 1), b2 = bracket_trace(A, 2), b3 = bracket_trace(A, 3);
  CHECK(b1 == doctest::Approx(C1).epsilon(1e-10));
  CHECK(b2 == doctest::Approx(C1 * C1 - 2.0 * C2).epsilon(1e-10));
  CHECK(C2 == doctest::Approx(0.5 * (b1 * b1 - b2)).epsilon(1e-9));
  // third-order reconstruction
  CHECK(C3 == doctest::Approx((b1 * b1 * b1 - 3.0 * b1 * b2 + 2.0 * b3) / 6.0).epsilon(1e-9));
}

TEST_CASE("ch_residual_rank4") {
  SUBCASE("d=1 is exact") {
    HyperMatrix A(4, 1, Variance::covariant, {2.5});
    CHECK(ch_residual_rank4(A).max_abs() <= 1e-15);
  }
  SUBCASE("random symmetric tensors at d=2 and d=3") {
    SeededRng rng(72);
    for (int d : {2, 3}) {
      for (int rep = 0; rep < 3; ++rep) {
        const auto A = random_symmetric_tensor(rng, 4, d);
        double scale = 1.0;
        for (int i = 0; i < d; ++i) scale *= A.max_abs();
        CHECK(ch_residual_rank4(A).max_abs() <= 1e-8 * scale);
      }
    }
  }
}

TEST_CASE("characteristic polynomial gradient link") {
  // the order-(d+1) gradient reproduces the matrix polynomial:
  // grad c_{d+1}(a) = (-1)^d sum_k (-1)^k c_k a^{d-k} read in gradient layout
  SeededRng rng(73);
  for (int d = 2; d <= 3; ++d) {
    const auto a = random_tensor(rng, 2, d);
    // rebuild the polynomial value sum_k (-1)^k c_k a^{d-k} directly
    HyperMatrix poly(2, d, Variance::covariant);
    HyperMatrix power(2, d, Variance::covariant);
    for (int i = 0; i < d; ++i) power.at({i, i}) = 1.0;
    std::vector<double> cs(static_cast<std::size_t>(d) + 1);
    cs[0] = 1.0;
    for (int k = 1; k <= d; ++k) cs[static_cast<std::size_t>(k)] = discriminant_from_traces(a, k);
    for (int exp = 0; exp <= d; ++exp) {
      const int k = d - exp;
      const double c = ((k % 2 == 0) ? 1.0 : -1.0) * cs[static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < poly.size(); ++i) poly[i] += c * power[i];
      if (exp < d) power = matrix_multiply(power, a);
    }
    const double sgn = (d % 2 == 0) ? 1.0 : -1.0;
    // grad_A of c_{d+1} equals (-1)^d P^d(a); compare through grad_A
    const auto ga = grad_A(a, d + 1);
    // gradient layout transposes the matrix-product layout
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        CHECK(ga.at({i, j}) == doctest::Approx(sgn * poly.at({j, i})).epsilon(1e-9));
  }
}
