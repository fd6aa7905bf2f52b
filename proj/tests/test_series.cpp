#include <random>

#include "doctest.h"
#include "occ/series.hpp"

using namespace occ;
using namespace occ::series;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, int low, int order,
                              double scale, bool unit_linear = false) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<cplx> c;
  for (int k = low; k <= order; ++k) c.emplace_back(u(rng), u(rng));
  TruncatedSeries f(low, order, std::move(c));
  if (unit_linear) {
    std::vector<cplx> cc = f.raw();
    return f;
  }
  return f;
}

// Brute-force polynomial substitution: treats both inputs as plain
// polynomials and expands f(g(x)) term by term, no series machinery.
std::vector<cplx> brute_substitute(const std::vector<cplx>& f,
                                   const std::vector<cplx>& g, int out_deg) {
  // f[k] is the coefficient of x^{k+1}; same for g. Result indexed from 1.
  std::vector<cplx> result(out_deg + 1, cplx(0));
  std::vector<cplx> gpow(out_deg + 1, cplx(0));  // g^k, rebuilt incrementally
  gpow[0] = cplx(1);
  for (size_t k = 1; k <= f.size(); ++k) {
    // gpow <- gpow * g
    std::vector<cplx> next(out_deg + 1, cplx(0));
    for (int i = 0; i <= out_deg; ++i) {
      if (gpow[i] == cplx(0)) continue;
      for (size_t j = 1; j <= g.size(); ++j) {
        if (i + static_cast<int>(j) > out_deg) break;
        next[i + j] += gpow[i] * g[j - 1];
      }
    }
    gpow = next;
    for (int d = 0; d <= out_deg; ++d) result[d] += f[k - 1] * gpow[d];
  }
  return result;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("compose: identity substitution") {
  auto f = TruncatedSeries(1, 8, {cplx(1), cplx(1), 0, 0, 0, 0, 0, 0});
  auto x = TruncatedSeries::identity(8);
  auto h = compose(f, x);
  CHECK(max_abs_diff(h, f, 8) == doctest::Approx(0.0));
}

TEST_CASE("compose: x/(1-x) after x/(1+x) is x") {
  int N = 8;
  std::vector<cplx> a, b;
  for (int k = 1; k <= N; ++k) {
    a.emplace_back(1.0, 0.0);                       // x/(1-x) = x + x^2 + ...
    b.emplace_back((k % 2 == 1) ? 1.0 : -1.0, 0.0); // x/(1+x) = x - x^2 + ...
  }
  auto f = TruncatedSeries(1, N, a);
  auto g = TruncatedSeries(1, N, b);
  auto h = compose(f, g);
  CHECK(max_abs_diff(h, TruncatedSeries::identity(N), N) < 1e-12);
}

TEST_CASE("compose: random degree-8 against brute-force substitution") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(rng, 1, 8, 0.8);
    auto g = random_series(rng, 1, 8, 0.8);
    auto h = compose(f, g);
    std::vector<cplx> fb(f.raw()), gb(g.raw());
    auto expect = brute_substitute(fb, gb, h.order());
    for (int k = 1; k <= h.order(); ++k)
      CHECK(std::abs(h.coeff(k) - expect[k]) < 1e-12);
  }
}

TEST_CASE("compose: order underflow diagnostics") {
  auto f = TruncatedSeries(1, 0, {});  // nothing known
  auto g = TruncatedSeries::identity(8);
  CHECK_THROWS_AS(compose(f, g), Error);
}

TEST_CASE("invert: trivial and linear scaling") {
  auto x = TruncatedSeries::identity(6);
  CHECK(max_abs_diff(invert(x), x, 6) == doctest::Approx(0.0));
  auto f = TruncatedSeries::monomial(1, cplx(2), 6);
  auto h = invert(f);
  CHECK(h.coeff(1) == cplx(0.5));
  for (int k = 2; k <= 6; ++k) CHECK(std::abs(h.coeff(k)) < 1e-15);
}

TEST_CASE("invert: x + 3x^2 residual") {
  auto f = TruncatedSeries(1, 6, {cplx(1), cplx(3), 0, 0, 0, 0});
  auto g = invert(f);
  auto r = compose(f, g);
  CHECK(max_abs_diff(r, TruncatedSeries::identity(6), 6) < 1e-12);
}

TEST_CASE("invert: two-sided inverse on random series") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(rng, 1, 8, 0.5);
    f.at(1) = cplx(1.0) + f.coeff(1) * 0.1;  // keep well away from singular
    auto g = invert(f);
    CHECK(max_abs_diff(compose(f, g), TruncatedSeries::identity(8), 8) < 1e-10);
    CHECK(max_abs_diff(compose(g, f), TruncatedSeries::identity(8), 8) < 1e-10);
  }
}

TEST_CASE("invert: vanishing linear coefficient is singular") {
  auto f = TruncatedSeries(2, 6, {cplx(1), 0, 0, 0, 0});
  CHECK_THROWS_AS(invert(f), Error);
}

TEST_CASE("exp_derivation: zero data gives x") {
  auto e = exp_derivation({}, +1, 8);
  CHECK(max_abs_diff(e, TruncatedSeries::identity(8), 8) == doctest::Approx(0));
}

TEST_CASE("exp_derivation: single coefficient flows to x/(1-tx)") {
  // The vector field x^2 d/dx integrates to x -> x/(1 - t x).
  double t = 0.37;
  auto e = exp_derivation({cplx(t)}, +1, 10);
  for (int k = 1; k <= 10; ++k)
    CHECK(std::abs(e.coeff(k) - std::pow(t, k - 1)) < 1e-12);
}

TEST_CASE("exp_derivation: Lie series oracle at order 8") {
  // Independent term-by-term exponential: apply D repeatedly to the
  // polynomial x with dense coefficient arrays.
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  int N = 8;
  std::vector<cplx> A(N - 1);
  for (auto& v : A) v = cplx(u(rng), u(rng));

  std::vector<cplx> acc(N + 1, cplx(0)), term(N + 1, cplx(0));
  term[1] = cplx(1);
  acc[1] = cplx(1);
  for (int n = 1; n <= N; ++n) {
    // term <- (1/n) * sum_j A_j x^{j+1} d/dx term
    std::vector<cplx> next(N + 1, cplx(0));
    for (int k = 0; k <= N; ++k) {
      if (term[k] == cplx(0)) continue;
      for (int j = 1; j <= N - 1; ++j) {
        int d = k + j;
        if (d <= N) next[d] += A[j - 1] * cplx(k, 0) * term[k];
      }
    }
    for (int k = 0; k <= N; ++k) {
      term[k] = next[k] / cplx(n, 0);
      acc[k] += term[k];
    }
  }
  auto e = exp_derivation(A, +1, N);
  for (int k = 1; k <= N; ++k) CHECK(std::abs(e.coeff(k) - acc[k]) < 1e-12);
}

TEST_CASE("exp_derivation: opposite signs compose to the identity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  std::vector<cplx> A(7);
  for (auto& v : A) v = cplx(u(rng), u(rng));
  auto ep = exp_derivation(A, +1, 8);
  auto em = exp_derivation(A, -1, 8);
  CHECK(max_abs_diff(compose(ep, em), TruncatedSeries::identity(8), 8) < 1e-12);
}

TEST_CASE("apply_coords: standard coordinate and pure scaling") {
  CoordSeq c;
  CHECK(max_abs_diff(apply_coords(c, 8), TruncatedSeries::identity(8), 8) ==
        doctest::Approx(0));
  c.a0 = cplx(0.3, -1.1);
  auto f = apply_coords(c, 8);
  CHECK(f.coeff(1) == c.a0);
  for (int k = 2; k <= 8; ++k) CHECK(std::abs(f.coeff(k)) < 1e-15);
  c.a0 = 0;
  CHECK_THROWS_AS(apply_coords(c, 8), Error);
}

TEST_CASE("apply_coords: single-coefficient flow") {
  CoordSeq c;
  c.A = {cplx(0.21)};
  auto f = apply_coords(c, 8);
  for (int k = 1; k <= 8; ++k)
    CHECK(std::abs(f.coeff(k) - std::pow(0.21, k - 1)) < 1e-13);
}

TEST_CASE("extract_coords: trivial and scaling") {
  auto c = extract_coords(TruncatedSeries::identity(8));
  CHECK(c.a0 == cplx(1));
  for (auto& v : c.A) CHECK(std::abs(v) < 1e-15);
  auto c3 = extract_coords(TruncatedSeries::monomial(1, cplx(3), 8));
  CHECK(c3.a0 == cplx(3));
  for (auto& v : c3.A) CHECK(std::abs(v) < 1e-15);
}

TEST_CASE("extract_coords: round trip on random coordinates") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int trial = 0; trial < 20; ++trial) {
    CoordSeq c;
    c.a0 = cplx(1.0 + u(rng), u(rng));
    c.A.resize(7);
    for (auto& v : c.A) v = cplx(u(rng), u(rng));
    auto f = apply_coords(c, 8);
    auto back = extract_coords(f);
    CHECK(std::abs(back.a0 - c.a0) < 1e-10);
    for (int j = 1; j <= 7; ++j)
      CHECK(std::abs(back.A[j - 1] - c.A[j - 1]) < 1e-10);
  }
}

TEST_CASE("conjugation equivariance of apply_coords") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  CoordSeq c;
  c.a0 = cplx(1.2, 0.4);
  c.A.resize(6);
  for (auto& v : c.A) v = cplx(u(rng), u(rng));
  auto f = apply_coords(c, 8);
  auto g = apply_coords(conj_coords(c), 8);
  CHECK(max_abs_diff(conjugate(f), g, 8) == doctest::Approx(0));
}

TEST_CASE("reciprocal and Laurent composition") {
  // 1/(x + x^2) = x^{-1} - 1 + x - x^2 + ...
  auto f = TruncatedSeries(1, 6, {cplx(1), cplx(1), 0, 0, 0, 0});
  auto r = reciprocal(f);
  CHECK(r.low() == -1);
  CHECK(std::abs(r.coeff(-1) - cplx(1)) < 1e-15);
  CHECK(std::abs(r.coeff(0) + cplx(1)) < 1e-15);
  CHECK(std::abs(r.coeff(1) - cplx(1)) < 1e-15);
  auto p = mul(f, r);
  CHECK(max_abs_diff(p, TruncatedSeries::monomial(0, cplx(1), p.order()),
                     p.order()) < 1e-15);
}

TEST_CASE("taylor_at re-expands Laurent tails") {
  // f(x) = 1/x around x0 = 2: 1/(2+s) = 1/2 - s/4 + s^2/8 - ...
  auto f = TruncatedSeries(-1, 3, {cplx(1), 0, 0, 0, 0});
  auto t = taylor_at(f, cplx(2), 5);
  for (int j = 0; j < 5; ++j)
    CHECK(std::abs(t.coeff(j) - std::pow(-1.0, j) / std::pow(2.0, j + 1)) <
          1e-14);
}

TEST_CASE("infinity series inversion") {
  InfinitySeries F;
  F.c = {cplx(0.3, 0.1), cplx(-0.2, 0.05), cplx(0.08, 0), cplx(0, 0.02),
         cplx(0.01, 0), cplx(0), cplx(0), cplx(0)};
  auto G = invert_at_infinity(F);
  // Check F(G(w)) = w at a few sample points.
  for (double w : {4.0, -5.5, 7.0}) {
    cplx g = G.eval(cplx(w, 1.0));
    cplx back = F.eval(g);
    CHECK(std::abs(back - cplx(w, 1.0)) < 5e-6);
  }
  auto s = one_over_compose_inv(F, 9);
  // s(u) should equal 1/G(1/u).
  cplx u0(0.08, 0.02);
  CHECK(std::abs(eval(s, u0) - cplx(1) / G.eval(cplx(1) / u0)) < 1e-9);
}

}  // TEST_SUITE
