#pragma once

#include <vector>

#include "occ/common.hpp"

namespace occ::series {

// Truncated Laurent series over complex coefficients.
//
// Coefficients are stored for degrees in [low, order]. Degrees above `order`
// are unknown (not zero): every arithmetic operation propagates the largest
// degree it can certify. Degrees below `low` are identically zero.
class TruncatedSeries {
 public:
  TruncatedSeries() : low_(1), order_(0) {}
  TruncatedSeries(int low, int order, std::vector<cplx> coeffs);

  static TruncatedSeries zero(int order);
  // v * x^deg, known through `order`.
  static TruncatedSeries monomial(int deg, cplx v, int order);
  // The identity series x.
  static TruncatedSeries identity(int order);

  int low() const { return low_; }
  int order() const { return order_; }
  bool known_empty() const { return order_ < low_; }

  // Coefficient of x^k; zero below `low`, error above `order`.
  cplx coeff(int k) const;
  cplx& at(int k);

  // Restrict the known range to degrees <= n.
  TruncatedSeries truncated(int n) const;
  // Assert a larger certified order (degrees in (order, n] filled with 0).
  // Only for constructions whose truncation soundness is known externally.
  TruncatedSeries with_order(int n) const;

  std::vector<cplx>& raw() { return c_; }
  const std::vector<cplx>& raw() const { return c_; }

 private:
  void normalize();
  int low_;
  int order_;
  std::vector<cplx> c_;  // c_[k - low_] is the coefficient of x^k
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries neg(const TruncatedSeries& f);
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries smul(cplx s, const TruncatedSeries& f);
// f * x^k
TruncatedSeries shift(const TruncatedSeries& f, int k);
TruncatedSeries derivative(const TruncatedSeries& f);
TruncatedSeries conjugate(const TruncatedSeries& f);

// 1/f for f with nonzero leading coefficient.
TruncatedSeries reciprocal(const TruncatedSeries& f);

// f(g(x)). Requires g.low() >= 1 and, when f has negative degrees,
// a nonzero leading coefficient of g.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

// Compositional inverse: h with f(h(x)) = x. Requires f = a1 x + ... with
// a1 != 0.
TruncatedSeries invert(const TruncatedSeries& f);

// f(-1/x): exact degree reindexing k -> -k with sign (-1)^k.
TruncatedSeries compose_neg_reciprocal(const TruncatedSeries& f);

// Numeric evaluation over the known range (z != 0 if f has negative degrees).
cplx eval(const TruncatedSeries& f, cplx z);

// Re-expansion around x0: returns the power series of f(x0 + s) in s with
// `terms` coefficients. For Laurent tails this is a numeric (convergent)
// re-expansion, valid for |x0| above the scale of the tail.
TruncatedSeries taylor_at(const TruncatedSeries& f, cplx x0, int terms);

double max_abs(const TruncatedSeries& f);
double max_abs_diff(const TruncatedSeries& f, const TruncatedSeries& g,
                    int through_order);
bool is_real(const TruncatedSeries& f, double tol);

// Laurent data at infinity, F(x) = x + c[0] + c[1]/x + c[2]/x^2 + ...
// (the shape of the normalized uniformizing map F1).
struct InfinitySeries {
  std::vector<cplx> c;

  cplx eval(cplx x) const;
  // d/dx F at a point.
  cplx eval_derivative(cplx x) const;
  // Power series of F(x0 + s) in s (terms coefficients), |x0| large.
  TruncatedSeries taylor_at(cplx x0, int terms) const;
  bool is_real(double tol) const;
};

// Compositional inverse of F(x) = x + c0 + c1/x + ...: G with F(G(w)) = w,
// G(w) = w + e0 + e1/w + ... carrying the same number of coefficients.
InfinitySeries invert_at_infinity(const InfinitySeries& F);

// The power series u -> 1/F(1/u) (low degree 1); `terms` coefficients.
TruncatedSeries one_over_compose_inv(const InfinitySeries& F, int terms);

// ---- Local coordinate maps ----------------------------------------------

// Canonical local-coordinate data: f(x) = a0 * exp(sum_j A[j-1] x^{j+1} d/dx) x.
struct CoordSeq {
  cplx a0 = 1.0;
  std::vector<cplx> A;  // A[j-1] is the coefficient of x^{j+1} d/dx

  cplx A_at(int j) const {  // 1-based, zero beyond stored tail
    return (j >= 1 && j <= static_cast<int>(A.size())) ? A[j - 1] : cplx(0);
  }
};

CoordSeq conj_coords(const CoordSeq& c);
bool coords_real(const CoordSeq& c, double tol);

// exp(sign * sum_j A[j-1] x^{j+1} d/dx) applied to x, truncated at `order`.
TruncatedSeries exp_derivation(const std::vector<cplx>& A, int sign,
                               int order);

// Full local coordinate map a0 * E_A(x) as a series in x = w - center.
// (The center is the caller's bookkeeping; a0 = 0 is rejected.)
TruncatedSeries apply_coords(const CoordSeq& c, int order);

// Recover (a0, A) with apply_coords((a0, A)) = f through f.order().
CoordSeq extract_coords(const TruncatedSeries& f);

}  // namespace occ::series
