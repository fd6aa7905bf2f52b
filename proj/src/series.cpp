#include "occ/series.hpp"

#include <algorithm>
#include <cmath>

namespace occ::series {

namespace {

cplx binom_general(double k, int j) {
  // k(k-1)...(k-j+1)/j! for possibly negative integer k.
  double v = 1.0;
  for (int i = 0; i < j; ++i) v *= (k - i) / (i + 1);
  return cplx(v, 0.0);
}

}  // namespace

TruncatedSeries::TruncatedSeries(int low, int order, std::vector<cplx> coeffs)
    : low_(low), order_(order), c_(std::move(coeffs)) {
  if (order_ >= low_ &&
      static_cast<int>(c_.size()) != order_ - low_ + 1)
    throw Error(ErrorKind::kDomain, "series: coefficient count mismatch");
  if (order_ < low_) c_.clear();
  normalize();
}

void TruncatedSeries::normalize() {
  while (!c_.empty() && c_.front() == cplx(0.0, 0.0)) {
    c_.erase(c_.begin());
    ++low_;
  }
  if (c_.empty()) low_ = order_ + 1;
}

TruncatedSeries TruncatedSeries::zero(int order) {
  return TruncatedSeries(order + 1, order, {});
}

TruncatedSeries TruncatedSeries::monomial(int deg, cplx v, int order) {
  if (deg > order) return zero(order);
  std::vector<cplx> c(order - deg + 1, cplx(0));
  c[0] = v;
  return TruncatedSeries(deg, order, std::move(c));
}

TruncatedSeries TruncatedSeries::identity(int order) {
  return monomial(1, cplx(1), order);
}

cplx TruncatedSeries::coeff(int k) const {
  if (k > order_)
    throw Error(ErrorKind::kDomain, "series: coefficient beyond known order");
  if (k < low_) return cplx(0);
  return c_[k - low_];
}

cplx& TruncatedSeries::at(int k) {
  if (k > order_ || k < low_)
    throw Error(ErrorKind::kDomain, "series: at() outside stored range");
  return c_[k - low_];
}

TruncatedSeries TruncatedSeries::truncated(int n) const {
  if (n >= order_) return *this;
  if (n < low_) return zero(n);
  std::vector<cplx> c(c_.begin(), c_.begin() + (n - low_ + 1));
  return TruncatedSeries(low_, n, std::move(c));
}

TruncatedSeries TruncatedSeries::with_order(int n) const {
  if (n <= order_) return truncated(n);
  std::vector<cplx> c = c_;
  int lo = known_empty() ? n + 1 : low_;
  if (!known_empty()) c.resize(n - low_ + 1, cplx(0));
  return TruncatedSeries(lo, n, std::move(c));
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  int order = std::min(f.order(), g.order());
  int low = std::min(f.low(), g.low());
  if (order < low) return TruncatedSeries::zero(order);
  std::vector<cplx> c(order - low + 1, cplx(0));
  for (int k = low; k <= order; ++k) {
    cplx v(0);
    if (k >= f.low() && k <= f.order()) v += f.coeff(k);
    if (k >= g.low() && k <= g.order()) v += g.coeff(k);
    c[k - low] = v;
  }
  return TruncatedSeries(low, order, std::move(c));
}

TruncatedSeries neg(const TruncatedSeries& f) { return smul(cplx(-1), f); }

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
  return add(f, neg(g));
}

TruncatedSeries smul(cplx s, const TruncatedSeries& f) {
  std::vector<cplx> c = f.raw();
  for (auto& v : c) v *= s;
  return TruncatedSeries(f.known_empty() ? f.order() + 1 : f.low(), f.order(),
                         std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.known_empty() || g.known_empty()) {
    // A factor that is zero on its whole known range: result is zero; the
    // certified order still follows the product rule.
    int order = std::min(f.order() + g.low(), g.order() + f.low());
    return TruncatedSeries::zero(order);
  }
  int low = f.low() + g.low();
  int order = std::min(f.order() + g.low(), g.order() + f.low());
  if (order < low) return TruncatedSeries::zero(order);
  std::vector<cplx> c(order - low + 1, cplx(0));
  for (int i = f.low(); i <= f.order(); ++i) {
    if (f.coeff(i) == cplx(0)) continue;
    for (int j = g.low(); j <= g.order(); ++j) {
      int k = i + j;
      if (k > order) break;
      c[k - low] += f.coeff(i) * g.coeff(j);
    }
  }
  return TruncatedSeries(low, order, std::move(c));
}

TruncatedSeries shift(const TruncatedSeries& f, int k) {
  return TruncatedSeries(f.known_empty() ? f.order() + k + 1 : f.low() + k,
                         f.order() + k, f.raw());
}

TruncatedSeries derivative(const TruncatedSeries& f) {
  if (f.known_empty()) return TruncatedSeries::zero(f.order() - 1);
  std::vector<cplx> c;
  c.reserve(f.raw().size());
  for (int k = f.low(); k <= f.order(); ++k)
    c.push_back(f.coeff(k) * cplx(k, 0));
  return TruncatedSeries(f.low() - 1, f.order() - 1, std::move(c));
}

TruncatedSeries conjugate(const TruncatedSeries& f) {
  std::vector<cplx> c = f.raw();
  for (auto& v : c) v = std::conj(v);
  return TruncatedSeries(f.known_empty() ? f.order() + 1 : f.low(), f.order(),
                         std::move(c));
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  if (f.known_empty() || f.coeff(f.low()) == cplx(0))
    throw Error(ErrorKind::kSingularSeries, "reciprocal of zero leading term");
  int m = f.low();
  int n = f.order() - m;  // coefficients of the unit part u = f / x^m
  cplx u0 = f.coeff(m);
  // Triangular recursion for 1/u where u = u0 (1 + ...).
  std::vector<cplx> r(n + 1, cplx(0));
  r[0] = cplx(1) / u0;
  for (int k = 1; k <= n; ++k) {
    cplx s(0);
    for (int j = 1; j <= k; ++j) s += f.coeff(m + j) * r[k - j];
    r[k] = -s / u0;
  }
  return TruncatedSeries(-m, f.order() - 2 * m, std::move(r));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (g.known_empty())
    return TruncatedSeries::zero(std::min(f.order(), g.order()));
  if (g.low() < 1)
    throw Error(ErrorKind::kDomain, "compose: inner series must vanish at 0");
  // Nonnegative part of f via Horner; negative part via powers of 1/g.
  int fhi = f.order();
  int flo = f.low();
  if (flo < 0 && g.coeff(g.low()) == cplx(0))
    throw Error(ErrorKind::kSingularSeries,
                "compose: Laurent outer needs invertible inner leading term");

  // Certified order: contributions from unknown f tail start at degree
  // (fhi+1)*g.low(); g-power soundness enters through mul's own accounting.
  int order_cap = (fhi + 1) * g.low() - 1;
  order_cap = std::min(order_cap, g.order() + (std::max(flo, 1) - 1) * g.low());
  TruncatedSeries acc = TruncatedSeries::zero(order_cap);

  // Horner over k = fhi down to 0 (coefficients below f.low() vanish).
  if (fhi >= 0) {
    for (int k = fhi; k >= 0; --k) {
      acc = mul(acc, g).with_order(order_cap).truncated(order_cap);
      cplx ck = (k >= flo) ? f.coeff(k) : cplx(0);
      acc = add(acc, TruncatedSeries::monomial(0, ck, order_cap));
    }
  }
  if (flo < 0) {
    TruncatedSeries ginv = reciprocal(g.truncated(order_cap + 2 * g.low()));
    TruncatedSeries p = TruncatedSeries::monomial(0, cplx(1), order_cap);
    for (int k = 1; k <= -flo; ++k) {
      p = mul(p, ginv).truncated(order_cap);
      cplx ck = f.coeff(-k);
      if (ck != cplx(0)) acc = add(acc, smul(ck, p));
    }
  }
  if (acc.order() < 1)
    throw Error(ErrorKind::kOrderUnderflow, "compose: certified order < 1");
  return acc;
}

TruncatedSeries invert(const TruncatedSeries& f) {
  if (f.known_empty() || f.low() != 1 || f.coeff(1) == cplx(0))
    throw Error(ErrorKind::kSingularSeries,
                "invert: series must start with a nonzero linear term");
  int N = f.order();
  cplx a1 = f.coeff(1);
  std::vector<cplx> h(N + 1, cplx(0));  // h[k] coeff of x^k
  h[1] = cplx(1) / a1;
  for (int n = 2; n <= N; ++n) {
    // r = f(h_partial) through degree n; correction from the x^n mismatch.
    TruncatedSeries hp(1, n, std::vector<cplx>(h.begin() + 1, h.begin() + n + 1));
    TruncatedSeries r = compose(f.truncated(n), hp);
    cplx rn = (n <= r.order() && n >= r.low()) ? r.coeff(n) : cplx(0);
    h[n] = -rn / a1;
  }
  return TruncatedSeries(1, N, std::vector<cplx>(h.begin() + 1, h.end()));
}

TruncatedSeries compose_neg_reciprocal(const TruncatedSeries& f) {
  // f(-1/x): degree k term c x^k becomes c (-1)^k x^{-k}.
  if (f.known_empty()) {
    // Unknown tail of f maps to unbounded *negative* degrees: the certified
    // range is degrees >= -order(f).
    return TruncatedSeries(-f.order(), -f.order() - 1, {});
  }
  std::vector<cplx> c(f.order() - f.low() + 1, cplx(0));
  for (int k = f.low(); k <= f.order(); ++k) {
    double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    c[f.order() - k] = f.coeff(k) * sgn;
  }
  return TruncatedSeries(-f.order(), -f.low(), std::move(c));
}

cplx eval(const TruncatedSeries& f, cplx z) {
  if (f.known_empty()) return cplx(0);
  if (f.low() < 0 && z == cplx(0))
    throw Error(ErrorKind::kDomain, "eval: Laurent series at 0");
  // Horner for nonnegative part, direct powers for the principal part.
  cplx acc(0);
  for (int k = f.order(); k >= 0; --k) acc = acc * z + f.coeff(k);
  if (f.low() < 0) {
    cplx zi = cplx(1) / z, p(1);
    for (int k = -1; k >= f.low(); --k) {
      p *= zi;
      acc += f.coeff(k) * p;
    }
  }
  return acc;
}

TruncatedSeries taylor_at(const TruncatedSeries& f, cplx x0, int terms) {
  if (f.known_empty()) return TruncatedSeries::zero(terms - 1);
  if (f.low() < 0 && x0 == cplx(0))
    throw Error(ErrorKind::kDomain, "taylor_at: expansion point at the pole");
  if (x0 == cplx(0)) return f.truncated(terms - 1);
  std::vector<cplx> out(terms, cplx(0));
  for (int k = f.low(); k <= f.order(); ++k) {
    cplx ck = f.coeff(k);
    if (ck == cplx(0)) continue;
    // (x0 + s)^k = sum_j binom(k, j) x0^{k-j} s^j
    cplx run = (k >= 0) ? std::pow(x0, k) : cplx(1) / std::pow(x0, -k);
    for (int j = 0; j < terms && !(k >= 0 && j > k); ++j) {
      out[j] += ck * binom_general(k, j) * run;
      run /= x0;
    }
  }
  return TruncatedSeries(0, terms - 1, std::move(out));
}

double max_abs(const TruncatedSeries& f) {
  double m = 0;
  for (const auto& v : f.raw()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const TruncatedSeries& f, const TruncatedSeries& g,
                    int through_order) {
  int lo = std::min(f.low(), g.low());
  int hi = std::min({f.order(), g.order(), through_order});
  double m = 0;
  for (int k = lo; k <= hi; ++k) {
    cplx a = (k >= f.low() && k <= f.order()) ? f.coeff(k) : cplx(0);
    cplx b = (k >= g.low() && k <= g.order()) ? g.coeff(k) : cplx(0);
    m = std::max(m, std::abs(a - b));
  }
  return m;
}

bool is_real(const TruncatedSeries& f, double tol) {
  for (const auto& v : f.raw())
    if (std::abs(v.imag()) > tol) return false;
  return true;
}

cplx InfinitySeries::eval(cplx x) const {
  cplx acc = x;
  cplx p(1);
  for (size_t k = 0; k < c.size(); ++k) {
    acc += c[k] * p;
    p /= x;
  }
  return acc;
}

cplx InfinitySeries::eval_derivative(cplx x) const {
  cplx acc(1);
  cplx p = cplx(1) / (x * x);
  for (size_t k = 1; k < c.size(); ++k) {
    acc += -cplx(double(k), 0) * c[k] * p;
    p /= x;
  }
  return acc;
}

TruncatedSeries InfinitySeries::taylor_at(cplx x0, int terms) const {
  std::vector<cplx> out(terms, cplx(0));
  out[0] = x0;
  if (terms > 1) out[1] = cplx(1);
  for (size_t k = 0; k < c.size(); ++k) {
    // c[k] * (x0 + s)^{-k}
    if (c[k] == cplx(0)) continue;
    if (k == 0) {
      out[0] += c[0];
      continue;
    }
    cplx run = cplx(1) / std::pow(x0, double(k));
    for (int j = 0; j < terms; ++j) {
      out[j] += c[k] * binom_general(-double(k), j) * run;
      run /= x0;
    }
  }
  return TruncatedSeries(0, terms - 1, std::move(out));
}

bool InfinitySeries::is_real(double tol) const {
  for (const auto& v : c)
    if (std::abs(v.imag()) > tol) return false;
  return true;
}

InfinitySeries invert_at_infinity(const InfinitySeries& F) {
  // Write F(x) = (1/u) P(u), u = 1/x, P(u) = 1 + c0 u + c1 u^2 + ...
  // The inverse G(w) = (1/v) Q(v) satisfies Q(v) P(v / Q(v)) = 1.
  int K = static_cast<int>(F.c.size());
  int N = K + 1;  // work with power series through degree K in u
  std::vector<cplx> pc(N, cplx(0));
  pc[0] = cplx(1);
  for (int k = 1; k < N; ++k) pc[k] = F.c[k - 1];
  TruncatedSeries P(0, N - 1, pc);
  TruncatedSeries Q = TruncatedSeries::monomial(0, cplx(1), N - 1);
  for (int it = 0; it < N + 1; ++it) {
    TruncatedSeries vq = shift(reciprocal(Q), 1).truncated(N - 1);  // v / Q
    TruncatedSeries PvQ = compose(P, vq).truncated(N - 1);
    Q = reciprocal(PvQ).truncated(N - 1);
  }
  InfinitySeries G;
  G.c.resize(K);
  for (int k = 0; k < K; ++k) G.c[k] = Q.coeff(k + 1);
  return G;
}

TruncatedSeries one_over_compose_inv(const InfinitySeries& F, int terms) {
  InfinitySeries G = invert_at_infinity(F);
  // 1/G(1/u) = u / Q(u) where Q(u) = 1 + e0 u + ...
  int N = terms;
  std::vector<cplx> qc(N, cplx(0));
  qc[0] = cplx(1);
  for (int k = 1; k < N && k - 1 < static_cast<int>(G.c.size()); ++k)
    qc[k] = G.c[k - 1];
  TruncatedSeries Q(0, N - 1, qc);
  return shift(reciprocal(Q), 1).truncated(N);
}

CoordSeq conj_coords(const CoordSeq& c) {
  CoordSeq out;
  out.a0 = std::conj(c.a0);
  out.A = c.A;
  for (auto& v : out.A) v = std::conj(v);
  return out;
}

bool coords_real(const CoordSeq& c, double tol) {
  if (std::abs(c.a0.imag()) > tol) return false;
  for (const auto& v : c.A)
    if (std::abs(v.imag()) > tol) return false;
  return true;
}

TruncatedSeries exp_derivation(const std::vector<cplx>& A, int sign,
                               int order) {
  if (order < 1) throw Error(ErrorKind::kDomain, "exp_derivation: order < 1");
  // Derivation D = sign * sum_j A_j x^{j+1} d/dx raises degree, so the
  // exponential applied to x terminates at each fixed degree.
  std::vector<cplx> avec(order + 1, cplx(0));  // coefficient of x^{j+1}
  bool any = false;
  for (int j = 1; j <= order - 1 && j <= static_cast<int>(A.size()); ++j) {
    avec[j + 1] = cplx(sign, 0) * A[j - 1];
    if (avec[j + 1] != cplx(0)) any = true;
  }
  TruncatedSeries result = TruncatedSeries::identity(order);
  if (!any) return result;
  TruncatedSeries aser(0, order, avec);
  TruncatedSeries term = TruncatedSeries::identity(order);
  for (int n = 1; n <= order; ++n) {
    term = smul(cplx(1.0 / n, 0),
                mul(aser, derivative(term).with_order(order)))
               .with_order(order)
               .truncated(order);
    if (term.known_empty() || term.low() > order) break;
    result = add(result, term);
  }
  return result.with_order(order);
}

TruncatedSeries apply_coords(const CoordSeq& c, int order) {
  if (c.a0 == cplx(0))
    throw Error(ErrorKind::kInvalidCoordinate, "apply_coords: a0 = 0");
  return smul(c.a0, exp_derivation(c.A, +1, order));
}

CoordSeq extract_coords(const TruncatedSeries& f) {
  if (f.known_empty() || f.low() != 1 || f.coeff(1) == cplx(0))
    throw Error(ErrorKind::kSingularSeries,
                "extract_coords: series must start with a nonzero linear term");
  int N = f.order();
  CoordSeq out;
  out.a0 = f.coeff(1);
  out.A.assign(std::max(0, N - 1), cplx(0));
  TruncatedSeries u = smul(cplx(1) / out.a0, f);  // x + u2 x^2 + ...
  // E_A's x^{j+1} coefficient is A_j plus a polynomial in A_1..A_{j-1}:
  // peel off order by order.
  for (int j = 1; j <= N - 1; ++j) {
    TruncatedSeries e = exp_derivation(out.A, +1, j + 1);
    out.A[j - 1] = u.coeff(j + 1) - e.coeff(j + 1);
  }
  return out;
}

}  // namespace occ::series
