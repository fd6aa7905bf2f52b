#include "occ/sewing.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace occ::sewing {

using moduli::DiskElement;
using moduli::SphereElement;
using series::CoordSeq;
using series::InfinitySeries;
using series::TruncatedSeries;

namespace {

#ifndef OCC_BAND_PAD
#define OCC_BAND_PAD 2
#endif

constexpr double kCollisionTol = 1e-7;
constexpr double kRealTol = 1e-8;
constexpr double kZeroImag = 1e-12;

// f(-s): alternate coefficient signs.
TruncatedSeries negate_argument(const TruncatedSeries& f) {
  std::vector<cplx> c = f.raw();
  int low = f.known_empty() ? f.order() + 1 : f.low();
  for (int k = low; k <= f.order(); ++k)
    if ((((k % 2) + 2) % 2) == 1) c[k - low] = -c[k - low];
  return TruncatedSeries(low, f.order(), std::move(c));
}

// F1hat recentered to the w variable: F1(w) = F1hat(w - center) expanded as
// w + d0 + d1/w + ... with `depth` tail coefficients.
InfinitySeries recentre_to_w(const InfinitySeries& fhat, cplx center,
                             int depth) {
  InfinitySeries out;
  out.c.assign(depth, cplx(0));
  out.c[0] = fhat.c.empty() ? -center : fhat.c[0] - center;
  for (int k = 1; k < static_cast<int>(fhat.c.size()); ++k) {
    // c_k (w - center)^{-k} = c_k sum_j binom(-k, j) (-center)^j w^{-k-j}
    cplx run(1);
    for (int j = 0; k + j < depth; ++j) {
      double b = 1.0;
      for (int t = 0; t < j; ++t) b *= (-double(k) - t) / (t + 1);
      out.c[k + j] += fhat.c[k] * b * run;
      run *= -center;
    }
  }
  // (w - center) itself contributes w and the constant -center, which is
  // already folded into out.c[0].
  return out;
}

struct BandMatrix {
  // Coefficients of xi^m for m in [-B, B], per unknown column.
  int B;
  std::vector<std::vector<cplx>> cols;  // cols[u][m + B]
  std::vector<cplx> rhs;                // rhs[m + B]
};

}  // namespace

series::TruncatedSeries inf_coordinate_inverse(const std::vector<cplx>& tail,
                                               int order) {
  // g0(w) = -E_tail(1/w); solving g0(u) = s gives
  // u = 1 / Einv(-s) with Einv the compositional inverse of E_tail.
  TruncatedSeries E = series::exp_derivation(tail, +1, order + 2);
  TruncatedSeries Einv = series::invert(E);
  TruncatedSeries h = negate_argument(Einv);  // Einv(-s)
  return series::reciprocal(h);               // low -1
}

SewingSolution solve_sewing(const TruncatedSeries& f,
                            const TruncatedSeries& g0inv, Variant variant,
                            cplx center) {
  if (f.known_empty() || f.low() != 1 || f.coeff(1) == cplx(0))
    throw Error(ErrorKind::kSingularSewing,
                "solve_sewing: local coordinate must vanish simply");
  if (g0inv.low() != -1 || g0inv.coeff(-1) == cplx(0))
    throw Error(ErrorKind::kSingularSewing,
                "solve_sewing: inverse infinity coordinate needs a simple pole");
  if (variant == Variant::kInterior && center == cplx(0))
    throw Error(ErrorKind::kGeometry,
                "solve_sewing: interior variant needs an off-axis center");

  // Matching band: the matrix entries need series data through degree 2N,
  // so the band is set by the orders the inputs actually carry.
  int N = (std::min(f.order(), g0inv.order() + 1) - 2) / 2;
  if (N < 2)
    throw Error(ErrorKind::kOrderUnderflow,
                "solve_sewing: inputs carry too few known coefficients");
  int hi = 2 * N + 2;

  TruncatedSeries X = series::invert(f.truncated(hi));  // xi -> x
  TruncatedSeries V = series::shift(X, -1);             // X / xi, unit at 0
  TruncatedSeries Vinv = series::reciprocal(V);

  // U(xi) = g0inv(-1/xi); with eta = 1/xi write U = Uhat(eta)/eta,
  // Uhat(eta) = 1 + u0 eta + u1 eta^2 + ...
  // Coefficient of xi^m in U^k equals [eta^{k-m}] Uhat^k.
  std::vector<cplx> uh(hi + 1, cplx(0));
  for (int k = -1; k <= std::min(g0inv.order(), hi - 1); ++k) {
    // U coefficient of xi^{-k} is g0inv_k * (-1)^k
    double sgn = (((k % 2) + 2) % 2) == 1 ? -1.0 : 1.0;
    cplx v = (k >= g0inv.low()) ? g0inv.coeff(k) : cplx(0);
    uh[k + 1] = v * sgn;
  }
  cplx utop = uh[0];  // leading coefficient of U at xi^1
  if (utop == cplx(0))
    throw Error(ErrorKind::kSingularSewing, "solve_sewing: degenerate gluing");
  TruncatedSeries Uhat(0, hi, uh);

  int Kc = N;  // unknowns c0..cKc
  int Kb = N;  // unknowns b1..bKb (+ b0 for the interior variant)
  bool interior = variant == Variant::kInterior;
  int nc = Kc + 1;
  int nb = Kb + (interior ? 1 : 0);
  int rows = 2 * N + 1 + (interior ? 1 : 0);
  int cols = nc + nb;
  if (rows != cols)
    throw Error(ErrorKind::kInternalConsistency, "solver shape mismatch");

  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(rows, cols);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(rows);

  auto row_of = [N](int m) { return m + N; };

  // Known part: L contains X(xi); move it to the right-hand side.
  for (int m = -N; m <= N; ++m) {
    cplx xm = (m >= X.low() && m <= X.order()) ? X.coeff(m) : cplx(0);
    rhs(row_of(m)) = -xm;
  }

  // Columns for c_k: [xi^m] X^{-k} = [xi^{m+k}] Vinv^k.
  {
    TruncatedSeries p = TruncatedSeries::monomial(0, cplx(1), Vinv.order());
    for (int k = 0; k <= Kc; ++k) {
      if (k > 0) p = series::mul(p, Vinv).truncated(2 * N);
      if (p.order() < 2 * N)
        throw Error(ErrorKind::kOrderUnderflow, "solve_sewing: X power order");
      for (int m = -N; m <= N; ++m) {
        int d = m + k;
        cplx v = (d >= p.low() && d <= p.order()) ? p.coeff(d) : cplx(0);
        A(row_of(m), k) += v;
      }
    }
  }

  // Columns for b_k: -[xi^m] U^k = -[eta^{k-m}] Uhat^k; b0 contributes at m=0.
  {
    int col0 = nc;
    if (interior) {
      A(row_of(0), col0) = -cplx(1);
      ++col0;
    }
    TruncatedSeries up = Uhat;
    for (int k = 1; k <= Kb; ++k) {
      if (k > 1) up = series::mul(up, Uhat).truncated(2 * N);
      if (up.order() < 2 * N)
        throw Error(ErrorKind::kOrderUnderflow, "solve_sewing: U power order");
      for (int m = -N; m <= N; ++m) {
        int d = k - m;
        cplx v = (d >= up.low() && d <= up.order()) ? up.coeff(d) : cplx(0);
        A(row_of(m), col0 + k - 1) = -v;
      }
    }
  }

  if (interior) {
    // F1(0) = F1hat(-center) = 0.
    int r = rows - 1;
    rhs(r) = center;
    A(r, 0) = cplx(1);
    cplx run = cplx(1);
    for (int k = 1; k <= Kc; ++k) {
      run /= -center;
      A(r, k) = run;
    }
  }

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
  Eigen::VectorXcd sol = lu.solve(rhs);
  double solve_err = (A * sol - rhs).cwiseAbs().maxCoeff();
  double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
  if (!sol.allFinite() || solve_err > 1e-6 * scale)
    throw Error(ErrorKind::kSingularSewing,
                "solve_sewing: linear step not solvable");

  SewingSolution out;
  out.center = center;
  out.F1.c.assign(Kc + 1, cplx(0));
  for (int k = 0; k <= Kc; ++k) out.F1.c[k] = sol(k);
  {
    int lo = interior ? 0 : 1;
    std::vector<cplx> b(Kb + (interior ? 1 : 0), cplx(0));
    for (int k = 0; k < static_cast<int>(b.size()); ++k) b[k] = sol(nc + k);
    out.F2 = TruncatedSeries(lo, Kb, std::move(b));
  }
  out.residual = sewing_residual(f, g0inv, out, variant);
  return out;
}

double sewing_residual(const TruncatedSeries& f, const TruncatedSeries& g0inv,
                       const SewingSolution& sol, Variant variant) {
  int N = (std::min(f.order(), g0inv.order() + 1) - 2) / 2;
  int hi = 2 * N + 2;
  TruncatedSeries X = series::invert(f.truncated(hi));
  TruncatedSeries V = series::shift(X, -1);
  TruncatedSeries Vinv = series::reciprocal(V);

  std::vector<cplx> uh(hi + 1, cplx(0));
  for (int k = -1; k <= std::min(g0inv.order(), hi - 1); ++k) {
    double sgn = (((k % 2) + 2) % 2) == 1 ? -1.0 : 1.0;
    cplx v = (k >= g0inv.low()) ? g0inv.coeff(k) : cplx(0);
    uh[k + 1] = v * sgn;
  }
  TruncatedSeries Uhat(0, hi, uh);

  std::vector<cplx> band(2 * N + 1, cplx(0));
  auto at = [N, &band](int m) -> cplx& { return band[m + N]; };
  for (int m = -N; m <= N; ++m)
    at(m) = (m >= X.low() && m <= X.order()) ? X.coeff(m) : cplx(0);
  {
    TruncatedSeries p = TruncatedSeries::monomial(0, cplx(1), Vinv.order());
    for (int k = 0; k < static_cast<int>(sol.F1.c.size()); ++k) {
      if (k > 0) p = series::mul(p, Vinv).truncated(2 * N);
      for (int m = -N; m <= N; ++m) {
        int d = m + k;
        if (d >= p.low() && d <= p.order()) at(m) += sol.F1.c[k] * p.coeff(d);
      }
    }
  }
  {
    TruncatedSeries up = TruncatedSeries::monomial(0, cplx(1), Uhat.order());
    for (int k = 0; k <= sol.F2.order(); ++k) {
      if (k > 0) up = series::mul(up, Uhat).truncated(2 * N);
      cplx bk = (k >= sol.F2.low()) ? sol.F2.coeff(k) : cplx(0);
      if (bk == cplx(0)) continue;
      for (int m = -N; m <= N; ++m) {
        int d = k - m;
        if (d >= up.low() && d <= up.order()) at(m) -= bk * up.coeff(d);
      }
    }
  }
  double r = 0;
  for (const auto& v : band) r = std::max(r, std::abs(v));
  if (variant == Variant::kInterior) {
    cplx v = -sol.center + sol.F1.c[0];
    cplx run(1);
    for (size_t k = 1; k < sol.F1.c.size(); ++k) {
      run /= -sol.center;
      v += sol.F1.c[k] * run;
    }
    r = std::max(r, std::abs(v));
  }
  return r;
}

namespace {

struct Assembly {
  SewingSolution maps;
  int n_int;  // internal working order
  int n_out;  // element order of the output

  cplx map_p(cplx z) const { return maps.F1.eval(z - maps.center); }
  cplx map_q(cplx u) const { return series::eval(maps.F2, u); }

  // Local reparametrization at a P-side puncture: s -> F1(z + s) - F1(z).
  TruncatedSeries reparam_p(cplx z) const {
    TruncatedSeries g = maps.F1.taylor_at(z - maps.center, n_int + 1);
    std::vector<cplx> c = g.raw();
    if (g.low() == 0) c[0] = cplx(0);  // the constant is the mapped point
    return TruncatedSeries(g.low(), g.order(), std::move(c));
  }

  TruncatedSeries reparam_q(cplx u) const {
    TruncatedSeries g = series::taylor_at(maps.F2, u, n_int + 1);
    std::vector<cplx> c = g.raw();
    if (g.low() == 0) c[0] = cplx(0);
    return TruncatedSeries(g.low(), g.order(), std::move(c));
  }

  CoordSeq push_coord(const CoordSeq& old, const TruncatedSeries& reparam) const {
    TruncatedSeries oldf = series::apply_coords(old, n_int);
    TruncatedSeries inv = series::invert(reparam.truncated(n_int));
    TruncatedSeries composed = series::compose(oldf, inv).truncated(n_out);
    return series::extract_coords(composed);
  }

  // New infinity tail: old map -E_tail(1/w) composed with F1^{-1}.
  std::vector<cplx> push_inf_tail(const std::vector<cplx>& tail) const {
    InfinitySeries f1w = recentre_to_w(maps.F1, maps.center, n_int + 2);
    TruncatedSeries ut = series::one_over_compose_inv(f1w, n_int + 1);
    TruncatedSeries E = series::exp_derivation(tail, +1, n_int);
    TruncatedSeries S = series::compose(E, ut).truncated(n_out);
    CoordSeq c = series::extract_coords(S);
    if (std::abs(c.a0 - cplx(1)) > 1e-6)
      throw Error(ErrorKind::kInternalConsistency,
                  "sewing: infinity coordinate lost its normalization");
    return c.A;
  }
};

// Translation w -> w - tau acting on an infinity tail.
std::vector<cplx> translate_inf_tail(const std::vector<cplx>& tail, cplx tau,
                                     int order) {
  if (tau == cplx(0)) return tail;
  // 1/(w + tau) as a power series in u = 1/w: u/(1 + tau u).
  std::vector<cplx> vc(order + 1, cplx(0));
  cplx run(1);
  for (int k = 1; k <= order; ++k) {
    vc[k] = run;
    run *= -tau;
  }
  TruncatedSeries v(0, order, vc);
  TruncatedSeries E = series::exp_derivation(tail, +1, order);
  TruncatedSeries S = series::compose(E, v);
  CoordSeq c = series::extract_coords(S);
  return c.A;
}

void check_collisions(const std::vector<cplx>& punctures, bool include_zero) {
  double scale = 1.0;
  for (const auto& z : punctures) scale = std::max(scale, std::abs(z));
  for (size_t i = 0; i < punctures.size(); ++i) {
    if (include_zero && std::abs(punctures[i]) < kCollisionTol * scale)
      throw Error(ErrorKind::kCollision, "sewing: puncture collided with 0");
    for (size_t j = i + 1; j < punctures.size(); ++j)
      if (std::abs(punctures[i] - punctures[j]) < kCollisionTol * scale)
        throw Error(ErrorKind::kCollision, "sewing: punctures collided");
  }
}

double force_real(cplx v, double scale) {
  if (std::abs(v.imag()) > kRealTol * scale)
    throw Error(ErrorKind::kInternalConsistency,
                "sewing: real datum acquired an imaginary part");
  return v.real();
}

std::vector<double> force_real_tail(const std::vector<cplx>& tail) {
  std::vector<double> out;
  out.reserve(tail.size());
  for (const auto& v : tail) out.push_back(force_real(v, 1.0));
  return out;
}

moduli::RealCoord force_real_coord(const CoordSeq& c) {
  moduli::RealCoord r;
  r.b0 = force_real(c.a0, 1.0);
  if (r.b0 <= 0.0)
    throw Error(ErrorKind::kInternalConsistency,
                "sewing: boundary scale lost positivity");
  for (const auto& v : c.A) r.B.push_back(force_real(v, 1.0));
  return r;
}

CoordSeq coords_of_real(const moduli::RealCoord& r) {
  CoordSeq c;
  c.a0 = cplx(r.b0, 0.0);
  for (double v : r.B) c.A.emplace_back(v, 0.0);
  return c;
}

}  // namespace

SphereElement sew_sphere(const SphereElement& P, int i,
                         const SphereElement& Q) {
  int m = P.arity(), n = Q.arity();
  if (i < 1 || i > m)
    throw Error(ErrorKind::kDomain, "sew_sphere: index out of range");
  int N = std::min(P.order, Q.order);
  int n_int = N + OCC_BAND_PAD;

  Assembly a;
  a.n_int = n_int;
  a.n_out = N;
  cplx center = P.puncture(i);
  TruncatedSeries f = series::apply_coords(P.coords[i - 1], 2 * n_int + 2);
  TruncatedSeries g0inv = inf_coordinate_inverse(Q.coord_inf, 2 * n_int + 2);
  a.maps = solve_sewing(f, g0inv, Variant::kBoundary, center);

  SphereElement out;
  out.order = N;
  out.certified = std::min(P.certified, Q.certified) - 2;

  std::vector<cplx> punctures;   // includes the final puncture; trimmed later
  std::vector<CoordSeq> coords;
  for (int j = 1; j < i; ++j) {
    punctures.push_back(a.map_p(P.puncture(j)));
    coords.push_back(a.push_coord(P.coords[j - 1], a.reparam_p(P.puncture(j))));
  }
  for (int k = 1; k <= n; ++k) {
    punctures.push_back(a.map_q(Q.puncture(k)));
    coords.push_back(a.push_coord(Q.coords[k - 1], a.reparam_q(Q.puncture(k))));
  }
  for (int j = i + 1; j <= m; ++j) {
    punctures.push_back(a.map_p(P.puncture(j)));
    coords.push_back(a.push_coord(P.coords[j - 1], a.reparam_p(P.puncture(j))));
  }
  std::vector<cplx> inf = a.push_inf_tail(P.coord_inf);

  int total = m + n - 1;
  if (static_cast<int>(punctures.size()) != total)
    throw Error(ErrorKind::kInternalConsistency, "sew_sphere: arity mismatch");

  cplx tau(0);
  if (total > 0) {
    tau = punctures.back();
    for (auto& z : punctures) z -= tau;
    punctures.back() = cplx(0);
  } else if (!inf.empty()) {
    tau = inf[0];  // K(0) gauge: first infinity coefficient vanishes
    // translate below
  }
  if (tau != cplx(0)) inf = translate_inf_tail(inf, tau, n_int);

  check_collisions(punctures, false);
  out.punctures.assign(punctures.begin(),
                       punctures.empty() ? punctures.end() : punctures.end() - 1);
  out.coord_inf = inf;
  out.coords = std::move(coords);
  return out;
}

DiskElement sew_boundary(const DiskElement& P, int i, const DiskElement& Q) {
  int m = P.boundary_arity(), p = Q.boundary_arity();
  int l = P.interior_arity(), q = Q.interior_arity();
  if (i < 1 || i > m)
    throw Error(ErrorKind::kDomain, "sew_boundary: index out of range");
  int N = std::min(P.order, Q.order);
  int n_int = N + OCC_BAND_PAD;

  Assembly a;
  a.n_int = n_int;
  a.n_out = N;
  double center = P.boundary_puncture(i);
  TruncatedSeries f = series::apply_coords(
      coords_of_real(P.boundary_coords[i - 1]), 2 * n_int + 2);
  std::vector<cplx> qinf(Q.coord_inf.begin(), Q.coord_inf.end());
  TruncatedSeries g0inv = inf_coordinate_inverse(qinf, 2 * n_int + 2);
  a.maps = solve_sewing(f, g0inv, Variant::kBoundary, cplx(center, 0));

  DiskElement out;
  out.order = N;
  out.certified = std::min(P.certified, Q.certified) - 2;

  std::vector<cplx> bnd;
  std::vector<CoordSeq> bnd_coords;
  for (int j = 1; j < i; ++j) {
    bnd.push_back(a.map_p(cplx(P.boundary_puncture(j), 0)));
    bnd_coords.push_back(a.push_coord(coords_of_real(P.boundary_coords[j - 1]),
                                      a.reparam_p(cplx(P.boundary_puncture(j), 0))));
  }
  for (int k = 1; k <= p; ++k) {
    bnd.push_back(a.map_q(cplx(Q.boundary_puncture(k), 0)));
    bnd_coords.push_back(a.push_coord(coords_of_real(Q.boundary_coords[k - 1]),
                                      a.reparam_q(cplx(Q.boundary_puncture(k), 0))));
  }
  for (int j = i + 1; j <= m; ++j) {
    bnd.push_back(a.map_p(cplx(P.boundary_puncture(j), 0)));
    bnd_coords.push_back(a.push_coord(coords_of_real(P.boundary_coords[j - 1]),
                                      a.reparam_p(cplx(P.boundary_puncture(j), 0))));
  }

  std::vector<cplx> interior;
  std::vector<CoordSeq> interior_coords;
  for (int j = 1; j <= l; ++j) {
    interior.push_back(a.map_p(P.interior_punctures[j - 1]));
    interior_coords.push_back(a.push_coord(P.interior_coords[j - 1],
                                           a.reparam_p(P.interior_punctures[j - 1])));
  }
  for (int k = 1; k <= q; ++k) {
    interior.push_back(a.map_q(Q.interior_punctures[k - 1]));
    interior_coords.push_back(a.push_coord(Q.interior_coords[k - 1],
                                           a.reparam_q(Q.interior_punctures[k - 1])));
  }
  std::vector<cplx> pinf(P.coord_inf.begin(), P.coord_inf.end());
  std::vector<cplx> inf = a.push_inf_tail(pinf);

  int total = m + p - 1;
  cplx tau(0);
  if (total > 0) {
    tau = bnd.back();
    for (auto& r : bnd) r -= tau;
    bnd.back() = cplx(0);
  } else {
    std::vector<cplx> probe = inf;
    if (!probe.empty()) tau = probe[0];
  }
  if (tau != cplx(0)) {
    force_real(tau, std::max(1.0, std::abs(tau)));
    inf = translate_inf_tail(inf, tau, n_int);
    for (auto& z : interior) z -= tau;
  }

  {
    std::vector<cplx> all = bnd;
    all.insert(all.end(), interior.begin(), interior.end());
    check_collisions(all, false);
  }

  out.boundary_punctures.clear();
  for (size_t j = 0; j + 1 < bnd.size(); ++j) {
    double r = force_real(bnd[j], std::max(1.0, std::abs(bnd[j])));
    out.boundary_punctures.push_back(r);
  }
  for (const auto& c : bnd_coords)
    out.boundary_coords.push_back(force_real_coord(c));
  for (auto& z : interior)
    if (z.imag() <= 0.0)
      throw Error(ErrorKind::kGeometry,
                  "sew_boundary: interior puncture left the upper half plane");
  out.interior_punctures = std::move(interior);
  out.interior_coords = std::move(interior_coords);
  out.coord_inf = force_real_tail(inf);
  if (out.boundary_arity() == 0 && !out.coord_inf.empty() &&
      std::abs(out.coord_inf[0]) > 1e-9)
    throw Error(ErrorKind::kInternalConsistency,
                "sew_boundary: type (1,0) gauge not restored");
  if (out.boundary_arity() == 0 && !out.coord_inf.empty())
    out.coord_inf[0] = 0.0;
  return out;
}

DiskElement sew_interior(const DiskElement& P, int i, const SphereElement& Q) {
  int l = P.interior_arity();
  int n = Q.arity();
  if (i < 1 || i > l)
    throw Error(ErrorKind::kDomain, "sew_interior: index out of range");
  int N = std::min(P.order, Q.order);
  int n_int = N + OCC_BAND_PAD;

  Assembly a;
  a.n_int = n_int;
  a.n_out = N;
  cplx center = P.interior_punctures[i - 1];
  TruncatedSeries f =
      series::apply_coords(P.interior_coords[i - 1], 2 * n_int + 2);
  TruncatedSeries g0inv = inf_coordinate_inverse(Q.coord_inf, 2 * n_int + 2);
  a.maps = solve_sewing(f, g0inv, Variant::kInterior, center);

  // F1 must be real analytic: its coefficients in the w variable are real.
  {
    InfinitySeries f1w = recentre_to_w(a.maps.F1, center, n_int);
    for (const auto& v : f1w.c)
      force_real(v, std::max(1.0, std::abs(v)));
  }

  DiskElement out;
  out.order = N;
  out.certified = std::min(P.certified, Q.certified) - 2;

  int m = P.boundary_arity();
  std::vector<cplx> bnd;
  std::vector<CoordSeq> bnd_coords;
  for (int j = 1; j <= m; ++j) {
    bnd.push_back(a.map_p(cplx(P.boundary_puncture(j), 0)));
    bnd_coords.push_back(a.push_coord(coords_of_real(P.boundary_coords[j - 1]),
                                      a.reparam_p(cplx(P.boundary_puncture(j), 0))));
  }

  std::vector<cplx> interior;
  std::vector<CoordSeq> interior_coords;
  for (int j = 1; j < i; ++j) {
    interior.push_back(a.map_p(P.interior_punctures[j - 1]));
    interior_coords.push_back(a.push_coord(P.interior_coords[j - 1],
                                           a.reparam_p(P.interior_punctures[j - 1])));
  }
  for (int k = 1; k <= n; ++k) {
    interior.push_back(a.map_q(Q.puncture(k)));
    interior_coords.push_back(a.push_coord(Q.coords[k - 1],
                                           a.reparam_q(Q.puncture(k))));
  }
  for (int j = i + 1; j <= l; ++j) {
    interior.push_back(a.map_p(P.interior_punctures[j - 1]));
    interior_coords.push_back(a.push_coord(P.interior_coords[j - 1],
                                           a.reparam_p(P.interior_punctures[j - 1])));
  }
  std::vector<cplx> pinf(P.coord_inf.begin(), P.coord_inf.end());
  std::vector<cplx> inf = a.push_inf_tail(pinf);

  cplx tau(0);
  if (m > 0) {
    // F1(0) = 0 pins the last boundary puncture; clean the numerical dust.
    tau = bnd.back();
    for (auto& r : bnd) r -= tau;
    bnd.back() = cplx(0);
  } else if (!inf.empty()) {
    tau = inf[0];
  }
  if (tau != cplx(0)) {
    inf = translate_inf_tail(inf, tau, n_int);
    for (auto& z : interior) z -= tau;
  }

  {
    std::vector<cplx> all = bnd;
    all.insert(all.end(), interior.begin(), interior.end());
    check_collisions(all, false);
  }

  for (size_t j = 0; j + 1 < bnd.size(); ++j)
    out.boundary_punctures.push_back(
        force_real(bnd[j], std::max(1.0, std::abs(bnd[j]))));
  for (const auto& c : bnd_coords)
    out.boundary_coords.push_back(force_real_coord(c));
  for (auto& z : interior)
    if (z.imag() <= 0.0)
      throw Error(ErrorKind::kGeometry,
                  "sew_interior: image puncture left the upper half plane");
  out.interior_punctures = std::move(interior);
  out.interior_coords = std::move(interior_coords);
  out.coord_inf = force_real_tail(inf);
  if (m == 0 && !out.coord_inf.empty()) out.coord_inf[0] = 0.0;
  return out;
}

}  // namespace occ::sewing
