#pragma once

#include "occ/moduli.hpp"
#include "occ/series.hpp"

namespace occ::sewing {

enum class Variant { kBoundary, kInterior };

// Solution of the sewing equation F1(w) = F2(g0^{-1}(-1/f(w))) in the
// annulus variable xi = f(w):
//   F1(w) = F1hat(w - center),  F1hat(x) = x + c0 + c1/x + ...,
//   F2 a power series at 0 of the glued-in factor.
// Normalizations: F1(infinity) = infinity, F1hat(x)/x -> 1 and, for the
// boundary variant F2(0) = 0, for the interior variant F1(0) = 0.
struct SewingSolution {
  series::InfinitySeries F1;
  series::TruncatedSeries F2;
  cplx center = 0.0;
  double residual = 0.0;
};

// f: local coordinate at the sewn puncture, a series in x = w - center with
// f(0) = 0, f'(0) != 0. g0inv: inverse of the coordinate at infinity of the
// second factor, a Laurent series s -> g0^{-1}(s) with a simple pole at 0.
SewingSolution solve_sewing(const series::TruncatedSeries& f,
                            const series::TruncatedSeries& g0inv,
                            Variant variant, cplx center = cplx(0));

// Independent back-substitution: rebuilds both sides of the sewing equation
// from a solution and returns the largest coefficient mismatch on the
// matched band.
double sewing_residual(const series::TruncatedSeries& f,
                       const series::TruncatedSeries& g0inv,
                       const SewingSolution& sol, Variant variant);

// g0^{-1} for the canonical infinity coordinate -E_tail(1/w), computed to
// the given order.
series::TruncatedSeries inf_coordinate_inverse(const std::vector<cplx>& tail,
                                               int order);

// Sphere sewing P i-infinity-0 Q with canonical renormalization.
moduli::SphereElement sew_sphere(const moduli::SphereElement& P, int i,
                                 const moduli::SphereElement& Q);

// Boundary sewing of disks along the i-th positively oriented boundary
// puncture of P and the infinity puncture of Q.
moduli::DiskElement sew_boundary(const moduli::DiskElement& P, int i,
                                 const moduli::DiskElement& Q);

// Interior sewing of the i-th interior puncture of the disk P with the
// infinity puncture of the sphere Q.
moduli::DiskElement sew_interior(const moduli::DiskElement& P, int i,
                                 const moduli::SphereElement& Q);

}  // namespace occ::sewing
