#pragma once

#include <random>

#include "occ/moduli.hpp"

namespace occ::sampling {

// Randomized moduli instances for property suites. Puncture moduli live in
// the [0.5, 2] annulus with a separation floor, and coordinate tails are
// drawn in [-scale, scale] with geometric decay so solver conditioning stays
// benign at the default truncation order.
struct Sampler {
  explicit Sampler(std::uint64_t seed, int order = 8)
      : rng(seed), order(order) {}

  std::mt19937_64 rng;
  int order;
  double coeff_scale = 0.3;
  double coeff_decay = 0.5;
  int tail_len = 0;  // 0: order - 1

  double uniform(double lo, double hi);
  cplx annulus_point(double rlo = 0.5, double rhi = 2.0);

  series::CoordSeq coords(bool real_data = false, double extra_scale = 1.0);
  moduli::RealCoord real_coords(double extra_scale = 1.0);
  std::vector<cplx> inf_tail(bool real_data = false, double extra_scale = 1.0);

  moduli::SphereElement sphere(int arity);
  moduli::DiskElement disk(int boundary_arity, int interior_arity);

  // Variants with punctures spread over widely separated rings and scales
  // >= 1, so that iterated sewings stay well conditioned without large
  // coordinate rescalings.
  moduli::SphereElement wide_sphere(int arity);
  moduli::DiskElement wide_disk(int boundary_arity, int interior_arity);
};

// Enlarges the scale of the coordinate at the slot so the glued element's
// punctures land in a small cluster around it: the resulting pair is
// formally sewable with comfortable separation margins.
void prepare_sphere_slot(moduli::SphereElement& P, int i,
                         const moduli::SphereElement& Q, double margin = 4.0);
void prepare_boundary_slot(moduli::DiskElement& P, int i,
                           const moduli::DiskElement& Q, double margin = 4.0);
void prepare_interior_slot(moduli::DiskElement& P, int i,
                           const moduli::SphereElement& Q, double margin = 4.0);

}  // namespace occ::sampling
