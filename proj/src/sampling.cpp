#include "occ/sampling.hpp"

#include <cmath>

namespace occ::sampling {

using moduli::DiskElement;
using moduli::RealCoord;
using moduli::SphereElement;
using series::CoordSeq;

double Sampler::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng);
}

cplx Sampler::annulus_point(double rlo, double rhi) {
  double r = uniform(rlo, rhi);
  double phi = uniform(0.0, 2.0 * kPi);
  return cplx(r * std::cos(phi), r * std::sin(phi));
}

CoordSeq Sampler::coords(bool real_data, double extra_scale) {
  CoordSeq c;
  double s = coeff_scale * extra_scale;
  if (real_data)
    c.a0 = cplx(std::exp(uniform(-0.35, 0.35)), 0.0);
  else
    c.a0 = cplx(1.0, 0.0) + cplx(uniform(-0.3, 0.3), uniform(-0.3, 0.3));
  int len = tail_len > 0 ? tail_len : order - 1;
  double mag = s;
  for (int j = 1; j <= len; ++j) {
    double im = real_data ? 0.0 : uniform(-mag, mag);
    c.A.emplace_back(uniform(-mag, mag), im);
    mag *= coeff_decay;
  }
  return c;
}

RealCoord Sampler::real_coords(double extra_scale) {
  CoordSeq c = coords(true, extra_scale);
  RealCoord r;
  r.b0 = c.a0.real();
  for (const auto& v : c.A) r.B.push_back(v.real());
  return r;
}

std::vector<cplx> Sampler::inf_tail(bool real_data, double extra_scale) {
  CoordSeq c = coords(real_data, extra_scale);
  return c.A;
}

SphereElement Sampler::sphere(int arity) {
  if (arity < 0) throw Error(ErrorKind::kDomain, "sphere arity < 0");
  SphereElement q;
  q.order = order;
  q.certified = order;
  q.coord_inf = inf_tail(false);
  for (int i = 0; i + 1 < arity; ++i) {
    for (int tries = 0; tries < 200; ++tries) {
      cplx z = annulus_point();
      bool ok = std::abs(z) > 0.45;
      for (const auto& w : q.punctures) ok = ok && std::abs(z - w) > 0.45;
      if (ok) {
        q.punctures.push_back(z);
        break;
      }
    }
  }
  if (static_cast<int>(q.punctures.size()) + 1 != arity && arity > 0)
    throw Error(ErrorKind::kDomain, "sphere sampling failed to separate");
  for (int i = 0; i < arity; ++i) q.coords.push_back(coords(false));
  return q;
}

DiskElement Sampler::disk(int boundary_arity, int interior_arity) {
  DiskElement p;
  p.order = order;
  p.certified = order;
  p.coord_inf.resize(0);
  for (const auto& v : inf_tail(true)) p.coord_inf.push_back(v.real());
  if (boundary_arity == 0 && !p.coord_inf.empty()) p.coord_inf[0] = 0.0;
  for (int i = 0; i + 1 < boundary_arity; ++i) {
    for (int tries = 0; tries < 200; ++tries) {
      double r = uniform(0.5, 2.0);
      bool ok = true;
      for (double s : p.boundary_punctures) ok = ok && std::abs(r - s) > 0.3;
      if (ok) {
        p.boundary_punctures.push_back(r);
        break;
      }
    }
  }
  for (int i = 0; i < boundary_arity; ++i)
    p.boundary_coords.push_back(real_coords());
  for (int i = 0; i < interior_arity; ++i) {
    for (int tries = 0; tries < 200; ++tries) {
      cplx z = annulus_point();
      z = cplx(z.real(), 0.5 + std::abs(z.imag()));
      bool ok = true;
      for (const auto& w : p.interior_punctures) ok = ok && std::abs(z - w) > 0.45;
      if (ok) {
        p.interior_punctures.push_back(z);
        break;
      }
    }
  }
  if (static_cast<int>(p.interior_punctures.size()) != interior_arity)
    throw Error(ErrorKind::kDomain, "disk sampling failed to separate");
  for (int i = 0; i < interior_arity; ++i)
    p.interior_coords.push_back(coords(false));
  return p;
}

moduli::SphereElement Sampler::wide_sphere(int arity) {
  SphereElement q = sphere(arity);
  for (size_t k = 0; k < q.punctures.size(); ++k) {
    double radius = 3.0 * (k + 1);
    double phi = uniform(0.0, 2.0 * kPi);
    q.punctures[k] = cplx(radius * std::cos(phi), radius * std::sin(phi));
  }
  for (auto& c : q.coords) {
    double phase = std::arg(c.a0);
    c.a0 = std::polar(uniform(1.3, 2.2), phase * 0.3);
  }
  return q;
}

moduli::DiskElement Sampler::wide_disk(int boundary_arity,
                                       int interior_arity) {
  DiskElement p = disk(boundary_arity, interior_arity);
  for (size_t k = 0; k < p.boundary_punctures.size(); ++k)
    p.boundary_punctures[k] = 3.0 * (k + 1) + uniform(-0.5, 0.5);
  for (size_t k = 0; k < p.interior_punctures.size(); ++k) {
    double x = uniform(-1.0, 1.0);
    p.interior_punctures[k] = cplx(x - 3.0 * (k + 1), 3.0 * (k + 1));
  }
  for (auto& c : p.boundary_coords) c.b0 = uniform(1.3, 2.2);
  for (auto& c : p.interior_coords) {
    double phase = std::arg(c.a0);
    c.a0 = std::polar(uniform(1.3, 2.2), phase * 0.3);
  }
  return p;
}

namespace {

double cluster_radius_sphere(const moduli::SphereElement& Q) {
  double r = 1.0;
  for (const auto& z : Q.punctures) r = std::max(r, std::abs(z));
  return r;
}

double cluster_radius_disk(const moduli::DiskElement& Q) {
  double r = 1.0;
  for (double s : Q.boundary_punctures) r = std::max(r, std::abs(s));
  for (const auto& z : Q.interior_punctures) r = std::max(r, std::abs(z));
  return r;
}

}  // namespace

void prepare_sphere_slot(moduli::SphereElement& P, int i,
                         const moduli::SphereElement& Q, double margin) {
  cplx zi = P.puncture(i);
  double gap = 1.0;
  for (int j = 1; j <= P.arity(); ++j)
    if (j != i) gap = std::min(gap, std::abs(zi - P.puncture(j)));
  double need = margin * cluster_radius_sphere(Q) / gap;
  double have = std::abs(P.coords[i - 1].a0);
  if (have < need) P.coords[i - 1].a0 *= need / have;
}

void prepare_boundary_slot(moduli::DiskElement& P, int i,
                           const moduli::DiskElement& Q, double margin) {
  double ri = P.boundary_puncture(i);
  double gap = std::max(0.2, std::abs(ri));  // stay away from the other ray
  for (int j = 1; j <= P.boundary_arity(); ++j)
    if (j != i) gap = std::min(gap, std::abs(ri - P.boundary_puncture(j)));
  for (const auto& z : P.interior_punctures)
    gap = std::min(gap, std::abs(cplx(ri, 0) - z));
  if (ri == 0.0) gap = std::max(gap, 0.3);
  double need = margin * cluster_radius_disk(Q) / gap;
  if (P.boundary_coords[i - 1].b0 < need) P.boundary_coords[i - 1].b0 = need;
}

void prepare_interior_slot(moduli::DiskElement& P, int i,
                           const moduli::SphereElement& Q, double margin) {
  cplx zi = P.interior_punctures[i - 1];
  double gap = zi.imag();  // distance to the boundary line
  for (int j = 1; j <= P.interior_arity(); ++j)
    if (j != i) gap = std::min(gap, std::abs(zi - P.interior_punctures[j - 1]));
  for (int j = 1; j <= P.boundary_arity(); ++j)
    gap = std::min(gap, std::abs(zi - cplx(P.boundary_puncture(j), 0)));
  double need = margin * cluster_radius_sphere(Q) / gap;
  double have = std::abs(P.interior_coords[i - 1].a0);
  if (have < need) P.interior_coords[i - 1].a0 *= need / have;
}

}  // namespace occ::sampling
