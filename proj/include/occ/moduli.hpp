#pragma once

#include <string>
#include <variant>
#include <vector>

#include "occ/series.hpp"

namespace occ::moduli {

// Canonical sphere with tubes: the 0-th (negatively oriented) puncture sits
// at infinity with coordinate tail `coord_inf`, punctures 1..n-1 sit at
// `punctures`, and the n-th puncture sits at 0. coords[i] carries the local
// coordinate data of puncture i+1; coords.back() belongs to the puncture
// at 0.
struct SphereElement {
  std::vector<cplx> punctures;
  std::vector<cplx> coord_inf;
  std::vector<series::CoordSeq> coords;
  int order = 8;      // truncation order of the stored coordinate tails
  int certified = 8;  // order to which the data is certified after sewing

  int arity() const { return static_cast<int>(coords.size()); }
  // Position of puncture i (1-based); arity() maps to 0.
  cplx puncture(int i) const;
};

struct RealCoord {
  double b0 = 1.0;
  std::vector<double> B;
};

// Canonical disk with strips and tubes of type (1, m; 0, l): the negatively
// oriented boundary puncture at infinity (tail `coord_inf`), boundary
// punctures r_1..r_{m-1} plus one pinned at 0, interior punctures in the
// open upper half plane.
struct DiskElement {
  std::vector<double> boundary_punctures;
  std::vector<double> coord_inf;
  std::vector<RealCoord> boundary_coords;
  std::vector<cplx> interior_punctures;
  std::vector<series::CoordSeq> interior_coords;
  int order = 8;
  int certified = 8;

  int boundary_arity() const { return static_cast<int>(boundary_coords.size()); }
  int interior_arity() const { return static_cast<int>(interior_coords.size()); }
  double boundary_puncture(int i) const;  // 1-based; boundary_arity() -> 0
};

SphereElement identity_sphere(int order = 8);
DiskElement identity_disk(int order = 8);

SphereElement conj(const SphereElement& q);

// Schwarz doubling: interior punctures are duplicated at conjugate points
// (with conjugated coordinates) and the boundary data passes through.
// Requires at least one positively oriented boundary puncture so the doubled
// sphere is in canonical position.
SphereElement doubling(const DiskElement& p);

// Relabels the movable punctures: for spheres sigma permutes punctures
// 1..n-1 (the puncture pinned at 0 stays put), for disks it permutes the
// interior punctures. sigma[i] = j means slot i receives entry j.
SphereElement permute(const SphereElement& q, const std::vector<int>& sigma);
DiskElement permute(const DiskElement& q, const std::vector<int>& sigma);

std::vector<std::string> validate(const SphereElement& q);
std::vector<std::string> validate(const DiskElement& q);

// Largest data mismatch between two elements of the same shape, with
// coordinate tails compared through `through_order`.
double max_data_diff(const SphereElement& a, const SphereElement& b,
                     int through_order);
double max_data_diff(const DiskElement& a, const DiskElement& b,
                     int through_order);

std::string to_json_string(const SphereElement& q);
std::string to_json_string(const DiskElement& q);
using AnyElement = std::variant<SphereElement, DiskElement>;
AnyElement element_from_json(const std::string& text);
AnyElement load_element(const std::string& path);
void save_element(const AnyElement& el, const std::string& path);

}  // namespace occ::moduli
