#include "occ/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace occ::moduli {

using series::CoordSeq;
using json = nlohmann::json;

cplx SphereElement::puncture(int i) const {
  if (i < 1 || i > arity())
    throw Error(ErrorKind::kDomain, "sphere puncture index out of range");
  if (i == arity()) return cplx(0);
  return punctures[i - 1];
}

double DiskElement::boundary_puncture(int i) const {
  if (i < 1 || i > boundary_arity())
    throw Error(ErrorKind::kDomain, "boundary puncture index out of range");
  if (i == boundary_arity()) return 0.0;
  return boundary_punctures[i - 1];
}

SphereElement identity_sphere(int order) {
  SphereElement q;
  q.coords.push_back(CoordSeq{});
  q.order = order;
  q.certified = order;
  return q;
}

DiskElement identity_disk(int order) {
  DiskElement p;
  p.boundary_coords.push_back(RealCoord{});
  p.order = order;
  p.certified = order;
  return p;
}

SphereElement conj(const SphereElement& q) {
  SphereElement out = q;
  for (auto& z : out.punctures) z = std::conj(z);
  for (auto& a : out.coord_inf) a = std::conj(a);
  for (auto& c : out.coords) c = series::conj_coords(c);
  return out;
}

SphereElement doubling(const DiskElement& p) {
  if (p.boundary_arity() == 0)
    throw Error(ErrorKind::kDomain,
                "doubling: disk needs a boundary puncture at 0");
  SphereElement out;
  out.order = p.order;
  out.certified = p.certified;
  int l = p.interior_arity();
  for (int i = 0; i < l; ++i) out.punctures.push_back(p.interior_punctures[i]);
  for (int i = 0; i < l; ++i)
    out.punctures.push_back(std::conj(p.interior_punctures[i]));
  for (double r : p.boundary_punctures) out.punctures.emplace_back(r, 0.0);
  for (double b : p.coord_inf) out.coord_inf.emplace_back(b, 0.0);
  for (int i = 0; i < l; ++i) out.coords.push_back(p.interior_coords[i]);
  for (int i = 0; i < l; ++i)
    out.coords.push_back(series::conj_coords(p.interior_coords[i]));
  for (const auto& bc : p.boundary_coords) {
    CoordSeq c;
    c.a0 = cplx(bc.b0, 0.0);
    for (double v : bc.B) c.A.emplace_back(v, 0.0);
    out.coords.push_back(c);
  }
  return out;
}

namespace {

void check_perm(const std::vector<int>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n)
    throw Error(ErrorKind::kShapeMismatch, "permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v])
      throw Error(ErrorKind::kShapeMismatch, "not a permutation");
    seen[v] = true;
  }
}

}  // namespace

SphereElement permute(const SphereElement& q, const std::vector<int>& sigma) {
  int n = static_cast<int>(q.punctures.size());
  check_perm(sigma, n);
  SphereElement out = q;
  for (int i = 0; i < n; ++i) {
    out.punctures[i] = q.punctures[sigma[i]];
    out.coords[i] = q.coords[sigma[i]];
  }
  return out;
}

DiskElement permute(const DiskElement& q, const std::vector<int>& sigma) {
  int l = q.interior_arity();
  check_perm(sigma, l);
  DiskElement out = q;
  for (int i = 0; i < l; ++i) {
    out.interior_punctures[i] = q.interior_punctures[sigma[i]];
    out.interior_coords[i] = q.interior_coords[sigma[i]];
  }
  return out;
}

std::vector<std::string> validate(const SphereElement& q) {
  std::vector<std::string> out;
  if (q.coords.size() != q.punctures.size() + 1)
    out.push_back("coordinate count must be puncture count + 1");
  for (size_t i = 0; i < q.punctures.size(); ++i) {
    if (q.punctures[i] == cplx(0)) out.push_back("puncture coincides with 0");
    for (size_t j = i + 1; j < q.punctures.size(); ++j)
      if (q.punctures[i] == q.punctures[j])
        out.push_back("punctures not distinct");
  }
  for (const auto& c : q.coords)
    if (c.a0 == cplx(0)) out.push_back("coordinate scale vanishes");
  return out;
}

std::vector<std::string> validate(const DiskElement& q) {
  std::vector<std::string> out;
  if (q.boundary_arity() > 0 &&
      q.boundary_punctures.size() + 1 != q.boundary_coords.size())
    out.push_back("boundary coordinate count must be puncture count + 1");
  if (q.boundary_arity() == 0 && !q.coord_inf.empty() &&
      q.coord_inf[0] != 0.0)
    out.push_back("type (1,0) disks fix the first infinity coefficient to 0");
  for (size_t i = 0; i < q.boundary_punctures.size(); ++i) {
    if (q.boundary_punctures[i] <= 0.0)
      out.push_back("boundary punctures other than the pinned one must be "
                    "positive");
    for (size_t j = i + 1; j < q.boundary_punctures.size(); ++j)
      if (q.boundary_punctures[i] == q.boundary_punctures[j])
        out.push_back("punctures not distinct");
  }
  for (const auto& bc : q.boundary_coords)
    if (bc.b0 <= 0.0) out.push_back("boundary scale not positive");
  if (q.interior_punctures.size() != q.interior_coords.size())
    out.push_back("interior coordinate count mismatch");
  for (size_t i = 0; i < q.interior_punctures.size(); ++i) {
    if (q.interior_punctures[i].imag() <= 0.0)
      out.push_back("interior puncture not in the upper half plane");
    for (size_t j = i + 1; j < q.interior_punctures.size(); ++j)
      if (q.interior_punctures[i] == q.interior_punctures[j])
        out.push_back("punctures not distinct");
  }
  for (const auto& c : q.interior_coords)
    if (c.a0 == cplx(0)) out.push_back("coordinate scale vanishes");
  return out;
}

namespace {

double coords_diff(const CoordSeq& a, const CoordSeq& b, int through_order) {
  double m = std::abs(a.a0 - b.a0);
  for (int j = 1; j <= through_order - 1; ++j)
    m = std::max(m, std::abs(a.A_at(j) - b.A_at(j)));
  return m;
}

double tail_diff(const std::vector<cplx>& a, const std::vector<cplx>& b,
                 int through_order) {
  double m = 0;
  for (int j = 1; j <= through_order - 1; ++j) {
    cplx av = j <= static_cast<int>(a.size()) ? a[j - 1] : cplx(0);
    cplx bv = j <= static_cast<int>(b.size()) ? b[j - 1] : cplx(0);
    m = std::max(m, std::abs(av - bv));
  }
  return m;
}

}  // namespace

double max_data_diff(const SphereElement& a, const SphereElement& b,
                     int through_order) {
  if (a.arity() != b.arity())
    throw Error(ErrorKind::kShapeMismatch, "arity mismatch");
  double m = 0;
  for (size_t i = 0; i < a.punctures.size(); ++i)
    m = std::max(m, std::abs(a.punctures[i] - b.punctures[i]));
  m = std::max(m, tail_diff(a.coord_inf, b.coord_inf, through_order));
  for (size_t i = 0; i < a.coords.size(); ++i)
    m = std::max(m, coords_diff(a.coords[i], b.coords[i], through_order));
  return m;
}

double max_data_diff(const DiskElement& a, const DiskElement& b,
                     int through_order) {
  if (a.boundary_arity() != b.boundary_arity() ||
      a.interior_arity() != b.interior_arity())
    throw Error(ErrorKind::kShapeMismatch, "arity mismatch");
  double m = 0;
  for (size_t i = 0; i < a.boundary_punctures.size(); ++i)
    m = std::max(m, std::abs(a.boundary_punctures[i] - b.boundary_punctures[i]));
  for (size_t i = 0; i < a.interior_punctures.size(); ++i)
    m = std::max(m, std::abs(a.interior_punctures[i] - b.interior_punctures[i]));
  {
    std::vector<cplx> ai(a.coord_inf.begin(), a.coord_inf.end());
    std::vector<cplx> bi(b.coord_inf.begin(), b.coord_inf.end());
    m = std::max(m, tail_diff(ai, bi, through_order));
  }
  for (size_t i = 0; i < a.boundary_coords.size(); ++i) {
    m = std::max(m, std::abs(a.boundary_coords[i].b0 - b.boundary_coords[i].b0));
    std::vector<cplx> av(a.boundary_coords[i].B.begin(),
                         a.boundary_coords[i].B.end());
    std::vector<cplx> bv(b.boundary_coords[i].B.begin(),
                         b.boundary_coords[i].B.end());
    m = std::max(m, tail_diff(av, bv, through_order));
  }
  for (size_t i = 0; i < a.interior_coords.size(); ++i)
    m = std::max(m,
                 coords_diff(a.interior_coords[i], b.interior_coords[i],
                             through_order));
  return m;
}

namespace {

json cplx_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error(ErrorKind::kSchema, "expected [re, im] pair");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

json coords_to_json(const CoordSeq& c) {
  json a = json::array();
  for (const auto& v : c.A) a.push_back(cplx_to_json(v));
  return json{{"a0", cplx_to_json(c.a0)}, {"A", a}};
}

CoordSeq coords_from_json(const json& j) {
  CoordSeq c;
  c.a0 = cplx_from_json(j.at("a0"));
  for (const auto& v : j.at("A")) c.A.push_back(cplx_from_json(v));
  return c;
}

}  // namespace

std::string to_json_string(const SphereElement& q) {
  json j;
  j["kind"] = "sphere";
  j["punctures"] = json::array();
  for (const auto& z : q.punctures) j["punctures"].push_back(cplx_to_json(z));
  j["coord_inf"] = json::array();
  for (const auto& a : q.coord_inf) j["coord_inf"].push_back(cplx_to_json(a));
  j["coords"] = json::array();
  for (const auto& c : q.coords) j["coords"].push_back(coords_to_json(c));
  j["order"] = q.order;
  j["certified"] = q.certified;
  return j.dump(2);
}

std::string to_json_string(const DiskElement& q) {
  json j;
  j["kind"] = "disk";
  j["boundary_punctures"] = q.boundary_punctures;
  j["coord_inf"] = q.coord_inf;
  j["boundary_coords"] = json::array();
  for (const auto& bc : q.boundary_coords)
    j["boundary_coords"].push_back(json{{"b0", bc.b0}, {"B", bc.B}});
  j["interior_punctures"] = json::array();
  for (const auto& z : q.interior_punctures)
    j["interior_punctures"].push_back(cplx_to_json(z));
  j["interior_coords"] = json::array();
  for (const auto& c : q.interior_coords)
    j["interior_coords"].push_back(coords_to_json(c));
  j["order"] = q.order;
  j["certified"] = q.certified;
  return j.dump(2);
}

AnyElement element_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::kSchema, std::string("bad JSON: ") + e.what());
  }
  std::string kind = j.value("kind", "");
  try {
    if (kind == "sphere") {
      SphereElement q;
      for (const auto& z : j.at("punctures"))
        q.punctures.push_back(cplx_from_json(z));
      for (const auto& a : j.at("coord_inf"))
        q.coord_inf.push_back(cplx_from_json(a));
      for (const auto& c : j.at("coords"))
        q.coords.push_back(coords_from_json(c));
      q.order = j.value("order", 8);
      q.certified = j.value("certified", q.order);
      return q;
    }
    if (kind == "disk") {
      DiskElement q;
      q.boundary_punctures = j.at("boundary_punctures").get<std::vector<double>>();
      q.coord_inf = j.at("coord_inf").get<std::vector<double>>();
      for (const auto& bc : j.at("boundary_coords")) {
        RealCoord r;
        r.b0 = bc.at("b0").get<double>();
        r.B = bc.at("B").get<std::vector<double>>();
        q.boundary_coords.push_back(std::move(r));
      }
      for (const auto& z : j.at("interior_punctures"))
        q.interior_punctures.push_back(cplx_from_json(z));
      for (const auto& c : j.at("interior_coords"))
        q.interior_coords.push_back(coords_from_json(c));
      q.order = j.value("order", 8);
      q.certified = j.value("certified", q.order);
      return q;
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kSchema, std::string("bad element: ") + e.what());
  }
  throw Error(ErrorKind::kSchema, "kind must be \"sphere\" or \"disk\"");
}

AnyElement load_element(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kSchema, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return element_from_json(ss.str());
}

void save_element(const AnyElement& el, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kSchema, "cannot write " + path);
  if (std::holds_alternative<SphereElement>(el))
    out << to_json_string(std::get<SphereElement>(el)) << "\n";
  else
    out << to_json_string(std::get<DiskElement>(el)) << "\n";
}

}  // namespace occ::moduli
