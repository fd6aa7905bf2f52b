#include "doctest.h"
#include "occ/moduli.hpp"
#include "occ/sampling.hpp"

using namespace occ;
using namespace occ::moduli;

TEST_SUITE("moduli") {

TEST_CASE("identity elements have standard data") {
  auto s = identity_sphere();
  CHECK(s.arity() == 1);
  CHECK(s.punctures.empty());
  CHECK(s.coord_inf.empty());
  CHECK(s.coords[0].a0 == cplx(1));
  CHECK(validate(s).empty());

  auto d = identity_disk();
  CHECK(d.boundary_arity() == 1);
  CHECK(d.interior_arity() == 0);
  CHECK(d.boundary_coords[0].b0 == 1.0);
  CHECK(validate(d).empty());
}

TEST_CASE("conj fixes real data and matches the displayed example") {
  sampling::Sampler smp(11);
  auto d = smp.disk(2, 0);
  auto s = doubling(d);  // all-real boundary data + conjugate-closed interiors
  // A sphere with all-real data is fixed by conj.
  auto s_real = identity_sphere();
  s_real.coord_inf = {cplx(0.25, 0)};
  CHECK(max_data_diff(conj(s_real), s_real, 8) == 0.0);

  SphereElement q;
  q.punctures = {cplx(0, 1)};
  q.coord_inf = {};
  q.coords = {series::CoordSeq{cplx(2, 1), {}}, series::CoordSeq{cplx(1), {}}};
  auto cq = conj(q);
  CHECK(cq.punctures[0] == cplx(0, -1));
  CHECK(cq.coords[0].a0 == cplx(2, -1));
  CHECK(cq.coords[1].a0 == cplx(1, 0));

  for (int t = 0; t < 20; ++t) {
    auto r = smp.sphere(3);
    CHECK(max_data_diff(conj(conj(r)), r, 8) == 0.0);
  }
}

TEST_CASE("doubling: ordering of the type (1;1) example") {
  DiskElement p;
  p.boundary_coords.push_back(RealCoord{1.25, {0.1, -0.2}});
  p.coord_inf = {0.3, 0.05};
  p.interior_punctures = {cplx(0, 1)};
  p.interior_coords.push_back(series::CoordSeq{cplx(0.9, 0.2), {cplx(0.1, -0.3)}});
  auto s = doubling(p);
  REQUIRE(s.arity() == 3);
  CHECK(s.punctures[0] == cplx(0, 1));
  CHECK(s.punctures[1] == cplx(0, -1));
  CHECK(s.coords[0].a0 == cplx(0.9, 0.2));
  CHECK(s.coords[1].a0 == cplx(0.9, -0.2));
  CHECK(s.coords[1].A[0] == cplx(0.1, 0.3));
  CHECK(s.coords[2].a0 == cplx(1.25, 0));
  CHECK(s.coord_inf[0] == cplx(0.3, 0));
  CHECK(s.coord_inf[1] == cplx(0.05, 0));
}

TEST_CASE("doubling the identity disk gives the identity sphere") {
  auto s = doubling(identity_disk());
  CHECK(max_data_diff(s, identity_sphere(), 8) == 0.0);
}

TEST_CASE("doubling output is conjugation-symmetric up to block swap") {
  sampling::Sampler smp(17);
  for (int t = 0; t < 20; ++t) {
    auto p = smp.disk(2, 2);
    auto s = doubling(p);
    CHECK(validate(s).empty());
    int l = p.interior_arity();
    // Swap the two conjugate blocks of free punctures, fix the boundary block.
    std::vector<int> sigma;
    for (int i = 0; i < l; ++i) sigma.push_back(l + i);
    for (int i = 0; i < l; ++i) sigma.push_back(i);
    for (size_t i = 2 * l; i < s.punctures.size(); ++i)
      sigma.push_back(static_cast<int>(i));
    CHECK(max_data_diff(conj(s), permute(s, sigma), 8) == 0.0);
  }
}

TEST_CASE("permute: identity, transposition, group action") {
  sampling::Sampler smp(23);
  auto q = smp.sphere(4);  // three movable punctures
  std::vector<int> id = {0, 1, 2};
  CHECK(max_data_diff(permute(q, id), q, 8) == 0.0);

  std::vector<int> tau = {1, 0, 2};
  auto qt = permute(q, tau);
  CHECK(qt.punctures[0] == q.punctures[1]);
  CHECK(qt.coords[0].a0 == q.coords[1].a0);
  CHECK(qt.punctures[2] == q.punctures[2]);

  // permute(permute(Q, sigma), tau) = permute(Q, sigma composed after tau):
  // slot i of the double relabeling receives sigma[tau[i]].
  std::vector<int> sigma = {2, 0, 1};
  auto lhs = permute(permute(q, sigma), tau);
  std::vector<int> comp(3);
  for (int i = 0; i < 3; ++i) comp[i] = sigma[tau[i]];
  CHECK(max_data_diff(lhs, permute(q, comp), 8) == 0.0);

  std::vector<int> bad = {0, 0, 1};
  CHECK_THROWS_AS(permute(q, bad), Error);
}

TEST_CASE("validate flags the named violations") {
  sampling::Sampler smp(29);
  auto ok = smp.disk(2, 1);
  CHECK(validate(ok).empty());

  auto bad = ok;
  bad.interior_punctures.push_back(bad.interior_punctures[0]);
  bad.interior_coords.push_back(bad.interior_coords[0]);
  auto diags = validate(bad);
  bool found = false;
  for (const auto& d : diags) found = found || d == "punctures not distinct";
  CHECK(found);

  auto bad2 = ok;
  bad2.boundary_coords[0].b0 = -1.0;
  diags = validate(bad2);
  found = false;
  for (const auto& d : diags) found = found || d == "boundary scale not positive";
  CHECK(found);
}

TEST_CASE("JSON round trip is bit exact") {
  sampling::Sampler smp(31);
  auto q = smp.sphere(3);
  auto text = to_json_string(q);
  auto back = std::get<SphereElement>(element_from_json(text));
  CHECK(max_data_diff(q, back, q.order) == 0.0);
  for (size_t i = 0; i < q.punctures.size(); ++i) {
    CHECK(q.punctures[i].real() == back.punctures[i].real());
    CHECK(q.punctures[i].imag() == back.punctures[i].imag());
  }

  auto d = smp.disk(2, 1);
  auto dtext = to_json_string(d);
  auto dback = std::get<DiskElement>(element_from_json(dtext));
  CHECK(max_data_diff(d, dback, d.order) == 0.0);

  CHECK_THROWS_AS(element_from_json("{\"kind\":\"torus\"}"), Error);
}

}  // TEST_SUITE
