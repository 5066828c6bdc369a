#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "invk/ringcat.hpp"

using namespace invk;
using namespace invk::ringcat;

namespace {

const GammaMonoid& bool_monoid4() {
  static GammaMonoid m = bool_mult_monoid(4);
  return m;
}

const groth::PcatResult& bool_ring_pcat() {
  static groth::PcatResult p = groth::build_pcat(*bool_monoid4().x, 2, 2);
  return p;
}

}  // namespace

TEST_CASE("builtin monoids satisfy the monoid equations") {
  const auto z2 = z2_mult_monoid(4);
  const auto j = j_mult_monoid(4);
  for (const GammaMonoid* m : {&bool_monoid4(), &z2, &j}) {
    auto r = validate_gamma_monoid(*m);
    CHECK(r.ok());
    CHECK(r.checked > 1000);
  }
}

TEST_CASE("monoid validation rejects bad frames and bad units") {
  auto m = bool_mult_monoid(3);
  GammaMonoid wrong;
  wrong.x = m.x;
  wrong.mu = gamma::identity_multi(m.x);
  wrong.eta = m.eta;
  auto fr = validate_gamma_monoid(wrong);
  REQUIRE_FALSE(fr.ok());
  CHECK(fr.violations.size() == 1);
  CHECK(fr.violations[0].law == "frame");

  GammaMonoid zu;
  zu.x = m.x;
  zu.mu = m.mu;
  zu.eta = gamma::make_zero_ary(m.x, 0);  // additive zero, not the unit
  auto ur = validate_gamma_monoid(zu);
  REQUIRE_FALSE(ur.ok());
  REQUIRE(ur.violations.size() == 2);
  CHECK(ur.violations[0].law == "left unit");
  CHECK(ur.violations[1].law == "right unit");
}

TEST_CASE("derived ring structure over the and monoid") {
  const auto& m = bool_monoid4();
  const auto& pc = bool_ring_pcat();
  auto rc = derive_ring(m, pc);

  int one = pc.find_obj(groth::Object{{{1}}, {1}});
  REQUIRE(one >= 0);
  CHECK(rc.one == one);
  CHECK(rc.tobj(one, one) == one);

  int a = pc.find_obj(groth::Object{{{2}}, {3}});
  REQUIRE(a >= 0);
  CHECK(rc.tobj(a, one) == a);
  CHECK(rc.tobj(one, a) == a);
  CHECK(rc.tobj(a, a) == -1);  // level 4 entry leaves the bound
  CHECK(rc.tobj(-1, a) == -1);

  const auto& cc = pc.perm.c;
  int uid = cc.identity[one];
  CHECK(rc.tmor(uid, uid) == uid);
  int f = rc.fal(one, one, one);
  int g = rc.far(one, one, one);
  REQUIRE(f >= 0);
  REQUIRE(g >= 0);
  CHECK(cc.inverse(f) >= 0);
  CHECK(cc.inverse(g) >= 0);
  CHECK(rc.fal(-1, one, one) == -1);

  auto tiny = groth::build_pcat(*m.x, 0, 0);
  CHECK_THROWS_AS(derive_ring(m, tiny), InputError);
}

TEST_CASE("ring axioms hold tightly for the and monoid") {
  auto rc = derive_ring(bool_monoid4(), bool_ring_pcat());
  auto rep = validate_ring(rc);
  CHECK(rep.ok());
  CHECK(rep.tight);
  CHECK(rep.extra.ok());
  REQUIRE(rep.axioms.size() == 7);
  for (const char* key :
       {"multiplicative_zero", "zero_factorization", "unit_factorization",
        "symmetry_factorization", "internal", "external", "two_by_two"}) {
    REQUIRE(rep.axioms.count(key) == 1);
    CHECK(rep.axioms.at(key).ok());
    CHECK(rep.axioms.at(key).checked > 0);
  }
  // 2 object laws per object plus 2 morphism laws per morphism
  CHECK(rep.axioms.at("multiplicative_zero").checked == 3208);
  CHECK(rep.coverage() > 0.0);
  CHECK(rep.coverage() < 1.0);  // the partial tensor forces skips
}

TEST_CASE("ring axioms hold for the smash monoid") {
  auto m = j_mult_monoid(4);
  auto pc = groth::build_pcat(*m.x, 2, 2);
  auto rc = derive_ring(m, pc);
  auto rep = validate_ring(rc);
  CHECK(rep.ok());
  CHECK(rep.tight);
}

TEST_CASE("a wrong multiplicative unit is caught, tightness is not") {
  auto rc = derive_ring(bool_monoid4(), bool_ring_pcat());
  rc.one = rc.add->unit;  // the additive unit is not the multiplicative one
  auto rep = validate_ring(rc);
  CHECK_FALSE(rep.ok());
  CHECK(rep.tight);  // factorizations untouched
  CHECK_FALSE(rep.extra.ok());
  CHECK(rep.extra.violations[0].law == "multiplicative unit");
  CHECK_FALSE(rep.axioms.at("unit_factorization").ok());
  for (const char* key :
       {"multiplicative_zero", "zero_factorization", "symmetry_factorization",
        "internal", "external", "two_by_two"})
    CHECK(rep.axioms.at(key).ok());
}
