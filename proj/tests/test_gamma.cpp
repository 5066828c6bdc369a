#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "invk/gamma.hpp"

using namespace invk;
using namespace invk::gamma;

using testfix::and_mu;

TEST_CASE("gamma validation over the stock carriers") {
  CHECK(validate_gamma(*unit_gamma(3)).ok());
  CHECK(validate_gamma(*em_gamma(z2_monoid(), 2)).ok());
  CHECK(validate_gamma(*em_gamma(bool_monoid(), 2)).ok());
  CHECK(validate_gamma(*testfix::ordered_bool_gamma(2)).ok());
}

TEST_CASE("unit carrier levels and action by application") {
  auto g = unit_gamma(3);
  CHECK(g->level(2).c.objects.size() == 3);
  CHECK(g->basepoint(2) == 0);
  fskel::PtdMap f{2, 1, {1, 0}};
  CHECK(g->act(f).obj == std::vector<int>{0, 1, 0});
  CHECK_THROWS_AS(g->level(4), TruncationError);
  CHECK_THROWS_AS(g->act(fskel::PtdMap{4, 1, {1, 1, 1, 1}}), TruncationError);
}

TEST_CASE("em action is fiberwise summation") {
  auto z2 = em_gamma(z2_monoid(), 3);
  auto bl = em_gamma(bool_monoid(), 3);
  fskel::PtdMap fold{2, 1, {1, 1}};
  CHECK(z2->act(fold).obj == std::vector<int>{0, 1, 1, 0});
  CHECK(bl->act(fold).obj == std::vector<int>{0, 1, 1, 1});
  // 1 |-> second coordinate, first fiber empty
  fskel::PtdMap into{1, 2, {2}};
  CHECK(z2->act(into).obj == std::vector<int>{0, 1});
  fskel::PtdMap drop{2, 1, {0, 1}};
  CHECK(z2->act(drop).obj == std::vector<int>{0, 1, 0, 1});
  // functoriality spot check: fold after (id, drop)-style composite
  fskel::PtdMap g3{3, 2, {1, 0, 2}};
  auto composite = fskel::compose_ptd(fold, g3);
  for (int x = 0; x < 8; ++x)
    CHECK(z2->act(composite).obj[x] == z2->act(fold).obj[z2->act(g3).obj[x]]);
}

TEST_CASE("ordered bool carrier has the documented arrow indexing") {
  auto g = testfix::ordered_bool_gamma(2);
  const auto& l1 = g->level(1).c;
  CHECK(l1.objects.size() == 2);
  CHECK(l1.morphisms.size() == 3);
  // 0 -> u has index u at every level
  CHECK(l1.morphisms[1].src == 0);
  CHECK(l1.morphisms[1].tgt == 1);
  const auto& l2 = g->level(2).c;
  for (int u = 0; u < 4; ++u) {
    CHECK(l2.morphisms[u].src == 0);
    CHECK(l2.morphisms[u].tgt == u);
  }
  auto m = *g;
  m.materialize();
  fskel::PtdMap fold{2, 1, {1, 1}};
  CHECK(m.act(fold).obj == g->act(fold).obj);
  CHECK(m.act(fold).mor == g->act(fold).mor);
}

TEST_CASE("multimorphism storage and bounds") {
  auto g = em_gamma(z2_monoid(), 4);
  auto mu = and_mu(g);
  CHECK(mu.arity() == 2);
  CHECK(validate_multimorphism(mu).ok());
  std::vector<int> p11{1, 1};
  CHECK(mu.comp(p11).obj == std::vector<int>{0, 0, 0, 1});
  CHECK(mu.has_levels(std::vector<int>{2, 2}));
  CHECK_FALSE(mu.has_levels(std::vector<int>{2, 3}));
  CHECK_THROWS_AS(mu.comp(std::vector<int>{2, 3}), TruncationError);
  CHECK_THROWS_AS(mu.comp(std::vector<int>{5, 1}), TruncationError);
}

TEST_CASE("zero-ary and degenerate constructors") {
  auto g = em_gamma(bool_monoid(), 3);
  auto eta = make_zero_ary(g, 1);
  CHECK(eta.arity() == 0);
  CHECK(eta.value == 1);
  CHECK(validate_multimorphism(eta).ok());
  CHECK_THROWS_AS(make_zero_ary(g, 7), InputError);
  auto z = zero_multi({g, g}, g);
  CHECK(validate_multimorphism(z).ok());
  std::vector<int> p{1, 2};
  for (int v : z.comp(p).obj) CHECK(v == g->basepoint(2));
}

TEST_CASE("substitution composition: units, associativity, unit law") {
  auto g = em_gamma(bool_monoid(), 4);
  auto mu = and_mu(g);
  auto id = identity_multi(g);

  std::vector<const Multimorphism*> ids{&id, &id};
  CHECK(equal_multi(compose_multi(mu, ids), mu));
  std::vector<const Multimorphism*> inner{&mu};
  CHECK(equal_multi(compose_multi(id, inner), mu));

  // associativity of AND survives the smash identification on the nose
  std::vector<const Multimorphism*> left{&mu, &id};
  std::vector<const Multimorphism*> right{&id, &mu};
  auto lhs = compose_multi(mu, left);
  auto rhs = compose_multi(mu, right);
  CHECK(lhs.arity() == 3);
  CHECK(equal_multi(lhs, rhs));
  CHECK(validate_multimorphism(lhs).ok());

  // plugging the unit into either slot gives the identity
  auto eta = make_zero_ary(g, 1);
  std::vector<const Multimorphism*> lu{&eta, &id};
  std::vector<const Multimorphism*> ru{&id, &eta};
  CHECK(equal_multi(compose_multi(mu, lu), id));
  CHECK(equal_multi(compose_multi(mu, ru), id));
}

TEST_CASE("symmetric group action on a commutative multiplication") {
  auto g = em_gamma(z2_monoid(), 4);
  auto mu = and_mu(g);
  std::vector<int> swap{1, 0};
  std::vector<int> ident{0, 1};
  CHECK(equal_multi(sigma_act(mu, ident), mu));
  auto sw = sigma_act(mu, swap);
  CHECK(validate_multimorphism(sw).ok());
  CHECK(equal_multi(sw, mu));  // commutative, so the braid transport cancels
  CHECK(equal_multi(sigma_act(sw, swap), mu));
  CHECK_THROWS_AS(sigma_act(mu, std::vector<int>{0, 0}), InputError);
}

TEST_CASE("modifications on the ordered carrier") {
  auto g = testfix::ordered_bool_gamma(2);
  auto z = zero_multi({g}, g);
  auto id = identity_multi(g);

  auto iz = identity_modification(z);
  CHECK(validate_modification(iz).ok());

  // basepoint inclusion 0 -> u, morphism index u by construction
  Modification th;
  th.source = &z;
  th.target = &id;
  th.comps[{1}] = {0, 1};
  th.comps[{2}] = {0, 1, 2, 3};
  CHECK(validate_modification(th).ok());

  auto iid = identity_modification(id);
  auto comp = compose_modifications(iid, th);
  CHECK(comp.comps == th.comps);
  CHECK(validate_modification(comp).ok());

  // breaking one component breaks naturality
  Modification bad = th;
  bad.comps[{1}] = {0, 2};  // 1 -> 1 instead of 0 -> 1
  CHECK_FALSE(validate_modification(bad).ok());
}

TEST_CASE("left-normalized smash of pointed map tuples") {
  auto hs2 = fskel::hom_set(2, 2);
  auto hs3 = fskel::hom_set(3, 2);
  for (const auto& f : hs2)
    for (const auto& g : hs3) {
      std::vector<fskel::PtdMap> fs{f, g};
      auto lhs = smash_tuple(fs);
      auto rhs = fskel::smash_map(f, g);
      CHECK(lhs.values == rhs.values);
    }
  std::vector<fskel::PtdMap> one{fskel::PtdMap{3, 1, {0, 1, 0}}};
  CHECK(smash_tuple(one).values == std::vector<int>{0, 1, 0});
  std::vector<fskel::PtdMap> none;
  auto e = smash_tuple(none);
  CHECK(e.dom == 1);
  CHECK(e.cod == 1);
  CHECK(e.values == std::vector<int>{1});
}
