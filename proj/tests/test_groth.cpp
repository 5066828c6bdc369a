#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "invk/groth.hpp"
#include "invk/permlin.hpp"

using namespace invk;
using namespace invk::groth;

TEST_CASE("objects: validity, unit, ids") {
  auto g = testfix::hbool4();
  CHECK(valid_object(*g, unit_object()));
  CHECK(valid_object(*g, Object{{{2}}, {3}}));
  CHECK_FALSE(valid_object(*g, Object{{{2}}, {4}}));   // no such level object
  CHECK_FALSE(valid_object(*g, Object{{{5}}, {0}}));   // level out of range
  CHECK_FALSE(valid_object(*g, Object{{{2, 1}}, {0}}));  // tuple too short
  CHECK(object_id(Object{{{2, 1}}, {3, 0}}) !=
        object_id(Object{{{1, 2}}, {0, 3}}));
  CHECK(object_id(unit_object()) == object_id(unit_object()));
}

TEST_CASE("checked morphism constructor recomputes the frame") {
  auto g = testfix::hbool4();
  Object a{{{2}}, {1}};
  Object b{{{1, 1}}, {0, 1}};
  // x = 1 = digits (0,1); block 1 keeps the top digit, block 2 the bottom
  aseq::SeqMap phi{{{2}}, {{1, 1}}, {{1, 1}, {2, 1}}};
  auto m = make_morphism(*g, a, b, phi, {g->bp_identity(1), g->level(1).c.identity[1]});
  CHECK(m.src == a);
  CHECK(m.tgt == b);
  // component at block 1 must start at the basepoint, not at 1
  CHECK_THROWS_AS(
      make_morphism(*g, a, b, phi,
                    std::vector<int>{g->level(1).c.identity[1], g->level(1).c.identity[1]}),
      InputError);
  CHECK_THROWS_AS(make_morphism(*g, a, Object{{{1}}, {9}}, phi, {}), InputError);
}

TEST_CASE("identity laws across a full bounded hom table") {
  const auto& P = testfix::pcat_bool22();
  const auto& g = *testfix::hbool4();
  for (const auto& m : P.morphisms) {
    CHECK(p_compose(g, p_identity(g, m.tgt), m) == m);
    CHECK(p_compose(g, m, p_identity(g, m.src)) == m);
  }
}

TEST_CASE("box on objects concatenates, unit is neutral") {
  Object a{{{2, 1}}, {3, 0}};
  Object b{{{1}}, {1}};
  auto ab = p_box(a, b);
  CHECK(ab.m.parts == std::vector<int>{2, 1, 1});
  CHECK(ab.x == std::vector<int>{3, 0, 1});
  CHECK(p_box(a, unit_object()) == a);
  CHECK(p_box(unit_object(), a) == a);
}

TEST_CASE("box on morphisms is functorial on a sample grid") {
  const auto& g = *testfix::hbool4();
  Object a{{{1}}, {0}};
  Object b{{{1}}, {1}};
  auto ms = enumerate_morphisms(g, a, b);
  auto ns = enumerate_morphisms(g, b, b);
  REQUIRE(!ms.empty());
  REQUIRE(!ns.empty());
  for (const auto& f : ms)
    for (const auto& h : ns) {
      auto t = p_box(g, f, h);
      CHECK(t.src == p_box(f.src, h.src));
      CHECK(t.tgt == p_box(f.tgt, h.tgt));
    }
  // interchange with identities
  auto f = ms.front();
  auto lhs = p_box(g, f, p_identity(g, b));
  auto rhs = p_compose(g, p_box(g, p_identity(g, b), p_identity(g, b)),
                       p_box(g, f, p_identity(g, b)));
  CHECK(lhs == rhs);
}

TEST_CASE("braiding is an involutive isomorphism") {
  const auto& g = *testfix::hbool4();
  auto objs = enumerate_objects(g, 1, 2);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      auto br = p_braiding(g, a, b);
      CHECK(br.src == p_box(a, b));
      CHECK(br.tgt == p_box(b, a));
      CHECK(is_iso(g, br));
      CHECK(p_invert(g, br) == p_braiding(g, b, a));
      CHECK(p_compose(g, p_braiding(g, b, a), br) ==
            p_identity(g, p_box(a, b)));
    }
}

TEST_CASE("a morphism over a folding map is not invertible") {
  const auto& g = *testfix::hbool4();
  Object a{{{2}}, {1}};
  Object b{{{1}}, {1}};
  aseq::SeqMap fold{{{2}}, {{1}}, {{1, 1}, {1, 1}}};
  auto m = make_morphism(g, a, b, fold, {g.level(1).c.identity[1]});
  CHECK_FALSE(is_iso(g, m));
  CHECK_THROWS_AS(p_invert(g, m), InputError);
}

TEST_CASE("bounded object enumeration: counts, order, determinism") {
  auto uj = testfix::junit4();
  auto hb = testfix::hbool4();
  auto ju = enumerate_objects(*uj, 2, 2);
  auto bo = enumerate_objects(*hb, 2, 2);
  CHECK(ju.size() == 31);
  CHECK(bo.size() == 43);
  CHECK(ju.front() == unit_object());
  CHECK(ju[1] == Object{{{1}}, {0}});
  CHECK(enumerate_objects(*uj, 2, 2) == ju);
  // truncation caps the admissible entries even under a generous bound
  auto caps = enumerate_objects(*em_gamma(gamma::bool_monoid(), 1), 1, 5);
  CHECK(caps.size() == 3);  // (), ((1),0), ((1),1)
}

TEST_CASE("morphism enumeration between fixed endpoints") {
  const auto& g = *testfix::hbool4();
  auto one = enumerate_morphisms(g, Object{{{1}}, {1}}, Object{{{1, 1}}, {0, 1}});
  CHECK(one.size() == 1);
  auto two = enumerate_morphisms(g, Object{{{2}}, {3}}, Object{{{1, 1}}, {1, 1}});
  CHECK(two.size() == 2);
  // no map merges separate blocks
  CHECK(enumerate_morphisms(g, Object{{{1, 1}}, {1, 1}}, Object{{{2}}, {3}})
            .empty());
  CHECK(enumerate_morphisms(g, Object{{{1}}, {1}}, Object{{{1}}, {1}}).size() ==
        1);
}

TEST_CASE("materialized bounded category is permutative") {
  auto small = em_gamma(gamma::bool_monoid(), 2);
  auto P = build_pcat(*small, 1, 2);
  CHECK(P.objects.size() == 7);
  CHECK(P.perm.c.objects.size() == 7);
  auto rep = permlin::validate_permutative(P.perm);
  CHECK(rep.ok());
  CHECK(rep.checked > 0);
}

TEST_CASE("index lookups round-trip and reject out-of-bound data") {
  const auto& P = testfix::pcat_bool22();
  for (std::size_t i = 0; i < P.objects.size(); ++i)
    CHECK(P.find_obj(P.objects[i]) == static_cast<int>(i));
  for (std::size_t i = 0; i < P.morphisms.size() && i < 500; ++i) {
    const auto& m = P.morphisms[i];
    CHECK(P.find_mor(m) == static_cast<int>(i));
    CHECK(P.find_mor_between(P.find_obj(m.src), P.find_obj(m.tgt), m) ==
          static_cast<int>(i));
  }
  CHECK(P.find_obj(Object{{{1, 1, 1}}, {0, 0, 0}}) == -1);
  CHECK(P.weight[0] == 0);
}

TEST_CASE("product of level categories and the induced functors") {
  auto x = testfix::ordered_bool_gamma(2);
  aseq::Seq m{{1, 1}};
  auto dom = ax_on_object(*x, m);
  CHECK(dom.cat.objects.size() == 4);
  CHECK(dom.cat.morphisms.size() == 9);
  auto pt = ax_on_object(*x, aseq::Seq{{}});
  CHECK(pt.cat.objects.size() == 1);

  auto idphi = aseq::identity_seqmap(m);
  auto idf = ax_on_morphism(*x, idphi, dom, dom);
  CHECK(validate_functor(idf).ok());
  for (int o = 0; o < dom.cat.num_objects(); ++o) CHECK(idf.on_obj[o] == o);

  auto sw = aseq::block_swap(aseq::Seq{{1}}, aseq::Seq{{1}});
  auto swf = ax_on_morphism(*x, sw, dom, dom);
  CHECK(validate_functor(swf).ok());
  std::vector<int> c01{0, 1};
  std::vector<int> c10{1, 0};
  CHECK(swf.on_obj[dom.obj_of(c01)] == dom.obj_of(c10));

  // fold: both blocks to one, acting by OR
  auto cod = ax_on_object(*x, aseq::Seq{{1}});
  aseq::SeqMap fold{{{1, 1}}, {{1}}, {{1, 1}, {1, 1}}};
  auto ff = ax_on_morphism(*x, fold, dom, cod);
  CHECK(validate_functor(ff).ok());
  std::vector<int> c11{1, 1};
  CHECK(ff.on_obj[dom.obj_of(c01)] == 1);
  CHECK(ff.on_obj[dom.obj_of(c11)] == 1);
  CHECK(ff.on_obj[dom.obj_of(std::vector<int>{0, 0})] == 0);
}
