#include <vector>

#include "doctest.h"
#include "invk/core.hpp"

using namespace invk;
using namespace invk::cat;

namespace {

// Two objects with an isomorphism between them.
FiniteCategory iso_pair() {
  CategoryBuilder b;
  b.object("a").object("b");
  b.morphism("ida", "a", "a");
  b.morphism("idb", "b", "b");
  b.morphism("f", "a", "b");
  b.morphism("g", "b", "a");
  b.set_identity("a", "ida").set_identity("b", "idb");
  b.set_compose("ida", "ida", "ida");
  b.set_compose("idb", "idb", "idb");
  b.set_compose("f", "ida", "f").set_compose("idb", "f", "f");
  b.set_compose("g", "idb", "g").set_compose("ida", "g", "g");
  b.set_compose("g", "f", "ida").set_compose("f", "g", "idb");
  return b.build();
}

FiniteCategory walking_arrow() {
  CategoryBuilder b;
  b.object("a").object("b");
  b.morphism("ida", "a", "a");
  b.morphism("idb", "b", "b");
  b.morphism("f", "a", "b");
  b.set_identity("a", "ida").set_identity("b", "idb");
  b.set_compose("ida", "ida", "ida");
  b.set_compose("idb", "idb", "idb");
  b.set_compose("f", "ida", "f").set_compose("idb", "f", "f");
  return b.build();
}

}  // namespace

TEST_CASE("builder output passes validation and composes") {
  FiniteCategory c = iso_pair();
  CHECK(validate_category(c).ok());
  int f = c.find_morphism("f"), g = c.find_morphism("g");
  int ida = c.find_morphism("ida"), idb = c.find_morphism("idb");
  CHECK(c.compose(g, f) == ida);
  CHECK(c.compose(f, g) == idb);
  CHECK(c.compose(f, idb) == -1);  // not composable
  CHECK(c.src(f) == c.find_object("a"));
  CHECK(c.tgt(f) == c.find_object("b"));
  CHECK_THROWS_AS(c.find_object("zz"), InputError);
  CHECK_THROWS_AS(c.find_morphism("zz"), InputError);
}

TEST_CASE("inverse lookup") {
  FiniteCategory c = iso_pair();
  CHECK(c.inverse(c.find_morphism("f")) == c.find_morphism("g"));
  CHECK(c.inverse(c.find_morphism("ida")) == c.find_morphism("ida"));
  FiniteCategory w = walking_arrow();
  CHECK(w.inverse(w.find_morphism("f")) == -1);
}

TEST_CASE("a missing composite is reported") {
  CategoryBuilder b;
  b.object("a").object("b");
  b.morphism("ida", "a", "a");
  b.morphism("idb", "b", "b");
  b.morphism("f", "a", "b");
  b.set_identity("a", "ida").set_identity("b", "idb");
  b.set_compose("ida", "ida", "ida");
  b.set_compose("idb", "idb", "idb");
  b.set_compose("f", "ida", "f");
  // idb after f is left out.
  FiniteCategory c = b.build();
  Report r = validate_category(c);
  CHECK_FALSE(r.ok());
}

TEST_CASE("terminal and discrete categories") {
  FiniteCategory t = terminal_category();
  CHECK(t.num_objects() == 1);
  CHECK(t.num_morphisms() == 1);
  CHECK(validate_category(t).ok());
  std::vector<std::string> ids{"x", "y", "z"};
  FiniteCategory d = discrete_category(ids);
  CHECK(d.num_objects() == 3);
  CHECK(d.num_morphisms() == 3);
  CHECK(validate_category(d).ok());
  CHECK(terminal_pointed().basepoint == 0);
}

TEST_CASE("product category composes componentwise") {
  FiniteCategory w = walking_arrow();
  std::vector<const FiniteCategory*> fs{&w, &w};
  ProductCategory p = product_category(fs);
  CHECK(p.cat.num_objects() == 4);
  CHECK(p.cat.num_morphisms() == 9);
  CHECK(validate_category(p.cat).ok());

  int ida = w.find_morphism("ida"), idb = w.find_morphism("idb");
  int f = w.find_morphism("f");
  // (idb, f) after (f, ida) = (f, f).
  int lhs = p.cat.compose(p.mor_of(std::vector<int>{idb, f}),
                          p.mor_of(std::vector<int>{f, ida}));
  CHECK(lhs == p.mor_of(std::vector<int>{f, f}));
  // Last component fastest.
  CHECK(p.obj_of(std::vector<int>{0, 1}) == 1);
  CHECK(p.obj_of(std::vector<int>{1, 0}) == 2);
}

TEST_CASE("functor validation") {
  FiniteCategory w = walking_arrow();
  Functor id = identity_functor(w);
  CHECK(validate_functor(id).ok());

  Functor cb = constant_functor(w, w, w.find_object("b"));
  CHECK(validate_functor(cb).ok());

  Functor broken = identity_functor(w);
  broken.on_mor[w.find_morphism("f")] = w.find_morphism("ida");
  CHECK_FALSE(validate_functor(broken).ok());

  Functor cc = compose_functor(id, id);
  CHECK(cc.on_obj == id.on_obj);
  CHECK(cc.on_mor == id.on_mor);
}

TEST_CASE("natural transformation validation") {
  FiniteCategory w = walking_arrow();
  Functor id = identity_functor(w);
  Functor cb = constant_functor(w, w, w.find_object("b"));

  NatTransformation t;
  t.source = &id;
  t.target = &cb;
  t.component = {w.find_morphism("f"), w.find_morphism("idb")};
  CHECK(validate_nat(t).ok());

  // Swapping a component breaks naturality frames.
  NatTransformation bad = t;
  bad.component = {w.find_morphism("ida"), w.find_morphism("idb")};
  CHECK_FALSE(validate_nat(bad).ok());
}
