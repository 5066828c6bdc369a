#include <vector>

#include "doctest.h"
#include "invk/permlin.hpp"

using namespace invk;
using namespace invk::permlin;

namespace {

// The non-identity endomorphism of <1> (the collapse onto the basepoint).
int collapse_endo(const PermCategory& p) {
  for (int m : p.c.mors_from[1])
    if (p.c.tgt(m) == 1 && m != p.c.identity[1]) return m;
  return -1;
}

}  // namespace

TEST_CASE("bounded pointed-set skeleton under smash") {
  auto p = fskel_perm(3);
  CHECK(p.c.objects.size() == 4);
  CHECK(p.c.morphisms.size() == 144);  // sum over m,n <= 3 of (n+1)^m
  CHECK(p.unit == 1);
  CHECK(p.tobj(1, 3) == 3);
  CHECK(p.tobj(3, 0) == 0);
  CHECK(p.tobj(2, 2) == -1);  // product leaves the bound
  CHECK(p.tobj(-1, 2) == -1);
  CHECK(p.braid(2, 2) == -1);
  CHECK(p.braid(3, 1) == p.c.identity[3]);
  CHECK(p.tmor(p.c.identity[1], p.c.identity[2]) == p.c.identity[2]);

  auto rep = validate_permutative(p);
  CHECK(rep.ok());
  CHECK(rep.coverage() < 1.0);  // the partial pairs count as skips
}

TEST_CASE("corrupted braiding table is caught") {
  auto p = fskel_perm(3);
  int bad = collapse_endo(p);
  REQUIRE(bad != -1);
  p.braiding[1 * p.c.objects.size() + 1] = bad;
  auto rep = validate_permutative(p);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.violations.front().witness.empty());
}

TEST_CASE("corrupted tensor unit is caught") {
  auto p = fskel_perm(3);
  p.tensor_obj[1 * p.c.objects.size() + 2] = 3;  // 1 (x) 2 must be 2
  CHECK_FALSE(validate_permutative(p).ok());
}

TEST_CASE("identity functor is 1-linear") {
  auto p = fskel_perm(3);
  auto f = identity_multilinear(p);
  CHECK(f.arity() == 1);
  CHECK(validate_multilinear(f).ok());
  std::vector<int> w{0, 1, 2, 3};
  CHECK(check_functoriality(f, w, 3).ok());
  std::vector<int> t{2};
  CHECK(f.obj(t) == 2);
  CHECK(f.constraint(0, t, 1) == p.c.identity[p.tobj(2, 1)]);
}

TEST_CASE("broken constraint endpoints are caught") {
  auto p = fskel_perm(3);
  auto f = identity_multilinear(p);
  f.constraint = [&p](int, std::span<const int>, int) {
    return p.c.identity[p.unit];
  };
  CHECK_FALSE(validate_multilinear(f).ok());
}

TEST_CASE("identity transformation validates, a skewed one does not") {
  auto p = fskel_perm(3);
  auto f = identity_multilinear(p);
  MultilinearTransformation t;
  t.source = &f;
  t.target = &f;
  t.component = [&p, &f](std::span<const int> xs) {
    int o = f.obj(xs);
    return o < 0 ? -1 : p.c.identity[o];
  };
  CHECK(validate_mltrans(t).ok());

  int z = collapse_endo(p);
  MultilinearTransformation s = t;
  s.component = [&p, &f, z](std::span<const int> xs) {
    int o = f.obj(xs);
    if (o < 0) return -1;
    return o == 1 ? z : p.c.identity[o];
  };
  CHECK_FALSE(validate_mltrans(s).ok());
}

TEST_CASE("substitution and symmetry act on evaluators") {
  auto p = fskel_perm(3);
  auto f = identity_multilinear(p);
  std::vector<const MultilinearFunctor*> fs{&f};
  auto g = compose_multilinear(f, fs);
  std::vector<int> t{3};
  CHECK(g.obj(t) == f.obj(t));
  CHECK(g.arity() == 1);
  auto h = sigma_act_multilinear(f, {0});
  CHECK(h.obj(t) == f.obj(t));
}
