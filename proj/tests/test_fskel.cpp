#include <vector>

#include "doctest.h"
#include "invk/fskel.hpp"
#include "invk/util.hpp"

using namespace invk;
using namespace invk::fskel;

TEST_CASE("pointed map basics") {
  PtdMap f{3, 2, {2, 0, 1}};
  CHECK(is_valid(f));
  CHECK(f(0) == 0);
  CHECK(f(1) == 2);
  CHECK(f(2) == 0);
  CHECK(is_identity(id_ptd(4)));
  CHECK_FALSE(is_identity(f));
  PtdMap z = zero_ptd(3, 5);
  for (int x = 0; x <= 3; ++x) CHECK(z(x) == 0);
  PtdMap bad{2, 1, {2, 0}};
  CHECK_FALSE(is_valid(bad));
}

TEST_CASE("composition and inversion") {
  PtdMap f{2, 3, {3, 1}};
  PtdMap g{3, 2, {2, 0, 1}};
  PtdMap gf = compose_ptd(g, f);
  CHECK(gf.dom == 2);
  CHECK(gf.cod == 2);
  CHECK(gf(1) == 1);  // g(f(1)) = g(3) = 1
  CHECK(gf(2) == 2);  // g(f(2)) = g(1) = 2
  CHECK_FALSE(is_iso(f));
  PtdMap p{3, 3, {3, 1, 2}};
  CHECK(is_iso(p));
  PtdMap q = invert(p);
  CHECK(is_identity(compose_ptd(q, p)));
  CHECK(is_identity(compose_ptd(p, q)));
}

TEST_CASE("smash coordinates") {
  CHECK(smash_pos(3, 1, 1) == 1);
  CHECK(smash_pos(3, 2, 1) == 4);
  CHECK(smash_pos(3, 2, 3) == 6);
  CHECK(smash_pos(3, 0, 2) == 0);
  CHECK(smash_pos(3, 2, 0) == 0);
  for (int pos = 0; pos <= 6; ++pos) {
    auto [x, y] = smash_unpos(2, 3, pos);
    CHECK(smash_pos(3, x, y) == pos);
  }
  SmashLex s = smash_lex(2, 3);
  CHECK(s.mn == 6);
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 3; ++y) CHECK(s.at(x, y) == smash_pos(3, x, y));
}

TEST_CASE("smash of maps commutes with the coordinate identification") {
  for (const PtdMap& f : hom_set(2, 2))
    for (const PtdMap& g : hom_set(3, 2)) {
      PtdMap fg = smash_map(f, g);
      CHECK(fg.dom == 6);
      CHECK(fg.cod == 4);
      for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 3; ++y)
          CHECK(fg(smash_pos(3, x, y)) == smash_pos(2, f(x), g(y)));
    }
}

TEST_CASE("hom_set order and size") {
  auto h = hom_set(2, 1);
  REQUIRE(h.size() == 4);  // value tables 00 01 10 11
  CHECK(h[0].values == std::vector<int>{0, 0});
  CHECK(h[1].values == std::vector<int>{0, 1});
  CHECK(h[2].values == std::vector<int>{1, 0});
  CHECK(h[3].values == std::vector<int>{1, 1});
  CHECK(hom_set(3, 2).size() == 27);
  CHECK(nonzero_hom(2, 2).size() == 4);
  CHECK(hom_set(0, 5).size() == 1);
}

TEST_CASE("braid swaps smash coordinates") {
  PtdMap b = braid(2, 3);
  CHECK(b.dom == 6);
  CHECK(b.cod == 6);
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 3; ++y)
      CHECK(b(smash_pos(3, x, y)) == smash_pos(2, y, x));
  CHECK(is_identity(compose_ptd(braid(3, 2), b)));
}

TEST_CASE("smash_reorder matches the coordinate permutation") {
  // Identity permutation gives the identity map.
  std::vector<int> p{2, 3, 2};
  std::vector<int> idp{0, 1, 2};
  CHECK(is_identity(smash_reorder(p, idp)));

  // A transposition of two factors agrees with braid.
  std::vector<int> pq{2, 3};
  std::vector<int> swap{1, 0};
  CHECK(smash_reorder(pq, swap) == braid(2, 3));

  // Exhaustive check against ranks: the left-normalized coordinate of
  // (a_1..a_k) is the lex rank of the tuple.
  std::vector<int> sig{2, 0, 1};
  PtdMap r = smash_reorder(p, sig);
  std::vector<int> q{p[sig[0]], p[sig[1]], p[sig[2]]};
  CHECK(r.dom == 12);
  CHECK(r.cod == 12);
  CHECK(is_iso(r));
  for (Odometer o({2, 3, 2}); !o.done; o.advance()) {
    std::vector<int> a{o.digits[0] + 1, o.digits[1] + 1, o.digits[2] + 1};
    std::vector<int> as{a[sig[0]], a[sig[1]], a[sig[2]]};
    CHECK(r(lex_rank1(a, p)) == lex_rank1(as, q));
  }
}
