#include <vector>

#include "doctest.h"
#include "invk/aseq.hpp"

using namespace invk;
using namespace invk::aseq;

namespace {

// Sequences with the given total or less, including the empty one.
std::vector<Seq> seqs_up_to(int total) {
  std::vector<Seq> out{{{}}};
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.push_back({cur});
      return;
    }
    for (int x = 1; x <= rem; ++x) {
      cur.push_back(x);
      self(self, rem - x);
      cur.pop_back();
    }
  };
  for (int t = 1; t <= total; ++t) rec(rec, t);
  return out;
}

}  // namespace

TEST_CASE("seq basics") {
  Seq s{{2, 1, 3}};
  CHECK(s.length() == 3);
  CHECK(s.total() == 6);
  auto off = block_offsets(s);
  CHECK(off == std::vector<int>{0, 2, 3, 6});
}

TEST_CASE("validation enforces the block condition") {
  // (2) -> (2,1) splitting one block over two is fine.
  SeqMap f{{{2}}, {{2, 1}}, {{1, 2}, {2, 1}}};
  CHECK(validate_amorphism(f).ok());

  // (1,1) -> (2): the preimage of the only codomain block meets both
  // domain blocks.
  SeqMap g{{{1, 1}}, {{2}}, {{1, 1}, {1, 2}}};
  CHECK_FALSE(validate_amorphism(g).ok());

  // Out-of-range target element.
  SeqMap h{{{1}}, {{1}}, {{1, 2}}};
  CHECK_FALSE(validate_amorphism(h).ok());
}

TEST_CASE("there is no map merging blocks into one") {
  CHECK(all_seqmaps({{1, 1}}, {{1}}).empty());
  CHECK(all_seqmaps({{2, 1}}, {{2}}).empty());
  // One block can fan out over several.
  CHECK(all_seqmaps({{2}}, {{1, 1}}).size() == 4);
}

TEST_CASE("component maps of a splitting morphism") {
  SeqMap f{{{2}}, {{2, 1}}, {{1, 2}, {2, 1}}};
  CHECK(preimage_block(f, 1) == 1);
  CHECK(preimage_block(f, 2) == 1);
  fskel::PtdMap c11 = component_map(f, 1, 1);
  CHECK(c11.values == std::vector<int>{2, 0});
  fskel::PtdMap c12 = phi_ij(f, 2);
  CHECK(c12.values == std::vector<int>{0, 1});

  SeqMap g{{{1}}, {{1, 1}}, {{2, 1}}};
  CHECK(preimage_block(g, 1) == 0);
  CHECK_THROWS_AS(phi_ij(g, 1), BlockMismatch);
}

TEST_CASE("identity and composition close up") {
  auto seqs = seqs_up_to(3);
  for (const auto& m : seqs) {
    SeqMap id = identity_seqmap(m);
    CHECK(validate_amorphism(id).ok());
    CHECK(is_iso_seqmap(id));
    for (const auto& n : seqs)
      for (const auto& f : all_seqmaps(m, n)) {
        CHECK(validate_amorphism(f).ok());
        CHECK(compose_a(f, id) == f);
        CHECK(compose_a(identity_seqmap(n), f) == f);
      }
  }
}

TEST_CASE("composition is associative on small sequences") {
  auto seqs = seqs_up_to(2);
  for (const auto& m : seqs)
    for (const auto& n : seqs)
      for (const auto& q : seqs)
        for (const auto& s : seqs)
          for (const auto& f : all_seqmaps(m, n))
            for (const auto& g : all_seqmaps(n, q))
              for (const auto& h : all_seqmaps(q, s))
                CHECK(compose_a(compose_a(h, g), f) ==
                      compose_a(h, compose_a(g, f)));
}

TEST_CASE("concatenation and block sum") {
  Seq a{{2}}, b{{1, 1}};
  CHECK(concat(a, b) == Seq{{2, 1, 1}});
  SeqMap f{{{2}}, {{2}}, {{1, 2}, {1, 1}}};
  SeqMap g = identity_seqmap(b);
  SeqMap fg = concat_map(f, g);
  CHECK(fg.dom == Seq{{2, 1, 1}});
  CHECK(fg.cod == Seq{{2, 1, 1}});
  CHECK(validate_amorphism(fg).ok());
  CHECK(fg.at(1, 1) == std::pair<int, int>{1, 2});
  CHECK(fg.at(2, 1) == std::pair<int, int>{2, 1});
  CHECK(fg.at(3, 1) == std::pair<int, int>{3, 1});
}

TEST_CASE("block swap is an isomorphism with identity components") {
  Seq a{{2, 1}}, b{{3}};
  SeqMap s = block_swap(a, b);
  CHECK(s.dom == Seq{{2, 1, 3}});
  CHECK(s.cod == Seq{{3, 2, 1}});
  CHECK(validate_amorphism(s).ok());
  CHECK(is_iso_seqmap(s));
  // a-blocks land after the b-blocks, elements untouched.
  CHECK(s.at(1, 2) == std::pair<int, int>{2, 2});
  CHECK(s.at(3, 3) == std::pair<int, int>{1, 3});
  // Swapping back gives the identity.
  CHECK(compose_a(block_swap(b, a), s) == identity_seqmap(s.dom));
}

TEST_CASE("iso recognition and inversion") {
  BlockPerm p{{1, 0}};
  SeqMap f = block_perm_map(p, Seq{{2, 3}});
  CHECK(f.cod == Seq{{3, 2}});
  CHECK(is_iso_seqmap(f));
  SeqMap fi = invert_seqmap(f);
  CHECK(compose_a(fi, f) == identity_seqmap(f.dom));
  CHECK(compose_a(f, fi) == identity_seqmap(f.cod));

  // Bijective on the total set but collapsing blockwise: not an iso
  // morphism in this category (it is not even a morphism).
  SeqMap g{{{2}}, {{1, 1}}, {{1, 1}, {2, 1}}};
  CHECK(validate_amorphism(g).ok());
  CHECK_FALSE(is_iso_seqmap(g));
}

TEST_CASE("linearity block permutation, frozen cases") {
  // Rows (1,2), split row 1 extended by 1.
  BlockPerm p = sigma_linearity(std::vector<int>{1, 2}, 1, 1);
  CHECK(p.to == std::vector<int>{0, 2, 1, 3});
  // Same data under Lex ordering interleaves differently.
  BlockPerm pl = sigma_linearity(std::vector<int>{1, 2}, 1, 1, Ordering::Lex);
  CHECK(pl.to == std::vector<int>{0, 1, 2, 3});

  // Rows (2,2), split row 1 extended by 1.
  BlockPerm q = sigma_linearity(std::vector<int>{2, 2}, 1, 1);
  CHECK(q.to == std::vector<int>{0, 1, 3, 4, 2, 5});

  // One row: appending cells, no interleaving in either order.
  BlockPerm r = sigma_linearity(std::vector<int>{2}, 1, 2);
  CHECK(r.to == std::vector<int>{0, 1, 2, 3});
  BlockPerm rl = sigma_linearity(std::vector<int>{2}, 1, 2, Ordering::Lex);
  CHECK(rl.to == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("all_seqmaps is deterministic and duplicate-free") {
  Seq m{{2, 1}}, n{{1, 2}};
  auto a = all_seqmaps(m, n);
  auto b = all_seqmaps(m, n);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK_FALSE(a[i] == a[i - 1]);
  // () has exactly the identity endomap and no map from a nonempty seq
  // into it.
  CHECK(all_seqmaps({{}}, {{}}).size() == 1);
  CHECK(all_seqmaps({{1}}, {{}}).empty());
  CHECK(all_seqmaps({{}}, {{1}}).size() == 1);  // the empty function
}

TEST_CASE("maps from the empty sequence are empty functions") {
  auto e = all_seqmaps({{}}, {{2, 1}});
  REQUIRE(e.size() == 1);
  CHECK(e[0].map.empty());
  CHECK(validate_amorphism(e[0]).ok());
}
