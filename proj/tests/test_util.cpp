#include <vector>

#include "doctest.h"
#include "invk/util.hpp"

using namespace invk;

TEST_CASE("rank formulas on a 2x3 grid") {
  std::vector<int> p{2, 3};
  // lex: last index fastest.
  CHECK(lex_rank1(std::vector<int>{1, 1}, p) == 1);
  CHECK(lex_rank1(std::vector<int>{1, 3}, p) == 3);
  CHECK(lex_rank1(std::vector<int>{2, 1}, p) == 4);
  CHECK(lex_rank1(std::vector<int>{2, 3}, p) == 6);
  // revlex: first index fastest.
  CHECK(revlex_rank1(std::vector<int>{1, 1}, p) == 1);
  CHECK(revlex_rank1(std::vector<int>{2, 1}, p) == 2);
  CHECK(revlex_rank1(std::vector<int>{1, 2}, p) == 3);
  CHECK(revlex_rank1(std::vector<int>{2, 3}, p) == 6);
}

TEST_CASE("rank and unrank round-trip in both orders") {
  std::vector<int> p{3, 2, 2};
  std::vector<int> t;
  for (int r = 1; r <= 12; ++r) {
    lex_unrank1(r, p, t);
    CHECK(lex_rank1(t, p) == r);
    revlex_unrank1(r, p, t);
    CHECK(revlex_rank1(t, p) == r);
    cell_unrank1(r, p, Ordering::RevLex, t);
    CHECK(cell_rank1(t, p, Ordering::RevLex) == r);
    cell_unrank1(r, p, Ordering::Lex, t);
    CHECK(cell_rank1(t, p, Ordering::Lex) == r);
  }
}

TEST_CASE("cell_rank1 dispatches on the ordering") {
  std::vector<int> p{2, 2};
  std::vector<int> a{2, 1};
  CHECK(cell_rank1(a, p, Ordering::RevLex) == revlex_rank1(a, p));
  CHECK(cell_rank1(a, p, Ordering::Lex) == lex_rank1(a, p));
  CHECK(cell_rank1(a, p, Ordering::RevLex) == 2);
  CHECK(cell_rank1(a, p, Ordering::Lex) == 3);
}

TEST_CASE("rank of the empty tuple is 1") {
  std::vector<int> none;
  CHECK(lex_rank1(none, none) == 1);
  CHECK(revlex_rank1(none, none) == 1);
}

TEST_CASE("checked_product guards against overflow") {
  std::vector<int> small{7, 11, 13};
  CHECK(checked_product(small) == 1001);
  std::vector<int> big{1 << 20, 1 << 20, 1 << 20};
  CHECK_THROWS_AS(checked_product(big), InputError);
}

TEST_CASE("odometer enumerates last digit fastest") {
  Odometer o({2, 3});
  std::vector<std::vector<int>> seen;
  for (; !o.done; o.advance()) {
    CHECK(o.rank() == seen.size());
    seen.push_back(o.digits);
  }
  REQUIRE(seen.size() == 6);
  CHECK(seen[0] == std::vector<int>{0, 0});
  CHECK(seen[1] == std::vector<int>{0, 1});
  CHECK(seen[3] == std::vector<int>{1, 0});
  CHECK(seen[5] == std::vector<int>{1, 2});
}

TEST_CASE("odometer with empty radix yields one tuple") {
  Odometer o({});
  int n = 0;
  for (; !o.done; o.advance()) ++n;
  CHECK(n == 1);
}

TEST_CASE("odometer with a nonpositive radix is empty") {
  Odometer o({2, 0, 3});
  CHECK(o.done);
}

TEST_CASE("join_ints") {
  std::vector<int> xs{4, 0, 7};
  CHECK(join_ints(xs) == "4,0,7");
  CHECK(join_ints(xs, '|') == "4|0|7");
  CHECK(join_ints(std::vector<int>{}) == "");
}

TEST_CASE("permutation helpers") {
  CHECK(is_permutation0(std::vector<int>{2, 0, 1}));
  CHECK_FALSE(is_permutation0(std::vector<int>{0, 0, 1}));
  CHECK_FALSE(is_permutation0(std::vector<int>{0, 3, 1}));
  std::vector<int> s{2, 0, 1};
  auto inv = invert_permutation0(s);
  CHECK(inv == std::vector<int>{1, 2, 0});
  for (int i = 0; i < 3; ++i) CHECK(inv[s[i]] == i);
}
