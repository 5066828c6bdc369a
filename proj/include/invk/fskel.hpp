#pragma once

#include <span>
#include <utility>
#include <vector>

#include "invk/util.hpp"

namespace invk::fskel {

// A pointed map <dom> -> <cod> between the skeletal pointed sets
// <n> = {0, 1, ..., n} with basepoint 0.  values[i-1] is the image of i;
// the basepoint is fixed and not stored.
struct PtdMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> values;

  int operator()(int x) const { return x == 0 ? 0 : values[x - 1]; }
  bool operator==(const PtdMap&) const = default;
};

bool is_valid(const PtdMap& f);
PtdMap id_ptd(int n);
PtdMap zero_ptd(int dom, int cod);
PtdMap compose_ptd(const PtdMap& g, const PtdMap& f);

bool is_identity(const PtdMap& f);
bool is_iso(const PtdMap& f);
PtdMap invert(const PtdMap& f);

// Lexicographic smash coordinate: the nonzero element (x, y) of <m>^<n>
// corresponds to n*(x-1) + y in <mn>.  Either coordinate being 0 gives 0.
inline int smash_pos(int n, int x, int y) {
  return (x == 0 || y == 0) ? 0 : n * (x - 1) + y;
}
std::pair<int, int> smash_unpos(int m, int n, int pos);

// The smash <m> ^ <n> = <mn> together with its full coordinate table.
struct SmashLex {
  int m = 0, n = 0, mn = 0;
  std::vector<int> table;  // (n+1)*x + y -> coordinate in <mn>

  int at(int x, int y) const { return table[(n + 1) * x + y]; }
};
SmashLex smash_lex(int m, int n);

// Smash of two pointed maps under the coordinate identification:
// (f ^ g)(smash(x, y)) = smash(f(x), g(y)).
PtdMap smash_map(const PtdMap& f, const PtdMap& g);

// All pointed maps <a> -> <b> in mixed-radix order on the value table.
std::vector<PtdMap> hom_set(int a, int b);
// The maps that are nowhere zero on nonzero input.
std::vector<PtdMap> nonzero_hom(int a, int b);

// Coordinate permutation <mn> -> <nm> sending smash(x, y) to smash'(y, x).
PtdMap braid(int m, int n);

// Reordering of iterated smash factors.  For levels p and a permutation
// sigma (0-based one-line), returns the map <prod p> -> <prod q> with
// q[i] = p[sigma[i]] taking the left-normalized coordinate of (a_1..a_k)
// to that of (a_sigma(1)..a_sigma(k)).
PtdMap smash_reorder(std::span<const int> p, std::span<const int> sigma);

}  // namespace invk::fskel
