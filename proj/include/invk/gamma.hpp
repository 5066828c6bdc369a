#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "invk/core.hpp"
#include "invk/fskel.hpp"
#include "invk/report.hpp"

namespace invk::gamma {

// Action of a pointed map on a level: object and morphism tables of the
// induced functor between level categories.
struct LevelMap {
  std::vector<int> obj;
  std::vector<int> mor;
};

// A Gamma-category truncated at `truncation`: pointed level categories
// X<0>..X<truncation> with X<0> terminal, and a functorial action of
// pointed maps.  The action is either tabled densely (materialize() or a
// loader fills it) or computed on demand by `provider` and memoized.
struct GammaCategory {
  int truncation = 0;
  std::vector<cat::PointedCategory> levels;
  std::function<LevelMap(const fskel::PtdMap&)> provider;

  std::vector<long long> act_offset;  // (a*(T+1)+b) -> index, -1 if absent
  std::vector<LevelMap> act_table;

  const cat::PointedCategory& level(int p) const {
    if (p < 0 || p > truncation) throw TruncationError(p);
    return levels[p];
  }

  int basepoint(int p) const { return level(p).basepoint; }
  int bp_identity(int p) const { return level(p).bp_identity(); }

  const LevelMap& act(const fskel::PtdMap& f) const;
  int act_obj(const fskel::PtdMap& f, int o) const { return act(f).obj[o]; }
  int act_mor(const fskel::PtdMap& f, int m) const { return act(f).mor[m]; }

  void materialize();

 private:
  mutable std::map<std::uint64_t, LevelMap> memo;
  std::uint64_t act_key(const fskel::PtdMap& f) const;
};

using GammaPtr = std::shared_ptr<const GammaCategory>;

Report validate_gamma(const GammaCategory& g);

// The Gamma-category of based finite sets: level n is the discrete
// category on {0..n} and maps act by application.
GammaPtr unit_gamma(int truncation);

struct CommMonoid {
  std::vector<std::string> names;
  std::vector<int> table;  // row-major multiplication table
  int unit = 0;

  int op(int a, int b) const {
    return table[static_cast<std::size_t>(a) * names.size() + b];
  }
  int size() const { return static_cast<int>(names.size()); }
};

bool is_commutative_monoid(const CommMonoid& m);

// Eilenberg-Mac Lane style fixture: level n is the discrete category on
// n-tuples of monoid elements and a map acts by fiberwise summation.
GammaPtr em_gamma(const CommMonoid& m, int truncation);

CommMonoid z2_monoid();    // {0,1} with xor
CommMonoid bool_monoid();  // {0,1} with or

// One component functor prod_i X_i<p_i> -> Z<prod p> of a multimorphism,
// tabled over object and morphism tuples (last factor fastest).
struct Component {
  std::vector<int> levels;
  std::vector<int> obj_radix;
  std::vector<int> mor_radix;
  std::vector<int> obj;
  std::vector<int> mor;

  std::size_t obj_rank(std::span<const int> tuple) const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      r = r * obj_radix[i] + tuple[i];
    return r;
  }
  std::size_t mor_rank(std::span<const int> tuple) const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      r = r * mor_radix[i] + tuple[i];
    return r;
  }
};

// A k-ary multimorphism of Gamma-categories, stored by its component
// functors at level tuples with every entry positive, each within its
// source truncation, and the product within the target truncation.
// Components at tuples with a zero entry are forced and not stored.
// A 0-ary multimorphism is an object of Z<1>, stored in `value`.
struct Multimorphism {
  std::vector<GammaPtr> sources;
  GammaPtr target;
  int value = -1;
  std::map<std::vector<int>, Component> comps;

  int arity() const { return static_cast<int>(sources.size()); }
  const Component& comp(std::span<const int> p) const;
  bool has_levels(std::span<const int> p) const;

  void finalize();  // build the dense component index

 private:
  std::vector<const Component*> dense;
  int stride = 0;
};

// Builds a multimorphism from callbacks evaluated on every stored level
// tuple.  obj_fn and mor_fn receive the level tuple and the tuple of
// component indices and return a target object or morphism index.
Multimorphism make_multimorphism(
    std::vector<GammaPtr> sources, GammaPtr target,
    const std::function<int(std::span<const int>, std::span<const int>)>& obj_fn,
    const std::function<int(std::span<const int>, std::span<const int>)>& mor_fn);

Multimorphism make_zero_ary(GammaPtr target, int value);
Multimorphism identity_multi(GammaPtr x);
Multimorphism zero_multi(std::vector<GammaPtr> sources, GammaPtr target);

bool equal_multi(const Multimorphism& a, const Multimorphism& b);

Report validate_multimorphism(const Multimorphism& f);

// Substitution composite F(G_1, ..., G_k); the G_i feed the slots of F in
// order and 0-ary G_i are plugged in as their value objects.
Multimorphism compose_multi(const Multimorphism& f,
                            std::span<const Multimorphism* const> gs);

// Right symmetric-group action.  sigma is 0-based one-line; the result has
// sources[i] = f.sources[sigma[i]], and its component at q evaluates f at
// the reordered levels and transports along the smash-factor reordering of
// the target level.
Multimorphism sigma_act(const Multimorphism& f, std::span<const int> sigma);

// A modification between parallel multimorphisms: for each stored level
// tuple, a natural transformation given per object tuple by a morphism of
// the target level.
struct Modification {
  const Multimorphism* source = nullptr;
  const Multimorphism* target = nullptr;
  std::map<std::vector<int>, std::vector<int>> comps;

  const std::vector<int>& comp(std::span<const int> p) const;
};

Modification identity_modification(const Multimorphism& f);
Modification compose_modifications(const Modification& b,
                                   const Modification& a);

Report validate_modification(const Modification& m);

// Left-normalized smash of a tuple of pointed maps.
fskel::PtdMap smash_tuple(std::span<const fskel::PtdMap> fs);

}  // namespace invk::gamma
