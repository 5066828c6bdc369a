#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "invk/report.hpp"
#include "invk/util.hpp"

namespace invk::cat {

struct MorData {
  std::string id;
  int src = -1;
  int tgt = -1;
};

// A finite category given by explicit tables.  Objects and morphisms carry
// opaque string ids; everywhere else they are addressed by dense index.
// Identities are listed among the morphisms.  `compose(g, f)` is g after f
// and returns -1 when the pair is not composable or the table has a gap.
struct FiniteCategory {
  std::vector<std::string> objects;
  std::vector<MorData> morphisms;
  std::vector<int> identity;  // per object

  std::unordered_map<std::string, int> obj_index;
  std::unordered_map<std::string, int> mor_index;
  std::vector<std::vector<int>> mors_from;  // per source object
  std::vector<std::vector<int>> mors_into;  // per target object

  // Dense when morphisms.size()^2 is small, otherwise sparse.
  std::vector<int> comp_dense;
  std::unordered_map<std::uint64_t, int> comp_sparse;

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms.size()); }

  int src(int m) const { return morphisms[m].src; }
  int tgt(int m) const { return morphisms[m].tgt; }

  int compose(int g, int f) const {
    if (!comp_dense.empty())
      return comp_dense[static_cast<std::size_t>(g) * morphisms.size() + f];
    auto it = comp_sparse.find(pair_key(g, f));
    return it == comp_sparse.end() ? -1 : it->second;
  }

  int find_object(const std::string& id) const;
  int find_morphism(const std::string& id) const;

  // Morphism index of the inverse, or -1.  Computed on demand.
  int inverse(int m) const;

  static std::uint64_t pair_key(int g, int f) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
           static_cast<std::uint32_t>(f);
  }

 private:
  mutable std::vector<int> inv_cache;
};

struct CategoryBuilder {
  CategoryBuilder& object(const std::string& id);
  // Returns the morphism index for convenience.
  int morphism(const std::string& id, const std::string& src,
               const std::string& tgt);
  CategoryBuilder& set_identity(const std::string& obj, const std::string& mor);
  CategoryBuilder& set_compose(const std::string& g, const std::string& f,
                               const std::string& gf);
  FiniteCategory build();

  FiniteCategory c;
};

// Rebuild the index structures after the raw tables were filled directly.
void reindex(FiniteCategory& c);

Report validate_category(const FiniteCategory& c);

FiniteCategory terminal_category();
FiniteCategory discrete_category(std::span<const std::string> ids);

// Product over an ordered list of factors.  Object and morphism ids are the
// parenthesized comma-joined component ids.  Tuples are indexed with the
// last component fastest; the converters expose that numbering.
struct ProductCategory {
  FiniteCategory cat;
  std::vector<int> obj_radix;
  std::vector<int> mor_radix;

  int obj_of(std::span<const int> components) const;
  int mor_of(std::span<const int> components) const;
};

ProductCategory product_category(std::span<const FiniteCategory* const> factors);

// A functor between explicitly tabled categories.  The category pointers are
// non-owning; callers keep the categories alive.
struct Functor {
  const FiniteCategory* dom = nullptr;
  const FiniteCategory* cod = nullptr;
  std::vector<int> on_obj;
  std::vector<int> on_mor;
};

Functor identity_functor(const FiniteCategory& c);
Functor constant_functor(const FiniteCategory& dom, const FiniteCategory& cod,
                         int obj);
Functor compose_functor(const Functor& g, const Functor& f);

Report validate_functor(const Functor& f);

struct NatTransformation {
  const Functor* source = nullptr;
  const Functor* target = nullptr;
  std::vector<int> component;  // per domain object, a codomain morphism
};

Report validate_nat(const NatTransformation& t);

// A category with a chosen basepoint object.
struct PointedCategory {
  FiniteCategory c;
  int basepoint = -1;

  int bp_identity() const { return c.identity[basepoint]; }
};

PointedCategory terminal_pointed();

}  // namespace invk::cat
