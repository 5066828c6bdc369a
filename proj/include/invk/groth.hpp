#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "invk/aseq.hpp"
#include "invk/core.hpp"
#include "invk/gamma.hpp"
#include "invk/permlin.hpp"
#include "invk/report.hpp"

namespace invk::groth {

// An object (m, x) of PX: a sequence m and per block an object index of
// the level category X<m_i>.
struct Object {
  aseq::Seq m;
  std::vector<int> x;

  bool operator==(const Object&) const = default;
  auto operator<=>(const Object&) const = default;
};

// A morphism (phi, f): (m, x) -> (n, y).  f[j-1] is a morphism of
// X<n_j> from the phi-image of x at block j to y_j.
struct Morphism {
  Object src, tgt;
  aseq::SeqMap phi;
  std::vector<int> f;

  bool operator==(const Morphism&) const = default;
  auto operator<=>(const Morphism&) const = default;
};

Object unit_object();

bool valid_object(const gamma::GammaCategory& x, const Object& a);

// The phi-image of x at codomain block j (1-based): the basepoint when
// the preimage of block j is empty, X(phi_{i,j})(x_i) otherwise.
int acted_obj(const gamma::GammaCategory& x, const aseq::SeqMap& phi,
              std::span<const int> xs, int j);
int acted_mor(const gamma::GammaCategory& x, const aseq::SeqMap& phi,
              std::span<const int> fs, int j);

// Checked constructor: recomputes every phi-image and rejects ill-typed f.
Morphism make_morphism(const gamma::GammaCategory& x, Object src, Object tgt,
                       aseq::SeqMap phi, std::vector<int> f);

Morphism p_identity(const gamma::GammaCategory& x, const Object& a);
Morphism p_compose(const gamma::GammaCategory& x, const Morphism& g,
                   const Morphism& f);

Object p_box(const Object& a, const Object& b);
Morphism p_box(const gamma::GammaCategory& x, const Morphism& a,
               const Morphism& b);

// The braiding (block swap, identity): p_box(a, b) -> p_box(b, a).
Morphism p_braiding(const gamma::GammaCategory& x, const Object& a,
                    const Object& b);

bool is_iso(const gamma::GammaCategory& x, const Morphism& m);
Morphism p_invert(const gamma::GammaCategory& x, const Morphism& m);

// Bounded enumeration: sequences of length <= max_len with entries
// <= max_entry (and within truncation), ordered by length, then sequence,
// then object tuple rank (last block fastest).
std::vector<Object> enumerate_objects(const gamma::GammaCategory& x,
                                      int max_len, int max_entry);

// All morphisms a -> b, ordered by the underlying map table of phi and
// then the component tuple rank.
std::vector<Morphism> enumerate_morphisms(const gamma::GammaCategory& x,
                                          const Object& a, const Object& b);

std::string object_id(const Object& a);

// The product of level categories X<m_1> x ... x X<m_p>; empty m gives
// the terminal category.
cat::ProductCategory ax_on_object(const gamma::GammaCategory& x,
                                  const aseq::Seq& m);

// The induced functor between materialized products.  dom and cod must be
// ax_on_object results for phi's endpoints; they stay owned by the caller.
cat::Functor ax_on_morphism(const gamma::GammaCategory& x,
                            const aseq::SeqMap& phi,
                            const cat::ProductCategory& dom,
                            const cat::ProductCategory& cod);

// Materialized bounded PX with box as tensor and block-swap braiding.
// Also exposes the enumeration backing the indices, the per-object block
// lengths (weights for bounded functoriality checks), and hom offsets.
struct PcatResult {
  permlin::PermCategory perm;
  std::vector<Object> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> weight;  // per object: length of m
  std::map<Object, int> obj_index;
  std::map<Morphism, int> mor_index;
  std::vector<std::vector<int>> hom;  // s*objects.size()+t -> morphism indices

  int find_obj(const Object& a) const;     // -1 when out of bound
  int find_mor(const Morphism& m) const;   // -1 when out of bound
  // Fast variant when the endpoint indices are already known.
  int find_mor_between(int s, int t, const Morphism& m) const;
};

PcatResult build_pcat(const gamma::GammaCategory& x, int max_len,
                      int max_entry);

}  // namespace invk::groth
