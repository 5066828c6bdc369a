#pragma once

#include <memory>
#include <span>
#include <vector>

#include "invk/gamma.hpp"
#include "invk/groth.hpp"
#include "invk/permlin.hpp"
#include "invk/report.hpp"

// The inverse functor P on multimorphism data.  Object and morphism
// images are computed cell by cell over the arrangement of the input
// sequences; `ord` picks the cell order (RevLex is the default
// construction, Lex its variant).
namespace invk::pmulti {

// Image of a 0-ary multimorphism with the given level-1 value: ((1), v).
groth::Object p_zero_ary(const gamma::GammaCategory& y, int value);

groth::Object p_on_objects(const gamma::Multimorphism& f,
                           std::span<const groth::Object* const> xs,
                           Ordering ord = Ordering::RevLex);

groth::Morphism p_on_morphisms(const gamma::Multimorphism& f,
                               std::span<const groth::Morphism* const> ms,
                               Ordering ord = Ordering::RevLex);

// The additive linearity constraint of PF in `slot` (0-based):
//   PF(..X..) box PF(..X'..) -> PF(..X (+) X'..)
// with underlying data (block reorder, identities).
groth::Morphism p_linearity(const gamma::Multimorphism& f,
                            std::span<const groth::Object* const> xs, int slot,
                            const groth::Object& extra,
                            Ordering ord = Ordering::RevLex);

// Component of the image transformation of a modification at an object
// tuple: (identity, theta-components).
groth::Morphism p_on_modifications(const gamma::Modification& th,
                                   std::span<const groth::Object* const> xs,
                                   Ordering ord = Ordering::RevLex);

// The image of a modification as a transformation between the assembled
// images of its endpoints, with components indexed by materialized object
// tuples.  `th`, both functors, and the materializations must outlive the
// result.
permlin::MultilinearTransformation p_transformation(
    const gamma::Modification& th, const permlin::MultilinearFunctor& fsrc,
    const permlin::MultilinearFunctor& ftgt,
    std::vector<const groth::PcatResult*> srcs, const groth::PcatResult& tgt,
    Ordering ord = Ordering::RevLex);

// Functor laws of the image on modifications: the transformation laws for
// `a` (and `b` when given), the identity modification landing on the
// identity transformation, and the composite b after a landing on the
// composite of the images.  Pass b = nullptr to check only `a`.
Report check_enrichment(const gamma::Modification& a,
                        const gamma::Modification* b,
                        std::vector<const groth::PcatResult*> srcs,
                        const groth::PcatResult& tgt,
                        Ordering ord = Ordering::RevLex);

// P of a multimorphism as a bounded multilinear functor over materialized
// categories.  Object and (when small enough) morphism and constraint
// grids are tabled; larger grids fall back to per-call evaluation.
// `f` and the category materializations must outlive the result.
permlin::MultilinearFunctor assemble_multilinear(
    const gamma::Multimorphism& f,
    std::vector<const groth::PcatResult*> srcs, const groth::PcatResult& tgt,
    Ordering ord = Ordering::RevLex);

// Compares P applied to the substitution composite against the composite
// of the assembled images.  Objects are compared on the full bounded
// grid; morphism and constraint grids restrict tuple entries to objects
// of block length <= mor_weight (skips are counted).  Every source and
// the target must be materialized by the same `pc`.
Report check_composition(const gamma::Multimorphism& g,
                         std::vector<const gamma::Multimorphism*> fs,
                         const groth::PcatResult& pc, Ordering ord,
                         int mor_weight);

// Pointwise comparison of the two sides of the symmetry square at one
// input tuple: lhs = (P f) applied to the sigma-permuted inputs, rhs =
// P(f acted by sigma) applied to the inputs as given.  `iso` is the
// comparison morphism (pi, 1): rhs -> lhs whose map permutes arrangement
// cells and reorders smash factors inside each cell, with identity level
// morphisms.  inputs[i] must be an object of f.sources[sigma[i]].
struct SymmetryCheck {
  groth::Object lhs;
  groth::Object rhs;
  groth::Morphism iso;
  bool equal = false;      // lhs and rhs agree on the nose
  bool iso_valid = false;  // iso is a well-formed isomorphism rhs -> lhs
};

SymmetryCheck check_symmetry_failure(
    const gamma::Multimorphism& f, std::vector<int> sigma,
    std::span<const groth::Object* const> inputs,
    Ordering ord = Ordering::RevLex);

// Pointwise symmetry comparison over every tuple of materialized
// objects; srcs[i] materializes f.sources[i].  Each instance must yield
// a valid (pi, 1); `all_equal` records whether the two sides also agreed
// strictly everywhere.
struct SymmetrySweep {
  Report report;
  bool all_equal = true;
};

SymmetrySweep symmetry_sweep(const gamma::Multimorphism& f,
                             std::vector<int> sigma,
                             std::vector<const groth::PcatResult*> srcs,
                             Ordering ord = Ordering::RevLex);

// The Lex-ordered image next to the RevLex one at a single input tuple,
// with the comparison morphism (alpha, 1): main -> variant permuting
// arrangement cells with identity element maps.
struct VariantCheck {
  groth::Object main;     // RevLex cell order
  groth::Object variant;  // Lex cell order
  groth::Morphism alpha;
  bool equal = false;        // the two cell orders coincide here
  bool alpha_valid = false;  // alpha is a well-formed isomorphism
};

VariantCheck p_prime_variant(const gamma::Multimorphism& f,
                             std::span<const groth::Object* const> inputs);

// Pointwise variant comparison over every bounded input tuple, plus
// alpha assembled as a transformation between the RevLex and Lex images
// and checked against the transformation laws.  `f` and the
// materializations must outlive the result.
struct VariantSweep {
  std::shared_ptr<const permlin::MultilinearFunctor> main;     // RevLex
  std::shared_ptr<const permlin::MultilinearFunctor> variant;  // Lex
  permlin::MultilinearTransformation alpha;
  Report report;
};

VariantSweep variant_sweep(const gamma::Multimorphism& f,
                           std::vector<const groth::PcatResult*> srcs,
                           const groth::PcatResult& tgt);

}  // namespace invk::pmulti
