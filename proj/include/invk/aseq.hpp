#pragma once

#include <span>
#include <utility>
#include <vector>

#include "invk/fskel.hpp"
#include "invk/report.hpp"
#include "invk/util.hpp"

namespace invk::aseq {

// An object of the indexing category: a finite sequence of positive
// integers, each standing for an unpointed finite set {1..m_i}.
struct Seq {
  std::vector<int> parts;

  int length() const { return static_cast<int>(parts.size()); }
  int total() const;
  bool operator==(const Seq&) const = default;
  auto operator<=>(const Seq&) const = default;
};

// Offsets of each block inside the flattened disjoint union, plus total.
std::vector<int> block_offsets(const Seq& s);

// A morphism m -> n: a function between the flattened disjoint unions
// such that the preimage of each codomain block is either empty or
// contained in a single domain block.  Entry for flattened domain
// position e (block-major) is the pair (codomain block, element), 1-based.
struct SeqMap {
  Seq dom, cod;
  std::vector<std::pair<int, int>> map;

  bool operator==(const SeqMap&) const = default;
  auto operator<=>(const SeqMap&) const = default;

  std::pair<int, int> at(int block, int elt) const;  // 1-based
};

Report validate_amorphism(const SeqMap& f);

SeqMap identity_seqmap(const Seq& s);
SeqMap compose_a(const SeqMap& g, const SeqMap& f);

Seq concat(const Seq& a, const Seq& b);
// Block sum: acts as f on the first blocks and as g on the rest.
SeqMap concat_map(const SeqMap& f, const SeqMap& g);

// Which domain block the preimage of codomain block j (1-based) lies in.
// Returns 0 when the preimage is empty; throws BlockMismatch when the
// preimage meets several domain blocks.
int preimage_block(const SeqMap& f, int j);

// The pointed component map <m_i> -> <n_j> of f: elements of domain
// block i landing in codomain block j keep their target element, all
// others go to the basepoint.
fskel::PtdMap component_map(const SeqMap& f, int i, int j);

// As component_map with i = preimage_block(f, j); requires a nonempty
// preimage inside one block.
fskel::PtdMap phi_ij(const SeqMap& f, int j);

// A permutation of block positions, 0-based one-line: to[i] is the
// target position of source block i.  Element maps are identities.
struct BlockPerm {
  std::vector<int> to;
  bool operator==(const BlockPerm&) const = default;
};

SeqMap block_perm_map(const BlockPerm& p, const Seq& dom);

// The braiding of the concatenation structure: blocks of a move past
// blocks of b.
SeqMap block_swap(const Seq& a, const Seq& b);

// Isomorphisms are exactly the maps sending each domain block bijectively
// onto a single codomain block.
bool is_iso_seqmap(const SeqMap& f);
SeqMap invert_seqmap(const SeqMap& f);

// The block permutation underlying the additive linearity constraint of a
// sequence arrangement.  r lists the row lengths r_1..r_k, b is the split
// row (1-based), rhat the extra length of row b.  Domain cells enumerate
// the arrangement of r followed by the arrangement with r_b replaced by
// rhat; codomain cells enumerate the arrangement with r_b + rhat.  Cells
// are ranked by `ord`.
BlockPerm sigma_linearity(std::span<const int> r, int b, int rhat,
                         Ordering ord = Ordering::RevLex);

// All valid morphisms m -> n, deterministically ordered by the flattened
// value table (codomain flattened positions 0..total(n), block-major).
std::vector<SeqMap> all_seqmaps(const Seq& m, const Seq& n);

}  // namespace invk::aseq
