#include "invk/aseq.hpp"

namespace invk::aseq {

int Seq::total() const {
  int t = 0;
  for (int p : parts) t += p;
  return t;
}

std::vector<int> block_offsets(const Seq& s) {
  std::vector<int> offs(s.parts.size() + 1, 0);
  for (std::size_t i = 0; i < s.parts.size(); ++i)
    offs[i + 1] = offs[i] + s.parts[i];
  return offs;
}

std::pair<int, int> SeqMap::at(int block, int elt) const {
  int off = 0;
  for (int i = 0; i + 1 < block; ++i) off += dom.parts[i];
  return map[off + elt - 1];
}

Report validate_amorphism(const SeqMap& f) {
  Report r;
  r.suite = "seqmap";
  for (int p : f.dom.parts)
    r.require(p >= 1, "positive entries", "domain");
  for (int p : f.cod.parts)
    r.require(p >= 1, "positive entries", "codomain");
  if (static_cast<int>(f.map.size()) != f.dom.total()) {
    r.add("table shape", "value table does not match the flattened domain");
    return r;
  }
  for (const auto& [j, t] : f.map) {
    bool good = j >= 1 && j <= f.cod.length() && t >= 1 &&
                t <= f.cod.parts[j - 1];
    r.require(good, "value range",
              "(" + std::to_string(j) + "," + std::to_string(t) + ")");
  }
  if (!r.ok()) return r;

  // Preimage of each codomain block lies in at most one domain block.
  std::vector<int> owner(f.cod.length() + 1, 0);
  int pos = 0;
  for (int i = 1; i <= f.dom.length(); ++i)
    for (int s = 1; s <= f.dom.parts[i - 1]; ++s, ++pos) {
      int j = f.map[pos].first;
      r.count();
      if (owner[j] == 0)
        owner[j] = i;
      else if (owner[j] != i)
        r.add("block condition", "codomain block " + std::to_string(j) +
                                     " meets domain blocks " +
                                     std::to_string(owner[j]) + " and " +
                                     std::to_string(i));
    }
  return r;
}

SeqMap identity_seqmap(const Seq& s) {
  SeqMap f{s, s, {}};
  f.map.reserve(s.total());
  for (int i = 1; i <= s.length(); ++i)
    for (int e = 1; e <= s.parts[i - 1]; ++e) f.map.emplace_back(i, e);
  return f;
}

SeqMap compose_a(const SeqMap& g, const SeqMap& f) {
  if (!(f.cod == g.dom)) throw InputError("compose_a: middle objects differ");
  SeqMap h{f.dom, g.cod, {}};
  h.map.resize(f.map.size());
  auto offs = block_offsets(f.cod);
  for (std::size_t e = 0; e < f.map.size(); ++e) {
    const auto& [j, t] = f.map[e];
    h.map[e] = g.map[offs[j - 1] + t - 1];
  }
  return h;
}

Seq concat(const Seq& a, const Seq& b) {
  Seq c = a;
  c.parts.insert(c.parts.end(), b.parts.begin(), b.parts.end());
  return c;
}

SeqMap concat_map(const SeqMap& f, const SeqMap& g) {
  SeqMap h{concat(f.dom, g.dom), concat(f.cod, g.cod), {}};
  h.map = f.map;
  int shift = f.cod.length();
  h.map.reserve(f.map.size() + g.map.size());
  for (const auto& [j, t] : g.map) h.map.emplace_back(j + shift, t);
  return h;
}

int preimage_block(const SeqMap& f, int j) {
  int owner = 0;
  int pos = 0;
  for (int i = 1; i <= f.dom.length(); ++i)
    for (int s = 1; s <= f.dom.parts[i - 1]; ++s, ++pos)
      if (f.map[pos].first == j) {
        if (owner == 0)
          owner = i;
        else if (owner != i)
          throw BlockMismatch("preimage of block " + std::to_string(j) +
                              " meets several domain blocks");
      }
  return owner;
}

fskel::PtdMap component_map(const SeqMap& f, int i, int j) {
  fskel::PtdMap m{f.dom.parts[i - 1], f.cod.parts[j - 1], {}};
  m.values.resize(m.dom);
  for (int s = 1; s <= m.dom; ++s) {
    auto [jj, tt] = f.at(i, s);
    m.values[s - 1] = jj == j ? tt : 0;
  }
  return m;
}

fskel::PtdMap phi_ij(const SeqMap& f, int j) {
  int i = preimage_block(f, j);
  if (i == 0)
    throw BlockMismatch("preimage of block " + std::to_string(j) +
                        " is empty");
  return component_map(f, i, j);
}

SeqMap block_perm_map(const BlockPerm& p, const Seq& dom) {
  SeqMap f;
  f.dom = dom;
  f.cod.parts.assign(dom.parts.size(), 0);
  for (std::size_t i = 0; i < dom.parts.size(); ++i)
    f.cod.parts[p.to[i]] = dom.parts[i];
  f.map.reserve(dom.total());
  for (int i = 1; i <= dom.length(); ++i)
    for (int e = 1; e <= dom.parts[i - 1]; ++e)
      f.map.emplace_back(p.to[i - 1] + 1, e);
  return f;
}

SeqMap block_swap(const Seq& a, const Seq& b) {
  BlockPerm p;
  int la = a.length(), lb = b.length();
  p.to.resize(la + lb);
  for (int i = 0; i < la; ++i) p.to[i] = lb + i;
  for (int i = 0; i < lb; ++i) p.to[la + i] = i;
  return block_perm_map(p, concat(a, b));
}

BlockPerm sigma_linearity(std::span<const int> r, int b, int rhat,
                         Ordering ord) {
  std::vector<int> rs(r.begin(), r.end());
  std::vector<int> hat = rs, whole = rs;
  hat[b - 1] = rhat;
  whole[b - 1] = rs[b - 1] + rhat;

  long long R = checked_product(rs);
  long long Rhat = checked_product(hat);
  BlockPerm p;
  p.to.assign(static_cast<std::size_t>(R + Rhat), 0);

  std::vector<int> j(rs.size());
  if (ord == Ordering::RevLex) {
    // Index formulas: a cell keeps its tuple, only the radix of row b grows.
    for (Odometer o(rs); !o.done; o.advance()) {
      for (std::size_t i = 0; i < rs.size(); ++i) j[i] = o.digits[i] + 1;
      p.to[revlex_rank1(j, rs) - 1] = revlex_rank1(j, whole) - 1;
    }
    for (Odometer o(hat); !o.done; o.advance()) {
      for (std::size_t i = 0; i < hat.size(); ++i) j[i] = o.digits[i] + 1;
      int src = static_cast<int>(R) + revlex_rank1(j, hat) - 1;
      j[b - 1] += rs[b - 1];
      p.to[src] = revlex_rank1(j, whole) - 1;
    }
  } else {
    // Positional form: locate each codomain cell's source by its tag.
    for (Odometer o(whole); !o.done; o.advance()) {
      for (std::size_t i = 0; i < whole.size(); ++i) j[i] = o.digits[i] + 1;
      int dst = cell_rank1(j, whole, ord) - 1;
      if (j[b - 1] <= rs[b - 1]) {
        p.to[cell_rank1(j, rs, ord) - 1] = dst;
      } else {
        j[b - 1] -= rs[b - 1];
        p.to[R + cell_rank1(j, hat, ord) - 1] = dst;
      }
    }
  }
  return p;
}

std::vector<SeqMap> all_seqmaps(const Seq& m, const Seq& n) {
  std::vector<SeqMap> out;
  int dm = m.total(), dn = n.total();
  if (dm > 0 && dn == 0) return out;

  // Codomain flattened position -> (block, element).
  std::vector<std::pair<int, int>> decode(dn);
  {
    int pos = 0;
    for (int j = 1; j <= n.length(); ++j)
      for (int t = 1; t <= n.parts[j - 1]; ++t) decode[pos++] = {j, t};
  }

  std::vector<int> radix(dm, dn);
  for (Odometer o(radix); !o.done; o.advance()) {
    SeqMap f{m, n, {}};
    f.map.resize(dm);
    for (int e = 0; e < dm; ++e) f.map[e] = decode[o.digits[e]];

    bool ok = true;
    std::vector<int> owner(n.length() + 1, 0);
    int pos = 0;
    for (int i = 1; i <= m.length() && ok; ++i)
      for (int s = 1; s <= m.parts[i - 1] && ok; ++s, ++pos) {
        int j = f.map[pos].first;
        if (owner[j] == 0)
          owner[j] = i;
        else
          ok = owner[j] == i;
      }
    if (ok) out.push_back(std::move(f));
  }
  return out;
}

bool is_iso_seqmap(const SeqMap& f) {
  int dm = f.dom.total(), dn = f.cod.total();
  if (dm != dn) return false;
  std::vector<int> noff = block_offsets(f.cod);
  std::vector<char> hit(dn, 0);
  for (auto [j, t] : f.map) {
    int pos = noff[j - 1] + t - 1;
    if (hit[pos]) return false;
    hit[pos] = 1;
  }
  int pos = 0;
  for (int i = 1; i <= f.dom.length(); ++i) {
    int first = -1;
    for (int s = 1; s <= f.dom.parts[i - 1]; ++s, ++pos) {
      if (first < 0)
        first = f.map[pos].first;
      else if (f.map[pos].first != first)
        return false;
    }
  }
  return true;
}

SeqMap invert_seqmap(const SeqMap& f) {
  if (!is_iso_seqmap(f)) throw InputError("invert_seqmap: not invertible");
  SeqMap g{f.cod, f.dom, {}};
  g.map.resize(f.dom.total());
  std::vector<int> noff = block_offsets(f.cod);
  int pos = 0;
  for (int i = 1; i <= f.dom.length(); ++i)
    for (int s = 1; s <= f.dom.parts[i - 1]; ++s, ++pos) {
      auto [j, t] = f.map[pos];
      g.map[noff[j - 1] + t - 1] = {i, s};
    }
  return g;
}

}  // namespace invk::aseq
