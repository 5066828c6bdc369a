#include "invk/fskel.hpp"

namespace invk::fskel {

bool is_valid(const PtdMap& f) {
  if (f.dom < 0 || f.cod < 0) return false;
  if (static_cast<int>(f.values.size()) != f.dom) return false;
  for (int v : f.values)
    if (v < 0 || v > f.cod) return false;
  return true;
}

PtdMap id_ptd(int n) {
  PtdMap f{n, n, {}};
  f.values.resize(n);
  for (int i = 1; i <= n; ++i) f.values[i - 1] = i;
  return f;
}

PtdMap zero_ptd(int dom, int cod) {
  return {dom, cod, std::vector<int>(dom, 0)};
}

PtdMap compose_ptd(const PtdMap& g, const PtdMap& f) {
  if (f.cod != g.dom) throw InputError("compose_ptd: middle objects differ");
  PtdMap h{f.dom, g.cod, {}};
  h.values.resize(f.dom);
  for (int x = 1; x <= f.dom; ++x) h.values[x - 1] = g(f(x));
  return h;
}

bool is_identity(const PtdMap& f) {
  if (f.dom != f.cod) return false;
  for (int x = 1; x <= f.dom; ++x)
    if (f.values[x - 1] != x) return false;
  return true;
}

bool is_iso(const PtdMap& f) {
  if (f.dom != f.cod) return false;
  std::vector<char> seen(f.dom + 1, 0);
  for (int v : f.values) {
    if (v == 0 || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

PtdMap invert(const PtdMap& f) {
  if (!is_iso(f)) throw InputError("invert: map is not an isomorphism");
  PtdMap g{f.cod, f.dom, std::vector<int>(f.cod, 0)};
  for (int x = 1; x <= f.dom; ++x) g.values[f.values[x - 1] - 1] = x;
  return g;
}

std::pair<int, int> smash_unpos(int m, int n, int pos) {
  if (pos == 0) return {0, 0};
  (void)m;
  return {(pos - 1) / n + 1, (pos - 1) % n + 1};
}

SmashLex smash_lex(int m, int n) {
  SmashLex s;
  s.m = m;
  s.n = n;
  s.mn = m * n;
  s.table.resize(static_cast<std::size_t>(m + 1) * (n + 1));
  for (int x = 0; x <= m; ++x)
    for (int y = 0; y <= n; ++y)
      s.table[static_cast<std::size_t>(n + 1) * x + y] = smash_pos(n, x, y);
  return s;
}

PtdMap smash_map(const PtdMap& f, const PtdMap& g) {
  PtdMap h{f.dom * g.dom, f.cod * g.cod, {}};
  h.values.resize(h.dom);
  for (int x = 1; x <= f.dom; ++x)
    for (int y = 1; y <= g.dom; ++y)
      h.values[smash_pos(g.dom, x, y) - 1] = smash_pos(g.cod, f(x), g(y));
  return h;
}

std::vector<PtdMap> hom_set(int a, int b) {
  std::vector<PtdMap> out;
  std::vector<int> radix(a, b + 1);
  for (Odometer o(radix); !o.done; o.advance())
    out.push_back({a, b, o.digits});
  return out;
}

std::vector<PtdMap> nonzero_hom(int a, int b) {
  std::vector<PtdMap> out;
  for (auto& f : hom_set(a, b)) {
    bool nz = true;
    for (int v : f.values) nz = nz && v != 0;
    if (nz) out.push_back(std::move(f));
  }
  return out;
}

PtdMap braid(int m, int n) {
  PtdMap f{m * n, n * m, {}};
  f.values.resize(f.dom);
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= n; ++y)
      f.values[smash_pos(n, x, y) - 1] = smash_pos(m, y, x);
  return f;
}

PtdMap smash_reorder(std::span<const int> p, std::span<const int> sigma) {
  std::vector<int> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[sigma[i]];
  int total = static_cast<int>(checked_product(p));
  PtdMap f{total, total, std::vector<int>(total, 0)};
  std::vector<int> a, b(p.size());
  for (int e = 1; e <= total; ++e) {
    lex_unrank1(e, p, a);
    for (std::size_t i = 0; i < p.size(); ++i) b[i] = a[sigma[i]];
    f.values[e - 1] = lex_rank1(b, q);
  }
  return f;
}

}  // namespace invk::fskel
