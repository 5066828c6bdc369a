#include "invk/gamma.hpp"

#include <algorithm>

namespace invk::gamma {

namespace {

std::string tuple_name(std::span<const std::string> parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  return s + ")";
}

// Level tuples with positive entries within the source truncations and
// product within the target truncation, in odometer order.
std::vector<std::vector<int>> stored_level_tuples(
    std::span<const GammaPtr> sources, const GammaPtr& target) {
  std::vector<std::vector<int>> out;
  std::vector<int> radix;
  radix.reserve(sources.size());
  for (const auto& s : sources) radix.push_back(s->truncation);
  for (Odometer o(radix); !o.done; o.advance()) {
    long long prod = 1;
    std::vector<int> p(radix.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = o.digits[i] + 1;
      prod *= p[i];
    }
    if (prod <= target->truncation) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::uint64_t GammaCategory::act_key(const fskel::PtdMap& f) const {
  std::uint64_t rank = 0;
  for (int v : f.values) rank = rank * (f.cod + 1) + static_cast<unsigned>(v);
  return (static_cast<std::uint64_t>(f.dom * 64 + f.cod) << 40) | rank;
}

const LevelMap& GammaCategory::act(const fskel::PtdMap& f) const {
  if (f.dom > truncation) throw TruncationError(f.dom);
  if (f.cod > truncation) throw TruncationError(f.cod);
  if (!act_offset.empty()) {
    long long off = act_offset[static_cast<std::size_t>(f.dom) * (truncation + 1) +
                               f.cod];
    if (off >= 0) {
      std::uint64_t rank = 0;
      for (int v : f.values)
        rank = rank * (f.cod + 1) + static_cast<unsigned>(v);
      return act_table[static_cast<std::size_t>(off + rank)];
    }
  }
  std::uint64_t key = act_key(f);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  if (!provider) throw InputError("action table has no entry for a required map");
  return memo.emplace(key, provider(f)).first->second;
}

void GammaCategory::materialize() {
  if (!provider) throw InputError("materialize: no provider");
  act_offset.assign(static_cast<std::size_t>(truncation + 1) * (truncation + 1),
                    -1);
  act_table.clear();
  for (int a = 0; a <= truncation; ++a)
    for (int b = 0; b <= truncation; ++b) {
      act_offset[static_cast<std::size_t>(a) * (truncation + 1) + b] =
          static_cast<long long>(act_table.size());
      // hom_set order coincides with the value-table rank used by act().
      for (const auto& f : fskel::hom_set(a, b))
        act_table.push_back(provider(f));
    }
}

Report validate_gamma(const GammaCategory& g) {
  Report r;
  r.suite = "gamma";
  if (g.truncation < 0 ||
      static_cast<int>(g.levels.size()) != g.truncation + 1) {
    r.add("levels", "expected levels 0.." + std::to_string(g.truncation));
    return r;
  }
  r.require(g.levels[0].c.num_objects() == 1 && g.levels[0].c.num_morphisms() == 1,
            "terminal level zero", "level 0");
  for (int p = 0; p <= g.truncation; ++p) {
    Report lr = validate_category(g.levels[p].c);
    r.checked += lr.checked;
    r.total += lr.total;
    for (auto& v : lr.violations)
      r.add("level category: " + v.law, "level " + std::to_string(p) + ": " + v.witness);
    r.require(g.levels[p].basepoint >= 0 &&
                  g.levels[p].basepoint < g.levels[p].c.num_objects(),
              "basepoint", "level " + std::to_string(p));
  }
  if (!r.ok()) return r;

  auto describe = [](const fskel::PtdMap& f) {
    return "<" + std::to_string(f.dom) + ">-><" + std::to_string(f.cod) +
           ">[" + join_ints(f.values) + "]";
  };

  for (int a = 0; a <= g.truncation; ++a)
    for (int b = 0; b <= g.truncation; ++b)
      for (const auto& f : fskel::hom_set(a, b)) {
        const LevelMap* m = nullptr;
        try {
          m = &g.act(f);
        } catch (const InputError&) {
          r.count();
          r.add("action defined", describe(f));
          continue;
        }
        const auto& ca = g.levels[a].c;
        const auto& cb = g.levels[b].c;
        if (static_cast<int>(m->obj.size()) != ca.num_objects() ||
            static_cast<int>(m->mor.size()) != ca.num_morphisms()) {
          r.count();
          r.add("action table shape", describe(f));
          continue;
        }
        bool fine = true;
        for (int mm = 0; mm < ca.num_morphisms() && fine; ++mm) {
          int im = m->mor[mm];
          fine = im >= 0 && im < cb.num_morphisms() &&
                 cb.src(im) == m->obj[ca.src(mm)] &&
                 cb.tgt(im) == m->obj[ca.tgt(mm)];
        }
        for (int o = 0; o < ca.num_objects() && fine; ++o)
          fine = m->mor[ca.identity[o]] == cb.identity[m->obj[o]];
        for (int mm = 0; mm < ca.num_morphisms() && fine; ++mm)
          for (int gg : ca.mors_from[ca.tgt(mm)]) {
            if (m->mor[ca.compose(gg, mm)] !=
                cb.compose(m->mor[gg], m->mor[mm])) {
              fine = false;
              break;
            }
          }
        r.require(fine, "action functorial on level", describe(f));
        r.require(m->obj[g.levels[a].basepoint] == g.levels[b].basepoint &&
                      m->mor[g.levels[a].bp_identity()] ==
                          g.levels[b].bp_identity(),
                  "action pointed", describe(f));
        if (fskel::is_identity(f)) {
          bool ident = true;
          for (int o = 0; o < ca.num_objects() && ident; ++o)
            ident = m->obj[o] == o;
          for (int mm = 0; mm < ca.num_morphisms() && ident; ++mm)
            ident = m->mor[mm] == mm;
          r.require(ident, "action preserves identities", describe(f));
        }
        bool zero = true;
        for (int v : f.values) zero = zero && v == 0;
        if (zero) {
          bool constant = true;
          for (int o : m->obj) constant = constant && o == g.levels[b].basepoint;
          for (int mm : m->mor)
            constant = constant && mm == g.levels[b].bp_identity();
          r.require(constant, "zero map collapses", describe(f));
        }
      }
  if (!r.ok()) return r;

  // Action compatible with composition of pointed maps.
  for (int a = 0; a <= g.truncation; ++a)
    for (int b = 0; b <= g.truncation; ++b)
      for (const auto& f : fskel::hom_set(a, b)) {
        const auto& mf = g.act(f);
        for (int c = 0; c <= g.truncation; ++c)
          for (const auto& h : fskel::hom_set(b, c)) {
            const auto& mh = g.act(h);
            const auto& mhf = g.act(fskel::compose_ptd(h, f));
            bool fine = true;
            for (std::size_t o = 0; o < mf.obj.size() && fine; ++o)
              fine = mhf.obj[o] == mh.obj[mf.obj[o]];
            for (std::size_t mm = 0; mm < mf.mor.size() && fine; ++mm)
              fine = mhf.mor[mm] == mh.mor[mf.mor[mm]];
            r.require(fine, "action preserves composition",
                      describe(h) + " . " + describe(f));
          }
      }
  return r;
}

GammaPtr unit_gamma(int truncation) {
  auto g = std::make_shared<GammaCategory>();
  g->truncation = truncation;
  for (int n = 0; n <= truncation; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back(std::to_string(i));
    g->levels.push_back({cat::discrete_category(names), 0});
  }
  g->provider = [](const fskel::PtdMap& f) {
    LevelMap m;
    m.obj.resize(f.dom + 1);
    for (int x = 0; x <= f.dom; ++x) m.obj[x] = f(x);
    m.mor = m.obj;
    return m;
  };
  if (truncation <= 5) g->materialize();
  return g;
}

bool is_commutative_monoid(const CommMonoid& m) {
  int n = m.size();
  for (int a = 0; a < n; ++a) {
    if (m.op(a, m.unit) != a || m.op(m.unit, a) != a) return false;
    for (int b = 0; b < n; ++b) {
      if (m.op(a, b) != m.op(b, a)) return false;
      for (int c = 0; c < n; ++c)
        if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c))) return false;
    }
  }
  return true;
}

GammaPtr em_gamma(const CommMonoid& mon, int truncation) {
  if (!is_commutative_monoid(mon))
    throw InputError("em_gamma needs a commutative monoid");
  auto g = std::make_shared<GammaCategory>();
  g->truncation = truncation;
  int sz = mon.size();
  for (int n = 0; n <= truncation; ++n) {
    std::vector<std::string> names;
    std::vector<int> radix(n, sz);
    for (Odometer o(radix); !o.done; o.advance()) {
      std::vector<std::string> parts(n);
      for (int i = 0; i < n; ++i) parts[i] = mon.names[o.digits[i]];
      names.push_back(tuple_name(parts));
    }
    int bp_rank = 0;  // basepoint: the all-unit tuple
    {
      std::size_t r = 0;
      for (int i = 0; i < n; ++i) r = r * sz + mon.unit;
      bp_rank = static_cast<int>(r);
    }
    g->levels.push_back({cat::discrete_category(names), bp_rank});
  }
  g->provider = [mon, sz](const fskel::PtdMap& f) {
    LevelMap m;
    std::size_t count = 1;
    for (int i = 0; i < f.dom; ++i) count *= sz;
    m.obj.resize(count);
    std::vector<int> d(f.dom), e(f.cod);
    std::vector<int> radix(f.dom, sz);
    for (Odometer o(radix); !o.done; o.advance()) {
      std::fill(e.begin(), e.end(), mon.unit);
      for (int i = 0; i < f.dom; ++i) {
        int j = f.values[i];
        if (j != 0) e[j - 1] = mon.op(e[j - 1], o.digits[i]);
      }
      std::size_t r = 0;
      for (int j = 0; j < f.cod; ++j) r = r * sz + e[j];
      m.obj[o.rank()] = static_cast<int>(r);
    }
    m.mor = m.obj;
    return m;
  };
  if (truncation <= 5) g->materialize();
  return g;
}

CommMonoid z2_monoid() { return {{"0", "1"}, {0, 1, 1, 0}, 0}; }
CommMonoid bool_monoid() { return {{"0", "1"}, {0, 1, 1, 1}, 0}; }

const Component& Multimorphism::comp(std::span<const int> p) const {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1 || p[i] > sources[i]->truncation)
      throw TruncationError(p[i]);
  }
  long long prod = 1;
  for (int x : p) prod *= x;
  if (prod > target->truncation)
    throw TruncationError(static_cast<int>(prod));
  if (!dense.empty()) {
    std::size_t idx = 0;
    for (int x : p) idx = idx * stride + x;
    const Component* c = idx < dense.size() ? dense[idx] : nullptr;
    if (c) return *c;
  } else {
    auto it = comps.find(std::vector<int>(p.begin(), p.end()));
    if (it != comps.end()) return it->second;
  }
  throw InputError("missing component at levels (" + join_ints(p) + ")");
}

bool Multimorphism::has_levels(std::span<const int> p) const {
  long long prod = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1 || p[i] > sources[i]->truncation) return false;
    prod *= p[i];
  }
  return prod <= target->truncation;
}

void Multimorphism::finalize() {
  stride = 1;
  for (const auto& s : sources) stride = std::max(stride, s->truncation + 1);
  std::size_t size = 1;
  for (int i = 0; i < arity(); ++i) {
    size *= static_cast<std::size_t>(stride);
    if (size > (1u << 20)) {
      dense.clear();
      return;  // fall back to map lookups
    }
  }
  dense.assign(size, nullptr);
  for (const auto& [p, c] : comps) {
    std::size_t idx = 0;
    for (int x : p) idx = idx * stride + x;
    dense[idx] = &c;
  }
}

Multimorphism make_multimorphism(
    std::vector<GammaPtr> sources, GammaPtr target,
    const std::function<int(std::span<const int>, std::span<const int>)>& obj_fn,
    const std::function<int(std::span<const int>, std::span<const int>)>&
        mor_fn) {
  Multimorphism f;
  f.sources = std::move(sources);
  f.target = target;
  std::vector<int> tuple;
  for (auto& p : stored_level_tuples(f.sources, target)) {
    Component c;
    c.levels = p;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& lc = f.sources[i]->level(p[i]).c;
      c.obj_radix.push_back(lc.num_objects());
      c.mor_radix.push_back(lc.num_morphisms());
    }
    for (Odometer o(c.obj_radix); !o.done; o.advance())
      c.obj.push_back(obj_fn(p, o.digits));
    for (Odometer o(c.mor_radix); !o.done; o.advance())
      c.mor.push_back(mor_fn(p, o.digits));
    f.comps.emplace(std::move(p), std::move(c));
  }
  f.finalize();
  return f;
}

Multimorphism make_zero_ary(GammaPtr target, int value) {
  Multimorphism f;
  f.target = std::move(target);
  if (value < 0 || value >= f.target->level(1).c.num_objects())
    throw InputError("make_zero_ary: value is not an object of level 1");
  f.value = value;
  f.finalize();
  return f;
}

Multimorphism identity_multi(GammaPtr x) {
  GammaPtr xc = x;
  return make_multimorphism(
      {x}, xc, [](std::span<const int>, std::span<const int> t) { return t[0]; },
      [](std::span<const int>, std::span<const int> t) { return t[0]; });
}

Multimorphism zero_multi(std::vector<GammaPtr> sources, GammaPtr target) {
  const GammaCategory* z = target.get();
  return make_multimorphism(
      std::move(sources), target,
      [z](std::span<const int> p, std::span<const int>) {
        long long prod = 1;
        for (int x : p) prod *= x;
        return z->basepoint(static_cast<int>(prod));
      },
      [z](std::span<const int> p, std::span<const int>) {
        long long prod = 1;
        for (int x : p) prod *= x;
        return z->bp_identity(static_cast<int>(prod));
      });
}

bool equal_multi(const Multimorphism& a, const Multimorphism& b) {
  if (a.arity() != b.arity() || a.target != b.target) return false;
  for (int i = 0; i < a.arity(); ++i)
    if (a.sources[i] != b.sources[i]) return false;
  if (a.arity() == 0) return a.value == b.value;
  if (a.comps.size() != b.comps.size()) return false;
  for (auto ia = a.comps.begin(), ib = b.comps.begin(); ia != a.comps.end();
       ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.obj != ib->second.obj ||
        ia->second.mor != ib->second.mor)
      return false;
  }
  return true;
}

fskel::PtdMap smash_tuple(std::span<const fskel::PtdMap> fs) {
  fskel::PtdMap acc = fskel::id_ptd(1);
  for (const auto& f : fs) acc = fskel::smash_map(acc, f);
  return acc;
}

Report validate_multimorphism(const Multimorphism& f) {
  Report r;
  r.suite = "multimorphism";
  if (!f.target || std::any_of(f.sources.begin(), f.sources.end(),
                               [](const GammaPtr& s) { return !s; })) {
    r.add("frame", "missing source or target category");
    return r;
  }
  if (f.arity() == 0) {
    r.require(f.value >= 0 && f.value < f.target->level(1).c.num_objects(),
              "value in level one", std::to_string(f.value));
    return r;
  }

  auto expected = stored_level_tuples(f.sources, f.target);
  r.require(expected.size() == f.comps.size(), "component key set",
            "stored " + std::to_string(f.comps.size()) + ", expected " +
                std::to_string(expected.size()));
  for (auto& p : expected)
    if (!f.comps.count(p)) r.add("component key set", "(" + join_ints(p) + ")");
  if (!r.ok()) return r;

  const auto& z = *f.target;
  for (const auto& [p, c] : f.comps) {
    long long prod = 1;
    for (int x : p) prod *= x;
    const auto& zc = z.level(static_cast<int>(prod)).c;
    std::size_t no = 1, nm = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& lc = f.sources[i]->level(p[i]).c;
      if (c.obj_radix[i] != lc.num_objects() ||
          c.mor_radix[i] != lc.num_morphisms()) {
        r.add("component shape", "(" + join_ints(p) + ")");
        break;
      }
      no *= lc.num_objects();
      nm *= lc.num_morphisms();
    }
    if (c.obj.size() != no || c.mor.size() != nm) {
      r.add("component shape", "(" + join_ints(p) + ")");
      continue;
    }

    // Functoriality of the component on the product of level categories.
    for (Odometer o(c.mor_radix); !o.done; o.advance()) {
      int im = c.mor[o.rank()];
      bool fine = im >= 0 && im < zc.num_morphisms();
      if (fine) {
        std::vector<int> s(p.size()), t(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
          const auto& lc = f.sources[i]->level(p[i]).c;
          s[i] = lc.src(o.digits[i]);
          t[i] = lc.tgt(o.digits[i]);
        }
        fine = zc.src(im) == c.obj[c.obj_rank(s)] &&
               zc.tgt(im) == c.obj[c.obj_rank(t)];
      }
      r.require(fine, "component endpoints",
                "(" + join_ints(p) + ") tuple " + join_ints(o.digits));
    }
    for (Odometer o(c.obj_radix); !o.done; o.advance()) {
      std::vector<int> ids(p.size());
      for (std::size_t i = 0; i < p.size(); ++i)
        ids[i] = f.sources[i]->level(p[i]).c.identity[o.digits[i]];
      r.require(c.mor[c.mor_rank(ids)] == zc.identity[c.obj[o.rank()]],
                "component preserves identities",
                "(" + join_ints(p) + ") tuple " + join_ints(o.digits));
    }
    for (Odometer o(c.mor_radix); !o.done; o.advance()) {
      // Compose with every tuple of morphisms out of the target tuple.
      std::vector<int> t(p.size());
      std::vector<std::vector<int>> nexts(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& lc = f.sources[i]->level(p[i]).c;
        t[i] = lc.tgt(o.digits[i]);
        nexts[i] = lc.mors_from[t[i]];
      }
      std::vector<int> radix(p.size());
      for (std::size_t i = 0; i < p.size(); ++i)
        radix[i] = static_cast<int>(nexts[i].size());
      for (Odometer o2(radix); !o2.done; o2.advance()) {
        std::vector<int> gs(p.size()), comp(p.size());
        bool def = true;
        for (std::size_t i = 0; i < p.size(); ++i) {
          gs[i] = nexts[i][o2.digits[i]];
          comp[i] = f.sources[i]->level(p[i]).c.compose(gs[i], o.digits[i]);
          def = def && comp[i] >= 0;
        }
        r.count();
        if (!def || c.mor[c.mor_rank(comp)] !=
                        zc.compose(c.mor[c.mor_rank(gs)], c.mor[c.mor_rank(o.digits)]))
          r.add("component preserves composition",
                "(" + join_ints(p) + ") tuples " + join_ints(o.digits) + " ; " +
                    join_ints(gs));
      }
    }

    // Multi-pointedness.
    for (Odometer o(c.obj_radix); !o.done; o.advance()) {
      bool based = false;
      for (std::size_t i = 0; i < p.size(); ++i)
        based = based || o.digits[i] == f.sources[i]->basepoint(p[i]);
      if (!based) continue;
      r.require(c.obj[o.rank()] == z.basepoint(static_cast<int>(prod)),
                "multi-pointed on objects",
                "(" + join_ints(p) + ") tuple " + join_ints(o.digits));
    }
    for (Odometer o(c.mor_radix); !o.done; o.advance()) {
      bool based = false;
      for (std::size_t i = 0; i < p.size(); ++i)
        based = based || o.digits[i] == f.sources[i]->bp_identity(p[i]);
      if (!based) continue;
      r.require(c.mor[o.rank()] == z.bp_identity(static_cast<int>(prod)),
                "multi-pointed on morphisms",
                "(" + join_ints(p) + ") tuple " + join_ints(o.digits));
    }
  }
  if (!r.ok()) return r;

  // Naturality against tuples of pointed maps between positive levels.
  for (const auto& [p, cp] : f.comps)
    for (const auto& [q, cq] : f.comps) {
      std::vector<std::vector<fskel::PtdMap>> homs(p.size());
      std::vector<int> radix(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        homs[i] = fskel::hom_set(p[i], q[i]);
        radix[i] = static_cast<int>(homs[i].size());
      }
      long long pprod = 1, qprod = 1;
      for (int x : p) pprod *= x;
      for (int x : q) qprod *= x;
      for (Odometer o(radix); !o.done; o.advance()) {
        std::vector<fskel::PtdMap> fs(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) fs[i] = homs[i][o.digits[i]];
        fskel::PtdMap sm = smash_tuple(fs);
        const auto& zm = f.target->act(sm);
        bool fine = true;
        for (Odometer u(cp.obj_radix); !u.done && fine; u.advance()) {
          std::vector<int> v(p.size());
          for (std::size_t i = 0; i < p.size(); ++i)
            v[i] = f.sources[i]->act_obj(fs[i], u.digits[i]);
          fine = zm.obj[cp.obj[u.rank()]] == cq.obj[cq.obj_rank(v)];
        }
        for (Odometer u(cp.mor_radix); !u.done && fine; u.advance()) {
          std::vector<int> v(p.size());
          for (std::size_t i = 0; i < p.size(); ++i)
            v[i] = f.sources[i]->act_mor(fs[i], u.digits[i]);
          fine = zm.mor[cp.mor[u.rank()]] == cq.mor[cq.mor_rank(v)];
        }
        r.require(fine, "naturality",
                  "(" + join_ints(p) + ")->(" + join_ints(q) + ") maps " +
                      join_ints(o.digits));
      }
    }
  return r;
}

Multimorphism compose_multi(const Multimorphism& f,
                            std::span<const Multimorphism* const> gs) {
  if (static_cast<int>(gs.size()) != f.arity())
    throw InputError("compose_multi: arity mismatch");
  for (int i = 0; i < f.arity(); ++i)
    if (gs[i]->target != f.sources[i])
      throw InputError("compose_multi: slot " + std::to_string(i + 1) +
                       " target does not match");

  Multimorphism h;
  h.target = f.target;
  std::vector<int> offset(f.arity() + 1, 0);
  for (int i = 0; i < f.arity(); ++i) {
    offset[i + 1] = offset[i] + gs[i]->arity();
    for (const auto& s : gs[i]->sources) h.sources.push_back(s);
  }

  if (h.arity() == 0) {
    std::vector<int> ones(f.arity(), 1), vals(f.arity());
    for (int i = 0; i < f.arity(); ++i) vals[i] = gs[i]->value;
    if (f.arity() == 0) {
      h.value = f.value;
    } else {
      const auto& c = f.comp(ones);
      h.value = c.obj[c.obj_rank(vals)];
    }
    h.finalize();
    return h;
  }

  for (auto& pflat : stored_level_tuples(h.sources, h.target)) {
    Component c;
    c.levels = pflat;
    for (std::size_t i = 0; i < pflat.size(); ++i) {
      const auto& lc = h.sources[i]->level(pflat[i]).c;
      c.obj_radix.push_back(lc.num_objects());
      c.mor_radix.push_back(lc.num_morphisms());
    }

    // Outer levels for f and the inner component of each g_i.
    std::vector<int> pouter(f.arity());
    std::vector<const Component*> inner(f.arity(), nullptr);
    for (int i = 0; i < f.arity(); ++i) {
      std::span<const int> chunk(pflat.data() + offset[i],
                                 pflat.data() + offset[i + 1]);
      long long prod = 1;
      for (int x : chunk) prod *= x;
      pouter[i] = static_cast<int>(prod);
      if (gs[i]->arity() > 0) inner[i] = &gs[i]->comp(chunk);
    }
    const Component& fc = f.comp(pouter);

    std::vector<int> mid(f.arity());
    for (Odometer o(c.obj_radix); !o.done; o.advance()) {
      for (int i = 0; i < f.arity(); ++i) {
        if (gs[i]->arity() == 0) {
          mid[i] = gs[i]->value;
        } else {
          std::span<const int> part(o.digits.data() + offset[i],
                                    o.digits.data() + offset[i + 1]);
          mid[i] = inner[i]->obj[inner[i]->obj_rank(part)];
        }
      }
      c.obj.push_back(fc.obj[fc.obj_rank(mid)]);
    }
    for (Odometer o(c.mor_radix); !o.done; o.advance()) {
      for (int i = 0; i < f.arity(); ++i) {
        if (gs[i]->arity() == 0) {
          mid[i] = f.sources[i]->level(1).c.identity[gs[i]->value];
        } else {
          std::span<const int> part(o.digits.data() + offset[i],
                                    o.digits.data() + offset[i + 1]);
          mid[i] = inner[i]->mor[inner[i]->mor_rank(part)];
        }
      }
      c.mor.push_back(fc.mor[fc.mor_rank(mid)]);
    }
    h.comps.emplace(std::move(pflat), std::move(c));
  }
  h.finalize();
  return h;
}

Multimorphism sigma_act(const Multimorphism& f, std::span<const int> sigma) {
  if (static_cast<int>(sigma.size()) != f.arity() || !is_permutation0(sigma))
    throw InputError("sigma_act: not a permutation of the arity");
  std::vector<int> inv = invert_permutation0(sigma);

  Multimorphism h;
  h.target = f.target;
  for (int i = 0; i < f.arity(); ++i)
    h.sources.push_back(f.sources[sigma[i]]);
  if (f.arity() == 0) {
    h.value = f.value;
    h.finalize();
    return h;
  }

  int k = f.arity();
  for (auto& q : stored_level_tuples(h.sources, h.target)) {
    Component c;
    c.levels = q;
    for (int i = 0; i < k; ++i) {
      const auto& lc = h.sources[i]->level(q[i]).c;
      c.obj_radix.push_back(lc.num_objects());
      c.mor_radix.push_back(lc.num_morphisms());
    }
    std::vector<int> p(k);
    for (int j = 0; j < k; ++j) p[j] = q[inv[j]];
    const Component& fc = f.comp(p);
    fskel::PtdMap braid = fskel::smash_reorder(p, sigma);
    const LevelMap& zb = f.target->act(braid);

    std::vector<int> v(k);
    for (Odometer o(c.obj_radix); !o.done; o.advance()) {
      for (int j = 0; j < k; ++j) v[j] = o.digits[inv[j]];
      c.obj.push_back(zb.obj[fc.obj[fc.obj_rank(v)]]);
    }
    for (Odometer o(c.mor_radix); !o.done; o.advance()) {
      for (int j = 0; j < k; ++j) v[j] = o.digits[inv[j]];
      c.mor.push_back(zb.mor[fc.mor[fc.mor_rank(v)]]);
    }
    h.comps.emplace(std::move(q), std::move(c));
  }
  h.finalize();
  return h;
}

const std::vector<int>& Modification::comp(std::span<const int> p) const {
  auto it = comps.find(std::vector<int>(p.begin(), p.end()));
  if (it == comps.end())
    throw InputError("missing modification component at levels (" +
                     join_ints(p) + ")");
  return it->second;
}

Modification identity_modification(const Multimorphism& f) {
  Modification m;
  m.source = m.target = &f;
  if (f.arity() == 0) {
    m.comps[{}] = {f.target->level(1).c.identity[f.value]};
    return m;
  }
  for (const auto& [p, c] : f.comps) {
    long long prod = 1;
    for (int x : p) prod *= x;
    const auto& zc = f.target->level(static_cast<int>(prod)).c;
    std::vector<int> comp(c.obj.size());
    for (std::size_t u = 0; u < c.obj.size(); ++u)
      comp[u] = zc.identity[c.obj[u]];
    m.comps[p] = std::move(comp);
  }
  return m;
}

Modification compose_modifications(const Modification& b,
                                   const Modification& a) {
  if (a.target != b.source)
    throw InputError("compose_modifications: frames do not match");
  Modification m;
  m.source = a.source;
  m.target = b.target;
  const auto& z = *a.source->target;
  for (const auto& [p, av] : a.comps) {
    const auto& bv = b.comps.at(p);
    long long prod = 1;
    for (int x : p) prod *= x;
    const auto& zc = z.level(static_cast<int>(prod)).c;
    std::vector<int> comp(av.size());
    for (std::size_t u = 0; u < av.size(); ++u) {
      comp[u] = zc.compose(bv[u], av[u]);
      if (comp[u] < 0)
        throw InputError("compose_modifications: components not composable");
    }
    m.comps[p] = std::move(comp);
  }
  return m;
}

Report validate_modification(const Modification& m) {
  Report r;
  r.suite = "modification";
  if (!m.source || !m.target) {
    r.add("frame", "missing source or target");
    return r;
  }
  const auto& f = *m.source;
  const auto& g = *m.target;
  if (f.arity() != g.arity() || f.target != g.target ||
      f.sources != g.sources) {
    r.add("frame", "source and target multimorphisms are not parallel");
    return r;
  }
  const auto& z = *f.target;
  if (f.arity() == 0) {
    auto it = m.comps.find({});
    if (it == m.comps.end() || it->second.size() != 1) {
      r.add("component shape", "expected a single component at ()");
      return r;
    }
    int mm = it->second[0];
    const auto& zc = z.level(1).c;
    r.require(mm >= 0 && mm < zc.num_morphisms() && zc.src(mm) == f.value &&
                  zc.tgt(mm) == g.value,
              "component endpoints", "()");
    return r;
  }

  if (m.comps.size() != f.comps.size()) {
    r.add("component key set", "stored " + std::to_string(m.comps.size()) +
                                   ", expected " +
                                   std::to_string(f.comps.size()));
    return r;
  }

  for (const auto& [p, cf] : f.comps) {
    auto it = m.comps.find(p);
    if (it == m.comps.end()) {
      r.add("component key set", "(" + join_ints(p) + ")");
      continue;
    }
    const auto& cg = g.comps.at(p);
    const auto& th = it->second;
    long long prod = 1;
    for (int x : p) prod *= x;
    const auto& zc = z.level(static_cast<int>(prod)).c;
    if (th.size() != cf.obj.size()) {
      r.add("component shape", "(" + join_ints(p) + ")");
      continue;
    }
    for (std::size_t u = 0; u < th.size(); ++u) {
      bool fine = th[u] >= 0 && th[u] < zc.num_morphisms() &&
                  zc.src(th[u]) == cf.obj[u] && zc.tgt(th[u]) == cg.obj[u];
      r.require(fine, "component endpoints",
                "(" + join_ints(p) + ") tuple rank " + std::to_string(u));
    }
    // Pointedness: the component at a based tuple is the basepoint identity.
    for (Odometer o(cf.obj_radix); !o.done; o.advance()) {
      bool based = false;
      for (std::size_t i = 0; i < p.size(); ++i)
        based = based || o.digits[i] == f.sources[i]->basepoint(p[i]);
      if (!based) continue;
      r.require(th[o.rank()] == z.bp_identity(static_cast<int>(prod)),
                "pointed components",
                "(" + join_ints(p) + ") tuple " + join_ints(o.digits));
    }
    // Naturality in the level categories.
    for (Odometer o(cf.mor_radix); !o.done; o.advance()) {
      std::vector<int> s(p.size()), t(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& lc = f.sources[i]->level(p[i]).c;
        s[i] = lc.src(o.digits[i]);
        t[i] = lc.tgt(o.digits[i]);
      }
      int lhs = zc.compose(th[cf.obj_rank(t)], cf.mor[o.rank()]);
      int rhs = zc.compose(cg.mor[o.rank()], th[cf.obj_rank(s)]);
      r.require(lhs == rhs && lhs >= 0, "naturality",
                "(" + join_ints(p) + ") tuple " + join_ints(o.digits));
    }
  }
  if (!r.ok()) return r;

  // Compatibility with the action of pointed maps.
  for (const auto& [p, cf] : f.comps)
    for (const auto& [q, cfq] : f.comps) {
      std::vector<std::vector<fskel::PtdMap>> homs(p.size());
      std::vector<int> radix(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        homs[i] = fskel::hom_set(p[i], q[i]);
        radix[i] = static_cast<int>(homs[i].size());
      }
      const auto& thp = m.comps.at(p);
      const auto& thq = m.comps.at(q);
      for (Odometer o(radix); !o.done; o.advance()) {
        std::vector<fskel::PtdMap> fs(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) fs[i] = homs[i][o.digits[i]];
        const auto& zm = z.act(smash_tuple(fs));
        bool fine = true;
        for (Odometer u(cf.obj_radix); !u.done && fine; u.advance()) {
          std::vector<int> v(p.size());
          for (std::size_t i = 0; i < p.size(); ++i)
            v[i] = f.sources[i]->act_obj(fs[i], u.digits[i]);
          fine = zm.mor[thp[u.rank()]] == thq[cfq.obj_rank(v)];
        }
        r.require(fine, "action compatibility",
                  "(" + join_ints(p) + ")->(" + join_ints(q) + ") maps " +
                      join_ints(o.digits));
      }
    }
  return r;
}

}  // namespace invk::gamma
