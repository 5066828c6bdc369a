#include "invk/core.hpp"

namespace invk::cat {

namespace {
constexpr std::size_t kDenseLimit = 1u << 22;  // entries in the compose table
}

int FiniteCategory::find_object(const std::string& id) const {
  auto it = obj_index.find(id);
  if (it == obj_index.end()) throw InputError("unknown object id: " + id);
  return it->second;
}

int FiniteCategory::find_morphism(const std::string& id) const {
  auto it = mor_index.find(id);
  if (it == mor_index.end()) throw InputError("unknown morphism id: " + id);
  return it->second;
}

int FiniteCategory::inverse(int m) const {
  if (inv_cache.empty()) {
    inv_cache.assign(morphisms.size(), -1);
    for (int f = 0; f < num_morphisms(); ++f) {
      if (inv_cache[f] != -1) continue;
      for (int g : mors_from[morphisms[f].tgt]) {
        if (morphisms[g].tgt != morphisms[f].src) continue;
        if (compose(g, f) == identity[morphisms[f].src] &&
            compose(f, g) == identity[morphisms[f].tgt]) {
          inv_cache[f] = g;
          inv_cache[g] = f;
          break;
        }
      }
    }
  }
  return inv_cache[m];
}

void reindex(FiniteCategory& c) {
  c.obj_index.clear();
  c.mor_index.clear();
  c.mors_from.assign(c.objects.size(), {});
  c.mors_into.assign(c.objects.size(), {});
  for (std::size_t i = 0; i < c.objects.size(); ++i)
    c.obj_index[c.objects[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < c.morphisms.size(); ++i) {
    c.mor_index[c.morphisms[i].id] = static_cast<int>(i);
    c.mors_from[c.morphisms[i].src].push_back(static_cast<int>(i));
    c.mors_into[c.morphisms[i].tgt].push_back(static_cast<int>(i));
  }
}

CategoryBuilder& CategoryBuilder::object(const std::string& id) {
  c.obj_index[id] = static_cast<int>(c.objects.size());
  c.objects.push_back(id);
  return *this;
}

int CategoryBuilder::morphism(const std::string& id, const std::string& src,
                              const std::string& tgt) {
  int m = static_cast<int>(c.morphisms.size());
  c.mor_index[id] = m;
  c.morphisms.push_back({id, c.find_object(src), c.find_object(tgt)});
  return m;
}

CategoryBuilder& CategoryBuilder::set_identity(const std::string& obj,
                                               const std::string& mor) {
  if (c.identity.size() != c.objects.size())
    c.identity.assign(c.objects.size(), -1);
  c.identity[c.find_object(obj)] = c.find_morphism(mor);
  return *this;
}

CategoryBuilder& CategoryBuilder::set_compose(const std::string& g,
                                              const std::string& f,
                                              const std::string& gf) {
  c.comp_sparse[FiniteCategory::pair_key(c.find_morphism(g),
                                         c.find_morphism(f))] =
      c.find_morphism(gf);
  return *this;
}

FiniteCategory CategoryBuilder::build() {
  if (c.identity.size() != c.objects.size())
    c.identity.resize(c.objects.size(), -1);
  reindex(c);
  std::size_t sq = c.morphisms.size() * c.morphisms.size();
  if (sq <= kDenseLimit) {
    c.comp_dense.assign(sq, -1);
    for (const auto& [key, v] : c.comp_sparse) {
      int g = static_cast<int>(key >> 32);
      int f = static_cast<int>(key & 0xffffffffu);
      c.comp_dense[static_cast<std::size_t>(g) * c.morphisms.size() + f] = v;
    }
    c.comp_sparse.clear();
  }
  return std::move(c);
}

Report validate_category(const FiniteCategory& c) {
  Report r;
  r.suite = "category";
  for (int o = 0; o < c.num_objects(); ++o) {
    int e = o < static_cast<int>(c.identity.size()) ? c.identity[o] : -1;
    bool good = e >= 0 && e < c.num_morphisms() && c.src(e) == o && c.tgt(e) == o;
    r.require(good, "identity assignment", "object " + c.objects[o]);
  }
  for (int m = 0; m < c.num_morphisms(); ++m) {
    bool good = c.src(m) >= 0 && c.src(m) < c.num_objects() && c.tgt(m) >= 0 &&
                c.tgt(m) < c.num_objects();
    r.require(good, "morphism endpoints", c.morphisms[m].id);
  }
  if (!r.ok()) return r;

  // Composability and the unit laws.
  for (int f = 0; f < c.num_morphisms(); ++f) {
    for (int g : c.mors_from[c.tgt(f)]) {
      int gf = c.compose(g, f);
      bool good = gf >= 0 && gf < c.num_morphisms() && c.src(gf) == c.src(f) &&
                  c.tgt(gf) == c.tgt(g);
      r.require(good, "compose closure",
                c.morphisms[g].id + " . " + c.morphisms[f].id);
    }
    r.require(c.compose(c.identity[c.tgt(f)], f) == f, "left unit",
              c.morphisms[f].id);
    r.require(c.compose(f, c.identity[c.src(f)]) == f, "right unit",
              c.morphisms[f].id);
  }
  if (!r.ok()) return r;

  // Associativity over composable triples.
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int g : c.mors_from[c.tgt(f)]) {
      int gf = c.compose(g, f);
      for (int h : c.mors_from[c.tgt(g)]) {
        r.count();
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
          r.add("associativity", c.morphisms[h].id + " . " + c.morphisms[g].id +
                                     " . " + c.morphisms[f].id);
      }
    }
  return r;
}

FiniteCategory terminal_category() {
  CategoryBuilder b;
  b.object("*");
  b.morphism("1_*", "*", "*");
  b.set_identity("*", "1_*");
  b.set_compose("1_*", "1_*", "1_*");
  return b.build();
}

FiniteCategory discrete_category(std::span<const std::string> ids) {
  CategoryBuilder b;
  for (const auto& id : ids) b.object(id);
  for (const auto& id : ids) {
    b.morphism("1_" + id, id, id);
    b.set_identity(id, "1_" + id);
    b.set_compose("1_" + id, "1_" + id, "1_" + id);
  }
  return b.build();
}

int ProductCategory::obj_of(std::span<const int> components) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < components.size(); ++i)
    r = r * obj_radix[i] + components[i];
  return static_cast<int>(r);
}

int ProductCategory::mor_of(std::span<const int> components) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < components.size(); ++i)
    r = r * mor_radix[i] + components[i];
  return static_cast<int>(r);
}

ProductCategory product_category(
    std::span<const FiniteCategory* const> factors) {
  ProductCategory p;
  for (const auto* f : factors) {
    p.obj_radix.push_back(f->num_objects());
    p.mor_radix.push_back(f->num_morphisms());
  }
  std::size_t k = factors.size();

  auto tuple_id = [&](std::span<const int> t, bool obj) {
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ',';
      s += obj ? factors[i]->objects[t[i]] : factors[i]->morphisms[t[i]].id;
    }
    return s + ")";
  };

  for (Odometer o(p.obj_radix); !o.done; o.advance())
    p.cat.objects.push_back(tuple_id(o.digits, true));

  std::vector<int> stmp(k), ttmp(k);
  for (Odometer o(p.mor_radix); !o.done; o.advance()) {
    for (std::size_t i = 0; i < k; ++i) {
      stmp[i] = factors[i]->src(o.digits[i]);
      ttmp[i] = factors[i]->tgt(o.digits[i]);
    }
    p.cat.morphisms.push_back(
        {tuple_id(o.digits, false), p.obj_of(stmp), p.obj_of(ttmp)});
  }

  p.cat.identity.assign(p.cat.objects.size(), -1);
  for (Odometer o(p.obj_radix); !o.done; o.advance()) {
    for (std::size_t i = 0; i < k; ++i)
      stmp[i] = factors[i]->identity[o.digits[i]];
    p.cat.identity[p.obj_of(o.digits)] = p.mor_of(stmp);
  }

  reindex(p.cat);

  std::size_t nm = p.cat.morphisms.size();
  bool dense = nm * nm <= (1u << 22);
  if (dense) p.cat.comp_dense.assign(nm * nm, -1);
  std::vector<int> gtup(k);
  for (Odometer f(p.mor_radix); !f.done; f.advance()) {
    int fi = static_cast<int>(f.rank());
    int ft = p.cat.tgt(fi);
    for (Odometer g(p.mor_radix); !g.done; g.advance()) {
      int gi = static_cast<int>(g.rank());
      if (p.cat.src(gi) != ft) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        gtup[i] = factors[i]->compose(g.digits[i], f.digits[i]);
        ok = gtup[i] >= 0;
      }
      if (!ok) continue;
      int v = p.mor_of(gtup);
      if (dense)
        p.cat.comp_dense[static_cast<std::size_t>(gi) * nm + fi] = v;
      else
        p.cat.comp_sparse[FiniteCategory::pair_key(gi, fi)] = v;
    }
  }
  return p;
}

Functor identity_functor(const FiniteCategory& c) {
  Functor f;
  f.dom = f.cod = &c;
  f.on_obj.resize(c.num_objects());
  f.on_mor.resize(c.num_morphisms());
  for (int i = 0; i < c.num_objects(); ++i) f.on_obj[i] = i;
  for (int i = 0; i < c.num_morphisms(); ++i) f.on_mor[i] = i;
  return f;
}

Functor constant_functor(const FiniteCategory& dom, const FiniteCategory& cod,
                         int obj) {
  Functor f;
  f.dom = &dom;
  f.cod = &cod;
  f.on_obj.assign(dom.num_objects(), obj);
  f.on_mor.assign(dom.num_morphisms(), cod.identity[obj]);
  return f;
}

Functor compose_functor(const Functor& g, const Functor& f) {
  if (g.dom != f.cod)
    throw InputError("compose_functor: middle categories differ");
  Functor h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.on_obj.resize(f.on_obj.size());
  h.on_mor.resize(f.on_mor.size());
  for (std::size_t i = 0; i < f.on_obj.size(); ++i)
    h.on_obj[i] = g.on_obj[f.on_obj[i]];
  for (std::size_t i = 0; i < f.on_mor.size(); ++i)
    h.on_mor[i] = g.on_mor[f.on_mor[i]];
  return h;
}

Report validate_functor(const Functor& f) {
  Report r;
  r.suite = "functor";
  const auto& d = *f.dom;
  const auto& c = *f.cod;
  if (f.on_obj.size() != d.objects.size() ||
      f.on_mor.size() != d.morphisms.size()) {
    r.add("table shape", "object or morphism table size mismatch");
    return r;
  }
  for (int m = 0; m < d.num_morphisms(); ++m) {
    int fm = f.on_mor[m];
    bool good = fm >= 0 && fm < c.num_morphisms() &&
                c.src(fm) == f.on_obj[d.src(m)] &&
                c.tgt(fm) == f.on_obj[d.tgt(m)];
    r.require(good, "endpoint preservation", d.morphisms[m].id);
  }
  for (int o = 0; o < d.num_objects(); ++o)
    r.require(f.on_mor[d.identity[o]] == c.identity[f.on_obj[o]],
              "identity preservation", d.objects[o]);
  for (int m = 0; m < d.num_morphisms(); ++m)
    for (int g : d.mors_from[d.tgt(m)]) {
      r.count();
      if (f.on_mor[d.compose(g, m)] != c.compose(f.on_mor[g], f.on_mor[m]))
        r.add("composition preservation",
              d.morphisms[g].id + " . " + d.morphisms[m].id);
    }
  return r;
}

Report validate_nat(const NatTransformation& t) {
  Report r;
  r.suite = "nat";
  const auto& d = *t.source->dom;
  const auto& c = *t.source->cod;
  if (t.target->dom != t.source->dom || t.target->cod != t.source->cod) {
    r.add("frame", "source and target functors are not parallel");
    return r;
  }
  for (int o = 0; o < d.num_objects(); ++o) {
    int a = t.component[o];
    bool good = a >= 0 && a < c.num_morphisms() &&
                c.src(a) == t.source->on_obj[o] &&
                c.tgt(a) == t.target->on_obj[o];
    r.require(good, "component endpoints", d.objects[o]);
  }
  if (!r.ok()) return r;
  for (int m = 0; m < d.num_morphisms(); ++m) {
    r.count();
    int lhs = c.compose(t.component[d.tgt(m)], t.source->on_mor[m]);
    int rhs = c.compose(t.target->on_mor[m], t.component[d.src(m)]);
    if (lhs != rhs || lhs < 0) r.add("naturality", d.morphisms[m].id);
  }
  return r;
}

PointedCategory terminal_pointed() { return {terminal_category(), 0}; }

}  // namespace invk::cat
