#include "invk/groth.hpp"

#include <algorithm>

namespace invk::groth {

Object unit_object() { return {}; }

bool valid_object(const gamma::GammaCategory& x, const Object& a) {
  if (a.m.length() != static_cast<int>(a.x.size())) return false;
  for (int i = 0; i < a.m.length(); ++i) {
    int p = a.m.parts[i];
    if (p < 1 || p > x.truncation) return false;
    if (a.x[i] < 0 || a.x[i] >= x.level(p).c.num_objects()) return false;
  }
  return true;
}

int acted_obj(const gamma::GammaCategory& x, const aseq::SeqMap& phi,
              std::span<const int> xs, int j) {
  int i = aseq::preimage_block(phi, j);
  if (i == 0) return x.basepoint(phi.cod.parts[j - 1]);
  return x.act_obj(aseq::component_map(phi, i, j), xs[i - 1]);
}

int acted_mor(const gamma::GammaCategory& x, const aseq::SeqMap& phi,
              std::span<const int> fs, int j) {
  int i = aseq::preimage_block(phi, j);
  if (i == 0) return x.bp_identity(phi.cod.parts[j - 1]);
  return x.act_mor(aseq::component_map(phi, i, j), fs[i - 1]);
}

Morphism make_morphism(const gamma::GammaCategory& x, Object src, Object tgt,
                       aseq::SeqMap phi, std::vector<int> f) {
  if (!valid_object(x, src) || !valid_object(x, tgt))
    throw InputError("make_morphism: endpoint is not an object");
  if (!(phi.dom == src.m) || !(phi.cod == tgt.m))
    throw InputError("make_morphism: phi endpoints do not match");
  if (!aseq::validate_amorphism(phi).ok())
    throw InputError("make_morphism: phi violates the block condition");
  if (static_cast<int>(f.size()) != tgt.m.length())
    throw InputError("make_morphism: component count mismatch");
  for (int j = 1; j <= tgt.m.length(); ++j) {
    const auto& lc = x.level(tgt.m.parts[j - 1]).c;
    int fj = f[j - 1];
    if (fj < 0 || fj >= lc.num_morphisms() ||
        lc.src(fj) != acted_obj(x, phi, src.x, j) || lc.tgt(fj) != tgt.x[j - 1])
      throw InputError("make_morphism: component " + std::to_string(j) +
                       " is ill-typed");
  }
  return {std::move(src), std::move(tgt), std::move(phi), std::move(f)};
}

Morphism p_identity(const gamma::GammaCategory& x, const Object& a) {
  Morphism m;
  m.src = m.tgt = a;
  m.phi = aseq::identity_seqmap(a.m);
  for (int i = 0; i < a.m.length(); ++i)
    m.f.push_back(x.level(a.m.parts[i]).c.identity[a.x[i]]);
  return m;
}

Morphism p_compose(const gamma::GammaCategory& x, const Morphism& g,
                   const Morphism& f) {
  if (!(f.tgt == g.src)) throw InputError("p_compose: middle objects differ");
  Morphism h;
  h.src = f.src;
  h.tgt = g.tgt;
  h.phi = aseq::compose_a(g.phi, f.phi);
  h.f.resize(g.tgt.m.length());
  for (int l = 1; l <= g.tgt.m.length(); ++l) {
    int j = aseq::preimage_block(g.phi, l);
    if (j == 0) {
      h.f[l - 1] = g.f[l - 1];
    } else {
      const auto& lc = x.level(g.tgt.m.parts[l - 1]).c;
      int moved = x.act_mor(aseq::component_map(g.phi, j, l), f.f[j - 1]);
      h.f[l - 1] = lc.compose(g.f[l - 1], moved);
      if (h.f[l - 1] < 0)
        throw InputError("p_compose: components do not compose");
    }
  }
  return h;
}

Object p_box(const Object& a, const Object& b) {
  Object c;
  c.m = aseq::concat(a.m, b.m);
  c.x = a.x;
  c.x.insert(c.x.end(), b.x.begin(), b.x.end());
  return c;
}

Morphism p_box(const gamma::GammaCategory&, const Morphism& a,
               const Morphism& b) {
  Morphism c;
  c.src = p_box(a.src, b.src);
  c.tgt = p_box(a.tgt, b.tgt);
  c.phi = aseq::concat_map(a.phi, b.phi);
  c.f = a.f;
  c.f.insert(c.f.end(), b.f.begin(), b.f.end());
  return c;
}

Morphism p_braiding(const gamma::GammaCategory& x, const Object& a,
                    const Object& b) {
  Morphism m;
  m.src = p_box(a, b);
  m.tgt = p_box(b, a);
  m.phi = aseq::block_swap(a.m, b.m);
  // Block permutations keep elements fixed, so every component is an
  // identity of the carried object.
  for (int i = 0; i < m.tgt.m.length(); ++i)
    m.f.push_back(x.level(m.tgt.m.parts[i]).c.identity[m.tgt.x[i]]);
  return m;
}

bool is_iso(const gamma::GammaCategory& x, const Morphism& m) {
  if (!aseq::is_iso_seqmap(m.phi)) return false;
  for (int j = 1; j <= m.tgt.m.length(); ++j)
    if (x.level(m.tgt.m.parts[j - 1]).c.inverse(m.f[j - 1]) < 0) return false;
  return true;
}

Morphism p_invert(const gamma::GammaCategory& x, const Morphism& m) {
  if (!is_iso(x, m)) throw InputError("p_invert: not an isomorphism");
  aseq::SeqMap inv = aseq::invert_seqmap(m.phi);
  std::vector<int> f(m.src.m.length());
  for (int i = 1; i <= m.src.m.length(); ++i) {
    int j = aseq::preimage_block(inv, i);
    const auto& lc = x.level(m.src.m.parts[i - 1]).c;
    int moved = x.act_mor(aseq::component_map(inv, j, i), m.f[j - 1]);
    f[i - 1] = lc.inverse(moved);
    if (f[i - 1] < 0) throw InputError("p_invert: component not invertible");
  }
  return make_morphism(x, m.tgt, m.src, std::move(inv), std::move(f));
}

std::vector<Object> enumerate_objects(const gamma::GammaCategory& x,
                                      int max_len, int max_entry) {
  std::vector<Object> out;
  int top = std::min(max_entry, x.truncation);
  for (int len = 0; len <= max_len; ++len) {
    std::vector<int> radix(len, top);
    for (Odometer seqs(radix); !seqs.done; seqs.advance()) {
      Object a;
      for (int i = 0; i < len; ++i) a.m.parts.push_back(seqs.digits[i] + 1);
      std::vector<int> objs(len);
      for (int i = 0; i < len; ++i)
        objs[i] = x.level(a.m.parts[i]).c.num_objects();
      for (Odometer xs(objs); !xs.done; xs.advance()) {
        a.x = xs.digits;
        out.push_back(a);
      }
    }
  }
  return out;
}

std::vector<Morphism> enumerate_morphisms(const gamma::GammaCategory& x,
                                          const Object& a, const Object& b) {
  std::vector<Morphism> out;
  for (const auto& phi : aseq::all_seqmaps(a.m, b.m)) {
    // Component candidates per codomain block: morphisms from the
    // phi-image of a to the block of b.
    std::vector<std::vector<int>> cands(b.m.length());
    std::vector<int> radix(b.m.length());
    bool any = true;
    for (int j = 1; j <= b.m.length() && any; ++j) {
      const auto& lc = x.level(b.m.parts[j - 1]).c;
      int from = acted_obj(x, phi, a.x, j);
      for (int mm : lc.mors_from[from])
        if (lc.tgt(mm) == b.x[j - 1]) cands[j - 1].push_back(mm);
      radix[j - 1] = static_cast<int>(cands[j - 1].size());
      any = radix[j - 1] > 0;
    }
    if (!any) continue;
    for (Odometer o(radix); !o.done; o.advance()) {
      Morphism m;
      m.src = a;
      m.tgt = b;
      m.phi = phi;
      m.f.resize(b.m.length());
      for (int j = 0; j < b.m.length(); ++j)
        m.f[j] = cands[j][o.digits[j]];
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::string object_id(const Object& a) {
  return "(" + join_ints(a.m.parts) + "|" + join_ints(a.x) + ")";
}

cat::ProductCategory ax_on_object(const gamma::GammaCategory& x,
                                  const aseq::Seq& m) {
  std::vector<const cat::FiniteCategory*> factors;
  for (int p : m.parts) factors.push_back(&x.level(p).c);
  return cat::product_category(factors);
}

cat::Functor ax_on_morphism(const gamma::GammaCategory& x,
                            const aseq::SeqMap& phi,
                            const cat::ProductCategory& dom,
                            const cat::ProductCategory& cod) {
  cat::Functor fun;
  fun.dom = &dom.cat;
  fun.cod = &cod.cat;
  int q = phi.cod.length();
  std::vector<int> image(q);
  for (Odometer o(dom.obj_radix); !o.done; o.advance()) {
    for (int j = 1; j <= q; ++j) image[j - 1] = acted_obj(x, phi, o.digits, j);
    fun.on_obj.push_back(cod.obj_of(image));
  }
  for (Odometer o(dom.mor_radix); !o.done; o.advance()) {
    for (int j = 1; j <= q; ++j) image[j - 1] = acted_mor(x, phi, o.digits, j);
    fun.on_mor.push_back(cod.mor_of(image));
  }
  return fun;
}

int PcatResult::find_obj(const Object& a) const {
  auto it = obj_index.find(a);
  return it == obj_index.end() ? -1 : it->second;
}

int PcatResult::find_mor(const Morphism& m) const {
  auto it = mor_index.find(m);
  return it == mor_index.end() ? -1 : it->second;
}

int PcatResult::find_mor_between(int s, int t, const Morphism& m) const {
  for (int idx : hom[static_cast<std::size_t>(s) * objects.size() + t])
    if (morphisms[idx] == m) return idx;
  return -1;
}

PcatResult build_pcat(const gamma::GammaCategory& x, int max_len,
                      int max_entry) {
  PcatResult r;
  r.objects = enumerate_objects(x, max_len, max_entry);
  int no = static_cast<int>(r.objects.size());
  for (int i = 0; i < no; ++i) {
    r.obj_index.emplace(r.objects[i], i);
    r.weight.push_back(r.objects[i].m.length());
  }

  auto& fc = r.perm.c;
  for (const auto& a : r.objects) fc.objects.push_back(object_id(a));
  r.hom.resize(static_cast<std::size_t>(no) * no);
  for (int s = 0; s < no; ++s)
    for (int t = 0; t < no; ++t) {
      auto& cell = r.hom[static_cast<std::size_t>(s) * no + t];
      auto ms = enumerate_morphisms(x, r.objects[s], r.objects[t]);
      for (auto& m : ms) {
        int idx = static_cast<int>(r.morphisms.size());
        cell.push_back(idx);
        fc.morphisms.push_back({fc.objects[s] + ">" + fc.objects[t] + "#" +
                                    std::to_string(cell.size() - 1),
                                s, t});
        r.mor_index.emplace(m, idx);
        r.morphisms.push_back(std::move(m));
      }
    }
  int nm = static_cast<int>(r.morphisms.size());
  fc.identity.resize(no);
  for (int i = 0; i < no; ++i) {
    fc.identity[i] = r.find_mor(p_identity(x, r.objects[i]));
    if (fc.identity[i] < 0) throw Error("build_pcat: identity not enumerated");
  }
  cat::reindex(fc);

  // Composition via p_compose on composable pairs.
  if (static_cast<long long>(nm) * nm <= (1 << 26))
    fc.comp_dense.assign(static_cast<std::size_t>(nm) * nm, -1);
  for (int g = 0; g < nm; ++g) {
    int mid = fc.morphisms[g].src;
    for (int f : fc.mors_into[mid]) {
      Morphism comp = p_compose(x, r.morphisms[g], r.morphisms[f]);
      int idx = r.find_mor_between(fc.morphisms[f].src, fc.morphisms[g].tgt, comp);
      if (idx < 0) throw Error("build_pcat: composite not enumerated");
      if (!fc.comp_dense.empty())
        fc.comp_dense[static_cast<std::size_t>(g) * nm + f] = idx;
      else
        fc.comp_sparse[cat::FiniteCategory::pair_key(g, f)] = idx;
    }
  }

  r.perm.unit = r.find_obj(unit_object());
  r.perm.tensor_obj.assign(static_cast<std::size_t>(no) * no, -1);
  r.perm.braiding.assign(static_cast<std::size_t>(no) * no, -1);
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b) {
      int ab = r.find_obj(p_box(r.objects[a], r.objects[b]));
      r.perm.tensor_obj[static_cast<std::size_t>(a) * no + b] = ab;
      if (ab >= 0) {
        int br = r.find_mor(p_braiding(x, r.objects[a], r.objects[b]));
        if (br < 0) throw Error("build_pcat: braiding not enumerated");
        r.perm.braiding[static_cast<std::size_t>(a) * no + b] = br;
      }
    }
  r.perm.tensor_mor.assign(static_cast<std::size_t>(nm) * nm, -1);
  for (int f = 0; f < nm; ++f) {
    const auto& mf = r.morphisms[f];
    for (int g = 0; g < nm; ++g) {
      const auto& mg = r.morphisms[g];
      if (mf.src.m.length() + mg.src.m.length() > max_len ||
          mf.tgt.m.length() + mg.tgt.m.length() > max_len)
        continue;
      Morphism box = p_box(x, mf, mg);
      int s = r.find_obj(box.src), t = r.find_obj(box.tgt);
      if (s < 0 || t < 0) continue;
      r.perm.tensor_mor[static_cast<std::size_t>(f) * nm + g] =
          r.find_mor_between(s, t, box);
    }
  }
  return r;
}

}  // namespace invk::groth
