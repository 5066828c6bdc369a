#include "invk/pmulti.hpp"

#include <algorithm>

#include "invk/aseq.hpp"
#include "invk/fskel.hpp"

namespace invk::pmulti {

namespace {

// Cells of the arrangement of the block lengths of xs, in `ord` order.
struct Arrangement {
  std::vector<int> r;
  int ncells = 0;
  std::vector<std::vector<int>> cell;  // 0-based rank -> 1-based tuple
};

Arrangement arrangement_of(std::span<const groth::Object* const> xs,
                           Ordering ord) {
  Arrangement a;
  for (const auto* o : xs) a.r.push_back(o->m.length());
  long long n = checked_product(a.r);
  a.ncells = static_cast<int>(n);
  a.cell.resize(a.ncells);
  std::vector<int> t;
  for (int c = 1; c <= a.ncells; ++c) {
    cell_unrank1(c, a.r, ord, t);
    a.cell[c - 1] = t;
  }
  return a;
}

}  // namespace

groth::Object p_zero_ary(const gamma::GammaCategory& y, int value) {
  if (value < 0 || value >= y.level(1).c.num_objects())
    throw InputError("p_zero_ary: value is not an object of level 1");
  groth::Object out;
  out.m.parts = {1};
  out.x = {value};
  return out;
}

groth::Object p_on_objects(const gamma::Multimorphism& f,
                           std::span<const groth::Object* const> xs,
                           Ordering ord) {
  const int k = f.arity();
  if (static_cast<int>(xs.size()) != k)
    throw InputError("p_on_objects: arity mismatch");
  if (k == 0) return p_zero_ary(*f.target, f.value);
  groth::Object out;
  Arrangement ar = arrangement_of(xs, ord);
  std::vector<int> p(k), in(k);
  for (int c = 0; c < ar.ncells; ++c) {
    const auto& t = ar.cell[c];
    for (int i = 0; i < k; ++i) {
      p[i] = xs[i]->m.parts[t[i] - 1];
      in[i] = xs[i]->x[t[i] - 1];
    }
    const gamma::Component& fc = f.comp(p);
    out.m.parts.push_back(static_cast<int>(checked_product(p)));
    out.x.push_back(fc.obj[fc.obj_rank(in)]);
  }
  return out;
}

groth::Morphism p_on_morphisms(const gamma::Multimorphism& f,
                               std::span<const groth::Morphism* const> ms,
                               Ordering ord) {
  const int k = f.arity();
  if (static_cast<int>(ms.size()) != k)
    throw InputError("p_on_morphisms: arity mismatch");
  if (k == 0)
    return groth::p_identity(*f.target, p_zero_ary(*f.target, f.value));
  std::vector<const groth::Object*> srcs(k), tgts(k);
  for (int i = 0; i < k; ++i) {
    srcs[i] = &ms[i]->src;
    tgts[i] = &ms[i]->tgt;
  }
  groth::Object s = p_on_objects(f, srcs, ord);
  groth::Object t = p_on_objects(f, tgts, ord);
  Arrangement as = arrangement_of(srcs, ord);
  Arrangement at = arrangement_of(tgts, ord);

  aseq::SeqMap phi{s.m, t.m, {}};
  std::vector<int> ps(k), coord(k), blk(k), elt(k), npart(k);
  for (int c = 0; c < as.ncells; ++c) {
    const auto& cl = as.cell[c];
    for (int i = 0; i < k; ++i) ps[i] = srcs[i]->m.parts[cl[i] - 1];
    int part = static_cast<int>(checked_product(ps));
    for (int e = 1; e <= part; ++e) {
      lex_unrank1(e, ps, coord);
      for (int i = 0; i < k; ++i) {
        auto [b, x] = ms[i]->phi.at(cl[i], coord[i]);
        blk[i] = b;
        elt[i] = x;
      }
      int tcell = cell_rank1(blk, at.r, ord);
      for (int i = 0; i < k; ++i) npart[i] = tgts[i]->m.parts[blk[i] - 1];
      phi.map.emplace_back(tcell, lex_rank1(elt, npart));
    }
  }

  std::vector<int> fcells(at.ncells), q(k), morin(k);
  for (int c = 0; c < at.ncells; ++c) {
    const auto& cl = at.cell[c];
    for (int i = 0; i < k; ++i) {
      q[i] = tgts[i]->m.parts[cl[i] - 1];
      morin[i] = ms[i]->f[cl[i] - 1];
    }
    const gamma::Component& fc = f.comp(q);
    fcells[c] = fc.mor[fc.mor_rank(morin)];
  }
  return groth::make_morphism(*f.target, std::move(s), std::move(t),
                              std::move(phi), std::move(fcells));
}

groth::Morphism p_linearity(const gamma::Multimorphism& f,
                            std::span<const groth::Object* const> xs, int slot,
                            const groth::Object& extra, Ordering ord) {
  const int k = f.arity();
  if (static_cast<int>(xs.size()) != k)
    throw InputError("p_linearity: arity mismatch");
  if (slot < 0 || slot >= k) throw InputError("p_linearity: bad slot");
  groth::Object both;
  both.m = aseq::concat(xs[slot]->m, extra.m);
  both.x = xs[slot]->x;
  both.x.insert(both.x.end(), extra.x.begin(), extra.x.end());

  std::vector<const groth::Object*> with(xs.begin(), xs.end());
  groth::Object a = p_on_objects(f, with, ord);
  with[slot] = &extra;
  groth::Object b = p_on_objects(f, with, ord);
  with[slot] = &both;
  groth::Object t = p_on_objects(f, with, ord);
  groth::Object s = groth::p_box(a, b);

  std::vector<int> r;
  for (const auto* o : xs) r.push_back(o->m.length());
  aseq::BlockPerm bp = aseq::sigma_linearity(r, slot + 1, extra.m.length(), ord);
  aseq::SeqMap phi = aseq::block_perm_map(bp, s.m);
  std::vector<int> fcells(t.m.length());
  for (int j = 1; j <= t.m.length(); ++j)
    fcells[j - 1] = f.target->level(t.m.parts[j - 1]).c.identity[t.x[j - 1]];
  return groth::make_morphism(*f.target, std::move(s), std::move(t),
                              std::move(phi), std::move(fcells));
}

groth::Morphism p_on_modifications(const gamma::Modification& th,
                                   std::span<const groth::Object* const> xs,
                                   Ordering ord) {
  const auto& fm = *th.source;
  const auto& gm = *th.target;
  const int k = fm.arity();
  if (static_cast<int>(xs.size()) != k)
    throw InputError("p_on_modifications: arity mismatch");
  if (k == 0) {
    groth::Object s = p_zero_ary(*fm.target, fm.value);
    groth::Object t = p_zero_ary(*gm.target, gm.value);
    aseq::SeqMap phi = aseq::identity_seqmap(s.m);
    return groth::make_morphism(*fm.target, std::move(s), std::move(t),
                                std::move(phi), {th.comp({})[0]});
  }
  groth::Object s = p_on_objects(fm, xs, ord);
  groth::Object t = p_on_objects(gm, xs, ord);
  Arrangement ar = arrangement_of(xs, ord);
  std::vector<int> fcells(ar.ncells), q(k), in(k);
  for (int c = 0; c < ar.ncells; ++c) {
    const auto& cl = ar.cell[c];
    for (int i = 0; i < k; ++i) {
      q[i] = xs[i]->m.parts[cl[i] - 1];
      in[i] = xs[i]->x[cl[i] - 1];
    }
    fcells[c] =
        th.comp(q)[static_cast<std::size_t>(fm.comp(q).obj_rank(in))];
  }
  aseq::SeqMap phi = aseq::identity_seqmap(s.m);
  return groth::make_morphism(*fm.target, std::move(s), std::move(t),
                              std::move(phi), std::move(fcells));
}

namespace {

constexpr long long kMorTableCap = 1LL << 23;
constexpr long long kConTableCap = 1LL << 21;

std::size_t flat_rank(std::span<const int> radix, std::span<const int> u) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    r = r * static_cast<std::size_t>(radix[i]) + static_cast<std::size_t>(u[i]);
  return r;
}

}  // namespace

permlin::MultilinearFunctor assemble_multilinear(
    const gamma::Multimorphism& f,
    std::vector<const groth::PcatResult*> srcs, const groth::PcatResult& tgt,
    Ordering ord) {
  const int k = f.arity();
  if (static_cast<int>(srcs.size()) != k)
    throw InputError("assemble_multilinear: arity mismatch");
  permlin::MultilinearFunctor out;
  out.tgt = &tgt.perm;
  for (const auto* s : srcs) out.src.push_back(&s->perm);
  if (k == 0) {
    int oi = tgt.find_obj(p_zero_ary(*f.target, f.value));
    if (oi < 0)
      throw InputError("assemble_multilinear: value object out of bound");
    int mi = tgt.perm.c.identity[oi];
    out.obj = [oi](std::span<const int>) { return oi; };
    out.mor = [mi](std::span<const int>) { return mi; };
    out.constraint = [](int, std::span<const int>, int) { return -1; };
    return out;
  }

  const gamma::Multimorphism* fp = &f;
  const groth::PcatResult* tp = &tgt;
  std::vector<int> orad(k), mrad(k);
  for (int i = 0; i < k; ++i) {
    orad[i] = static_cast<int>(srcs[i]->objects.size());
    mrad[i] = static_cast<int>(srcs[i]->morphisms.size());
  }

  auto objs = std::make_shared<std::vector<int>>();
  objs->resize(static_cast<std::size_t>(checked_product(orad)));
  {
    std::vector<const groth::Object*> op(k);
    for (Odometer o(orad); !o.done; o.advance()) {
      for (int i = 0; i < k; ++i) op[i] = &srcs[i]->objects[o.digits[i]];
      int v;
      try {
        v = tgt.find_obj(p_on_objects(f, op, ord));
      } catch (const TruncationError&) {
        v = -1;
      }
      (*objs)[o.rank()] = v;
    }
  }
  out.obj = [objs, orad](std::span<const int> u) {
    return (*objs)[flat_rank(orad, u)];
  };

  auto mor_at = [fp, tp, srcs, orad, objs, ord, k](std::span<const int> u) {
    std::vector<int> st(k), tt(k);
    std::vector<const groth::Morphism*> mp(k);
    for (int i = 0; i < k; ++i) {
      mp[i] = &srcs[i]->morphisms[u[i]];
      st[i] = srcs[i]->perm.c.src(u[i]);
      tt[i] = srcs[i]->perm.c.tgt(u[i]);
    }
    int so = (*objs)[flat_rank(orad, st)];
    int to = (*objs)[flat_rank(orad, tt)];
    if (so < 0 || to < 0) return -1;
    try {
      groth::Morphism m = p_on_morphisms(*fp, mp, ord);
      return tp->find_mor_between(so, to, m);
    } catch (const TruncationError&) {
      return -1;
    }
  };
  if (checked_product(mrad) <= kMorTableCap) {
    auto mors = std::make_shared<std::vector<int>>();
    mors->resize(static_cast<std::size_t>(checked_product(mrad)));
    for (Odometer o(mrad); !o.done; o.advance())
      (*mors)[o.rank()] = mor_at(o.digits);
    out.mor = [mors, mrad](std::span<const int> u) {
      return (*mors)[flat_rank(mrad, u)];
    };
  } else {
    out.mor = mor_at;
  }

  auto con_at = [fp, tp, srcs, ord, k](int slot, std::span<const int> u,
                                       int extra) {
    // the boxed slot operand must itself stay within the source bound
    if (srcs[slot]->perm.tobj(u[slot], extra) < 0) return -1;
    std::vector<const groth::Object*> op(k);
    for (int i = 0; i < k; ++i) op[i] = &srcs[i]->objects[u[i]];
    try {
      groth::Morphism m =
          p_linearity(*fp, op, slot, srcs[slot]->objects[extra], ord);
      int so = tp->find_obj(m.src);
      int to = tp->find_obj(m.tgt);
      if (so < 0 || to < 0) return -1;
      return tp->find_mor_between(so, to, m);
    } catch (const TruncationError&) {
      return -1;
    }
  };
  long long objp = checked_product(orad);
  int ormax = *std::max_element(orad.begin(), orad.end());
  if (k * objp * ormax <= kConTableCap) {
    auto cons = std::make_shared<std::vector<int>>();
    cons->resize(static_cast<std::size_t>(k * objp * ormax));
    for (int slot = 0; slot < k; ++slot)
      for (Odometer o(orad); !o.done; o.advance())
        for (int e = 0; e < orad[slot]; ++e)
          (*cons)[(static_cast<std::size_t>(slot) * objp + o.rank()) * ormax +
                  e] = con_at(slot, o.digits, e);
    out.constraint = [cons, orad, objp, ormax](int slot,
                                               std::span<const int> u,
                                               int extra) {
      return (*cons)[(static_cast<std::size_t>(slot) * objp +
                      flat_rank(orad, u)) *
                         ormax +
                     extra];
    };
  } else {
    out.constraint = con_at;
  }
  return out;
}

Report check_composition(const gamma::Multimorphism& g,
                         std::vector<const gamma::Multimorphism*> fs,
                         const groth::PcatResult& pc, Ordering ord,
                         int mor_weight) {
  Report r;
  r.suite = "multifunctor-composition";
  gamma::Multimorphism comp = gamma::compose_multi(g, fs);
  const int n = g.arity();
  const int k = comp.arity();
  std::vector<const groth::PcatResult*> pcs_n(n, &pc), pcs_k(k, &pc);
  permlin::MultilinearFunctor lhs = assemble_multilinear(comp, pcs_k, pc, ord);
  permlin::MultilinearFunctor ga = assemble_multilinear(g, pcs_n, pc, ord);
  std::vector<permlin::MultilinearFunctor> fa;
  fa.reserve(fs.size());
  for (const auto* f : fs)
    fa.push_back(assemble_multilinear(
        *f, std::vector<const groth::PcatResult*>(f->arity(), &pc), pc, ord));
  std::vector<const permlin::MultilinearFunctor*> fap;
  for (const auto& f : fa) fap.push_back(&f);
  permlin::MultilinearFunctor rhs = permlin::compose_multilinear(ga, fap);

  const int no = pc.perm.c.num_objects();
  const int nm = pc.perm.c.num_morphisms();
  if (k == 0) {
    r.require(lhs.obj({}) == rhs.obj({}), "objects agree", "()");
    return r;
  }

  std::vector<int> orad(k, no);
  for (Odometer o(orad); !o.done; o.advance()) {
    int b = rhs.obj(o.digits);
    if (b < 0) {  // an intermediate image left the bound
      r.skip();
      continue;
    }
    r.require_lazy(lhs.obj(o.digits) == b, "objects agree",
                   [&] { return "(" + join_ints(o.digits) + ")"; });
  }

  std::vector<int> small_mor, small_obj;
  for (int m = 0; m < nm; ++m)
    if (pc.weight[pc.perm.c.src(m)] <= mor_weight &&
        pc.weight[pc.perm.c.tgt(m)] <= mor_weight)
      small_mor.push_back(m);
  for (int a = 0; a < no; ++a)
    if (pc.weight[a] <= mor_weight) small_obj.push_back(a);

  {
    std::vector<int> rad(k, static_cast<int>(small_mor.size()));
    std::vector<int> t(k);
    std::uint64_t full = 1, red = 1;
    for (int i = 0; i < k; ++i) {
      full *= static_cast<std::uint64_t>(nm);
      red *= static_cast<std::uint64_t>(small_mor.size());
    }
    r.skip(full - red);
    for (Odometer o(rad); !o.done; o.advance()) {
      for (int i = 0; i < k; ++i) t[i] = small_mor[o.digits[i]];
      int b = rhs.mor(t);
      if (b < 0) {
        r.skip();
        continue;
      }
      r.require_lazy(lhs.mor(t) == b, "morphisms agree",
                     [&] { return "(" + join_ints(t) + ")"; });
    }
  }

  {
    std::vector<int> rad(k, static_cast<int>(small_obj.size()));
    std::vector<int> t(k);
    std::uint64_t full = static_cast<std::uint64_t>(k) * no, red =
        static_cast<std::uint64_t>(k) * no;
    for (int i = 0; i < k; ++i) {
      full *= static_cast<std::uint64_t>(no);
      red *= static_cast<std::uint64_t>(small_obj.size());
    }
    r.skip(full - red);
    for (int slot = 0; slot < k; ++slot)
      for (Odometer o(rad); !o.done; o.advance()) {
        for (int i = 0; i < k; ++i) t[i] = small_obj[o.digits[i]];
        for (int e = 0; e < no; ++e) {
          int b = rhs.constraint(slot, t, e);
          if (b < 0) {
            r.skip();
            continue;
          }
          r.require_lazy(lhs.constraint(slot, t, e) == b, "constraints agree",
                         [&] {
                           return "slot " + std::to_string(slot + 1) + " (" +
                                  join_ints(t) + ")+" + std::to_string(e);
                         });
        }
      }
  }
  return r;
}

SymmetryCheck check_symmetry_failure(
    const gamma::Multimorphism& f, std::vector<int> sigma,
    std::span<const groth::Object* const> inputs, Ordering ord) {
  const int k = f.arity();
  if (k == 0) throw InputError("check_symmetry_failure: needs arity > 0");
  if (static_cast<int>(sigma.size()) != k || !is_permutation0(sigma))
    throw InputError("check_symmetry_failure: not a permutation");
  if (static_cast<int>(inputs.size()) != k)
    throw InputError("check_symmetry_failure: arity mismatch");
  std::vector<int> inv = invert_permutation0(sigma);

  SymmetryCheck out;
  gamma::Multimorphism acted = gamma::sigma_act(f, sigma);
  std::vector<const groth::Object*> v(k);
  for (int t = 0; t < k; ++t) v[t] = inputs[inv[t]];
  out.rhs = p_on_objects(acted, inputs, ord);
  out.lhs = p_on_objects(f, v, ord);
  out.equal = out.lhs == out.rhs;

  // Cell (l_1..l_k) of the rhs arrangement lands in the lhs arrangement
  // at (l_inv(1)..l_inv(k)), carrying the smash-factor reorder of its
  // levels.
  std::vector<int> rl(k), rr(k), cl, l(k), p(k);
  for (int i = 0; i < k; ++i) rl[i] = inputs[i]->m.length();
  for (int t = 0; t < k; ++t) rr[t] = rl[inv[t]];
  aseq::SeqMap phi{out.rhs.m, out.lhs.m, {}};
  long long ncells = checked_product(rl);
  for (long long c = 1; c <= ncells; ++c) {
    cell_unrank1(c, rl, ord, cl);
    for (int i = 0; i < k; ++i) p[i] = inputs[i]->m.parts[cl[i] - 1];
    for (int t = 0; t < k; ++t) l[t] = cl[inv[t]];
    int tblock = cell_rank1(l, rr, ord);
    fskel::PtdMap d = fskel::smash_reorder(p, inv);
    for (int e = 1; e <= d.dom; ++e) phi.map.emplace_back(tblock, d(e));
  }
  std::vector<int> fcells(out.lhs.m.length());
  for (int j = 1; j <= out.lhs.m.length(); ++j)
    fcells[j - 1] =
        f.target->level(out.lhs.m.parts[j - 1]).c.identity[out.lhs.x[j - 1]];
  try {
    out.iso = groth::make_morphism(*f.target, out.rhs, out.lhs,
                                   std::move(phi), std::move(fcells));
    out.iso_valid = groth::is_iso(*f.target, out.iso);
  } catch (const Error&) {
    out.iso_valid = false;
  }
  return out;
}

SymmetrySweep symmetry_sweep(const gamma::Multimorphism& f,
                             std::vector<int> sigma,
                             std::vector<const groth::PcatResult*> srcs,
                             Ordering ord) {
  const int k = f.arity();
  if (k == 0) throw InputError("symmetry_sweep: needs arity > 0");
  if (static_cast<int>(sigma.size()) != k || !is_permutation0(sigma))
    throw InputError("symmetry_sweep: not a permutation");
  if (static_cast<int>(srcs.size()) != k)
    throw InputError("symmetry_sweep: arity mismatch");

  SymmetrySweep out;
  out.report.suite = "symmetry";
  std::vector<int> radix(k);
  for (int i = 0; i < k; ++i)
    radix[i] = static_cast<int>(srcs[sigma[i]]->objects.size());
  std::vector<const groth::Object*> in(k);
  for (Odometer o(radix); !o.done; o.advance()) {
    for (int i = 0; i < k; ++i)
      in[i] = &srcs[sigma[i]]->objects[o.digits[i]];
    SymmetryCheck c;
    try {
      c = check_symmetry_failure(f, sigma, in, ord);
    } catch (const TruncationError&) {
      out.report.skip();
      continue;
    }
    out.report.require_lazy(c.iso_valid, "iso", [&] {
      std::string w = "inputs";
      for (int i = 0; i < k; ++i) w += " " + groth::object_id(*in[i]);
      return w;
    });
    if (!c.equal) out.all_equal = false;
  }
  return out;
}

VariantCheck p_prime_variant(const gamma::Multimorphism& f,
                             std::span<const groth::Object* const> inputs) {
  const int k = f.arity();
  if (k == 0) throw InputError("p_prime_variant: needs arity > 0");
  if (static_cast<int>(inputs.size()) != k)
    throw InputError("p_prime_variant: arity mismatch");
  VariantCheck out;
  out.main = p_on_objects(f, inputs, Ordering::RevLex);
  out.variant = p_on_objects(f, inputs, Ordering::Lex);
  out.equal = out.main == out.variant;

  std::vector<int> r(k), cl;
  for (int i = 0; i < k; ++i) r[i] = inputs[i]->m.length();
  aseq::SeqMap phi{out.main.m, out.variant.m, {}};
  long long ncells = checked_product(r);
  for (long long c = 1; c <= ncells; ++c) {
    cell_unrank1(c, r, Ordering::RevLex, cl);
    int tblock = cell_rank1(cl, r, Ordering::Lex);
    int part = out.main.m.parts[c - 1];
    for (int e = 1; e <= part; ++e) phi.map.emplace_back(tblock, e);
  }
  std::vector<int> fcells(out.variant.m.length());
  for (int j = 1; j <= out.variant.m.length(); ++j)
    fcells[j - 1] = f.target->level(out.variant.m.parts[j - 1])
                        .c.identity[out.variant.x[j - 1]];
  try {
    out.alpha = groth::make_morphism(*f.target, out.main, out.variant,
                                     std::move(phi), std::move(fcells));
    out.alpha_valid = groth::is_iso(*f.target, out.alpha);
  } catch (const Error&) {
    out.alpha_valid = false;
  }
  return out;
}

VariantSweep variant_sweep(const gamma::Multimorphism& f,
                           std::vector<const groth::PcatResult*> srcs,
                           const groth::PcatResult& tgt) {
  const int k = f.arity();
  if (k == 0) throw InputError("variant_sweep: needs arity > 0");
  if (static_cast<int>(srcs.size()) != k)
    throw InputError("variant_sweep: arity mismatch");
  VariantSweep out;
  out.report.suite = "variant";
  out.main = std::make_shared<const permlin::MultilinearFunctor>(
      assemble_multilinear(f, srcs, tgt, Ordering::RevLex));
  out.variant = std::make_shared<const permlin::MultilinearFunctor>(
      assemble_multilinear(f, srcs, tgt, Ordering::Lex));

  std::vector<int> radix(k);
  for (int i = 0; i < k; ++i)
    radix[i] = static_cast<int>(srcs[i]->objects.size());
  std::vector<const groth::Object*> in(k);
  for (Odometer o(radix); !o.done; o.advance()) {
    for (int i = 0; i < k; ++i) in[i] = &srcs[i]->objects[o.digits[i]];
    VariantCheck c;
    try {
      c = p_prime_variant(f, in);
    } catch (const TruncationError&) {
      out.report.skip();
      continue;
    }
    out.report.require_lazy(c.alpha_valid, "alpha", [&] {
      std::string w = "inputs";
      for (int i = 0; i < k; ++i) w += " " + groth::object_id(*in[i]);
      return w;
    });
  }

  const gamma::Multimorphism* fp = &f;
  const groth::PcatResult* tp = &tgt;
  out.alpha.source = out.main.get();
  out.alpha.target = out.variant.get();
  out.alpha.component = [fp, tp, srcs, k](std::span<const int> u) -> int {
    int s = -1, t = -1;
    std::vector<const groth::Object*> a(k);
    for (int i = 0; i < k; ++i) a[i] = &srcs[i]->objects[u[i]];
    VariantCheck c;
    try {
      c = p_prime_variant(*fp, a);
    } catch (const TruncationError&) {
      return -1;
    }
    s = tp->find_obj(c.main);
    t = tp->find_obj(c.variant);
    if (s < 0 || t < 0) return -1;
    return tp->find_mor_between(s, t, c.alpha);
  };
  out.report.merge(permlin::validate_mltrans(out.alpha));
  return out;
}

permlin::MultilinearTransformation p_transformation(
    const gamma::Modification& th, const permlin::MultilinearFunctor& fsrc,
    const permlin::MultilinearFunctor& ftgt,
    std::vector<const groth::PcatResult*> srcs, const groth::PcatResult& tgt,
    Ordering ord) {
  const int k = th.source ? th.source->arity() : 0;
  if (static_cast<int>(srcs.size()) != k)
    throw InputError("p_transformation: arity mismatch");
  permlin::MultilinearTransformation t;
  t.source = &fsrc;
  t.target = &ftgt;
  t.component = [&th, &fsrc, &ftgt, srcs = std::move(srcs), tp = &tgt, ord,
                 k](std::span<const int> u) -> int {
    int s = fsrc.obj(u), v = ftgt.obj(u);
    if (s < 0 || v < 0) return -1;
    std::vector<const groth::Object*> xs(k);
    for (int i = 0; i < k; ++i) xs[i] = &srcs[i]->objects[u[i]];
    groth::Morphism m;
    try {
      m = p_on_modifications(th, xs, ord);
    } catch (const Error&) {
      return -1;
    }
    return tp->find_mor_between(s, v, m);
  };
  return t;
}

Report check_enrichment(const gamma::Modification& a,
                        const gamma::Modification* b,
                        std::vector<const groth::PcatResult*> srcs,
                        const groth::PcatResult& tgt, Ordering ord) {
  Report r;
  r.suite = "enrichment";
  if (!a.source || !a.target) {
    r.add("frame", "modification endpoints missing");
    return r;
  }
  if (b && b->source != a.target) {
    r.add("frame", "second modification does not follow the first");
    return r;
  }
  const int k = a.source->arity();
  permlin::MultilinearFunctor af =
      assemble_multilinear(*a.source, srcs, tgt, ord);
  permlin::MultilinearFunctor ag =
      assemble_multilinear(*a.target, srcs, tgt, ord);
  permlin::MultilinearTransformation ta =
      p_transformation(a, af, ag, srcs, tgt, ord);
  r.merge(permlin::validate_mltrans(ta));

  const auto& tc = tgt.perm.c;
  std::vector<int> orad(k);
  for (int i = 0; i < k; ++i)
    orad[i] = static_cast<int>(srcs[i]->objects.size());

  {
    gamma::Modification one = gamma::identity_modification(*a.source);
    permlin::MultilinearTransformation tone =
        p_transformation(one, af, af, srcs, tgt, ord);
    for (Odometer o(orad); !o.done; o.advance()) {
      int obj = af.obj(o.digits);
      if (obj < 0) {
        r.skip();
        continue;
      }
      r.require_lazy(tone.component(o.digits) == tc.identity[obj],
                     "identity image",
                     [&] { return "(" + join_ints(o.digits) + ")"; });
    }
  }

  if (b) {
    permlin::MultilinearFunctor ah =
        assemble_multilinear(*b->target, srcs, tgt, ord);
    permlin::MultilinearTransformation tb =
        p_transformation(*b, ag, ah, srcs, tgt, ord);
    r.merge(permlin::validate_mltrans(tb));
    gamma::Modification ba = gamma::compose_modifications(*b, a);
    permlin::MultilinearTransformation tba =
        p_transformation(ba, af, ah, srcs, tgt, ord);
    for (Odometer o(orad); !o.done; o.advance()) {
      int lhs = tba.component(o.digits);
      int c1 = ta.component(o.digits), c2 = tb.component(o.digits);
      int rhs = (c1 < 0 || c2 < 0) ? -1 : tc.compose(c2, c1);
      if (lhs < 0 && rhs < 0) {
        r.skip();
        continue;
      }
      r.require_lazy(lhs >= 0 && lhs == rhs, "composite image",
                     [&] { return "(" + join_ints(o.digits) + ")"; });
    }
  }
  return r;
}

}  // namespace invk::pmulti
