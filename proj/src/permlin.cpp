#include "invk/permlin.hpp"

#include <algorithm>

#include "invk/fskel.hpp"

namespace invk::permlin {

namespace {

int guarded_compose(const cat::FiniteCategory& c, int g, int f) {
  if (g < 0 || f < 0) return -1;
  return c.compose(g, f);
}

}  // namespace

Report validate_permutative(const PermCategory& p) {
  Report r;
  r.suite = "permutative";
  const auto& c = p.c;
  const int no = c.num_objects();
  const int nm = c.num_morphisms();
  if (p.unit < 0 || p.unit >= no) {
    r.add("unit", "unit object missing");
    return r;
  }
  auto oid = [&](int a) { return c.objects[a]; };
  auto mid = [&](int f) { return c.morphisms[f].id; };

  for (int a = 0; a < no; ++a) {
    r.require(p.tobj(p.unit, a) == a, "strict unit", "e*" + oid(a));
    r.require(p.tobj(a, p.unit) == a, "strict unit", oid(a) + "*e");
  }
  int ide = c.identity[p.unit];
  for (int f = 0; f < nm; ++f) {
    r.require(p.tmor(ide, f) == f, "strict unit", "1_e*" + mid(f));
    r.require(p.tmor(f, ide) == f, "strict unit", mid(f) + "*1_e");
  }

  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b) {
      int ab = p.tobj(a, b);
      for (int d = 0; d < no; ++d) {
        int bd = p.tobj(b, d);
        int l = ab >= 0 ? p.tobj(ab, d) : -1;
        int rr = bd >= 0 ? p.tobj(a, bd) : -1;
        if (l < 0 && rr < 0) {
          r.skip();
          continue;
        }
        auto w = [&] { return oid(a) + "," + oid(b) + "," + oid(d); };
        if (l < 0 || rr < 0)
          r.require_lazy(false, "associativity closure", w);
        else
          r.require_lazy(l == rr, "strict associativity", w);
      }
    }

  // Identities, braiding frame, involution, unit braiding per closed pair.
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b) {
      int ab = p.tobj(a, b);
      if (ab < 0) {
        r.skip(3);
        continue;
      }
      r.require(p.tmor(c.identity[a], c.identity[b]) == c.identity[ab],
                "tensor of identities", oid(a) + "," + oid(b));
      int ba = p.tobj(b, a);
      int br = p.braid(a, b);
      if (ba < 0 || br < 0 || p.braid(b, a) < 0) {
        r.require(false, "braiding closure", oid(a) + "," + oid(b));
        r.skip();
        continue;
      }
      r.require(c.src(br) == ab && c.tgt(br) == ba, "braiding frame",
                oid(a) + "," + oid(b));
      r.require(c.compose(p.braid(b, a), br) == c.identity[ab],
                "braiding involution", oid(a) + "," + oid(b));
    }
  for (int a = 0; a < no; ++a) {
    r.require(p.braid(a, p.unit) == c.identity[a], "unit braiding",
              oid(a) + ",e");
    r.require(p.braid(p.unit, a) == c.identity[a], "unit braiding",
              "e," + oid(a));
  }

  // Defined morphism pairs drive the quadratic checks.
  std::vector<std::pair<int, int>> pairs;
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (p.tmor(f, g) >= 0) pairs.emplace_back(f, g);

  for (auto [f, g] : pairs) {
    int t = p.tmor(f, g);
    int so = p.tobj(c.src(f), c.src(g));
    int to = p.tobj(c.tgt(f), c.tgt(g));
    auto w = [&] { return mid(f) + "," + mid(g); };
    r.require_lazy(so >= 0 && to >= 0 && c.src(t) == so && c.tgt(t) == to,
                   "tensor frame", w);
    // Naturality of the braiding.
    int lhs = guarded_compose(c, p.braid(c.tgt(f), c.tgt(g)), t);
    int rhs = guarded_compose(c, p.tmor(g, f), p.braid(c.src(f), c.src(g)));
    r.require_lazy(lhs >= 0 && lhs == rhs, "braiding naturality", w);
  }

  for (auto [f, g] : pairs) {
    int t = p.tmor(f, g);
    for (int f2 : c.mors_from[c.tgt(f)])
      for (int g2 : c.mors_from[c.tgt(g)]) {
        int t2 = p.tmor(f2, g2);
        if (t2 < 0) {
          r.skip();
          continue;
        }
        int lhs = c.compose(t2, t);
        int rhs = p.tmor(c.compose(f2, f), c.compose(g2, g));
        r.require_lazy(lhs >= 0 && lhs == rhs, "tensor preserves composition",
                       [&] {
                         return mid(f) + "," + mid(g) + ";" + mid(f2) + "," +
                                mid(g2);
                       });
      }
  }

  // Morphism-level associativity over fully closed triples.
  for (auto [f, g] : pairs) {
    int fg = p.tmor(f, g);
    for (int h = 0; h < nm; ++h) {
      int gh = p.tmor(g, h);
      int l = p.tmor(fg, h);
      int rr = gh >= 0 ? p.tmor(f, gh) : -1;
      if (l < 0 && rr < 0) {
        r.skip();
        continue;
      }
      auto w = [&] { return mid(f) + "," + mid(g) + "," + mid(h); };
      if (l < 0 || rr < 0)
        r.require_lazy(false, "associativity closure", w);
      else
        r.require_lazy(l == rr, "strict associativity", w);
    }
  }

  // Hexagon over closed object triples.
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b)
      for (int d = 0; d < no; ++d) {
        int bd = p.tobj(b, d);
        int ab = p.tobj(a, b);
        if (bd < 0 || ab < 0 || p.tobj(a, bd) < 0 || p.tobj(a, d) < 0) {
          r.skip();
          continue;
        }
        int lhs = p.braid(a, bd);
        int step1 = p.tmor(p.braid(a, b), c.identity[d]);
        int step2 = p.tmor(c.identity[b], p.braid(a, d));
        int rhs = guarded_compose(c, step2, step1);
        r.require_lazy(lhs >= 0 && lhs == rhs, "hexagon",
                       [&] { return oid(a) + "," + oid(b) + "," + oid(d); });
      }
  return r;
}

PermCategory fskel_perm(int max_level) {
  PermCategory p;
  auto& c = p.c;
  const int n = max_level;
  for (int a = 0; a <= n; ++a) c.objects.push_back("<" + std::to_string(a) + ">");
  // Morphism index: offset per (dom, cod) plus the value-table rank.
  std::vector<int> offset(static_cast<std::size_t>(n + 1) * (n + 1));
  std::vector<fskel::PtdMap> maps;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      offset[static_cast<std::size_t>(a) * (n + 1) + b] =
          static_cast<int>(maps.size());
      for (auto& f : fskel::hom_set(a, b)) {
        c.morphisms.push_back({"<" + std::to_string(a) + ">" + ">" + "<" +
                                   std::to_string(b) + ">#" +
                                   std::to_string(maps.size() -
                                                  offset[static_cast<std::size_t>(a) *
                                                             (n + 1) +
                                                         b]),
                               a, b});
        maps.push_back(f);
      }
    }
  auto index_of = [&](const fskel::PtdMap& f) {
    int rank = 0;
    for (int v : f.values) rank = rank * (f.cod + 1) + v;
    return offset[static_cast<std::size_t>(f.dom) * (n + 1) + f.cod] + rank;
  };
  int nm = static_cast<int>(maps.size());
  c.identity.resize(n + 1);
  for (int a = 0; a <= n; ++a) c.identity[a] = index_of(fskel::id_ptd(a));
  cat::reindex(c);
  c.comp_dense.assign(static_cast<std::size_t>(nm) * nm, -1);
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (maps[f].cod == maps[g].dom)
        c.comp_dense[static_cast<std::size_t>(g) * nm + f] =
            index_of(fskel::compose_ptd(maps[g], maps[f]));

  p.unit = 1 <= n ? 1 : -1;
  int no = n + 1;
  p.tensor_obj.assign(static_cast<std::size_t>(no) * no, -1);
  p.braiding.assign(static_cast<std::size_t>(no) * no, -1);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      if (a * b <= n) {
        p.tensor_obj[static_cast<std::size_t>(a) * no + b] = a * b;
        p.braiding[static_cast<std::size_t>(a) * no + b] =
            index_of(fskel::braid(a, b));
      }
  p.tensor_mor.assign(static_cast<std::size_t>(nm) * nm, -1);
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (maps[f].dom * maps[g].dom > n || maps[f].cod * maps[g].cod > n)
        continue;
      p.tensor_mor[static_cast<std::size_t>(f) * nm + g] =
          index_of(fskel::smash_map(maps[f], maps[g]));
    }
  return p;
}

MultilinearFunctor identity_multilinear(const PermCategory& c) {
  MultilinearFunctor f;
  f.src = {&c};
  f.tgt = &c;
  f.obj = [](std::span<const int> u) { return u[0]; };
  f.mor = [](std::span<const int> u) { return u[0]; };
  f.constraint = [&c](int, std::span<const int> u, int e) {
    int ab = c.tobj(u[0], e);
    return ab < 0 ? -1 : c.c.identity[ab];
  };
  return f;
}

namespace {

struct Grids {
  std::vector<int> obj_radix, mor_radix;
};

Grids grids_of(const MultilinearFunctor& f) {
  Grids g;
  for (const auto* s : f.src) {
    g.obj_radix.push_back(s->c.num_objects());
    g.mor_radix.push_back(s->c.num_morphisms());
  }
  return g;
}

std::string tuple_witness(std::span<const int> t) {
  return "(" + join_ints(t) + ")";
}

}  // namespace

Report validate_multilinear(const MultilinearFunctor& f) {
  Report r;
  r.suite = "multilinear";
  const int k = f.arity();
  if (!f.tgt) {
    r.add("frame", "missing target");
    return r;
  }
  const auto& tc = f.tgt->c;
  if (k == 0) {
    int v = f.obj({});
    r.require(v >= 0 && v < tc.num_objects(), "value", std::to_string(v));
    return r;
  }
  Grids g = grids_of(f);
  if (checked_product(g.mor_radix) > (1 << 26))
    throw InputError("validate_multilinear: morphism grid too large");

  // Carrier: object values in range.
  for (Odometer o(g.obj_radix); !o.done; o.advance()) {
    int v = f.obj(o.digits);
    if (v < 0) {
      r.skip();
      continue;
    }
    r.require(v < tc.num_objects(), "object value", tuple_witness(o.digits));
  }
  // Carrier: identities.
  {
    std::vector<int> ids(k);
    for (Odometer o(g.obj_radix); !o.done; o.advance()) {
      int v = f.obj(o.digits);
      if (v < 0) {
        r.skip();
        continue;
      }
      for (int i = 0; i < k; ++i)
        ids[i] = f.src[i]->c.identity[o.digits[i]];
      r.require(f.mor(ids) == tc.identity[v], "preserves identities",
                tuple_witness(o.digits));
    }
  }
  // Carrier: morphism frames.
  {
    std::vector<int> s(k), t(k);
    for (Odometer o(g.mor_radix); !o.done; o.advance()) {
      int v = f.mor(o.digits);
      if (v < 0) {
        r.skip();
        continue;
      }
      for (int i = 0; i < k; ++i) {
        s[i] = f.src[i]->c.src(o.digits[i]);
        t[i] = f.src[i]->c.tgt(o.digits[i]);
      }
      r.require_lazy(v < tc.num_morphisms() && tc.src(v) == f.obj(s) &&
                         tc.tgt(v) == f.obj(t),
                     "morphism frame", [&] { return tuple_witness(o.digits); });
    }
  }

  // Constraints: frame and invertibility (the strong property).
  {
    std::vector<int> t2(k), t3(k);
    for (int i = 0; i < k; ++i)
      for (Odometer o(g.obj_radix); !o.done; o.advance())
        for (int e = 0; e < g.obj_radix[i]; ++e) {
          int con = f.constraint(i, o.digits, e);
          if (con < 0) {
            r.skip();
            continue;
          }
          t2 = o.digits;
          t2[i] = e;
          int a = f.obj(o.digits), b = f.obj(t2);
          int ab = a >= 0 && b >= 0 ? f.tgt->tobj(a, b) : -1;
          int m = f.src[i]->tobj(o.digits[i], e);
          t3 = o.digits;
          int big = -1;
          if (m >= 0) {
            t3[i] = m;
            big = f.obj(t3);
          }
          auto w = [&] {
            return "slot " + std::to_string(i + 1) + " " +
                   tuple_witness(o.digits) + "+" + std::to_string(e);
          };
          r.require_lazy(ab >= 0 && big >= 0 && tc.src(con) == ab &&
                             tc.tgt(con) == big,
                         "constraint frame", w);
          r.require_lazy(tc.inverse(con) >= 0, "constraint invertible", w);
        }
  }

  // Unity: a unit slot collapses values.
  for (int j = 0; j < k; ++j) {
    int e = f.src[j]->unit;
    std::vector<int> rad = g.obj_radix;
    rad[j] = 1;
    std::vector<int> t(k);
    for (Odometer o(rad); !o.done; o.advance()) {
      t = o.digits;
      t[j] = e;
      int v = f.obj(t);
      if (v < 0) {
        r.skip();
        continue;
      }
      r.require(v == f.tgt->unit, "unity on objects",
                "slot " + std::to_string(j + 1) + " " + tuple_witness(t));
    }
    std::vector<int> radm = g.mor_radix;
    radm[j] = 1;
    for (Odometer o(radm); !o.done; o.advance()) {
      t = o.digits;
      t[j] = f.src[j]->c.identity[e];
      int v = f.mor(t);
      if (v < 0) {
        r.skip();
        continue;
      }
      r.require(v == tc.identity[f.tgt->unit], "unity on morphisms",
                "slot " + std::to_string(j + 1) + " " + tuple_witness(t));
    }
  }

  // Constraint unity: unit in either doubled position gives an identity.
  {
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) {
      int e = f.src[i]->unit;
      for (Odometer o(g.obj_radix); !o.done; o.advance()) {
        int con = f.constraint(i, o.digits, e);
        if (con >= 0)
          r.require_lazy(tc.src(con) == tc.tgt(con) &&
                             con == tc.identity[tc.src(con)],
                         "constraint unity", [&] {
                           return "slot " + std::to_string(i + 1) + " " +
                                  tuple_witness(o.digits) + "+e";
                         });
        else
          r.skip();
        t = o.digits;
        int xi = t[i];
        t[i] = e;
        int con2 = f.constraint(i, t, xi);
        if (con2 >= 0)
          r.require_lazy(tc.src(con2) == tc.tgt(con2) &&
                             con2 == tc.identity[tc.src(con2)],
                         "constraint unity", [&] {
                           return "slot " + std::to_string(i + 1) + " " +
                                  tuple_witness(t) + "+" + std::to_string(xi);
                         });
        else
          r.skip();
      }
    }
  }

  // Constraint associativity.
  {
    std::vector<int> t2(k), t12(k);
    for (int i = 0; i < k; ++i)
      for (Odometer o(g.obj_radix); !o.done; o.advance())
        for (int e1 = 0; e1 < g.obj_radix[i]; ++e1) {
          int m12 = f.src[i]->tobj(o.digits[i], e1);
          int con1 = f.constraint(i, o.digits, e1);
          for (int e2 = 0; e2 < g.obj_radix[i]; ++e2) {
            t2 = o.digits;
            t2[i] = e2;
            int cC = f.obj(t2);
            int a = f.obj(o.digits);
            int m23 = f.src[i]->tobj(e1, e2);
            int lhs = -1, rhs = -1;
            if (con1 >= 0 && m12 >= 0 && cC >= 0) {
              t12 = o.digits;
              t12[i] = m12;
              int outer = f.constraint(i, t12, e2);
              int step = f.tgt->tmor(con1, tc.identity[cC]);
              lhs = guarded_compose(tc, outer, step);
            }
            if (m23 >= 0 && a >= 0) {
              t2[i] = e1;
              int inner = f.constraint(i, t2, e2);
              int step = inner >= 0 ? f.tgt->tmor(tc.identity[a], inner) : -1;
              int outer = f.constraint(i, o.digits, m23);
              rhs = guarded_compose(tc, outer, step);
            }
            if (lhs < 0 && rhs < 0) {
              r.skip();
              continue;
            }
            r.require_lazy(lhs >= 0 && lhs == rhs, "constraint associativity",
                           [&] {
                             return "slot " + std::to_string(i + 1) + " " +
                                    tuple_witness(o.digits) + "+" +
                                    std::to_string(e1) + "+" +
                                    std::to_string(e2);
                           });
          }
        }
  }

  // Constraint symmetry.
  {
    std::vector<int> t2(k), braids(k);
    for (int i = 0; i < k; ++i)
      for (Odometer o(g.obj_radix); !o.done; o.advance())
        for (int e = 0; e < g.obj_radix[i]; ++e) {
          int con = f.constraint(i, o.digits, e);
          if (con < 0) {
            r.skip();
            continue;
          }
          t2 = o.digits;
          t2[i] = e;
          int a = f.obj(o.digits), b = f.obj(t2);
          int con_sw = f.constraint(i, t2, o.digits[i]);
          for (int l = 0; l < k; ++l)
            braids[l] = f.src[l]->c.identity[o.digits[l]];
          braids[i] = f.src[i]->braid(o.digits[i], e);
          int lhs = braids[i] >= 0
                        ? guarded_compose(tc, f.mor(braids), con)
                        : -1;
          int rhs = a >= 0 && b >= 0
                        ? guarded_compose(tc, con_sw, f.tgt->braid(a, b))
                        : -1;
          r.require_lazy(lhs >= 0 && lhs == rhs, "constraint symmetry", [&] {
            return "slot " + std::to_string(i + 1) + " " +
                   tuple_witness(o.digits) + "+" + std::to_string(e);
          });
        }
  }

  // Constraint 2-by-2 for ordered slot pairs.
  {
    std::vector<int> tB(k), tC(k), tD(k), tMi(k), tMj(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        for (Odometer o(g.obj_radix); !o.done; o.advance())
          for (int ei = 0; ei < g.obj_radix[i]; ++ei) {
            int mi = f.src[i]->tobj(o.digits[i], ei);
            if (mi < 0) {
              r.skip(static_cast<std::uint64_t>(g.obj_radix[j]));
              continue;
            }
            for (int ej = 0; ej < g.obj_radix[j]; ++ej) {
              int mj = f.src[j]->tobj(o.digits[j], ej);
              tB = o.digits;
              tB[i] = ei;
              tC = o.digits;
              tC[j] = ej;
              tD = tB;
              tD[j] = ej;
              int A = f.obj(o.digits), B = f.obj(tB), C = f.obj(tC),
                  D = f.obj(tD);
              int lhs = -1, rhs = -1;
              if (mj >= 0 && A >= 0 && B >= 0 && C >= 0 && D >= 0) {
                tMi = o.digits;
                tMi[i] = mi;
                int l1 = f.tgt->tmor(f.constraint(i, o.digits, ei),
                                     f.constraint(i, tC, ei));
                int l2 = f.constraint(j, tMi, ej);
                lhs = guarded_compose(tc, l2, l1);

                tMj = o.digits;
                tMj[j] = mj;
                int mix1 = f.tgt->braid(B, C);
                int mixA = mix1 >= 0 ? f.tgt->tmor(tc.identity[A], mix1) : -1;
                int mix = mixA >= 0 && D >= 0
                              ? f.tgt->tmor(mixA, tc.identity[D])
                              : -1;
                int r1 = f.tgt->tmor(f.constraint(j, o.digits, ej),
                                     f.constraint(j, tB, ej));
                int r2 = f.constraint(i, tMj, ei);
                rhs = guarded_compose(tc, r2, guarded_compose(tc, r1, mix));
              }
              if (lhs < 0 && rhs < 0) {
                r.skip();
                continue;
              }
              r.require_lazy(lhs >= 0 && lhs == rhs, "constraint 2-by-2", [&] {
                return "slots " + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + " " + tuple_witness(o.digits) +
                       "+" + std::to_string(ei) + "+" + std::to_string(ej);
              });
            }
          }
      }
  }
  return r;
}

Report check_functoriality(const MultilinearFunctor& f,
                           std::span<const int> obj_weight, int max_weight) {
  Report r;
  r.suite = "functoriality";
  const int k = f.arity();
  const auto& tc = f.tgt->c;
  for (const auto* s : f.src)
    if (static_cast<int>(obj_weight.size()) < s->c.num_objects())
      throw InputError("check_functoriality: weight table too small");
  auto small = [&](int obj) { return obj_weight[obj] <= max_weight; };

  std::vector<std::vector<int>> first(k);
  for (int i = 0; i < k; ++i)
    for (int m = 0; m < f.src[i]->c.num_morphisms(); ++m)
      if (small(f.src[i]->c.src(m)) && small(f.src[i]->c.tgt(m)))
        first[i].push_back(m);

  std::vector<int> radix(k);
  for (int i = 0; i < k; ++i) radix[i] = static_cast<int>(first[i].size());
  std::vector<int> m1(k), m2(k), comp(k);
  for (Odometer o(radix); !o.done; o.advance()) {
    for (int i = 0; i < k; ++i) m1[i] = first[i][o.digits[i]];
    int v1 = f.mor(m1);
    // Continuations per slot: morphisms out of the middle object staying
    // within the weight bound.
    std::vector<std::vector<int>> next(k);
    std::vector<int> radix2(k);
    for (int i = 0; i < k; ++i) {
      for (int m : f.src[i]->c.mors_from[f.src[i]->c.tgt(m1[i])])
        if (small(f.src[i]->c.tgt(m))) next[i].push_back(m);
      radix2[i] = static_cast<int>(next[i].size());
    }
    for (Odometer o2(radix2); !o2.done; o2.advance()) {
      for (int i = 0; i < k; ++i) {
        m2[i] = next[i][o2.digits[i]];
        comp[i] = f.src[i]->c.compose(m2[i], m1[i]);
      }
      int v2 = f.mor(m2);
      int vc = f.mor(comp);
      if (v1 < 0 || v2 < 0) {
        r.skip();
        continue;
      }
      r.require_lazy(
          vc >= 0 && vc == tc.compose(v2, v1), "preserves composition",
          [&] { return tuple_witness(m1) + ";" + tuple_witness(m2); });
    }
  }
  return r;
}

Report validate_mltrans(const MultilinearTransformation& t) {
  Report r;
  r.suite = "mltrans";
  if (!t.source || !t.target) {
    r.add("frame", "missing source or target");
    return r;
  }
  const auto& fs = *t.source;
  const auto& ft = *t.target;
  const int k = fs.arity();
  if (ft.arity() != k || fs.tgt != ft.tgt || fs.src != ft.src) {
    r.add("frame", "source and target are not parallel");
    return r;
  }
  const auto& tc = fs.tgt->c;
  if (k == 0) {
    int v = t.component({});
    int a = fs.obj({}), b = ft.obj({});
    r.require(v >= 0 && a >= 0 && b >= 0 && tc.src(v) == a && tc.tgt(v) == b,
              "component frame", "()");
    return r;
  }
  Grids g = grids_of(fs);

  for (Odometer o(g.obj_radix); !o.done; o.advance()) {
    int a = fs.obj(o.digits), b = ft.obj(o.digits);
    int v = t.component(o.digits);
    if (a < 0 || b < 0) {
      r.skip();
      continue;
    }
    r.require(v >= 0 && tc.src(v) == a && tc.tgt(v) == b, "component frame",
              tuple_witness(o.digits));
  }

  // A unit slot forces an identity component.
  for (int j = 0; j < k; ++j) {
    std::vector<int> rad = g.obj_radix;
    rad[j] = 1;
    std::vector<int> u(k);
    for (Odometer o(rad); !o.done; o.advance()) {
      u = o.digits;
      u[j] = fs.src[j]->unit;
      int v = t.component(u);
      if (v < 0) {
        r.skip();
        continue;
      }
      r.require(tc.src(v) == tc.tgt(v) && v == tc.identity[tc.src(v)],
                "unit component",
                "slot " + std::to_string(j + 1) + " " + tuple_witness(u));
    }
  }

  // Naturality.
  {
    std::vector<int> s(k), u(k);
    for (Odometer o(g.mor_radix); !o.done; o.advance()) {
      int mf = fs.mor(o.digits), mg = ft.mor(o.digits);
      if (mf < 0 || mg < 0) {
        r.skip();
        continue;
      }
      for (int i = 0; i < k; ++i) {
        s[i] = fs.src[i]->c.src(o.digits[i]);
        u[i] = fs.src[i]->c.tgt(o.digits[i]);
      }
      int lhs = guarded_compose(tc, t.component(u), mf);
      int rhs = guarded_compose(tc, mg, t.component(s));
      r.require_lazy(lhs >= 0 && lhs == rhs, "naturality",
                     [&] { return tuple_witness(o.digits); });
    }
  }

  // Compatibility with the linearity constraints.
  {
    std::vector<int> t2(k), t3(k);
    for (int i = 0; i < k; ++i)
      for (Odometer o(g.obj_radix); !o.done; o.advance())
        for (int e = 0; e < g.obj_radix[i]; ++e) {
          int cs = fs.constraint(i, o.digits, e);
          int ct = ft.constraint(i, o.digits, e);
          int m = fs.src[i]->tobj(o.digits[i], e);
          if (cs < 0 || ct < 0 || m < 0) {
            r.skip();
            continue;
          }
          t2 = o.digits;
          t2[i] = e;
          t3 = o.digits;
          t3[i] = m;
          int lhs = guarded_compose(tc, t.component(t3), cs);
          int step = fs.tgt->tmor(t.component(o.digits), t.component(t2));
          int rhs = guarded_compose(tc, ct, step);
          r.require_lazy(lhs >= 0 && lhs == rhs, "constraint square", [&] {
            return "slot " + std::to_string(i + 1) + " " +
                   tuple_witness(o.digits) + "+" + std::to_string(e);
          });
        }
  }
  return r;
}

MultilinearFunctor compose_multilinear(
    const MultilinearFunctor& g, std::vector<const MultilinearFunctor*> fs) {
  if (static_cast<int>(fs.size()) != g.arity())
    throw InputError("compose_multilinear: arity mismatch");
  for (int i = 0; i < g.arity(); ++i)
    if (fs[i]->tgt != g.src[i])
      throw InputError("compose_multilinear: slot " + std::to_string(i + 1) +
                       " target mismatch");
  MultilinearFunctor h;
  h.tgt = g.tgt;
  std::vector<int> offset{0};
  for (const auto* f : fs) {
    for (const auto* s : f->src) h.src.push_back(s);
    offset.push_back(offset.back() + f->arity());
  }
  const auto* gp = &g;
  auto mids_obj = [gp, fs, offset](std::span<const int> u,
                                   std::vector<int>& mid) {
    for (int i = 0; i < gp->arity(); ++i) {
      mid[i] = fs[i]->obj(u.subspan(offset[i], offset[i + 1] - offset[i]));
      if (mid[i] < 0) return false;
    }
    return true;
  };
  h.obj = [gp, mids_obj](std::span<const int> u) {
    std::vector<int> mid(gp->arity());
    if (!mids_obj(u, mid)) return -1;
    return gp->obj(mid);
  };
  h.mor = [gp, fs, offset](std::span<const int> u) {
    std::vector<int> mid(gp->arity());
    for (int i = 0; i < gp->arity(); ++i) {
      mid[i] = fs[i]->mor(u.subspan(offset[i], offset[i + 1] - offset[i]));
      if (mid[i] < 0) return -1;
    }
    return gp->mor(mid);
  };
  h.constraint = [gp, fs, offset, mids_obj](int slot, std::span<const int> u,
                                            int extra) {
    int i = 0;
    while (slot >= offset[i + 1]) ++i;
    int j = slot - offset[i];
    std::vector<int> mid(gp->arity());
    if (!mids_obj(u, mid)) return -1;
    std::vector<int> chunk(u.begin() + offset[i], u.begin() + offset[i + 1]);
    int con2 = fs[i]->constraint(j, chunk, extra);
    chunk[j] = extra;
    int midB = fs[i]->obj(chunk);
    if (midB < 0 || con2 < 0) return -1;
    int con1 = gp->constraint(i, mid, midB);
    if (con1 < 0) return -1;
    std::vector<int> mortuple(gp->arity());
    for (int a = 0; a < gp->arity(); ++a)
      mortuple[a] = gp->src[a]->c.identity[mid[a]];
    mortuple[i] = con2;
    int gcon2 = gp->mor(mortuple);
    return guarded_compose(gp->tgt->c, gcon2, con1);
  };
  return h;
}

MultilinearFunctor sigma_act_multilinear(const MultilinearFunctor& f,
                                         std::vector<int> sigma) {
  if (static_cast<int>(sigma.size()) != f.arity() || !is_permutation0(sigma))
    throw InputError("sigma_act_multilinear: not a permutation");
  std::vector<int> inv = invert_permutation0(sigma);
  MultilinearFunctor h;
  h.tgt = f.tgt;
  for (int i = 0; i < f.arity(); ++i) h.src.push_back(f.src[sigma[i]]);
  const auto* fp = &f;
  auto reorder = [inv](std::span<const int> u) {
    std::vector<int> v(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) v[j] = u[inv[j]];
    return v;
  };
  h.obj = [fp, reorder](std::span<const int> u) { return fp->obj(reorder(u)); };
  h.mor = [fp, reorder](std::span<const int> u) { return fp->mor(reorder(u)); };
  h.constraint = [fp, reorder, sigma](int i, std::span<const int> u, int e) {
    return fp->constraint(sigma[i], reorder(u), e);
  };
  return h;
}

}  // namespace invk::permlin
