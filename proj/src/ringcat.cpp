#include "invk/ringcat.hpp"

#include <array>

#include "invk/fskel.hpp"

namespace invk::ringcat {

GammaMonoid em_mult_monoid(gamma::GammaPtr x, const gamma::CommMonoid& base,
                           std::function<int(int, int)> times, int one) {
  const int sz = base.size();
  auto decode = [sz](int idx, int len, std::vector<int>& out) {
    out.assign(len, 0);
    for (int i = len; i-- > 0;) {
      out[i] = idx % sz;
      idx /= sz;
    }
  };
  auto fn = [sz, times, decode](std::span<const int> p,
                                std::span<const int> t) {
    const int m = p[0], n = p[1];
    std::vector<int> u, v, w(static_cast<std::size_t>(m) * n, 0);
    decode(t[0], m, u);
    decode(t[1], n, v);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j)
        w[fskel::smash_pos(n, i, j) - 1] = times(u[i - 1], v[j - 1]);
    std::size_t r = 0;
    for (int d : w) r = r * sz + d;
    return static_cast<int>(r);
  };
  GammaMonoid g;
  g.x = x;
  g.mu = gamma::make_multimorphism({x, x}, x, fn, fn);
  g.eta = gamma::make_zero_ary(x, one);
  return g;
}

GammaMonoid bool_mult_monoid(int truncation) {
  return em_mult_monoid(
      gamma::em_gamma(gamma::bool_monoid(), truncation), gamma::bool_monoid(),
      [](int a, int b) { return a & b; }, 1);
}

GammaMonoid z2_mult_monoid(int truncation) {
  return em_mult_monoid(
      gamma::em_gamma(gamma::z2_monoid(), truncation), gamma::z2_monoid(),
      [](int a, int b) { return a & b; }, 1);
}

GammaMonoid j_mult_monoid(int truncation) {
  gamma::GammaPtr x = gamma::unit_gamma(truncation);
  auto fn = [](std::span<const int> p, std::span<const int> t) {
    return fskel::smash_pos(p[1], t[0], t[1]);
  };
  GammaMonoid g;
  g.x = x;
  g.mu = gamma::make_multimorphism({x, x}, x, fn, fn);
  g.eta = gamma::make_zero_ary(x, 1);
  return g;
}

Report validate_gamma_monoid(const GammaMonoid& m) {
  Report r;
  r.suite = "gamma-monoid";
  if (!m.x || m.mu.arity() != 2 || m.eta.arity() != 0) {
    r.add("frame", "mu must be 2-ary and eta 0-ary");
    return r;
  }
  if (m.mu.sources[0] != m.x || m.mu.sources[1] != m.x ||
      m.mu.target != m.x || m.eta.target != m.x) {
    r.add("frame", "mu and eta must live on x");
    return r;
  }
  r.merge(gamma::validate_multimorphism(m.mu));
  r.merge(gamma::validate_multimorphism(m.eta));
  if (!r.ok()) return r;

  gamma::Multimorphism id = gamma::identity_multi(m.x);
  {
    std::array<const gamma::Multimorphism*, 2> l{&m.mu, &id}, rr{&id, &m.mu};
    r.require(gamma::equal_multi(gamma::compose_multi(m.mu, l),
                                 gamma::compose_multi(m.mu, rr)),
              "associativity", "mu(mu,1) vs mu(1,mu)");
  }
  {
    std::array<const gamma::Multimorphism*, 2> l{&m.eta, &id}, rr{&id, &m.eta};
    r.require(gamma::equal_multi(gamma::compose_multi(m.mu, l), id),
              "left unit", "mu(eta,1)");
    r.require(gamma::equal_multi(gamma::compose_multi(m.mu, rr), id),
              "right unit", "mu(1,eta)");
  }
  return r;
}

RingCategory derive_ring(const GammaMonoid& m, const groth::PcatResult& pc,
                         Ordering ord) {
  RingCategory rc;
  rc.add = &pc.perm;
  std::vector<const groth::PcatResult*> srcs{&pc, &pc};
  rc.mult = std::make_shared<const permlin::MultilinearFunctor>(
      pmulti::assemble_multilinear(m.mu, srcs, pc, ord));
  rc.one = pc.find_obj(pmulti::p_zero_ary(*m.eta.target, m.eta.value));
  if (rc.one < 0) throw InputError("derive_ring: unit object out of bound");
  auto f = rc.mult;
  rc.tobj = [f](int a, int b) {
    if (a < 0 || b < 0) return -1;
    std::array<int, 2> t{a, b};
    return f->obj(t);
  };
  rc.tmor = [f](int a, int b) {
    if (a < 0 || b < 0) return -1;
    std::array<int, 2> t{a, b};
    return f->mor(t);
  };
  rc.fal = [f](int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) return -1;
    std::array<int, 2> t{a, c};
    return f->constraint(0, t, b);
  };
  rc.far = [f](int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) return -1;
    std::array<int, 2> t{a, b};
    return f->constraint(1, t, c);
  };
  return rc;
}

bool RingReport::ok() const {
  if (!extra.ok()) return false;
  for (const auto& [name, rep] : axioms)
    if (!rep.ok()) return false;
  return true;
}

double RingReport::coverage() const {
  std::uint64_t ch = extra.checked, tot = extra.total;
  for (const auto& [name, rep] : axioms) {
    ch += rep.checked;
    tot += rep.total;
  }
  return tot == 0 ? 1.0 : static_cast<double>(ch) / static_cast<double>(tot);
}

RingReport validate_ring(const RingCategory& rc) {
  RingReport out;
  const auto& add = *rc.add;
  const auto& cc = add.c;
  const int no = cc.num_objects();
  const int nm = cc.num_morphisms();
  const int zero = add.unit;
  const int zid = cc.identity[zero];
  auto oid = [&](int a) { return cc.objects[a]; };
  auto idm = [&](int a) { return a < 0 ? -1 : cc.identity[a]; };
  auto cmp = [&](int g, int f) { return (g < 0 || f < 0) ? -1 : cc.compose(g, f); };
  auto aplus = [&](int a, int b) { return add.tobj(a, b); };
  auto amor = [&](int f, int g) { return add.tmor(f, g); };
  auto axi = [&](int a, int b) { return add.braid(a, b); };

  {
    Report& ex = out.extra;
    ex.suite = "ring-extra";
    for (int a = 0; a < no; ++a) {
      ex.require(rc.tobj(rc.one, a) == a, "multiplicative unit",
                 "1*" + oid(a));
      ex.require(rc.tobj(a, rc.one) == a, "multiplicative unit",
                 oid(a) + "*1");
    }
    int uid = cc.identity[rc.one];
    for (int f = 0; f < nm; ++f) {
      ex.require(rc.tmor(uid, f) == f, "multiplicative unit", "1_1*mor");
      ex.require(rc.tmor(f, uid) == f, "multiplicative unit", "mor*1_1");
    }
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b) {
        int ab = rc.tobj(a, b);
        for (int d = 0; d < no; ++d) {
          int bd = rc.tobj(b, d);
          int l = ab >= 0 ? rc.tobj(ab, d) : -1;
          int rr = bd >= 0 ? rc.tobj(a, bd) : -1;
          if (l < 0 || rr < 0) {
            ex.skip();
            continue;
          }
          ex.require_lazy(l == rr, "multiplicative associativity",
                          [&] { return oid(a) + "," + oid(b) + "," + oid(d); });
        }
      }
    // Frames of the factorization morphisms.
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b)
        for (int d = 0; d < no; ++d) {
          auto w = [&] { return oid(a) + "," + oid(b) + "," + oid(d); };
          int l = rc.fal(a, b, d);
          if (l >= 0) {
            int s = aplus(rc.tobj(a, d), rc.tobj(b, d));
            int t = rc.tobj(aplus(a, b), d);
            ex.require_lazy(
                s >= 0 && t >= 0 && cc.src(l) == s && cc.tgt(l) == t,
                "fal frame", w);
          } else {
            ex.skip();
          }
          int r2 = rc.far(a, b, d);
          if (r2 >= 0) {
            int s = aplus(rc.tobj(a, b), rc.tobj(a, d));
            int t = rc.tobj(a, aplus(b, d));
            ex.require_lazy(
                s >= 0 && t >= 0 && cc.src(r2) == s && cc.tgt(r2) == t,
                "far frame", w);
          } else {
            ex.skip();
          }
        }
  }

  {
    Report a1;
    a1.suite = "multiplicative_zero";
    for (int a = 0; a < no; ++a) {
      a1.require(rc.tobj(zero, a) == zero, "zero object", "0*" + oid(a));
      a1.require(rc.tobj(a, zero) == zero, "zero object", oid(a) + "*0");
    }
    for (int f = 0; f < nm; ++f) {
      a1.require(rc.tmor(zid, f) == zid, "zero morphism", "1_0*mor");
      a1.require(rc.tmor(f, zid) == zid, "zero morphism", "mor*1_0");
    }
    out.axioms["multiplicative_zero"] = std::move(a1);
  }

  {
    Report a2;
    a2.suite = "zero_factorization";
    auto check_id = [&](Report& rep, int got, int obj, const char* law,
                        const std::string& w) {
      if (obj < 0 || got < 0) {
        rep.skip();
        return;
      }
      rep.require(got == idm(obj), law, w);
    };
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b) {
        std::string w = oid(a) + "," + oid(b);
        check_id(a2, rc.fal(zero, a, b), rc.tobj(a, b), "fal zero first", w);
        check_id(a2, rc.far(zero, a, b), zero, "far zero first", w);
        check_id(a2, rc.fal(a, zero, b), rc.tobj(a, b), "fal zero second", w);
        check_id(a2, rc.far(a, zero, b), rc.tobj(a, b), "far zero second", w);
        check_id(a2, rc.fal(a, b, zero), zero, "fal zero third", w);
        check_id(a2, rc.far(a, b, zero), rc.tobj(a, b), "far zero third", w);
      }
    out.axioms["zero_factorization"] = std::move(a2);
  }

  {
    Report a3;
    a3.suite = "unit_factorization";
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b) {
        std::string w = oid(a) + "," + oid(b);
        int s = aplus(a, b);
        int got = rc.fal(a, b, rc.one);
        if (s < 0 || got < 0)
          a3.skip();
        else
          a3.require(got == idm(s), "fal unit", w);
        got = rc.far(rc.one, a, b);
        if (s < 0 || got < 0)
          a3.skip();
        else
          a3.require(got == idm(s), "far unit", w);
      }
    out.axioms["unit_factorization"] = std::move(a3);
  }

  {
    Report a4;
    a4.suite = "symmetry_factorization";
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b)
        for (int d = 0; d < no; ++d) {
          auto w = [&] { return oid(a) + "," + oid(b) + "," + oid(d); };
          int lhs = cmp(rc.tmor(axi(a, b), idm(d)), rc.fal(a, b, d));
          int rhs = cmp(rc.fal(b, a, d), axi(rc.tobj(a, d), rc.tobj(b, d)));
          if (lhs < 0 || rhs < 0)
            a4.skip();
          else
            a4.require_lazy(lhs == rhs, "fal symmetry", w);
          lhs = cmp(rc.tmor(idm(a), axi(b, d)), rc.far(a, b, d));
          rhs = cmp(rc.far(a, d, b), axi(rc.tobj(a, b), rc.tobj(a, d)));
          if (lhs < 0 || rhs < 0)
            a4.skip();
          else
            a4.require_lazy(lhs == rhs, "far symmetry", w);
        }
    out.axioms["symmetry_factorization"] = std::move(a4);
  }

  {
    Report a5;
    a5.suite = "internal";
    for (int a = 0; a < no; ++a)
      for (int a1 = 0; a1 < no; ++a1)
        for (int a2 = 0; a2 < no; ++a2)
          for (int b = 0; b < no; ++b) {
            auto w = [&] {
              return oid(a) + "," + oid(a1) + "," + oid(a2) + "," + oid(b);
            };
            int lhs = cmp(rc.fal(aplus(a, a1), a2, b),
                          amor(rc.fal(a, a1, b), idm(rc.tobj(a2, b))));
            int rhs = cmp(rc.fal(a, aplus(a1, a2), b),
                          amor(idm(rc.tobj(a, b)), rc.fal(a1, a2, b)));
            if (lhs < 0 || rhs < 0)
              a5.skip();
            else
              a5.require_lazy(lhs == rhs, "fal internal", w);
            lhs = cmp(rc.far(a, aplus(a1, a2), b),
                      amor(rc.far(a, a1, a2), idm(rc.tobj(a, b))));
            rhs = cmp(rc.far(a, a1, aplus(a2, b)),
                      amor(idm(rc.tobj(a, a1)), rc.far(a, a2, b)));
            if (lhs < 0 || rhs < 0)
              a5.skip();
            else
              a5.require_lazy(lhs == rhs, "far internal", w);
          }
    out.axioms["internal"] = std::move(a5);
  }

  {
    Report a6;
    a6.suite = "external";
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b)
        for (int d = 0; d < no; ++d)
          for (int e = 0; e < no; ++e) {
            auto w = [&] {
              return oid(a) + "," + oid(b) + "," + oid(d) + "," + oid(e);
            };
            // (a, b) as the split pair over d (x) e.
            int lhs = rc.fal(a, b, rc.tobj(d, e));
            int rhs = cmp(rc.tmor(rc.fal(a, b, d), idm(e)),
                          rc.fal(rc.tobj(a, d), rc.tobj(b, d), e));
            if (lhs < 0 || rhs < 0)
              a6.skip();
            else
              a6.require_lazy(lhs == rhs, "external left", w);
            // a times the split pair (b, d) over e.
            lhs = cmp(rc.tmor(rc.far(a, b, d), idm(e)),
                      rc.fal(rc.tobj(a, b), rc.tobj(a, d), e));
            rhs = cmp(rc.tmor(idm(a), rc.fal(b, d, e)),
                      rc.far(a, rc.tobj(b, e), rc.tobj(d, e)));
            if (lhs < 0 || rhs < 0)
              a6.skip();
            else
              a6.require_lazy(lhs == rhs, "external mixed", w);
            // a (x) b times the split pair (d, e).
            lhs = rc.far(rc.tobj(a, b), d, e);
            rhs = cmp(rc.tmor(idm(a), rc.far(b, d, e)),
                      rc.far(a, rc.tobj(b, d), rc.tobj(b, e)));
            if (lhs < 0 || rhs < 0)
              a6.skip();
            else
              a6.require_lazy(lhs == rhs, "external right", w);
          }
    out.axioms["external"] = std::move(a6);
  }

  {
    Report a7;
    a7.suite = "two_by_two";
    for (int a = 0; a < no; ++a)
      for (int a1 = 0; a1 < no; ++a1)
        for (int b = 0; b < no; ++b)
          for (int b1 = 0; b1 < no; ++b1) {
            int lhs = cmp(rc.fal(a, a1, aplus(b, b1)),
                          amor(rc.far(a, b, b1), rc.far(a1, b, b1)));
            int swap = amor(amor(idm(rc.tobj(a, b)),
                                 axi(rc.tobj(a, b1), rc.tobj(a1, b))),
                            idm(rc.tobj(a1, b1)));
            int rhs = cmp(rc.far(aplus(a, a1), b, b1),
                          cmp(amor(rc.fal(a, a1, b), rc.fal(a, a1, b1)),
                              swap));
            if (lhs < 0 || rhs < 0)
              a7.skip();
            else
              a7.require_lazy(lhs == rhs, "two by two", [&] {
                return oid(a) + "," + oid(a1) + "," + oid(b) + "," + oid(b1);
              });
          }
    out.axioms["two_by_two"] = std::move(a7);
  }

  out.tight = true;
  bool any = false;
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b)
      for (int d = 0; d < no; ++d) {
        int l = rc.fal(a, b, d);
        if (l >= 0) {
          any = true;
          if (cc.inverse(l) < 0) out.tight = false;
        }
        int r2 = rc.far(a, b, d);
        if (r2 >= 0) {
          any = true;
          if (cc.inverse(r2) < 0) out.tight = false;
        }
      }
  if (!any) out.tight = false;
  return out;
}

}  // namespace invk::ringcat
