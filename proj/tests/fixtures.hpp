#pragma once

#include <memory>
#include <string>
#include <vector>

#include "invk/core.hpp"
#include "invk/fskel.hpp"
#include "invk/gamma.hpp"
#include "invk/groth.hpp"

// Shared test carriers, built once per process.
namespace invk::testfix {

// H on the Bool monoid with each level ordered componentwise (0 <= 1).
// Unlike the discrete H-levels, these have nonidentity morphisms, so
// modifications between parallel multimorphisms can move objects.
// Objects are digit tuples encoded most-significant-first; a map acts by
// fiberwise OR, which is monotone.  Level-n morphisms enumerate pairs
// u <= v with u outer, so the arrow 0 -> u has index u.
inline gamma::GammaPtr ordered_bool_gamma(int truncation) {
  auto build_level = [](int n) {
    cat::CategoryBuilder b;
    int size = 1 << n;
    auto leq = [](int u, int v) { return (u & v) == u; };
    for (int u = 0; u < size; ++u) b.object("o" + std::to_string(u));
    for (int u = 0; u < size; ++u)
      for (int v = 0; v < size; ++v)
        if (leq(u, v))
          b.morphism("m" + std::to_string(u) + "_" + std::to_string(v),
                     "o" + std::to_string(u), "o" + std::to_string(v));
    for (int u = 0; u < size; ++u)
      b.set_identity("o" + std::to_string(u),
                     "m" + std::to_string(u) + "_" + std::to_string(u));
    for (int u = 0; u < size; ++u)
      for (int v = 0; v < size; ++v)
        for (int w = 0; w < size; ++w)
          if (leq(u, v) && leq(v, w))
            b.set_compose("m" + std::to_string(v) + "_" + std::to_string(w),
                          "m" + std::to_string(u) + "_" + std::to_string(v),
                          "m" + std::to_string(u) + "_" + std::to_string(w));
    return b.build();
  };

  auto g = std::make_shared<gamma::GammaCategory>();
  g->truncation = truncation;
  for (int n = 0; n <= truncation; ++n)
    g->levels.push_back({build_level(n), 0});

  g->provider = [](const fskel::PtdMap& f) {
    gamma::LevelMap m;
    int dn = 1 << f.dom;
    auto apply = [&f](int u) {
      int e = 0;
      for (int i = 0; i < f.dom; ++i) {
        int j = f(i + 1);
        if (j != 0 && ((u >> (f.dom - 1 - i)) & 1)) e |= 1 << (f.cod - j);
      }
      return e;
    };
    auto mor_index = [](int n, int u, int v) {
      int idx = 0;
      for (int a = 0; a < (1 << n); ++a)
        for (int b = 0; b < (1 << n); ++b)
          if ((a & b) == a) {
            if (a == u && b == v) return idx;
            ++idx;
          }
      return -1;
    };
    m.obj.resize(dn);
    for (int u = 0; u < dn; ++u) m.obj[u] = apply(u);
    for (int u = 0; u < dn; ++u)
      for (int v = 0; v < dn; ++v)
        if ((u & v) == u)
          m.mor.push_back(mor_index(f.cod, apply(u), apply(v)));
    return m;
  };
  return g;
}

// Componentwise AND on an em carrier, built through the callback
// constructor.  Digit tuples are most-significant-first and the output
// digit for row i, column j sits at smash position (i-1)*q + j.
inline gamma::Multimorphism and_mu(const gamma::GammaPtr& g) {
  auto fn = [](std::span<const int> p, std::span<const int> c) {
    int pa = p[0], pb = p[1];
    int out = 0;
    for (int i = pa - 1; i >= 0; --i) {
      int a = (c[0] >> i) & 1;
      for (int j = pb - 1; j >= 0; --j) {
        int b = (c[1] >> j) & 1;
        out = out * 2 + (a & b);
      }
    }
    return out;
  };
  return gamma::make_multimorphism({g, g}, g, fn, fn);
}

inline const gamma::GammaPtr& hbool4() {
  static gamma::GammaPtr g = gamma::em_gamma(gamma::bool_monoid(), 4);
  return g;
}

inline const gamma::GammaPtr& hz24() {
  static gamma::GammaPtr g = gamma::em_gamma(gamma::z2_monoid(), 4);
  return g;
}

inline const gamma::GammaPtr& junit4() {
  static gamma::GammaPtr g = gamma::unit_gamma(4);
  return g;
}

inline const groth::PcatResult& pcat_bool22() {
  static groth::PcatResult p = groth::build_pcat(*hbool4(), 2, 2);
  return p;
}

inline const groth::PcatResult& pcat_z2_22() {
  static groth::PcatResult p = groth::build_pcat(*hz24(), 2, 2);
  return p;
}

inline const groth::PcatResult& pcat_j22() {
  static groth::PcatResult p = groth::build_pcat(*junit4(), 2, 2);
  return p;
}

inline const gamma::GammaPtr& obool2() {
  static gamma::GammaPtr g = ordered_bool_gamma(2);
  return g;
}

inline const groth::PcatResult& pcat_ob22() {
  static groth::PcatResult p = groth::build_pcat(*obool2(), 2, 2);
  return p;
}

}  // namespace invk::testfix
