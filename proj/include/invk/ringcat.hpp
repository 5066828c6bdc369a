#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "invk/gamma.hpp"
#include "invk/groth.hpp"
#include "invk/permlin.hpp"
#include "invk/pmulti.hpp"
#include "invk/report.hpp"

namespace invk::ringcat {

// A monoid object: mu is 2-ary (X, X) -> X, eta 0-ary, satisfying the
// associativity and unit equations as component-table identities.
struct GammaMonoid {
  gamma::GammaPtr x;
  gamma::Multimorphism mu;
  gamma::Multimorphism eta;
};

// Componentwise-multiplication monoid on a fiberwise sum category.
// `times` with unit `one` must distribute over the additive operation and
// absorb its unit.
GammaMonoid em_mult_monoid(gamma::GammaPtr x, const gamma::CommMonoid& base,
                           std::function<int(int, int)> times, int one);
GammaMonoid bool_mult_monoid(int truncation);
GammaMonoid z2_mult_monoid(int truncation);
// The smash-identification monoid on the one-point-levels category.
GammaMonoid j_mult_monoid(int truncation);

Report validate_gamma_monoid(const GammaMonoid& m);

// A bounded ring category: the additive permutative structure of the
// carrier plus a partial multiplicative tensor with unit `one` and the
// two factorization families.  Every accessor returns -1 out of bound.
struct RingCategory {
  const permlin::PermCategory* add = nullptr;
  int one = -1;
  std::shared_ptr<const permlin::MultilinearFunctor> mult;
  std::function<int(int, int)> tobj, tmor;
  std::function<int(int, int, int)> fal;  // (A(x)C)(+)(B(x)C) -> (A(+)B)(x)C
  std::function<int(int, int, int)> far;  // (A(x)B)(+)(A(x)C) -> A(x)(B(+)C)
};

// The ring structure carried by the image of a monoid: tensor and unit
// from the assembled 2-linear image of mu and eta, factorizations from
// its two linearity constraints.  `m` and `pc` must outlive the result.
RingCategory derive_ring(const GammaMonoid& m, const groth::PcatResult& pc,
                         Ordering ord = Ordering::RevLex);

struct RingReport {
  std::map<std::string, Report> axioms;
  Report extra;  // frames plus strict unit and associativity of the tensor
  bool tight = false;

  bool ok() const;
  double coverage() const;
};

// The seven ring axioms, each a sub-report, plus carrier sanity in
// `extra` and invertibility of every defined factorization in `tight`.
RingReport validate_ring(const RingCategory& r);

}  // namespace invk::ringcat
