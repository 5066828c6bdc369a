#pragma once

#include <functional>
#include <span>
#include <vector>

#include "invk/core.hpp"
#include "invk/report.hpp"

namespace invk::permlin {

// A bounded, materialized permutative category: a finite category with a
// partial tensor.  Tables hold -1 where an operand pair leaves the bounded
// part; every checker skips those instances and reports coverage.
struct PermCategory {
  cat::FiniteCategory c;
  int unit = -1;
  std::vector<int> tensor_obj;  // a*num_objects+b -> object or -1
  std::vector<int> tensor_mor;  // f*num_morphisms+g -> morphism or -1
  std::vector<int> braiding;    // a*num_objects+b -> morphism or -1

  int tobj(int a, int b) const {
    if (a < 0 || b < 0) return -1;
    return tensor_obj[static_cast<std::size_t>(a) * c.objects.size() + b];
  }
  int tmor(int f, int g) const {
    if (f < 0 || g < 0) return -1;
    return tensor_mor[static_cast<std::size_t>(f) * c.morphisms.size() + g];
  }
  int braid(int a, int b) const {
    if (a < 0 || b < 0) return -1;
    return braiding[static_cast<std::size_t>(a) * c.objects.size() + b];
  }
};

Report validate_permutative(const PermCategory& p);

// Bounded skeletal pointed sets under the smash product: objects <0>..<N>,
// all pointed maps between them, tensor defined where the product of
// levels stays within N.
PermCategory fskel_perm(int max_level);

// A k-linear functor between bounded permutative categories, given by
// evaluators.  Each evaluator returns -1 when its inputs or its output
// leave the bounded part.  constraint(i, tuple, extra) is the morphism
// F(..X_i..) (+) F(..X'_i..) -> F(..X_i (+) X'_i..) with X_i the slot-i
// entry of the tuple and X'_i = extra.  A 0-ary functor stores its value
// as obj({}).
struct MultilinearFunctor {
  std::vector<const PermCategory*> src;
  const PermCategory* tgt = nullptr;
  std::function<int(std::span<const int>)> obj;
  std::function<int(std::span<const int>)> mor;
  std::function<int(int, std::span<const int>, int)> constraint;

  int arity() const { return static_cast<int>(src.size()); }
};

MultilinearFunctor identity_multilinear(const PermCategory& c);

struct MultilinearTransformation {
  const MultilinearFunctor* source = nullptr;
  const MultilinearFunctor* target = nullptr;
  // Component at an object tuple, a morphism of the target category;
  // -1 out of bound.
  std::function<int(std::span<const int>)> component;
};

// The five multilinear axioms plus carrier sanity (well-typed values,
// identity preservation, constraint endpoints) and invertibility of every
// defined constraint.  Composition preservation of the carrier is grid
// quadratic and is checked separately by check_functoriality with its own
// bound.
Report validate_multilinear(const MultilinearFunctor& f);

// Carrier preserves composition, iterated over composable tuple pairs
// whose six endpoint objects all lie within `max_size` tensor length; the
// sizes come from a per-object weight table supplied by the caller.
Report check_functoriality(const MultilinearFunctor& f,
                           std::span<const int> obj_weight, int max_weight);

Report validate_mltrans(const MultilinearTransformation& t);

MultilinearFunctor compose_multilinear(
    const MultilinearFunctor& g,
    std::vector<const MultilinearFunctor*> fs);

MultilinearFunctor sigma_act_multilinear(const MultilinearFunctor& f,
                                         std::vector<int> sigma);

}  // namespace invk::permlin
