#pragma once

#include "relfree/backend.hpp"
#include "relfree/hnn.hpp"
#include "relfree/normal_forms.hpp"

namespace relfree {

// Group models usable with the bounded relation checker.

struct BackendModel {
  Backend backend;

  using Elem = Element;
  Elem identity() const { return backend.identity(); }
  Elem multiply(const Elem& x, const Elem& y) const { return backend.multiply(x, y); }
  Elem inverse(const Elem& x) const { return backend.inverse(x); }
  bool is_identity(const Elem& x) const { return backend.is_identity(x); }
};

struct AmalgamModel {
  Amalgam amalgam;

  using Elem = ReducedSequence;
  Elem identity() const { return amalgam.identity(); }
  Elem multiply(const Elem& x, const Elem& y) const { return amalgam.multiply(x, y); }
  Elem inverse(const Elem& x) const { return amalgam.inverse(x); }
  bool is_identity(const Elem& x) const { return x.is_identity(); }
};

struct Bs12Model {
  using Elem = Mat2Q;
  Elem identity() const { return Mat2Q::identity(); }
  Elem multiply(const Elem& x, const Elem& y) const { return x * y; }
  Elem inverse(const Elem& x) const { return x.inverse(); }
  bool is_identity(const Elem& x) const { return x.is_identity(); }
};

}  // namespace relfree
