#pragma once

#include "metacover/gl2.hpp"
#include "metacover/padic_field.hpp"

namespace metacover {

/// (g, eps) in the n-fold cover; multiplication lives in metaplectic_group.hpp.
struct MetaElement {
  GL2 g;
  Mu eps;

  /// Delta((g, eps)) = det g.
  Rational det() const { return g.det(); }

  friend bool operator==(const MetaElement& x, const MetaElement& y) = default;
};

}  // namespace metacover
