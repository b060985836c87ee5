#pragma once

#include <string>
#include <vector>

namespace aniso {

/// A frontier parameter interval traversed from `from` to `to`; the traversal
/// direction is the sign of `to - from`. Angles are radians and are not reduced
/// modulo 2*pi, so [5.9, 6.7] crosses zero.
struct Arc {
  double from = 0.0;
  double to = 0.0;
  double length() const { return to > from ? to - from : from - to; }
  int direction() const { return to >= from ? 1 : -1; }
  Arc reversed() const { return {to, from}; }
};

/// An ordered list of arcs whose consecutive endpoint images coincide.
struct ArcSpec {
  std::string name;
  std::vector<Arc> arcs;
};

}  // namespace aniso
