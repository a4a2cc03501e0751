#include "aqg/grid.hpp"

#include <stdexcept>
#include <string>

namespace aqg {

GridSpec::GridSpec(int n1_, int n2_, double box, double dealias, CutoffShape shape)
    : n1(n1_), n2(n2_), box_size(box), dealias_fraction(dealias), cutoff_shape(shape) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("GridSpec: " + msg); };
  if (n1 < 4 || n2 < 4) fail("mode counts must be at least 4");
  if (n1 % 2 != 0 || n2 % 2 != 0) fail("mode counts must be even");
  if (!(box_size > 0.0)) fail("box size must be positive");
  if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0)
    fail("dealias fraction must lie in (0, 1]");
}

}  // namespace aqg
