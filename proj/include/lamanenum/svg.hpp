#pragma once

#include <iosfwd>
#include <vector>

#include "lamanenum/geometry.hpp"
#include "lamanenum/triangulation.hpp"

namespace laman {

// One framework drawing: framework edges solid (constraints thicker), the
// remaining edges of the underlying triangulation dotted, vertices labelled.
void write_framework_svg(std::ostream& out, const EdgeUniverse& u,
                         const std::vector<int>& framework_ids,
                         const std::vector<char>& constraint_mask, const Triangulation& underlying);

}  // namespace laman
