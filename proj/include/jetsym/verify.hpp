#pragma once

// Full checklist over a generated hierarchy (fs or ts1).

#include "jetsym/hierarchy.hpp"
#include "jetsym/serialize.hpp"

namespace jetsym {

class UnsupportedHierarchy : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// alpha_n from alpha_1 = 1, alpha_2 = -1/(2 alpha - 1),
/// alpha_n = alpha_{n-1} - alpha/(2 alpha - 1) alpha_{n-2}.
RationalFunction fs_leading_coefficient(std::size_t n);

/// Checks run in a fixed order: system, recursion, symmetry, commutativity,
/// then the hierarchy-specific ones (certificates, homogeneity, structure,
/// density for fs; b coefficients and structure for ts1).
CheckReport verify_hierarchy(const Hierarchy& h, unsigned threads = 0);

}  // namespace jetsym
