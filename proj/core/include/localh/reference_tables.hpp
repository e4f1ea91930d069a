#pragma once

#include <vector>

#include "localh/polynomial.hpp"
#include "localh/root_system.hpp"

namespace localh {

/// Published small-rank values used by `verify --suite tables`.
struct ReferenceRow {
  CartanType type;
  IntPoly ell;  // empty polynomial when only xi is tabulated
  IntPoly xi;
  bool has_ell;
};

/// A_1..A_8, B_2..B_8 (ell through B_7), D_4..D_8 (ell through D_7).
const std::vector<ReferenceRow>& classical_reference();

/// Barycentric local gamma polynomials for n = 1..9 (index n - 1).
const std::vector<IntPoly>& barycentric_xi_reference();

}  // namespace localh
