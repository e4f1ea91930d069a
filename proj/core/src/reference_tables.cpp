#include "localh/reference_tables.hpp"

namespace localh {

const std::vector<ReferenceRow>& classical_reference() {
  using P = IntPoly;
  static const std::vector<ReferenceRow> rows = {
      {CartanType::A(1), P{}, P{}, true},
      {CartanType::A(2), P{0, 1}, P{0, 1}, true},
      {CartanType::A(3), P{0, 1, 1}, P{0, 1}, true},
      {CartanType::A(4), P{0, 1, 4, 1}, P{0, 1, 2}, true},
      {CartanType::A(5), P{0, 1, 8, 8, 1}, P{0, 1, 5}, true},
      {CartanType::A(6), P{0, 1, 13, 29, 13, 1}, P{0, 1, 9, 5}, true},
      {CartanType::A(7), P{0, 1, 19, 73, 73, 19, 1}, P{0, 1, 14, 21}, true},
      {CartanType::A(8), P{0, 1, 26, 151, 266, 151, 26, 1}, P{0, 1, 20, 56, 14}, true},

      {CartanType::B(2), P{0, 2}, P{0, 2}, true},
      {CartanType::B(3), P{0, 3, 3}, P{0, 3}, true},
      {CartanType::B(4), P{0, 4, 14, 4}, P{0, 4, 6}, true},
      {CartanType::B(5), P{0, 5, 35, 35, 5}, P{0, 5, 20}, true},
      {CartanType::B(6), P{0, 6, 69, 146, 69, 6}, P{0, 6, 45, 20}, true},
      {CartanType::B(7), P{0, 7, 119, 427, 427, 119, 7}, P{0, 7, 84, 105}, true},
      {CartanType::B(8), P{}, P{0, 8, 140, 336, 70}, false},

      {CartanType::D(4), P{0, 2, 6, 2}, P{0, 2, 2}, true},
      {CartanType::D(5), P{0, 3, 18, 18, 3}, P{0, 3, 9}, true},
      {CartanType::D(6), P{0, 4, 40, 80, 40, 4}, P{0, 4, 24, 8}, true},
      {CartanType::D(7), P{0, 5, 75, 250, 250, 75, 5}, P{0, 5, 50, 50}, true},
      {CartanType::D(8), P{}, P{0, 6, 90, 180, 30}, false},
  };
  return rows;
}

const std::vector<IntPoly>& barycentric_xi_reference() {
  using P = IntPoly;
  static const std::vector<IntPoly> rows = {
      P{},
      P{0, 1},
      P{0, 1},
      P{0, 1, 5},
      P{0, 1, 18},
      P{0, 1, 47, 61},
      P{0, 1, 108, 479},
      P{0, 1, 233, 2414, 1385},
      P{0, 1, 486, 9970, 19028},
  };
  return rows;
}

}  // namespace localh
