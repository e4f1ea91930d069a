#include <array>
#include <string>

#include "localh/errors.hpp"
#include "localh/local_h.hpp"

namespace localh {

namespace {

struct TableRow {
  Family family;
  int rank;
  IntPoly ell;
  IntPoly xi;
};

std::vector<TableRow> load_table() {
  std::vector<TableRow> rows = {
      {Family::H, 3, IntPoly{0, 8, 8}, IntPoly{0, 8}},
      {Family::H, 4, IntPoly{0, 42, 124, 42}, IntPoly{0, 42, 40}},
      {Family::F, 4, IntPoly{0, 10, 29, 10}, IntPoly{0, 10, 9}},
      {Family::E, 6, IntPoly{0, 7, 63, 125, 63, 7}, IntPoly{0, 7, 35, 13}},
      {Family::E, 7, IntPoly{0, 16, 204, 644, 644, 204, 16}, IntPoly{0, 16, 124, 112}},
      {Family::E, 8, IntPoly{0, 44, 748, 3380, 5472, 3380, 748, 44}, IntPoly{0, 44, 484, 784, 120}},
  };
  for (const auto& row : rows) {
    const GammaVector xi(row.rank, row.xi.padded(static_cast<std::size_t>(row.rank / 2) + 1));
    if (gamma_compose(xi) != row.ell)
      throw ConsistencyError("embedded exceptional table is inconsistent for rank " +
                             std::to_string(row.rank));
  }
  return rows;
}

const std::vector<TableRow>& table() {
  static const std::vector<TableRow> rows = load_table();
  return rows;
}

}  // namespace

std::optional<ExceptionalEntry> exceptional_entry(const CartanType& t) {
  if (t.is_classical()) return std::nullopt;
  if (t.family() == Family::I2) {
    const Integer interior = t.dihedral_order() - 2;
    return ExceptionalEntry{t, IntPoly::monomial(interior, 1), IntPoly::monomial(interior, 1)};
  }
  for (const auto& row : table())
    if (row.family == t.family() && row.rank == t.rank()) return ExceptionalEntry{t, row.ell, row.xi};
  throw std::invalid_argument("no table entry for " + t.name());
}

std::vector<CartanType> exceptional_types(const std::vector<int>& dihedral_orders) {
  std::vector<CartanType> out = {CartanType::E(6), CartanType::E(7), CartanType::E(8),
                                 CartanType::F4(),  CartanType::H(3), CartanType::H(4)};
  for (int m : dihedral_orders) out.push_back(CartanType::I2(m));
  return out;
}

}  // namespace localh
