#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "localh/polynomial.hpp"

namespace localh {

// Declaration order fixes the output ordering A, B, D, E, F, H, I.
enum class Family : std::uint8_t { A, B, D, E, F, H, I2 };

/// An irreducible finite root system type: A_n (n>=1), B_n (n>=2), D_n (n>=2),
/// I2(m) (m>=3), H3, H4, F4, E6, E7, E8.
///
/// D2 and D3 are accepted; they behave as A1 x A1 and A3 under every
/// computation here.
class CartanType {
 public:
  static CartanType A(int n);
  static CartanType B(int n);
  static CartanType D(int n);
  static CartanType E(int n);
  static CartanType F4();
  static CartanType H(int n);
  static CartanType I2(int m);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// The dihedral parameter m of I2(m); zero for every other family.
  int dihedral_order() const { return param_; }
  bool is_classical() const;

  /// "A5", "D6", "I2(7)", ...
  std::string name() const;

  friend auto operator<=>(const CartanType&, const CartanType&) = default;

 private:
  CartanType(Family f, int rank, int param) : family_(f), rank_(rank), param_(param) {}

  Family family_;
  int rank_;
  int param_;
};

/// Case-insensitive parse of "A5", "B7", "D6", "I2(7)", "H3", "E8", ...
/// Throws std::invalid_argument on anything else.
CartanType parse_cartan_type(std::string_view text);

/// Labelled Dynkin diagram of a classical type; vertices are 1..rank.
/// A_n and B_n are paths (B's double edge joins n-1 and n), D_n is a path
/// on 1..n-2 with both n-1 and n attached to n-2.
struct DynkinDiagram {
  int rank = 0;
  std::vector<std::pair<int, int>> edges;  // i < j

  bool adjacent(int i, int j) const;
};

/// Throws std::invalid_argument for non-classical types.
DynkinDiagram dynkin_diagram(const CartanType& t);

/// Bit i-1 set <=> vertex i selected.
using VertexMask = std::uint64_t;

/// Irreducible components of a parabolic subsystem, sorted canonically.
/// Never contains B1, D2 or D3: those are recorded as A1, A1 x A1 and A3.
struct ParabolicDecomposition {
  std::vector<CartanType> components;

  int total_rank() const;
  friend bool operator==(const ParabolicDecomposition&, const ParabolicDecomposition&) = default;
};

/// Components of the Dynkin diagram of t restricted to the vertex subset J.
/// Throws std::invalid_argument if t is not classical or J is not a subset
/// of {1..rank}.
ParabolicDecomposition parabolic_decompose(const CartanType& t, std::span<const int> subset);
ParabolicDecomposition parabolic_decompose(const CartanType& t, VertexMask subset);

/// h-polynomial of the positive part of the cluster complex. Classical
/// families only; products use multiplicativity over joins. The empty
/// decomposition gives 1.
IntPoly h_plus(const CartanType& t);
IntPoly h_plus(const ParabolicDecomposition& d);

}  // namespace localh
