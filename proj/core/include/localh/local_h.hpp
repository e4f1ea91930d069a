#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "localh/polynomial.hpp"
#include "localh/root_system.hpp"

namespace localh {

enum class Source {
  InclusionExclusion,  // alternating sum over parabolic subsets
  EmbeddedTable,       // exceptional types
  ClosedForm,          // product formulas for xi
  Enumeration,         // brute force over derangements
  Join,                // product of two results
};

std::string_view to_string(Source s);

/// Local h-polynomial together with its local gamma vector.
///
/// Invariants: ell is symmetric about n = xi.n(), and gamma_compose(xi) == ell.
struct LocalHResult {
  IntPoly ell;
  GammaVector xi;
  Source source;

  int n() const { return xi.n(); }

  /// Builds the gamma vector from ell; throws if ell is not symmetric about n.
  static LocalHResult from_ell(IntPoly ell, int n, Source source);
};

struct ClusterOptions {
  /// Classical types above this rank raise BudgetExceeded (2^rank subsets).
  int max_rank = 22;
  /// Worker threads for the subset sweep; 0 means default_thread_count().
  int threads = 0;
};

/// Local h-polynomial of the cluster subdivision of an irreducible type.
/// Classical types are computed by the alternating sum of h_plus over all
/// vertex subsets; exceptional types come from embedded tables.
LocalHResult local_h_cluster(const CartanType& t, const ClusterOptions& opts = {});

/// Local h of a join; ell and the gamma polynomial multiply, centers add.
LocalHResult local_h_join(const LocalHResult& a, const LocalHResult& b);

/// Local h of the barycentric subdivision of an (n-1)-simplex: the derangement
/// polynomial, by enumeration. BudgetExceeded if n > max_n.
LocalHResult local_h_barycentric(int n, int max_n = 12);

/// xi_i from the product formulas (A, B, D) or the embedded table.
/// Throws std::out_of_range unless 0 <= i <= rank/2.
Integer xi_closed_form(const CartanType& t, int i);

/// The full gamma vector and ell assembled from xi_closed_form.
LocalHResult local_h_closed_form(const CartanType& t);

/// (n-2)/i C(n-1,i-1) C(n-2,i-1) for type D_n, zero at i = 0.
/// Throws std::out_of_range unless n >= 4 and 0 <= i <= n.
Integer ell_closed_form_D(int n, int i);

/// Embedded data for an exceptional type (I2(m), H3, H4, F4, E6, E7, E8).
struct ExceptionalEntry {
  CartanType type;
  IntPoly ell;
  IntPoly xi;  // sum_i xi_i x^i
};

/// nullopt for classical types. The ell and xi tables are checked against
/// each other with gamma_compose when first loaded.
std::optional<ExceptionalEntry> exceptional_entry(const CartanType& t);

/// H3, H4, F4, E6, E7, E8 plus the given dihedral orders.
std::vector<CartanType> exceptional_types(const std::vector<int>& dihedral_orders = {3, 4, 5, 6, 7, 8});

}  // namespace localh
