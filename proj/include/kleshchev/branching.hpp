#pragma once

// Grothendieck-group branching of simple modules in characteristic zero.
//
// Classes of Specht modules [S^mu] and simple modules [D^lambda] are related
// by the v = 1 decomposition matrix. i-restriction acts on Specht classes by
// removing i-nodes; the branching check re-expresses e_i [D^lambda] over the
// simple classes of rank n - 1.

#include "kleshchev/canonical.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace kleshchev {

using SpechtCombination = std::map<Multipartition, BigInt>;

struct SimpleClass {
  Multipartition label;
  /// [D^label] = sum_mu specht_coords[mu] [S^mu]; zero coordinates omitted.
  SpechtCombination specht_coords;
};

/// One class per Kleshchev multipartition of n, in matrix column order.
std::vector<SimpleClass> simple_classes(CanonicalAtlas& atlas, int n);

/// Sum over removable i-nodes b of mu of [S^{mu - b}].
SpechtCombination restrict_specht(const Multipartition& mu, int i, const Multicharge& charge);

/// Re-expresses a combination of Specht classes of rank n over simple classes.
std::map<Multipartition, BigInt> specht_to_simples(const SpechtCombination& combo,
                                                   const DecompositionMatrix& matrix);

struct BranchReport {
  Multipartition label;
  int i = 0;
  int epsilon = 0;
  int phi = 0;
  std::optional<Multipartition> e_tilde_label;
  /// Composition factors of e_i [D^label], most dominant first.
  std::vector<std::pair<Multipartition, BigInt>> factors;
  std::optional<Multipartition> socle_candidate;
  bool uniqueness_ok = true;    // unique factor with epsilon_i = epsilon_i(label) - 1
  bool multiplicity_ok = true;  // that factor occurs epsilon_i(label) times
  std::vector<std::string> reasons;

  bool pass() const noexcept { return uniqueness_ok && multiplicity_ok; }
};

inline constexpr const char* kBranchProxyNote =
    "verified at composition-series level in characteristic zero; socle simplicity is not computed";

BranchReport branch_simple(const Multipartition& label, int i, CanonicalAtlas& atlas);

/// dim D^label = sum_mu specht_coords[mu] * #standard tableaux of shape mu.
BigInt dim_simple(const Multipartition& label, CanonicalAtlas& atlas);

struct DimBoundReport {
  Multipartition label;
  BigInt dimension;
  BigInt paths;
  /// Set when G_v(label) = label; then dim D^label must equal dim S^label.
  std::optional<BigInt> specht_dimension;
  bool bound_ok = true;
  bool equality_ok = true;
  bool ok() const noexcept { return bound_ok && equality_ok; }
};

DimBoundReport verify_dim_bound(const CrystalGraph& graph, const Multipartition& label,
                                CanonicalAtlas& atlas);

/// Compares sum_i dim e_i [D^label] computed through the simple classes of
/// rank n - 1 with the value from the Specht coordinates and tableau counts
/// of the shapes with one node removed. Returns a description on mismatch.
std::optional<std::string> check_restriction_dimension(const Multipartition& label,
                                                       CanonicalAtlas& atlas);

/// Rows (n, label, i, e~_i label, epsilon_i, phi_i, factors, verdict).
void write_branch_csv(std::ostream& out, const std::vector<BranchReport>& reports);
void write_branch_table(std::ostream& out, const std::vector<BranchReport>& reports);
std::string branch_reports_json(const std::vector<BranchReport>& reports);

}  // namespace kleshchev
