#pragma once

// Canonical basis of the highest-weight submodule of the Fock space and the
// characteristic-zero decomposition matrices read off from it.

#include "kleshchev/crystal.hpp"
#include "kleshchev/fock.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kleshchev {

/// Raised when the Fock conventions disagree with the crystal conventions,
/// e.g. a monomial whose leading coefficient is not 1.
class ConventionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutsideSpanError : public std::runtime_error {
 public:
  OutsideSpanError(const std::string& what, FockVector residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  const FockVector& residual() const noexcept { return residual_; }

 private:
  FockVector residual_;
};

/// Divided-power step of a monomial: apply f_residue^{(power)}.
struct MonomialStep {
  int residue;
  int power;
  friend bool operator==(const MonomialStep&, const MonomialStep&) = default;
};

struct CanonicalBasisElement {
  Multipartition label;
  FockVector vector;
  std::vector<MonomialStep> monomial_trace;  // in order of application to the vacuum
};

/// Peels mp down to the empty multipartition, each time removing all good
/// nodes of the smallest residue with epsilon > 0.
std::vector<MonomialStep> peel_word(const Multipartition& mp, const Multicharge& charge);

/// A(mp) = f_{i_t}^{(a_t)} ... f_{i_1}^{(a_1)} applied to the vacuum. The
/// coefficient of mp is checked to be 1.
FockVector monomial_vector(const Multipartition& mp, const Multicharge& charge);

class CanonicalBasis {
 public:
  CanonicalBasis(Multicharge charge, int n, std::vector<CanonicalBasisElement> elements);

  const Multicharge& charge() const noexcept { return charge_; }
  int size() const noexcept { return n_; }
  /// Elements ordered by decreasing dominance of their labels.
  const std::vector<CanonicalBasisElement>& elements() const noexcept { return elements_; }
  const CanonicalBasisElement* find(const Multipartition& label) const;
  std::vector<Multipartition> labels() const;
  /// Notes recorded during elimination, e.g. support at non-comparable labels.
  const std::vector<std::string>& findings() const noexcept { return findings_; }
  void add_finding(std::string note) { findings_.push_back(std::move(note)); }

 private:
  Multicharge charge_;
  int n_;
  std::vector<CanonicalBasisElement> elements_;
  std::map<Multipartition, std::size_t> index_;
  std::vector<std::string> findings_;
};

/// Bar-invariant elimination starting from the monomials A(lambda), for every
/// Kleshchev multipartition of size n.
CanonicalBasis canonical_basis(const Multicharge& charge, int n);

class DecompositionMatrix {
 public:
  DecompositionMatrix(Multicharge charge, int n, std::vector<Multipartition> rows,
                      std::vector<Multipartition> columns,
                      std::vector<std::vector<LaurentPoly>> entries);
  static DecompositionMatrix from_basis(const CanonicalBasis& basis);

  const Multicharge& charge() const noexcept { return charge_; }
  int size() const noexcept { return n_; }
  /// All multipartitions of n, most dominant first.
  const std::vector<Multipartition>& rows() const noexcept { return rows_; }
  /// Kleshchev multipartitions of n, most dominant first.
  const std::vector<Multipartition>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<LaurentPoly>>& entries() const noexcept { return entries_; }

  const LaurentPoly& entry(const Multipartition& row, const Multipartition& column) const;
  BigInt at_one(const Multipartition& row, const Multipartition& column) const;
  std::optional<std::size_t> row_index(const Multipartition& mp) const;
  std::optional<std::size_t> column_index(const Multipartition& mp) const;

  /// Violations of d_{ll} = 1, dominance support, vZ[v] off the diagonal and
  /// positivity; empty when the matrix has the expected shape.
  std::vector<std::string> invariant_violations() const;

  /// Rebuilds the canonical basis from the matrix columns.
  CanonicalBasis to_basis() const;

  friend bool operator==(const DecompositionMatrix& a, const DecompositionMatrix& b) {
    return a.charge_ == b.charge_ && a.n_ == b.n_ && a.rows_ == b.rows_ &&
           a.columns_ == b.columns_ && a.entries_ == b.entries_;
  }

 private:
  Multicharge charge_;
  int n_;
  std::vector<Multipartition> rows_;
  std::vector<Multipartition> columns_;
  std::vector<std::vector<LaurentPoly>> entries_;
  std::map<Multipartition, std::size_t> row_index_;
  std::map<Multipartition, std::size_t> column_index_;
};

DecompositionMatrix decomposition_matrix(const Multicharge& charge, int n);

/// CSV: header row of column labels, one row per multipartition, entries as
/// polynomial text. With at_one set, the entries are evaluated at v = 1.
void write_csv(std::ostream& out, const DecompositionMatrix& m, bool at_one = false);
std::string to_json_text(const DecompositionMatrix& m);
DecompositionMatrix decomposition_matrix_from_json(std::string_view text);

/// Lazily computed canonical bases and decomposition matrices of one charge,
/// optionally persisted in a cache directory. Safe for concurrent readers.
class CanonicalAtlas {
 public:
  explicit CanonicalAtlas(Multicharge charge, std::optional<std::filesystem::path> cache_dir = {});

  const Multicharge& charge() const noexcept { return charge_; }
  const CanonicalBasis& basis(int n);
  const DecompositionMatrix& matrix(int n);
  /// Number of matrices served from the on-disk cache.
  int cache_hits() const noexcept { return cache_hits_; }

 private:
  struct Entry {
    std::unique_ptr<DecompositionMatrix> matrix;
    std::unique_ptr<CanonicalBasis> basis;
  };
  Entry& ensure(int n);

  Multicharge charge_;
  std::optional<std::filesystem::path> cache_dir_;
  std::map<int, Entry> entries_;
  std::recursive_mutex mutex_;
  int cache_hits_ = 0;
};

/// Unitriangular back-substitution vec = sum coeff(l) G_v(l). Throws
/// OutsideSpanError if vec is not in the span of the basis.
std::map<Multipartition, LaurentPoly> expand_in_canonical(const FockVector& vec,
                                                          const CanonicalBasis& basis);

struct KashiwaraReport {
  Multipartition label;
  int i;
  std::map<Multipartition, LaurentPoly> e_expansion;
  std::map<Multipartition, LaurentPoly> f_expansion;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Expands e_i G_v(label) and f_i G_v(label) in the canonical basis and checks
/// the leading coefficients [phi_i + 1], [epsilon_i + 1] and the phi_j /
/// epsilon_j inequalities on every other term.
KashiwaraReport check_kashiwara_expansion(int i, const Multipartition& label, CanonicalAtlas& atlas);

struct ProjectiveExpansion {
  Multipartition label;
  int i;
  Generator direction;
  std::vector<std::pair<Multipartition, BigInt>> terms;  // v = 1 multiplicities
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// v = 1 expansion of f_i G(label) (or e_i G(label)) in the canonical basis,
/// checked for the leading multiplicity and the gap-2 condition.
ProjectiveExpansion projective_branch_expansion(int i, const Multipartition& label,
                                                CanonicalAtlas& atlas, Generator direction);

}  // namespace kleshchev
