#pragma once

// The v-deformed Fock space with the Hayashi action of e_i and f_i.

#include "kleshchev/combinatorics.hpp"
#include "kleshchev/laurent.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kleshchev {

class FockVector {
 public:
  using Terms = std::map<Multipartition, LaurentPoly>;

  explicit FockVector(Multicharge charge) : charge_(std::move(charge)) {}
  static FockVector basis(const Multicharge& charge, const Multipartition& mp);
  static FockVector vacuum(const Multicharge& charge);

  const Multicharge& charge() const noexcept { return charge_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }
  LaurentPoly coeff(const Multipartition& mp) const;
  /// Common size of every term; set for basis vectors and kept by the operators.
  std::optional<int> homogeneous_size() const noexcept { return homogeneous_size_; }
  void set_homogeneous_size(std::optional<int> n) noexcept { homogeneous_size_ = n; }

  void add_term(const Multipartition& mp, const LaurentPoly& c);
  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(const LaurentPoly& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const LaurentPoly& c, FockVector a) { return a *= c; }
  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.charge_ == b.charge_ && a.terms_ == b.terms_;
  }

  /// Terms ordered by dominance (most dominant first), ties lexicographic.
  std::vector<std::pair<Multipartition, LaurentPoly>> sorted_terms() const;

 private:
  Multicharge charge_;
  Terms terms_;
  std::optional<int> homogeneous_size_;
};

/// f_i lambda = sum_b v^{A_before(b) - R_before(b)} (lambda + b) over addable
/// i-nodes b, counting addable/removable i-nodes that precede b in reading order.
FockVector f_op(int i, const FockVector& vec);
/// e_i mu = sum_b v^{R_after(b) - A_after(b)} (mu - b) over removable i-nodes b.
FockVector e_op(int i, const FockVector& vec);

enum class Generator { e, f };

/// Chevalley generator action, swappable so that verifiers can be exercised
/// against deliberately broken conventions.
struct FockOperators {
  std::function<FockVector(int, const FockVector&)> e = e_op;
  std::function<FockVector(int, const FockVector&)> f = f_op;

  const std::function<FockVector(int, const FockVector&)>& get(Generator g) const {
    return g == Generator::e ? e : f;
  }
};

/// x_i^{(k)} vec = x_i^k vec / [k]!; throws InexactDivision if a coefficient
/// is not divisible.
FockVector divided_power(Generator g, int i, int k, const FockVector& vec,
                         const FockOperators& ops = {});

std::map<Multipartition, BigInt> specialize_v1(const FockVector& vec);

struct RelationViolation {
  Multipartition basis;
  int i;
  int j;
  std::string relation;
  std::string detail;
};

/// (e_i f_j - f_j e_i) lambda = delta_ij [<h_i, wt(lambda)>] lambda for every
/// multipartition with |lambda| <= n_max.
std::vector<RelationViolation> verify_commutators(const Multicharge& charge, int n_max,
                                                  const FockOperators& ops = {});

/// Quantum Serre relations sum_k (-1)^k x_i^{(k)} x_j x_i^{(1-a_ij-k)} = 0
/// for x in {e, f}, i != j, on every multipartition with |lambda| <= n_max.
std::vector<RelationViolation> verify_serre(const Multicharge& charge, int n_max,
                                            const FockOperators& ops = {});

/// "[[1,1]] + v[[2]]"-style text; zero prints as "0".
std::string to_string(const FockVector& vec);

}  // namespace kleshchev
