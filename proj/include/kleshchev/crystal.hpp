#pragma once

// Signature-rule crystal on multipartitions and its Kleshchev component.

#include "kleshchev/combinatorics.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kleshchev {

class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weight Lambda - sum_j W_j alpha_j of the affine algebra of type
/// A^{(1)}_{e-1}. The d-coordinate is normalised so that Lambda(d) = 0.
struct Weight {
  int e = 2;
  std::vector<int> lambda_part;  // sorted charge residues
  std::vector<int> alpha_coeffs;  // W_0..W_{e-1}

  /// <h_i, wt> = Lambda(h_i) + W_{i-1} - 2 W_i + W_{i+1}, indices mod e.
  int pairing(int i) const;
  int d_offset() const { return -alpha_coeffs.at(0); }
  Weight minus_alpha(int i) const;
  Weight plus_alpha(int i) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight highest_weight(const Multicharge& charge);
Weight weight_of(const Multipartition& mp, const Multicharge& charge);

enum class Letter : char { A = 'A', R = 'R' };

struct SignatureLetter {
  Node node;
  Letter kind;
  friend bool operator==(const SignatureLetter&, const SignatureLetter&) = default;
};

struct SignatureWord {
  std::vector<SignatureLetter> letters;
  std::vector<SignatureLetter> reduced;
  int epsilon = 0;
  int phi = 0;
  std::optional<Node> good_removable;
  std::optional<Node> good_addable;

  std::string word() const;
  std::string reduced_word() const;
};

/// Letters are the addable (A) and removable (R) i-nodes in reading order.
/// Adjacent pairs "A then R" cancel until the word has the form R...RA...A.
/// The good removable node is the last surviving R, the good addable node
/// the first surviving A.
SignatureWord signature(const Multipartition& mp, int i, const Multicharge& charge);

std::optional<Multipartition> e_tilde(const Multipartition& mp, int i, const Multicharge& charge);
std::optional<Multipartition> f_tilde(const Multipartition& mp, int i, const Multicharge& charge);
int epsilon(const Multipartition& mp, int i, const Multicharge& charge);
int phi(const Multipartition& mp, int i, const Multicharge& charge);

/// Membership in the connected component of the empty multipartition.
bool is_kleshchev(const Multipartition& mp, const Multicharge& charge);

struct CrystalVertex {
  Multipartition label;
  Weight weight;
  std::vector<int> epsilon;
  std::vector<int> phi;
};

struct CrystalEdge {
  std::size_t source;
  std::size_t target;
  int color;
  friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
};

/// The Kleshchev component truncated at a maximal size. Vertices are listed
/// by size, then lexicographically; vertex 0 is the empty multipartition.
class CrystalGraph {
 public:
  CrystalGraph(Multicharge charge, int depth);

  const Multicharge& charge() const noexcept { return charge_; }
  int depth() const noexcept { return depth_; }
  const std::vector<CrystalVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<CrystalEdge>& edges() const noexcept { return edges_; }
  std::vector<CrystalEdge>& mutable_edges() noexcept { return edges_; }
  std::vector<CrystalVertex>& mutable_vertices() noexcept { return vertices_; }

  std::optional<std::size_t> find(const Multipartition& mp) const;
  bool contains(const Multipartition& mp) const { return find(mp).has_value(); }
  /// Vertices of a given size, in graph order.
  std::vector<Multipartition> level(int n) const;

  std::size_t add_vertex(CrystalVertex vertex);
  void add_edge(CrystalEdge edge) { edges_.push_back(edge); }

 private:
  Multicharge charge_;
  int depth_;
  std::vector<CrystalVertex> vertices_;
  std::vector<CrystalEdge> edges_;
  std::map<Multipartition, std::size_t> index_;
};

inline constexpr std::size_t kDefaultVertexCap = 1'000'000;

/// Breadth-first closure of the empty multipartition under every f~_i.
CrystalGraph generate_crystal(const Multicharge& charge, int n_max,
                              std::size_t vertex_cap = kDefaultVertexCap);

struct AxiomViolation {
  Multipartition vertex;
  int color;
  std::string axiom;
  std::string detail;
};

/// Checks the crystal axioms and semiregularity on the stored data of the
/// graph (cached weights, epsilon/phi vectors and the edge list) against
/// each other and against the signature rule.
std::vector<AxiomViolation> check_axioms(const CrystalGraph& graph);

/// Number of f~-paths from the empty multipartition to mp.
BigInt count_paths(const CrystalGraph& graph, const Multipartition& mp);

/// Weight multiplicities of the irreducible highest-weight module L(Lambda)
/// by the Freudenthal formula, memoised on the root-lattice coordinates.
class FreudenthalOracle {
 public:
  explicit FreudenthalOracle(const Multicharge& charge, int depth_cap = 12);

  /// dim L(Lambda)_{Lambda - sum_j depth[j] alpha_j}; 0 outside the cone.
  BigInt multiplicity(const std::vector<int>& depth);
  BigInt multiplicity(const Weight& weight) { return multiplicity(weight.alpha_coeffs); }
  int depth_cap() const noexcept { return depth_cap_; }

 private:
  struct PositiveRoot {
    std::vector<int> coeffs;
    int multiplicity;
  };

  long long form(const std::vector<int>& a, const std::vector<int>& b) const;
  long long lambda_form(const std::vector<int>& a) const;

  int e_;
  int depth_cap_;
  std::vector<int> lambda_;
  std::vector<PositiveRoot> roots_;
  std::map<std::vector<int>, BigInt> memo_;
};

BigInt weight_multiplicity(const Multicharge& charge, const Weight& weight, int depth_cap = 12);

/// DOT rendering: vertices labelled by multipartition, edges by colour.
void write_dot(std::ostream& out, const CrystalGraph& graph);
/// One row per vertex: label, <h_i,wt>, epsilon vector, phi vector.
void write_listing(std::ostream& out, const CrystalGraph& graph, char separator = '\t');

}  // namespace kleshchev
