#pragma once

// Partitions, multipartitions, nodes and the residue colouring.
//
// Nodes are addressed 1-based as (component, row, column). A node (k,r,c)
// of a multipartition carries the residue (gamma_k + c - r) mod e.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kleshchev {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                            boost::multiprecision::et_off>;

enum class ReadingDirection { bottom_up, top_down };

std::string to_string(ReadingDirection dir);
ReadingDirection parse_reading_direction(std::string_view text);

/// Quantum characteristic e together with the charge (gamma_1..gamma_m).
///
/// The charge fixes the dominant weight Lambda = sum_k Lambda_{gamma_k} and
/// the residue colouring of nodes. The reading direction selects the order
/// in which i-nodes are scanned by the signature rule and the Fock action.
class Multicharge {
 public:
  Multicharge(int e, std::vector<int> gamma,
              ReadingDirection direction = ReadingDirection::bottom_up);

  int e() const noexcept { return e_; }
  int level() const noexcept { return static_cast<int>(gamma_.size()); }
  const std::vector<int>& gamma() const noexcept { return gamma_; }
  ReadingDirection direction() const noexcept { return direction_; }

  /// Lambda(h_i): number of charge entries equal to i.
  int lambda_at(int i) const;
  /// Generalised Cartan matrix of type A^{(1)}_{e-1}.
  int cartan(int i, int j) const;
  int reduce(long long value) const noexcept;

  Multicharge with_direction(ReadingDirection dir) const;
  std::string describe() const;

  friend bool operator==(const Multicharge&, const Multicharge&) = default;

 private:
  int e_;
  std::vector<int> gamma_;
  ReadingDirection direction_;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// Row length, 0 beyond the last row. Rows are 1-based.
  int row(int r) const noexcept;

  bool can_add(int r) const noexcept;
  bool can_remove(int r) const noexcept;
  Partition added(int r) const;
  Partition removed(int r) const;

  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Node {
  int component = 1;
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Node&, const Node&) = default;
};

class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  /// The empty multipartition with m components.
  static Multipartition empty(int m);
  static Multipartition from_parts(const std::vector<std::vector<int>>& parts);

  const std::vector<Partition>& components() const noexcept { return components_; }
  const Partition& component(int k) const { return components_.at(k - 1); }
  int level() const noexcept { return static_cast<int>(components_.size()); }
  int size() const noexcept { return size_; }

  bool contains(const Node& node) const noexcept;
  bool is_addable(const Node& node) const noexcept;
  bool is_removable(const Node& node) const noexcept;
  Multipartition with_node(const Node& node) const;
  Multipartition without_node(const Node& node) const;

  std::vector<Node> cells() const;
  std::vector<Node> removable_nodes() const;
  std::vector<Node> addable_nodes() const;

  /// Rows of every component padded with zeros to length `pad`, concatenated
  /// in component order 1..m.
  std::vector<int> padded(int pad) const;
  std::vector<std::vector<int>> to_parts() const;

  friend auto operator<=>(const Multipartition& a, const Multipartition& b) {
    return a.components_ <=> b.components_;
  }
  friend bool operator==(const Multipartition& a, const Multipartition& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Partition> components_;
  int size_ = 0;
};

/// Nested-array text form, e.g. [[2,1],[1]].
std::string to_string(const Multipartition& mp);
std::string to_string(const Node& node);
Multipartition parse_multipartition(std::string_view text);

int residue(const Node& node, const Multicharge& charge);
void check_compatible(const Multipartition& mp, const Multicharge& charge);

/// Strict reading order used by the signature rule. bottom_up scans the last
/// component first and each component from its bottom row upwards.
bool reading_precedes(const Node& a, const Node& b, ReadingDirection dir) noexcept;

struct BoundaryNodes {
  std::vector<Node> addable;
  std::vector<Node> removable;
};

BoundaryNodes boundary_nodes(const Multipartition& mp, int i, const Multicharge& charge);

/// W_i = number of i-nodes, indexed 0..e-1.
struct ResidueCounts {
  std::vector<int> counts;

  int operator[](int i) const { return counts.at(static_cast<std::size_t>(i)); }
  int total() const noexcept;
  friend bool operator==(const ResidueCounts&, const ResidueCounts&) = default;
  friend auto operator<=>(const ResidueCounts&, const ResidueCounts&) = default;
};

ResidueCounts residue_counts(const Multipartition& mp, const Multicharge& charge);

enum class Dominance { greater, less, equal, incomparable };
std::string to_string(Dominance d);

/// Dominance of multipartitions: compare all prefix sums of the rows taken
/// component by component (components 1..m). Throws on size or level mismatch.
Dominance dominance_compare(const Multipartition& a, const Multipartition& b);

/// Total order refining dominance: true when a sorts strictly below b.
bool linear_dominance_less(const Multipartition& a, const Multipartition& b);

BigInt standard_tableaux_count(const Multipartition& mp);

std::vector<Partition> partitions_of(int n);
/// All multipartitions of n with m components, in lexicographic order.
std::vector<Multipartition> multipartitions_of(int n, int m);

struct MultipartitionHash {
  std::size_t operator()(const Multipartition& mp) const noexcept;
};

}  // namespace kleshchev
