#include "kleshchev/combinatorics.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kleshchev {

std::string to_string(ReadingDirection dir) {
  return dir == ReadingDirection::bottom_up ? "bottom_up" : "top_down";
}

ReadingDirection parse_reading_direction(std::string_view text) {
  if (text == "bottom_up") return ReadingDirection::bottom_up;
  if (text == "top_down") return ReadingDirection::top_down;
  throw std::invalid_argument("unknown reading direction: " + std::string(text));
}

// ---------------------------------------------------------------------------
// Multicharge

Multicharge::Multicharge(int e, std::vector<int> gamma, ReadingDirection direction)
    : e_(e), gamma_(std::move(gamma)), direction_(direction) {
  if (e_ < 2) throw std::invalid_argument("quantum characteristic e must be >= 2");
  if (gamma_.empty()) throw std::invalid_argument("charge must have at least one entry");
  for (int& g : gamma_) g = reduce(g);
}

int Multicharge::reduce(long long value) const noexcept {
  long long r = value % e_;
  return static_cast<int>(r < 0 ? r + e_ : r);
}

int Multicharge::lambda_at(int i) const {
  int r = reduce(i);
  return static_cast<int>(std::count(gamma_.begin(), gamma_.end(), r));
}

int Multicharge::cartan(int i, int j) const {
  i = reduce(i);
  j = reduce(j);
  if (i == j) return 2;
  if (e_ == 2) return -2;
  if (reduce(i + 1) == j || reduce(i - 1) == j) return -1;
  return 0;
}

Multicharge Multicharge::with_direction(ReadingDirection dir) const {
  return Multicharge(e_, gamma_, dir);
}

std::string Multicharge::describe() const {
  std::ostringstream out;
  out << "e=" << e_ << " charge=";
  for (std::size_t k = 0; k < gamma_.size(); ++k) out << (k ? "," : "") << gamma_[k];
  out << " convention=" << to_string(direction_);
  return out.str();
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (r > 0 && parts_[r] > parts_[r - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[r];
  }
}

int Partition::row(int r) const noexcept {
  if (r < 1 || r > length()) return 0;
  return parts_[static_cast<std::size_t>(r - 1)];
}

bool Partition::can_add(int r) const noexcept {
  if (r < 1 || r > length() + 1) return false;
  return r == 1 || row(r - 1) > row(r);
}

bool Partition::can_remove(int r) const noexcept {
  if (r < 1 || r > length()) return false;
  return row(r) > row(r + 1);
}

Partition Partition::added(int r) const {
  if (!can_add(r)) throw std::invalid_argument("row is not addable");
  Partition p = *this;
  if (r == length() + 1)
    p.parts_.push_back(1);
  else
    ++p.parts_[static_cast<std::size_t>(r - 1)];
  ++p.size_;
  return p;
}

Partition Partition::removed(int r) const {
  if (!can_remove(r)) throw std::invalid_argument("row is not removable");
  Partition p = *this;
  if (--p.parts_[static_cast<std::size_t>(r - 1)] == 0) p.parts_.pop_back();
  --p.size_;
  return p;
}

// ---------------------------------------------------------------------------
// Multipartition

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("multipartition needs a component");
  for (const auto& p : components_) size_ += p.size();
}

Multipartition Multipartition::empty(int m) {
  return Multipartition(std::vector<Partition>(static_cast<std::size_t>(m)));
}

Multipartition Multipartition::from_parts(const std::vector<std::vector<int>>& parts) {
  std::vector<Partition> comps;
  comps.reserve(parts.size());
  for (const auto& p : parts) comps.emplace_back(p);
  return Multipartition(std::move(comps));
}

bool Multipartition::contains(const Node& node) const noexcept {
  if (node.component < 1 || node.component > level()) return false;
  return node.col >= 1 && node.col <= component(node.component).row(node.row);
}

bool Multipartition::is_addable(const Node& node) const noexcept {
  if (node.component < 1 || node.component > level()) return false;
  const Partition& p = component(node.component);
  return p.can_add(node.row) && p.row(node.row) + 1 == node.col;
}

bool Multipartition::is_removable(const Node& node) const noexcept {
  if (node.component < 1 || node.component > level()) return false;
  const Partition& p = component(node.component);
  return p.can_remove(node.row) && p.row(node.row) == node.col;
}

Multipartition Multipartition::with_node(const Node& node) const {
  if (!is_addable(node)) throw std::invalid_argument("node " + to_string(node) + " is not addable");
  Multipartition mp = *this;
  auto& p = mp.components_[static_cast<std::size_t>(node.component - 1)];
  p = p.added(node.row);
  ++mp.size_;
  return mp;
}

Multipartition Multipartition::without_node(const Node& node) const {
  if (!is_removable(node))
    throw std::invalid_argument("node " + to_string(node) + " is not removable");
  Multipartition mp = *this;
  auto& p = mp.components_[static_cast<std::size_t>(node.component - 1)];
  p = p.removed(node.row);
  --mp.size_;
  return mp;
}

std::vector<Node> Multipartition::cells() const {
  std::vector<Node> out;
  for (int k = 1; k <= level(); ++k)
    for (int r = 1; r <= component(k).length(); ++r)
      for (int c = 1; c <= component(k).row(r); ++c) out.push_back({k, r, c});
  return out;
}

std::vector<Node> Multipartition::removable_nodes() const {
  std::vector<Node> out;
  for (int k = 1; k <= level(); ++k) {
    const Partition& p = component(k);
    for (int r = 1; r <= p.length(); ++r)
      if (p.can_remove(r)) out.push_back({k, r, p.row(r)});
  }
  return out;
}

std::vector<Node> Multipartition::addable_nodes() const {
  std::vector<Node> out;
  for (int k = 1; k <= level(); ++k) {
    const Partition& p = component(k);
    for (int r = 1; r <= p.length() + 1; ++r)
      if (p.can_add(r)) out.push_back({k, r, p.row(r) + 1});
  }
  return out;
}

std::vector<int> Multipartition::padded(int pad) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(pad * level()));
  for (const auto& p : components_)
    for (int r = 1; r <= pad; ++r) out.push_back(p.row(r));
  return out;
}

std::vector<std::vector<int>> Multipartition::to_parts() const {
  std::vector<std::vector<int>> out;
  for (const auto& p : components_) out.push_back(p.parts());
  return out;
}

std::string to_string(const Multipartition& mp) {
  std::string s = "[";
  for (int k = 1; k <= mp.level(); ++k) {
    if (k > 1) s += ',';
    s += '[';
    const auto& parts = mp.component(k).parts();
    for (std::size_t r = 0; r < parts.size(); ++r) {
      if (r) s += ',';
      s += std::to_string(parts[r]);
    }
    s += ']';
  }
  return s + "]";
}

std::string to_string(const Node& node) {
  return "(" + std::to_string(node.component) + "," + std::to_string(node.row) + "," +
         std::to_string(node.col) + ")";
}

Multipartition parse_multipartition(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument("malformed multipartition '" + std::string(text) + "': " + err.what());
  }
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("multipartition must be a non-empty nested array");
  std::vector<std::vector<int>> parts;
  for (const auto& comp : j) {
    if (!comp.is_array()) throw std::invalid_argument("multipartition component must be an array");
    parts.push_back(comp.get<std::vector<int>>());
    for (int x : parts.back())
      if (x <= 0) throw std::invalid_argument("multipartition parts must be positive");
  }
  return Multipartition::from_parts(parts);
}

// ---------------------------------------------------------------------------
// Residues and boundary nodes

int residue(const Node& node, const Multicharge& charge) {
  if (node.component < 1 || node.component > charge.level())
    throw std::invalid_argument("node component outside the charge");
  long long g = charge.gamma()[static_cast<std::size_t>(node.component - 1)];
  return charge.reduce(g + node.col - node.row);
}

void check_compatible(const Multipartition& mp, const Multicharge& charge) {
  if (mp.level() != charge.level())
    throw std::invalid_argument("multipartition " + to_string(mp) + " has " +
                                std::to_string(mp.level()) + " components, charge has " +
                                std::to_string(charge.level()));
}

bool reading_precedes(const Node& a, const Node& b, ReadingDirection dir) noexcept {
  if (a.component != b.component)
    return dir == ReadingDirection::bottom_up ? a.component > b.component
                                              : a.component < b.component;
  if (a.row != b.row)
    return dir == ReadingDirection::bottom_up ? a.row > b.row : a.row < b.row;
  return a.col < b.col;
}

BoundaryNodes boundary_nodes(const Multipartition& mp, int i, const Multicharge& charge) {
  check_compatible(mp, charge);
  const int res = charge.reduce(i);
  BoundaryNodes out;
  for (const Node& n : mp.addable_nodes())
    if (residue(n, charge) == res) out.addable.push_back(n);
  for (const Node& n : mp.removable_nodes())
    if (residue(n, charge) == res) out.removable.push_back(n);
  auto by_reading = [dir = charge.direction()](const Node& a, const Node& b) {
    return reading_precedes(a, b, dir);
  };
  std::sort(out.addable.begin(), out.addable.end(), by_reading);
  std::sort(out.removable.begin(), out.removable.end(), by_reading);
  return out;
}

int ResidueCounts::total() const noexcept {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

ResidueCounts residue_counts(const Multipartition& mp, const Multicharge& charge) {
  check_compatible(mp, charge);
  ResidueCounts w{std::vector<int>(static_cast<std::size_t>(charge.e()), 0)};
  for (int k = 1; k <= mp.level(); ++k) {
    const Partition& p = mp.component(k);
    for (int r = 1; r <= p.length(); ++r)
      for (int c = 1; c <= p.row(r); ++c)
        ++w.counts[static_cast<std::size_t>(residue({k, r, c}, charge))];
  }
  return w;
}

// ---------------------------------------------------------------------------
// Dominance

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::greater: return "greater";
    case Dominance::less: return "less";
    case Dominance::equal: return "equal";
    case Dominance::incomparable: return "incomparable";
  }
  return "?";
}

Dominance dominance_compare(const Multipartition& a, const Multipartition& b) {
  if (a.level() != b.level()) throw std::invalid_argument("dominance: level mismatch");
  if (a.size() != b.size()) throw std::invalid_argument("dominance: size mismatch");
  const int pad = std::max(1, a.size());
  const auto pa = a.padded(pad);
  const auto pb = b.padded(pad);
  bool ge = true, le = true;
  long long sa = 0, sb = 0;
  for (std::size_t t = 0; t < pa.size(); ++t) {
    sa += pa[t];
    sb += pb[t];
    if (sa < sb) ge = false;
    if (sa > sb) le = false;
  }
  if (ge && le) return Dominance::equal;
  if (ge) return Dominance::greater;
  if (le) return Dominance::less;
  return Dominance::incomparable;
}

bool linear_dominance_less(const Multipartition& a, const Multipartition& b) {
  const int pad = std::max({1, a.size(), b.size()});
  return a.padded(pad) < b.padded(pad);
}

// ---------------------------------------------------------------------------
// Counting

namespace {

BigInt count_tableaux(const Multipartition& mp, std::map<Multipartition, BigInt>& memo) {
  if (mp.size() == 0) return 1;
  if (auto it = memo.find(mp); it != memo.end()) return it->second;
  BigInt total = 0;
  // The entry n sits in some removable corner.
  for (const Node& corner : mp.removable_nodes())
    total += count_tableaux(mp.without_node(corner), memo);
  memo.emplace(mp, total);
  return total;
}

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

BigInt standard_tableaux_count(const Multipartition& mp) {
  std::map<Multipartition, BigInt> memo;
  return count_tableaux(mp, memo);
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multipartition> multipartitions_of(int n, int m) {
  if (m < 1) throw std::invalid_argument("multipartitions_of: level must be >= 1");
  std::vector<std::vector<Partition>> by_size;
  for (int s = 0; s <= n; ++s) by_size.push_back(partitions_of(s));

  std::vector<Multipartition> out;
  std::vector<Partition> current;
  std::function<void(int, int)> rec = [&](int k, int remaining) {
    if (k == m) {
      if (remaining == 0) out.emplace_back(current);
      return;
    }
    for (int s = 0; s <= remaining; ++s) {
      for (const auto& p : by_size[static_cast<std::size_t>(s)]) {
        current.push_back(p);
        rec(k + 1, remaining - s);
        current.pop_back();
      }
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t MultipartitionHash::operator()(const Multipartition& mp) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& p : mp.components()) {
    for (int part : p.parts()) h = (h ^ static_cast<std::size_t>(part)) * 0x100000001b3ULL;
    h = (h ^ 0xffU) * 0x100000001b3ULL;
  }
  return h;
}

}  // namespace kleshchev
