#include "kleshchev/crystal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace kleshchev {

// ---------------------------------------------------------------------------
// Weights

int Weight::pairing(int i) const {
  auto at = [&](int j) { return alpha_coeffs[static_cast<std::size_t>(((j % e) + e) % e)]; };
  int lam = static_cast<int>(std::count(lambda_part.begin(), lambda_part.end(), ((i % e) + e) % e));
  return lam + at(i - 1) - 2 * at(i) + at(i + 1);
}

Weight Weight::minus_alpha(int i) const {
  Weight w = *this;
  ++w.alpha_coeffs.at(static_cast<std::size_t>(((i % e) + e) % e));
  return w;
}

Weight Weight::plus_alpha(int i) const {
  Weight w = *this;
  --w.alpha_coeffs.at(static_cast<std::size_t>(((i % e) + e) % e));
  return w;
}

Weight highest_weight(const Multicharge& charge) {
  Weight w;
  w.e = charge.e();
  w.lambda_part = charge.gamma();
  std::sort(w.lambda_part.begin(), w.lambda_part.end());
  w.alpha_coeffs.assign(static_cast<std::size_t>(charge.e()), 0);
  return w;
}

Weight weight_of(const Multipartition& mp, const Multicharge& charge) {
  Weight w = highest_weight(charge);
  w.alpha_coeffs = residue_counts(mp, charge).counts;
  return w;
}

// ---------------------------------------------------------------------------
// Signature rule

std::string SignatureWord::word() const {
  std::string s;
  for (const auto& l : letters) s += static_cast<char>(l.kind);
  return s;
}

std::string SignatureWord::reduced_word() const {
  std::string s;
  for (const auto& l : reduced) s += static_cast<char>(l.kind);
  return s;
}

SignatureWord signature(const Multipartition& mp, int i, const Multicharge& charge) {
  BoundaryNodes nodes = boundary_nodes(mp, i, charge);
  SignatureWord sig;
  sig.letters.reserve(nodes.addable.size() + nodes.removable.size());
  for (const Node& n : nodes.addable) sig.letters.push_back({n, Letter::A});
  for (const Node& n : nodes.removable) sig.letters.push_back({n, Letter::R});
  std::sort(sig.letters.begin(), sig.letters.end(),
            [dir = charge.direction()](const SignatureLetter& a, const SignatureLetter& b) {
              return reading_precedes(a.node, b.node, dir);
            });

  for (const auto& letter : sig.letters) {
    if (letter.kind == Letter::R && !sig.reduced.empty() && sig.reduced.back().kind == Letter::A)
      sig.reduced.pop_back();
    else
      sig.reduced.push_back(letter);
  }
  for (const auto& letter : sig.reduced) {
    if (letter.kind == Letter::R) {
      ++sig.epsilon;
      sig.good_removable = letter.node;
    } else {
      if (sig.phi == 0) sig.good_addable = letter.node;
      ++sig.phi;
    }
  }
  return sig;
}

std::optional<Multipartition> e_tilde(const Multipartition& mp, int i, const Multicharge& charge) {
  SignatureWord sig = signature(mp, i, charge);
  if (!sig.good_removable) return std::nullopt;
  return mp.without_node(*sig.good_removable);
}

std::optional<Multipartition> f_tilde(const Multipartition& mp, int i, const Multicharge& charge) {
  SignatureWord sig = signature(mp, i, charge);
  if (!sig.good_addable) return std::nullopt;
  return mp.with_node(*sig.good_addable);
}

int epsilon(const Multipartition& mp, int i, const Multicharge& charge) {
  return signature(mp, i, charge).epsilon;
}

int phi(const Multipartition& mp, int i, const Multicharge& charge) {
  return signature(mp, i, charge).phi;
}

bool is_kleshchev(const Multipartition& mp, const Multicharge& charge) {
  check_compatible(mp, charge);
  Multipartition current = mp;
  while (current.size() > 0) {
    // One colour with epsilon > 0 suffices: f~ e~ is the identity there.
    std::optional<Multipartition> next;
    for (int i = 0; i < charge.e() && !next; ++i) next = e_tilde(current, i, charge);
    if (!next) return false;
    current = std::move(*next);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Crystal graph

CrystalGraph::CrystalGraph(Multicharge charge, int depth)
    : charge_(std::move(charge)), depth_(depth) {}

std::optional<std::size_t> CrystalGraph::find(const Multipartition& mp) const {
  auto it = index_.find(mp);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Multipartition> CrystalGraph::level(int n) const {
  std::vector<Multipartition> out;
  for (const auto& v : vertices_)
    if (v.label.size() == n) out.push_back(v.label);
  return out;
}

std::size_t CrystalGraph::add_vertex(CrystalVertex vertex) {
  auto [it, inserted] = index_.emplace(vertex.label, vertices_.size());
  if (inserted) vertices_.push_back(std::move(vertex));
  return it->second;
}

namespace {

CrystalVertex make_vertex(const Multipartition& mp, const Multicharge& charge) {
  CrystalVertex v{mp, weight_of(mp, charge), {}, {}};
  for (int i = 0; i < charge.e(); ++i) {
    SignatureWord sig = signature(mp, i, charge);
    v.epsilon.push_back(sig.epsilon);
    v.phi.push_back(sig.phi);
  }
  return v;
}

}  // namespace

CrystalGraph generate_crystal(const Multicharge& charge, int n_max, std::size_t vertex_cap) {
  if (n_max < 0) throw std::invalid_argument("generate_crystal: n_max must be >= 0");
  CrystalGraph graph(charge, n_max);
  graph.add_vertex(make_vertex(Multipartition::empty(charge.level()), charge));

  std::vector<Multipartition> frontier{Multipartition::empty(charge.level())};
  for (int n = 0; n < n_max; ++n) {
    std::set<Multipartition> next;
    std::vector<std::tuple<Multipartition, int, Multipartition>> arrows;
    for (const auto& mp : frontier) {
      for (int i = 0; i < charge.e(); ++i) {
        if (auto target = f_tilde(mp, i, charge)) {
          next.insert(*target);
          arrows.emplace_back(mp, i, std::move(*target));
        }
      }
    }
    if (graph.vertices().size() + next.size() > vertex_cap)
      throw ResourceCapExceeded("crystal generation exceeded the vertex cap of " +
                                std::to_string(vertex_cap) + " at size " + std::to_string(n + 1));
    for (const auto& mp : next) graph.add_vertex(make_vertex(mp, charge));
    for (const auto& [src, color, dst] : arrows)
      graph.add_edge({*graph.find(src), *graph.find(dst), color});
    frontier.assign(next.begin(), next.end());
  }
  return graph;
}

std::vector<AxiomViolation> check_axioms(const CrystalGraph& graph) {
  const Multicharge& charge = graph.charge();
  const int e = charge.e();
  const auto& verts = graph.vertices();
  std::vector<AxiomViolation> report;
  auto flag = [&](std::size_t v, int i, std::string axiom, std::string detail) {
    report.push_back({verts[v].label, i, std::move(axiom), std::move(detail)});
  };

  std::map<std::pair<std::size_t, int>, std::size_t> out_edge, in_edge;
  for (const auto& edge : graph.edges()) {
    if (edge.source >= verts.size() || edge.target >= verts.size() || edge.color < 0 ||
        edge.color >= e) {
      report.push_back({Multipartition::empty(charge.level()), edge.color, "(4)",
                        "edge refers to a vertex or colour outside the graph"});
      continue;
    }
    if (!out_edge.emplace(std::pair{edge.source, edge.color}, edge.target).second)
      flag(edge.source, edge.color, "(4)", "two outgoing edges of the same colour");
    if (!in_edge.emplace(std::pair{edge.target, edge.color}, edge.source).second)
      flag(edge.target, edge.color, "(4)", "two incoming edges of the same colour");
  }

  for (std::size_t v = 0; v < verts.size(); ++v) {
    const CrystalVertex& vert = verts[v];
    if (vert.weight != weight_of(vert.label, charge))
      flag(v, -1, "wt", "cached weight differs from the residue content");
    for (int i = 0; i < e; ++i) {
      const int eps = vert.epsilon[static_cast<std::size_t>(i)];
      const int ph = vert.phi[static_cast<std::size_t>(i)];
      if (eps < 0 || ph < 0) flag(v, i, "(5)", "epsilon or phi is negative");
      if (ph - eps != vert.weight.pairing(i))
        flag(v, i, "(1)",
             "phi - epsilon = " + std::to_string(ph - eps) + " but <h_i,wt> = " +
                 std::to_string(vert.weight.pairing(i)));

      // Semiregularity against repeated application of the operators.
      int steps = 0;
      for (auto cur = e_tilde(vert.label, i, charge); cur; cur = e_tilde(*cur, i, charge)) ++steps;
      if (steps != eps)
        flag(v, i, "semiregular",
             "epsilon = " + std::to_string(eps) + " but e~ applies " + std::to_string(steps) + " times");
      steps = 0;
      for (auto cur = f_tilde(vert.label, i, charge); cur; cur = f_tilde(*cur, i, charge)) ++steps;
      if (steps != ph)
        flag(v, i, "semiregular",
             "phi = " + std::to_string(ph) + " but f~ applies " + std::to_string(steps) + " times");

      // Closure: every e~ target and every in-range f~ target is an edge.
      if (eps > 0 && !in_edge.contains({v, i}))
        flag(v, i, "(2)", "epsilon > 0 but no incoming edge");
      if (ph > 0 && vert.label.size() < graph.depth() && !out_edge.contains({v, i}))
        flag(v, i, "(3)", "phi > 0 but no outgoing edge");
      if (ph == 0 && out_edge.contains({v, i})) flag(v, i, "(3)", "phi = 0 but an outgoing edge exists");
    }
  }

  for (const auto& [key, dst] : out_edge) {
    const auto [src, i] = key;
    const CrystalVertex& a = verts[src];
    const CrystalVertex& b = verts[dst];
    const auto ii = static_cast<std::size_t>(i);
    if (b.weight != a.weight.minus_alpha(i) || b.epsilon[ii] != a.epsilon[ii] + 1 ||
        b.phi[ii] != a.phi[ii] - 1)
      flag(src, i, "(3)", "f~ target " + to_string(b.label) + " has inconsistent wt/epsilon/phi");
    if (a.weight != b.weight.plus_alpha(i) || a.epsilon[ii] != b.epsilon[ii] - 1 ||
        a.phi[ii] != b.phi[ii] + 1)
      flag(dst, i, "(2)", "e~ target " + to_string(a.label) + " has inconsistent wt/epsilon/phi");
    auto f = f_tilde(a.label, i, charge);
    auto back = e_tilde(b.label, i, charge);
    if (!f || *f != b.label)
      flag(src, i, "(4)", "edge to " + to_string(b.label) + " is not f~ of its source");
    if (!back || *back != a.label)
      flag(dst, i, "(4)", "e~ of " + to_string(b.label) + " is not the edge source");
  }
  return report;
}

BigInt count_paths(const CrystalGraph& graph, const Multipartition& mp) {
  auto target = graph.find(mp);
  if (!target) throw std::invalid_argument(to_string(mp) + " is not a vertex of the crystal");
  const auto& verts = graph.vertices();
  std::vector<std::vector<std::size_t>> incoming(verts.size());
  for (const auto& edge : graph.edges()) incoming[edge.target].push_back(edge.source);

  std::vector<std::size_t> order(verts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return verts[a].label.size() < verts[b].label.size();
  });
  std::vector<BigInt> paths(verts.size(), 0);
  for (std::size_t v : order) {
    if (verts[v].label.size() == 0) {
      paths[v] = 1;
      continue;
    }
    for (std::size_t u : incoming[v]) paths[v] += paths[u];
  }
  return paths[*target];
}

// ---------------------------------------------------------------------------
// Freudenthal multiplicities

FreudenthalOracle::FreudenthalOracle(const Multicharge& charge, int depth_cap)
    : e_(charge.e()), depth_cap_(depth_cap) {
  for (int i = 0; i < e_; ++i) lambda_.push_back(charge.lambda_at(i));
  // Real positive roots: n*delta plus a proper cyclic interval of residues.
  for (int n = 0; n * e_ < depth_cap_; ++n) {
    for (int start = 0; start < e_; ++start) {
      for (int len = 1; len < e_; ++len) {
        if (n * e_ + len > depth_cap_) break;
        std::vector<int> c(static_cast<std::size_t>(e_), n);
        for (int t = 0; t < len; ++t) ++c[static_cast<std::size_t>((start + t) % e_)];
        roots_.push_back({std::move(c), 1});
      }
    }
  }
  // Imaginary roots n*delta with multiplicity e-1.
  for (int n = 1; n * e_ <= depth_cap_; ++n)
    roots_.push_back({std::vector<int>(static_cast<std::size_t>(e_), n), e_ - 1});
}

long long FreudenthalOracle::form(const std::vector<int>& a, const std::vector<int>& b) const {
  long long s = 0;
  for (int i = 0; i < e_; ++i) {
    for (int j = 0; j < e_; ++j) {
      int aij;
      if (i == j)
        aij = 2;
      else if (e_ == 2)
        aij = -2;
      else
        aij = ((i + 1) % e_ == j || (j + 1) % e_ == i) ? -1 : 0;
      s += static_cast<long long>(a[static_cast<std::size_t>(i)]) * aij * b[static_cast<std::size_t>(j)];
    }
  }
  return s;
}

long long FreudenthalOracle::lambda_form(const std::vector<int>& a) const {
  long long s = 0;
  for (int i = 0; i < e_; ++i) s += static_cast<long long>(lambda_[static_cast<std::size_t>(i)]) * a[static_cast<std::size_t>(i)];
  return s;
}

BigInt FreudenthalOracle::multiplicity(const std::vector<int>& depth) {
  if (static_cast<int>(depth.size()) != e_)
    throw std::invalid_argument("weight has the wrong number of root coordinates");
  int height = 0;
  for (int k : depth) {
    if (k < 0) return 0;
    height += k;
  }
  if (height == 0) return 1;
  if (height > depth_cap_)
    throw ResourceCapExceeded("weight depth " + std::to_string(height) + " exceeds the cap " +
                              std::to_string(depth_cap_));
  if (auto it = memo_.find(depth); it != memo_.end()) return it->second;

  // |Lambda+rho|^2 - |mu+rho|^2 for mu = Lambda - beta.
  long long lhs = -form(depth, depth);
  for (int j = 0; j < e_; ++j)
    lhs += 2LL * depth[static_cast<std::size_t>(j)] * (lambda_[static_cast<std::size_t>(j)] + 1);

  BigInt rhs = 0;
  for (const auto& root : roots_) {
    const long long root_norm = form(root.coeffs, root.coeffs);
    const long long base = lambda_form(root.coeffs) - form(depth, root.coeffs);
    std::vector<int> shifted = depth;
    for (int t = 1;; ++t) {
      bool inside = true;
      for (int j = 0; j < e_; ++j) {
        shifted[static_cast<std::size_t>(j)] -= root.coeffs[static_cast<std::size_t>(j)];
        if (shifted[static_cast<std::size_t>(j)] < 0) inside = false;
      }
      if (!inside) break;
      rhs += BigInt(2 * root.multiplicity) * (base + t * root_norm) * multiplicity(shifted);
    }
  }

  BigInt result = 0;
  if (lhs == 0) {
    if (rhs != 0) throw std::logic_error("Freudenthal recursion: degenerate denominator");
  } else {
    if (rhs % lhs != 0) throw std::logic_error("Freudenthal recursion: non-integral multiplicity");
    result = rhs / lhs;
  }
  memo_.emplace(depth, result);
  return result;
}

BigInt weight_multiplicity(const Multicharge& charge, const Weight& weight, int depth_cap) {
  FreudenthalOracle oracle(charge, depth_cap);
  return oracle.multiplicity(weight);
}

// ---------------------------------------------------------------------------
// Export

void write_dot(std::ostream& out, const CrystalGraph& graph) {
  out << "digraph crystal {\n";
  const auto& verts = graph.vertices();
  for (std::size_t v = 0; v < verts.size(); ++v)
    out << "  v" << v << " [label=\"" << to_string(verts[v].label) << "\"];\n";
  for (const auto& edge : graph.edges())
    out << "  v" << edge.source << " -> v" << edge.target << " [label=\"" << edge.color << "\"];\n";
  out << "}\n";
}

namespace {
std::string join(const std::vector<int>& values) {
  std::string s = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += ';';
    s += std::to_string(values[k]);
  }
  return s + "]";
}
}  // namespace

void write_listing(std::ostream& out, const CrystalGraph& graph, char sep) {
  const int e = graph.charge().e();
  out << "vertex" << sep << "size" << sep << "wt_pairing" << sep << "epsilon" << sep << "phi\n";
  for (const auto& v : graph.vertices()) {
    std::vector<int> pairing;
    for (int i = 0; i < e; ++i) pairing.push_back(v.weight.pairing(i));
    std::string label = to_string(v.label);
    if (sep == ',') label = "\"" + label + "\"";
    out << label << sep << v.label.size() << sep << join(pairing) << sep << join(v.epsilon) << sep
        << join(v.phi) << '\n';
  }
}

}  // namespace kleshchev
