#include "kleshchev/branching.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace kleshchev {

std::vector<SimpleClass> simple_classes(CanonicalAtlas& atlas, int n) {
  const DecompositionMatrix& m = atlas.matrix(n);
  const auto& cols = m.columns();
  std::map<Multipartition, SpechtCombination> done;
  // [S^l] = [D^l] + sum_{k below l} d_{lk}(1) [D^k]; solve from the least
  // dominant column upwards.
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    const Multipartition& label = *it;
    SpechtCombination coords{{label, BigInt(1)}};
    const auto row = m.row_index(label);
    if (!row) throw std::logic_error("column " + to_string(label) + " has no matching row");
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] == label) continue;
      const BigInt d = m.entries()[*row][c].evaluate_at_one();
      if (d == 0) continue;
      auto below = done.find(cols[c]);
      if (below == done.end())
        throw std::logic_error("decomposition matrix is not unitriangular at (" + to_string(label) +
                               ", " + to_string(cols[c]) + ")");
      for (const auto& [mu, x] : below->second) coords[mu] -= d * x;
    }
    std::erase_if(coords, [](const auto& kv) { return kv.second == 0; });
    done.emplace(label, std::move(coords));
  }
  std::vector<SimpleClass> out;
  for (const auto& label : cols) out.push_back({label, done.at(label)});
  return out;
}

SpechtCombination restrict_specht(const Multipartition& mu, int i, const Multicharge& charge) {
  SpechtCombination out;
  for (const Node& b : boundary_nodes(mu, i, charge).removable) out[mu.without_node(b)] += 1;
  return out;
}

std::map<Multipartition, BigInt> specht_to_simples(const SpechtCombination& combo,
                                                   const DecompositionMatrix& matrix) {
  std::map<Multipartition, BigInt> out;
  for (const auto& [mu, x] : combo) {
    const auto row = matrix.row_index(mu);
    if (!row) throw std::invalid_argument(to_string(mu) + " is not a row of the decomposition matrix");
    for (std::size_t c = 0; c < matrix.columns().size(); ++c) {
      const BigInt d = matrix.entries()[*row][c].evaluate_at_one();
      if (d != 0) out[matrix.columns()[c]] += x * d;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

const SimpleClass& class_of(const std::vector<SimpleClass>& classes, const Multipartition& label) {
  auto it = std::find_if(classes.begin(), classes.end(),
                         [&](const SimpleClass& s) { return s.label == label; });
  if (it == classes.end()) throw std::invalid_argument(to_string(label) + " is not a Kleshchev multipartition");
  return *it;
}

}  // namespace

BranchReport branch_simple(const Multipartition& label, int i, CanonicalAtlas& atlas) {
  const Multicharge& charge = atlas.charge();
  const int n = label.size();
  const auto classes = simple_classes(atlas, n);
  const SimpleClass& cls = class_of(classes, label);

  BranchReport report;
  report.label = label;
  report.i = i;
  report.epsilon = epsilon(label, i, charge);
  report.phi = phi(label, i, charge);
  report.e_tilde_label = e_tilde(label, i, charge);

  if (n > 0) {
    SpechtCombination restricted;
    for (const auto& [mu, x] : cls.specht_coords)
      for (const auto& [nu, y] : restrict_specht(mu, i, charge)) restricted[nu] += x * y;
    std::erase_if(restricted, [](const auto& kv) { return kv.second == 0; });
    for (auto& kv : specht_to_simples(restricted, atlas.matrix(n - 1))) report.factors.push_back(kv);
  }
  std::sort(report.factors.begin(), report.factors.end(),
            [](const auto& a, const auto& b) { return linear_dominance_less(b.first, a.first); });

  for (const auto& [nu, mult] : report.factors) {
    if (mult < 0) {
      report.uniqueness_ok = report.multiplicity_ok = false;
      report.reasons.push_back("negative multiplicity " + mult.str() + " at " + to_string(nu));
    }
  }

  const int eps = report.epsilon;
  if (report.factors.empty()) {
    if (eps != 0) {
      report.uniqueness_ok = report.multiplicity_ok = false;
      report.reasons.push_back("no composition factors although epsilon = " + std::to_string(eps));
    }
    return report;
  }
  if (eps == 0) {
    report.uniqueness_ok = report.multiplicity_ok = false;
    report.reasons.push_back("composition factors present although epsilon = 0");
    return report;
  }

  const Multipartition& down = *report.e_tilde_label;
  auto hit = std::find_if(report.factors.begin(), report.factors.end(),
                          [&](const auto& f) { return f.first == down; });
  if (hit == report.factors.end()) {
    report.uniqueness_ok = report.multiplicity_ok = false;
    report.reasons.push_back(to_string(down) + " is not a composition factor");
    return report;
  }
  report.socle_candidate = down;
  if (epsilon(down, i, charge) != eps - 1) {
    report.uniqueness_ok = false;
    report.reasons.push_back("epsilon of " + to_string(down) + " is not epsilon - 1");
  }
  for (const auto& [nu, mult] : report.factors) {
    if (nu == down) continue;
    if (epsilon(nu, i, charge) >= eps - 1) {
      report.uniqueness_ok = false;
      report.reasons.push_back("factor " + to_string(nu) + " has epsilon " +
                               std::to_string(epsilon(nu, i, charge)) + " >= " + std::to_string(eps - 1));
    }
  }
  if (hit->second != eps) {
    report.multiplicity_ok = false;
    report.reasons.push_back(to_string(down) + " occurs " + hit->second.str() + " times, expected " +
                             std::to_string(eps));
  }
  return report;
}

BigInt dim_simple(const Multipartition& label, CanonicalAtlas& atlas) {
  const auto classes = simple_classes(atlas, label.size());
  BigInt dim = 0;
  for (const auto& [mu, x] : class_of(classes, label).specht_coords) dim += x * standard_tableaux_count(mu);
  if (dim <= 0) throw std::logic_error("nonpositive dimension " + dim.str() + " for D^" + to_string(label));
  return dim;
}

DimBoundReport verify_dim_bound(const CrystalGraph& graph, const Multipartition& label,
                                CanonicalAtlas& atlas) {
  DimBoundReport r{label, dim_simple(label, atlas), count_paths(graph, label), std::nullopt};
  r.bound_ok = r.dimension >= r.paths;
  const CanonicalBasisElement* g = atlas.basis(label.size()).find(label);
  if (g && g->vector.terms().size() == 1) {
    r.specht_dimension = standard_tableaux_count(label);
    r.equality_ok = *r.specht_dimension == r.dimension;
  }
  return r;
}

std::optional<std::string> check_restriction_dimension(const Multipartition& label,
                                                       CanonicalAtlas& atlas) {
  const Multicharge& charge = atlas.charge();
  const int n = label.size();
  if (n == 0) return std::nullopt;
  const auto classes = simple_classes(atlas, n);

  BigInt expected = 0;
  for (const auto& [mu, x] : class_of(classes, label).specht_coords)
    for (const Node& b : mu.removable_nodes()) expected += x * standard_tableaux_count(mu.without_node(b));

  const auto lower = simple_classes(atlas, n - 1);
  BigInt total = 0;
  for (int i = 0; i < charge.e(); ++i) {
    for (const auto& [nu, mult] : branch_simple(label, i, atlas).factors) {
      BigInt dim = 0;
      for (const auto& [mu, x] : class_of(lower, nu).specht_coords) dim += x * standard_tableaux_count(mu);
      total += mult * dim;
    }
  }
  if (total == expected) return std::nullopt;
  return "restriction of D^" + to_string(label) + " has dimension " + total.str() + " over simples but " +
         expected.str() + " over Specht shapes";
}

// ---------------------------------------------------------------------------
// Export

namespace {

std::string factor_text(const BranchReport& r) {
  std::string out;
  for (const auto& [nu, mult] : r.factors) {
    if (!out.empty()) out += "; ";
    out += to_string(nu);
    if (mult != 1) out += " x" + mult.str();
  }
  return out.empty() ? "-" : out;
}

std::string verdict_text(const BranchReport& r) {
  if (r.pass()) return "pass";
  std::string out = "fail";
  if (!r.uniqueness_ok) out += " (uniqueness)";
  if (!r.multiplicity_ok) out += " (multiplicity)";
  return out;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

void write_branch_csv(std::ostream& out, const std::vector<BranchReport>& reports) {
  out << "n,label,i,e_tilde,epsilon,phi,factors,verdict\n";
  for (const auto& r : reports) {
    out << r.label.size() << ',' << quoted(to_string(r.label)) << ',' << r.i << ','
        << quoted(r.e_tilde_label ? to_string(*r.e_tilde_label) : "-") << ',' << r.epsilon << ',' << r.phi
        << ',' << quoted(factor_text(r)) << ',' << verdict_text(r) << '\n';
  }
}

void write_branch_table(std::ostream& out, const std::vector<BranchReport>& reports) {
  const std::vector<std::string> head{"n", "label", "i", "e~label", "eps", "phi", "factors", "verdict"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports)
    rows.push_back({std::to_string(r.label.size()), to_string(r.label), std::to_string(r.i),
                    r.e_tilde_label ? to_string(*r.e_tilde_label) : "-", std::to_string(r.epsilon),
                    std::to_string(r.phi), factor_text(r), verdict_text(r)});
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c + 1 == row.size())
        out << row[c];
      else
        out << std::left << std::setw(static_cast<int>(width[c] + 2)) << row[c];
    }
    out << '\n';
  };
  emit(head);
  for (const auto& row : rows) emit(row);
}

std::string branch_reports_json(const std::vector<BranchReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["n"] = r.label.size();
    j["label"] = r.label.to_parts();
    j["i"] = r.i;
    j["e_tilde"] = r.e_tilde_label ? nlohmann::json(r.e_tilde_label->to_parts()) : nlohmann::json(nullptr);
    j["epsilon"] = r.epsilon;
    j["phi"] = r.phi;
    j["factors"] = nlohmann::json::array();
    for (const auto& [nu, mult] : r.factors) j["factors"].push_back({{"label", nu.to_parts()}, {"multiplicity", mult.str()}});
    j["socle_candidate"] =
        r.socle_candidate ? nlohmann::json(r.socle_candidate->to_parts()) : nlohmann::json(nullptr);
    j["uniqueness_ok"] = r.uniqueness_ok;
    j["multiplicity_ok"] = r.multiplicity_ok;
    j["reasons"] = r.reasons;
    j["verdict"] = verdict_text(r);
    arr.push_back(std::move(j));
  }
  return nlohmann::json{{"format", "kleshchev-branch-report"}, {"note", kBranchProxyNote}, {"reports", arr}}.dump();
}

}  // namespace kleshchev
