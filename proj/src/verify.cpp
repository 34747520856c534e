#include "kleshchev/verify.hpp"

#include <json.hpp>

#include <iomanip>
#include <set>

namespace kleshchev {

namespace {

constexpr std::size_t kKeptFailures = 20;

SuiteResult start(std::string name, const Multicharge& charge) {
  SuiteResult r;
  r.name = std::move(name);
  r.configuration = charge.describe();
  return r;
}

bool default_convention(const Multicharge& charge) {
  return charge.direction() == ReadingDirection::bottom_up;
}

/// Runs a suite that depends on the canonical basis. Convention errors are
/// always labelled; under the non-default reading direction every failure
/// is moved to the labelled convention findings.
SuiteResult guarded(std::string name, CanonicalAtlas& atlas, const std::function<void(SuiteResult&)>& body) {
  SuiteResult r = start(std::move(name), atlas.charge());
  const std::string label = "convention finding [" + to_string(atlas.charge().direction()) + "]: ";
  try {
    body(r);
  } catch (const ConventionError& err) {
    r.convention_findings.push_back(label + err.what());
  } catch (const std::exception& err) {
    r.fail(std::string("aborted: ") + err.what());
  }
  if (!default_convention(atlas.charge()) && r.failure_count > 0) {
    for (const auto& f : r.failures) r.convention_findings.push_back(label + f);
    if (r.failure_count > r.failures.size())
      r.convention_findings.push_back(label + std::to_string(r.failure_count - r.failures.size()) +
                                      " further failures");
    r.failures.clear();
    r.failure_count = 0;
  }
  return r;
}

std::vector<Multipartition> kleshchev_level(CanonicalAtlas& atlas, int n) {
  return atlas.basis(n).labels();
}

}  // namespace

void SuiteResult::fail(std::string what) {
  ++failure_count;
  if (failures.size() < kKeptFailures) failures.push_back(std::move(what));
}

VerifyLimits VerifyLimits::uniform(int n) {
  VerifyLimits l;
  l.crystal = l.character = l.relations = l.canonical = l.branching = l.dimension = n;
  l.kashiwara = l.projective = std::max(0, n - 1);
  return l;
}

SuiteResult verify_crystal(const Multicharge& charge, int n_max, std::size_t vertex_cap) {
  SuiteResult r = start("crystal axioms", charge);
  const CrystalGraph graph = generate_crystal(charge, n_max, vertex_cap);
  r.checked = graph.vertices().size();
  for (const auto& v : check_axioms(graph))
    r.fail(to_string(v.vertex) + " colour " + std::to_string(v.color) + ": " + v.axiom + " (" + v.detail + ")");
  return r;
}

SuiteResult verify_character(const Multicharge& charge, int depth) {
  SuiteResult r = start("character identity", charge);
  const CrystalGraph graph = generate_crystal(charge, depth);
  std::map<std::vector<int>, BigInt> counted;
  for (const auto& v : graph.vertices()) counted[v.weight.alpha_coeffs] += 1;

  FreudenthalOracle oracle(charge, std::max(depth, 1));
  const auto e = static_cast<std::size_t>(charge.e());
  std::vector<int> w(e, 0);
  // Every root-lattice depth vector with total at most `depth`.
  std::function<void(std::size_t, int)> walk = [&](std::size_t k, int left) {
    if (k == e) {
      ++r.checked;
      const BigInt expected = oracle.multiplicity(w);
      auto it = counted.find(w);
      const BigInt got = it == counted.end() ? BigInt(0) : it->second;
      if (got != expected) {
        std::string text = "depth vector [";
        for (std::size_t j = 0; j < e; ++j) text += (j ? ";" : "") + std::to_string(w[j]);
        r.fail(text + "]: " + got.str() + " Kleshchev labels, Freudenthal multiplicity " + expected.str());
      }
      return;
    }
    for (int x = 0; x <= left; ++x) {
      w[k] = x;
      walk(k + 1, left - x);
    }
    w[k] = 0;
  };
  walk(0, depth);
  return r;
}

SuiteResult verify_relations(const Multicharge& charge, int n_max) {
  SuiteResult r = start("quantum relations", charge);
  for (int n = 0; n <= n_max; ++n) r.checked += multipartitions_of(n, charge.level()).size();
  for (const auto& v : verify_commutators(charge, n_max))
    r.fail(v.relation + " at " + to_string(v.basis) + " (i=" + std::to_string(v.i) + ", j=" +
           std::to_string(v.j) + "): " + v.detail);
  for (const auto& v : verify_serre(charge, n_max))
    r.fail(v.relation + " at " + to_string(v.basis) + " (i=" + std::to_string(v.i) + ", j=" +
           std::to_string(v.j) + "): " + v.detail);
  return r;
}

SuiteResult verify_canonical(CanonicalAtlas& atlas, int n_max) {
  return guarded("canonical basis shape", atlas, [&](SuiteResult& r) {
    const CrystalGraph graph = generate_crystal(atlas.charge(), n_max);
    for (int n = 0; n <= n_max; ++n) {
      const CanonicalBasis& basis = atlas.basis(n);
      const DecompositionMatrix& m = atlas.matrix(n);
      r.checked += basis.elements().size();
      if (basis.elements().size() != graph.level(n).size())
        r.fail("n=" + std::to_string(n) + ": " + std::to_string(basis.elements().size()) +
               " basis vectors for " + std::to_string(graph.level(n).size()) + " Kleshchev labels");
      for (const auto& v : m.invariant_violations()) r.fail("n=" + std::to_string(n) + ": " + v);
      for (const auto& f : basis.findings()) r.fail("n=" + std::to_string(n) + ": " + f);
      for (const auto& el : basis.elements()) {
        const auto coords = expand_in_canonical(el.vector, basis);
        if (coords.size() != 1 || coords.begin()->first != el.label || coords.begin()->second != LaurentPoly(1))
          r.fail("expansion of G_v(" + to_string(el.label) + ") is not the identity");
      }
    }
  });
}

SuiteResult verify_kashiwara(CanonicalAtlas& atlas, int n_max) {
  return guarded("Kashiwara lemma", atlas, [&](SuiteResult& r) {
    for (int n = 0; n <= n_max; ++n)
      for (const auto& label : kleshchev_level(atlas, n))
        for (int i = 0; i < atlas.charge().e(); ++i) {
          ++r.checked;
          const auto rep = check_kashiwara_expansion(i, label, atlas);
          for (const auto& v : rep.violations) r.fail(to_string(label) + " i=" + std::to_string(i) + ": " + v);
        }
  });
}

SuiteResult verify_projective(CanonicalAtlas& atlas, int n_max) {
  return guarded("projective expansions", atlas, [&](SuiteResult& r) {
    for (int n = 0; n <= n_max; ++n)
      for (const auto& label : kleshchev_level(atlas, n))
        for (int i = 0; i < atlas.charge().e(); ++i)
          for (Generator g : {Generator::f, Generator::e}) {
            ++r.checked;
            const auto rep = projective_branch_expansion(i, label, atlas, g);
            for (const auto& v : rep.violations)
              r.fail(std::string(g == Generator::f ? "f" : "e") + "_" + std::to_string(i) + " G(" +
                     to_string(label) + "): " + v);
          }
  });
}

SuiteResult verify_branching(CanonicalAtlas& atlas, int n_max) {
  return guarded("modular branching", atlas, [&](SuiteResult& r) {
    std::size_t uniqueness = 0, multiplicity = 0;
    for (int n = 0; n <= n_max; ++n) {
      const auto labels = kleshchev_level(atlas, n);
      std::set<Multipartition> below;
      if (n > 0)
        for (auto& mp : kleshchev_level(atlas, n - 1)) below.insert(std::move(mp));
      for (const auto& label : labels)
        for (int i = 0; i < atlas.charge().e(); ++i) {
          ++r.checked;
          const auto rep = branch_simple(label, i, atlas);
          if (!rep.uniqueness_ok) ++uniqueness;
          if (!rep.multiplicity_ok) ++multiplicity;
          for (const auto& why : rep.reasons)
            r.fail(to_string(label) + " i=" + std::to_string(i) + ": " + why);
          if (rep.e_tilde_label && !below.count(*rep.e_tilde_label))
            r.fail(to_string(*rep.e_tilde_label) + " = e~_" + std::to_string(i) + to_string(label) +
                   " is not Kleshchev");
        }
    }
    r.notes.push_back("uniqueness failures: " + std::to_string(uniqueness));
    r.notes.push_back("multiplicity failures: " + std::to_string(multiplicity));
    r.notes.push_back(kBranchProxyNote);
  });
}

SuiteResult verify_dimension(CanonicalAtlas& atlas, int n_max) {
  return guarded("dimension bound", atlas, [&](SuiteResult& r) {
    const CrystalGraph graph = generate_crystal(atlas.charge(), n_max);
    std::size_t equalities = 0;
    for (int n = 0; n <= n_max; ++n)
      for (const auto& label : kleshchev_level(atlas, n)) {
        ++r.checked;
        const auto rep = verify_dim_bound(graph, label, atlas);
        if (!rep.bound_ok)
          r.fail("dim D^" + to_string(label) + " = " + rep.dimension.str() + " < " + rep.paths.str() + " paths");
        if (rep.specht_dimension) {
          ++equalities;
          if (!rep.equality_ok)
            r.fail("dim D^" + to_string(label) + " = " + rep.dimension.str() + " but G_v is the Specht vector of dimension " +
                   rep.specht_dimension->str());
        }
        if (auto bad = check_restriction_dimension(label, atlas)) r.fail(*bad);
      }
    r.notes.push_back("labels with G_v(l) = l: " + std::to_string(equalities));
  });
}

std::vector<SuiteResult> verify_all(CanonicalAtlas& atlas, const VerifyLimits& limits) {
  const Multicharge& charge = atlas.charge();
  return {verify_crystal(charge, limits.crystal, limits.vertex_cap),
          verify_character(charge, limits.character),
          verify_relations(charge, limits.relations),
          verify_canonical(atlas, limits.canonical),
          verify_kashiwara(atlas, limits.kashiwara),
          verify_projective(atlas, limits.projective),
          verify_branching(atlas, limits.branching),
          verify_dimension(atlas, limits.dimension)};
}

void write_suite_summary(std::ostream& out, const std::vector<SuiteResult>& results) {
  for (const auto& r : results) {
    out << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.name << " checked=" << r.checked
        << " failures=" << r.failure_count << " convention_findings=" << r.convention_findings.size() << '\n';
    for (const auto& f : r.failures) out << "    " << f << '\n';
    for (const auto& f : r.convention_findings) out << "    " << f << '\n';
    for (const auto& note : r.notes) out << "    note: " << note << '\n';
  }
}

std::string suite_results_json(const std::vector<SuiteResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results)
    arr.push_back({{"suite", r.name},
                   {"configuration", r.configuration},
                   {"passed", r.passed()},
                   {"checked", r.checked},
                   {"failure_count", r.failure_count},
                   {"failures", r.failures},
                   {"convention_findings", r.convention_findings},
                   {"notes", r.notes}});
  return arr.dump();
}

}  // namespace kleshchev
