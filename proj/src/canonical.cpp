#include "kleshchev/canonical.hpp"

#include "kleshchev/cache.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>

namespace kleshchev {

namespace {

bool more_dominant_first(const Multipartition& a, const Multipartition& b) {
  return linear_dominance_less(b, a);
}

/// Bar-symmetric polynomial agreeing with p in every non-positive degree.
LaurentPoly bar_symmetric_part(const LaurentPoly& p) {
  LaurentPoly c;
  for (const auto& [k, coeff] : p.terms()) {
    if (k > 0) break;
    c += LaurentPoly::monomial(k, coeff);
    if (k < 0) c += LaurentPoly::monomial(-k, coeff);
  }
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomials

std::vector<MonomialStep> peel_word(const Multipartition& mp, const Multicharge& charge) {
  check_compatible(mp, charge);
  std::vector<MonomialStep> steps;
  Multipartition current = mp;
  while (current.size() > 0) {
    int residue = -1, eps = 0;
    for (int i = 0; i < charge.e(); ++i) {
      eps = epsilon(current, i, charge);
      if (eps > 0) {
        residue = i;
        break;
      }
    }
    if (residue < 0)
      throw std::invalid_argument(to_string(mp) + " is not a Kleshchev multipartition");
    for (int t = 0; t < eps; ++t) current = *e_tilde(current, residue, charge);
    steps.push_back({residue, eps});
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

namespace {
FockVector apply_word(const std::vector<MonomialStep>& word, const Multicharge& charge) {
  FockVector vec = FockVector::vacuum(charge);
  for (const auto& step : word) vec = divided_power(Generator::f, step.residue, step.power, vec);
  return vec;
}
}  // namespace

FockVector monomial_vector(const Multipartition& mp, const Multicharge& charge) {
  FockVector vec = apply_word(peel_word(mp, charge), charge);
  if (vec.coeff(mp) != LaurentPoly(1))
    throw ConventionError("monomial of " + to_string(mp) + " has leading coefficient " +
                          to_string(vec.coeff(mp)));
  return vec;
}

// ---------------------------------------------------------------------------
// Canonical basis

CanonicalBasis::CanonicalBasis(Multicharge charge, int n, std::vector<CanonicalBasisElement> elements)
    : charge_(std::move(charge)), n_(n), elements_(std::move(elements)) {
  for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k].label, k);
}

const CanonicalBasisElement* CanonicalBasis::find(const Multipartition& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? nullptr : &elements_[it->second];
}

std::vector<Multipartition> CanonicalBasis::labels() const {
  std::vector<Multipartition> out;
  for (const auto& el : elements_) out.push_back(el.label);
  return out;
}

CanonicalBasis canonical_basis(const Multicharge& charge, int n) {
  if (n < 0) throw std::invalid_argument("canonical_basis: n must be >= 0");
  std::vector<Multipartition> kp = generate_crystal(charge, n).level(n);
  std::sort(kp.begin(), kp.end(), linear_dominance_less);

  // Phase 1, least dominant label first: reduce each monomial below its label
  // so that it reads label + (terms sorting above the label). The lowest term
  // of a bar-invariant vector always has a bar-symmetric coefficient.
  std::map<Multipartition, FockVector> reduced;
  std::map<Multipartition, std::vector<MonomialStep>> traces;
  const std::size_t cap = 10 * kp.size() + 10;
  for (const auto& label : kp) {
    auto word = peel_word(label, charge);
    FockVector vec = apply_word(word, charge);
    for (std::size_t iter = 0;; ++iter) {
      if (iter >= cap)
        throw ConventionError("reduction of A(" + to_string(label) + ") did not terminate");
      const Multipartition* lowest = nullptr;
      for (const auto& [mu, c] : vec.terms())
        if (!lowest || linear_dominance_less(mu, *lowest)) lowest = &mu;
      if (!lowest || linear_dominance_less(label, *lowest))
        throw ConventionError("A(" + to_string(label) + ") has no term at its label");
      const Multipartition mu = *lowest;
      const LaurentPoly c = vec.coeff(mu);
      if (mu == label) {
        if (c != LaurentPoly(1))
          throw ConventionError("A(" + to_string(label) + ") reduces to leading coefficient " +
                                to_string(c));
        break;
      }
      auto it = reduced.find(mu);
      if (it == reduced.end())
        throw ConventionError("A(" + to_string(label) + ") has a lowest term at " + to_string(mu) +
                              ", which is not Kleshchev");
      if (!c.is_bar_symmetric())
        throw ConventionError("A(" + to_string(label) + ") has a lowest coefficient " + to_string(c) +
                              " that is not bar-symmetric");
      vec -= c * it->second;
    }
    reduced.emplace(label, std::move(vec));
    traces.emplace(label, std::move(word));
  }

  // Phase 2, most dominant label first: clear the least dominant offending
  // coefficient first; subtracting a multiple of G_v(mu) only touches mu and
  // labels sorting above it.
  std::reverse(kp.begin(), kp.end());
  std::vector<CanonicalBasisElement> done;
  std::map<Multipartition, std::size_t> where;
  std::vector<std::string> findings;
  for (const auto& label : kp) {
    CanonicalBasisElement el{label, std::move(reduced.at(label)), std::move(traces.at(label))};
    for (std::size_t iter = 0;; ++iter) {
      const Multipartition* offender = nullptr;
      for (const auto& [mu, c] : el.vector.terms()) {
        if (mu == label || c.in_positive_v_span()) continue;
        if (!offender || linear_dominance_less(mu, *offender)) offender = &mu;
      }
      if (!offender) break;
      if (iter >= cap)
        throw ConventionError("elimination for " + to_string(label) + " did not terminate");
      const Multipartition mu = *offender;
      auto it = where.find(mu);
      if (it == where.end())
        throw ConventionError("G_v(" + to_string(label) + ") needs a correction at " +
                              to_string(mu) + ", which is not Kleshchev");
      const LaurentPoly c = bar_symmetric_part(el.vector.coeff(mu));
      el.vector -= c * done[it->second].vector;
    }
    for (const auto& [mu, c] : el.vector.terms()) {
      if (mu != label && dominance_compare(mu, label) != Dominance::greater)
        findings.push_back("G_v(" + to_string(label) + ") has support at " + to_string(mu) +
                           ", which does not dominate the label");
    }
    where.emplace(label, done.size());
    done.push_back(std::move(el));
  }

  CanonicalBasis basis(charge, n, std::move(done));
  for (auto& note : findings) basis.add_finding(std::move(note));
  return basis;
}

// ---------------------------------------------------------------------------
// Decomposition matrices

DecompositionMatrix::DecompositionMatrix(Multicharge charge, int n, std::vector<Multipartition> rows,
                                         std::vector<Multipartition> columns,
                                         std::vector<std::vector<LaurentPoly>> entries)
    : charge_(std::move(charge)),
      n_(n),
      rows_(std::move(rows)),
      columns_(std::move(columns)),
      entries_(std::move(entries)) {
  if (entries_.size() != rows_.size()) throw std::invalid_argument("decomposition matrix: row count mismatch");
  for (const auto& row : entries_)
    if (row.size() != columns_.size())
      throw std::invalid_argument("decomposition matrix: column count mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) row_index_.emplace(rows_[r], r);
  for (std::size_t c = 0; c < columns_.size(); ++c) column_index_.emplace(columns_[c], c);
}

DecompositionMatrix DecompositionMatrix::from_basis(const CanonicalBasis& basis) {
  auto rows = multipartitions_of(basis.size(), basis.charge().level());
  std::sort(rows.begin(), rows.end(), more_dominant_first);
  std::vector<Multipartition> cols = basis.labels();
  std::vector<std::vector<LaurentPoly>> entries(rows.size(), std::vector<LaurentPoly>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      entries[r][c] = basis.elements()[c].vector.coeff(rows[r]);
  return DecompositionMatrix(basis.charge(), basis.size(), std::move(rows), std::move(cols),
                             std::move(entries));
}

std::optional<std::size_t> DecompositionMatrix::row_index(const Multipartition& mp) const {
  auto it = row_index_.find(mp);
  if (it == row_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> DecompositionMatrix::column_index(const Multipartition& mp) const {
  auto it = column_index_.find(mp);
  if (it == column_index_.end()) return std::nullopt;
  return it->second;
}

const LaurentPoly& DecompositionMatrix::entry(const Multipartition& row, const Multipartition& column) const {
  auto r = row_index(row);
  auto c = column_index(column);
  if (!r || !c) throw std::out_of_range("decomposition matrix has no entry for " + to_string(row) +
                                        ", " + to_string(column));
  return entries_[*r][*c];
}

BigInt DecompositionMatrix::at_one(const Multipartition& row, const Multipartition& column) const {
  return entry(row, column).evaluate_at_one();
}

std::vector<std::string> DecompositionMatrix::invariant_violations() const {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    const auto& label = columns_[c];
    const auto diag = row_index(label);
    if (!diag || entries_[*diag][c] != LaurentPoly(1))
      out.push_back("d_{ll} != 1 for " + to_string(label));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const LaurentPoly& d = entries_[r][c];
      if (d.is_zero() || rows_[r] == label) continue;
      const std::string where = "d(" + to_string(rows_[r]) + ", " + to_string(label) + ") = " + to_string(d);
      if (dominance_compare(rows_[r], label) != Dominance::greater)
        out.push_back(where + ": row does not strictly dominate the column");
      if (!d.in_positive_v_span()) out.push_back(where + ": not in vZ[v]");
      if (!d.has_nonnegative_coefficients()) out.push_back(where + ": negative coefficient");
    }
  }
  return out;
}

CanonicalBasis DecompositionMatrix::to_basis() const {
  std::vector<CanonicalBasisElement> elements;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    CanonicalBasisElement el{columns_[c], FockVector(charge_), peel_word(columns_[c], charge_)};
    el.vector.set_homogeneous_size(n_);
    for (std::size_t r = 0; r < rows_.size(); ++r) el.vector.add_term(rows_[r], entries_[r][c]);
    elements.push_back(std::move(el));
  }
  return CanonicalBasis(charge_, n_, std::move(elements));
}

DecompositionMatrix decomposition_matrix(const Multicharge& charge, int n) {
  return DecompositionMatrix::from_basis(canonical_basis(charge, n));
}

namespace {
std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

nlohmann::json integer_json(const BigInt& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max())
    return static_cast<long long>(value);
  return value.str();
}
}  // namespace

void write_csv(std::ostream& out, const DecompositionMatrix& m, bool at_one) {
  out << "row";
  for (const auto& col : m.columns()) out << ',' << csv_quote(to_string(col));
  out << '\n';
  for (std::size_t r = 0; r < m.rows().size(); ++r) {
    out << csv_quote(to_string(m.rows()[r]));
    for (std::size_t c = 0; c < m.columns().size(); ++c) {
      const LaurentPoly& d = m.entries()[r][c];
      out << ',';
      if (at_one)
        out << d.evaluate_at_one();
      else
        out << to_string(d);
    }
    out << '\n';
  }
}

std::string to_json_text(const DecompositionMatrix& m) {
  nlohmann::json j;
  j["format"] = "kleshchev-decomposition-matrix";
  j["engine"] = std::string(kEngineVersion);
  j["e"] = m.charge().e();
  j["charge"] = m.charge().gamma();
  j["convention"] = to_string(m.charge().direction());
  j["n"] = m.size();
  j["rows"] = nlohmann::json::array();
  for (const auto& r : m.rows()) j["rows"].push_back(r.to_parts());
  j["columns"] = nlohmann::json::array();
  for (const auto& c : m.columns()) j["columns"].push_back(c.to_parts());
  j["entries"] = nlohmann::json::array();
  j["entries_at_one"] = nlohmann::json::array();
  for (const auto& row : m.entries()) {
    nlohmann::json text = nlohmann::json::array(), ones = nlohmann::json::array();
    for (const auto& d : row) {
      text.push_back(to_string(d));
      ones.push_back(integer_json(d.evaluate_at_one()));
    }
    j["entries"].push_back(std::move(text));
    j["entries_at_one"].push_back(std::move(ones));
  }
  return j.dump();
}

DecompositionMatrix decomposition_matrix_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  if (j.value("format", "") != "kleshchev-decomposition-matrix")
    throw std::invalid_argument("not a decomposition matrix document");
  Multicharge charge(j.at("e").get<int>(), j.at("charge").get<std::vector<int>>(),
                     parse_reading_direction(j.at("convention").get<std::string>()));
  std::vector<Multipartition> rows, cols;
  for (const auto& r : j.at("rows")) rows.push_back(Multipartition::from_parts(r.get<std::vector<std::vector<int>>>()));
  for (const auto& c : j.at("columns")) cols.push_back(Multipartition::from_parts(c.get<std::vector<std::vector<int>>>()));
  std::vector<std::vector<LaurentPoly>> entries;
  for (const auto& row : j.at("entries")) {
    std::vector<LaurentPoly> parsed;
    for (const auto& d : row) parsed.push_back(parse_laurent(d.get<std::string>()));
    entries.push_back(std::move(parsed));
  }
  return DecompositionMatrix(std::move(charge), j.at("n").get<int>(), std::move(rows), std::move(cols),
                             std::move(entries));
}

// ---------------------------------------------------------------------------
// Atlas

CanonicalAtlas::CanonicalAtlas(Multicharge charge, std::optional<std::filesystem::path> cache_dir)
    : charge_(std::move(charge)), cache_dir_(std::move(cache_dir)) {}

CanonicalAtlas::Entry& CanonicalAtlas::ensure(int n) {
  std::lock_guard lock(mutex_);
  if (auto it = entries_.find(n); it != entries_.end()) return it->second;
  Entry entry;
  if (cache_dir_) {
    const CacheKey key = CacheKey::make(charge_, n);
    if (auto payload = cache_load(*cache_dir_, key)) {
      auto m = decomposition_matrix_from_json(*payload);
      if (m.charge() != charge_ || m.size() != n)
        throw CacheCorruption("cache entry " + key.digest + " describes a different configuration");
      entry.matrix = std::make_unique<DecompositionMatrix>(std::move(m));
      entry.basis = std::make_unique<CanonicalBasis>(entry.matrix->to_basis());
      ++cache_hits_;
    }
  }
  if (!entry.matrix) {
    entry.basis = std::make_unique<CanonicalBasis>(canonical_basis(charge_, n));
    entry.matrix = std::make_unique<DecompositionMatrix>(DecompositionMatrix::from_basis(*entry.basis));
    if (cache_dir_) cache_store(*cache_dir_, CacheKey::make(charge_, n), to_json_text(*entry.matrix));
  }
  return entries_.emplace(n, std::move(entry)).first->second;
}

const CanonicalBasis& CanonicalAtlas::basis(int n) { return *ensure(n).basis; }
const DecompositionMatrix& CanonicalAtlas::matrix(int n) { return *ensure(n).matrix; }

// ---------------------------------------------------------------------------
// Expansions

std::map<Multipartition, LaurentPoly> expand_in_canonical(const FockVector& vec,
                                                          const CanonicalBasis& basis) {
  std::map<Multipartition, LaurentPoly> out;
  FockVector residual = vec;
  while (!residual.is_zero()) {
    const Multipartition* lowest = nullptr;
    for (const auto& kv : residual.terms())
      if (!lowest || linear_dominance_less(kv.first, *lowest)) lowest = &kv.first;
    const Multipartition mu = *lowest;
    const CanonicalBasisElement* g = mu.size() == basis.size() ? basis.find(mu) : nullptr;
    if (!g)
      throw OutsideSpanError("vector is outside the span of the canonical basis; residual term at " +
                                 to_string(mu),
                             residual);
    const LaurentPoly c = residual.coeff(mu);
    out.emplace(mu, c);
    residual -= c * g->vector;
  }
  return out;
}

KashiwaraReport check_kashiwara_expansion(int i, const Multipartition& label, CanonicalAtlas& atlas) {
  const Multicharge& charge = atlas.charge();
  const int n = label.size();
  const CanonicalBasisElement* g = atlas.basis(n).find(label);
  if (!g) throw std::invalid_argument(to_string(label) + " is not a Kleshchev multipartition");

  KashiwaraReport report{label, i, {}, {}, {}};
  std::vector<int> eps(static_cast<std::size_t>(charge.e())), ph(eps.size());
  for (int j = 0; j < charge.e(); ++j) {
    eps[static_cast<std::size_t>(j)] = epsilon(label, j, charge);
    ph[static_cast<std::size_t>(j)] = phi(label, j, charge);
  }
  const auto ii = static_cast<std::size_t>(i);

  auto expand = [&](const FockVector& vec, int size, std::map<Multipartition, LaurentPoly>& into,
                    const char* side) {
    try {
      into = expand_in_canonical(vec, atlas.basis(size));
    } catch (const OutsideSpanError& err) {
      report.violations.push_back(std::string(side) + ": " + err.what());
    }
  };

  if (n > 0) expand(e_op(i, g->vector), n - 1, report.e_expansion, "e");
  expand(f_op(i, g->vector), n + 1, report.f_expansion, "f");

  const auto down = e_tilde(label, i, charge);
  if (down) {
    const LaurentPoly want = quantum_integer(ph[ii] + 1);
    auto it = report.e_expansion.find(*down);
    const LaurentPoly got = it == report.e_expansion.end() ? LaurentPoly{} : it->second;
    if (got != want)
      report.violations.push_back("e: coefficient of G_v(" + to_string(*down) + ") is " + to_string(got) +
                                  ", expected " + to_string(want));
  }
  for (const auto& [b, c] : report.e_expansion) {
    if (down && b == *down) continue;
    for (int j = 0; j < charge.e(); ++j) {
      if (phi(b, j, charge) < ph[static_cast<std::size_t>(j)] + charge.cartan(j, i))
        report.violations.push_back("e: term G_v(" + to_string(b) + ") violates the phi_" +
                                    std::to_string(j) + " bound");
    }
  }

  const auto up = f_tilde(label, i, charge);
  if (up) {
    const LaurentPoly want = quantum_integer(eps[ii] + 1);
    auto it = report.f_expansion.find(*up);
    const LaurentPoly got = it == report.f_expansion.end() ? LaurentPoly{} : it->second;
    if (got != want)
      report.violations.push_back("f: coefficient of G_v(" + to_string(*up) + ") is " + to_string(got) +
                                  ", expected " + to_string(want));
  }
  for (const auto& [b, c] : report.f_expansion) {
    if (up && b == *up) continue;
    for (int j = 0; j < charge.e(); ++j) {
      if (epsilon(b, j, charge) < eps[static_cast<std::size_t>(j)] + charge.cartan(j, i))
        report.violations.push_back("f: term G_v(" + to_string(b) + ") violates the epsilon_" +
                                    std::to_string(j) + " bound");
    }
  }
  return report;
}

ProjectiveExpansion projective_branch_expansion(int i, const Multipartition& label,
                                                CanonicalAtlas& atlas, Generator direction) {
  const Multicharge& charge = atlas.charge();
  const int n = label.size();
  const CanonicalBasisElement* g = atlas.basis(n).find(label);
  if (!g) throw std::invalid_argument(to_string(label) + " is not a Kleshchev multipartition");

  ProjectiveExpansion out{label, i, direction, {}, {}};
  const bool up = direction == Generator::f;
  if (!up && n == 0) return out;

  std::map<Multipartition, LaurentPoly> graded;
  try {
    graded = expand_in_canonical(up ? f_op(i, g->vector) : e_op(i, g->vector),
                                 atlas.basis(up ? n + 1 : n - 1));
  } catch (const OutsideSpanError& err) {
    out.violations.push_back(err.what());
    return out;
  }

  const auto leading = up ? f_tilde(label, i, charge) : e_tilde(label, i, charge);
  // The statistic that must jump by at least 2 on the non-leading terms.
  auto stat = [&](const Multipartition& mp) {
    return up ? epsilon(mp, i, charge) : phi(mp, i, charge);
  };
  const int base = stat(label);

  for (const auto& [b, c] : graded) {
    BigInt mult = c.evaluate_at_one();
    if (mult == 0) continue;
    if (mult < 0) out.violations.push_back("negative multiplicity at " + to_string(b));
    out.terms.emplace_back(b, mult);
  }
  std::stable_sort(out.terms.begin(), out.terms.end(), [&](const auto& a, const auto& b) {
    const bool la = leading && a.first == *leading, lb = leading && b.first == *leading;
    if (la != lb) return la;
    return more_dominant_first(a.first, b.first);
  });

  if (leading) {
    const BigInt want = base + 1;
    auto it = std::find_if(out.terms.begin(), out.terms.end(),
                           [&](const auto& t) { return t.first == *leading; });
    const BigInt got = it == out.terms.end() ? BigInt(0) : it->second;
    if (got != want)
      out.violations.push_back("leading label " + to_string(*leading) + " has multiplicity " +
                               got.str() + ", expected " + want.str());
  }
  for (const auto& [b, mult] : out.terms) {
    if (leading && b == *leading) continue;
    if (stat(b) < base + 2)
      out.violations.push_back("label " + to_string(b) + " breaks the gap-2 condition (" +
                               std::to_string(stat(b)) + " < " + std::to_string(base) + " + 2)");
  }
  return out;
}

}  // namespace kleshchev
