#include "kleshchev/cache.hpp"
#include "kleshchev/canonical.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace kleshchev;

namespace {
Multipartition mp(std::vector<std::vector<int>> parts) { return Multipartition::from_parts(parts); }
const Multicharge e2(2, {0});
const LaurentPoly v = LaurentPoly::monomial(1);

FockVector combo(std::initializer_list<std::pair<std::vector<std::vector<int>>, LaurentPoly>> terms,
                 const Multicharge& ch = e2) {
  FockVector out(ch);
  for (const auto& [p, c] : terms) out.add_term(mp(p), c);
  return out;
}

oracle::Vec to_oracle(const FockVector& x) {
  oracle::Vec out;
  for (const auto& [m, c] : x.terms()) {
    oracle::Poly p;
    for (const auto& [k, a] : c.terms()) p[k] = static_cast<long long>(a);
    out[m.component(1).parts()] = p;
  }
  return out;
}

/// Level-one canonical basis rebuilt by the oracle: its own Fock action along
/// the library's peel words, then brute-force elimination.
std::map<std::vector<int>, oracle::Vec> oracle_basis(int e, int n, const std::vector<Multipartition>& labels) {
  std::vector<Multipartition> sorted = labels;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return linear_dominance_less(b, a); });
  std::map<std::vector<int>, oracle::Vec> known;
  for (const auto& label : sorted) {
    oracle::Vec a{{{}, {{0, 1}}}};
    for (const auto& step : peel_word(label, Multicharge(e, {0}))) {
      for (int t = 0; t < step.power; ++t) a = oracle::f(step.residue, a, e, 0);
      for (auto& [mu, c] : a) c = oracle::divide(c, oracle::quantum_factorial(step.power));
    }
    known[label.component(1).parts()] = oracle::eliminate(a, label.component(1).parts(), known);
  }
  (void)n;
  return known;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("kleshchev-test-" + std::to_string(std::hash<std::string>{}(std::to_string(reinterpret_cast<std::uintptr_t>(this)))));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};
}  // namespace

TEST_SUITE("canonical") {

TEST_CASE("monomials") {
  CHECK(monomial_vector(mp({{1, 1}}), e2) == combo({{{{1, 1}}, 1}, {{{2}}, v}}));
  CHECK(monomial_vector(mp({{}}), e2) == FockVector::vacuum(e2));
  CHECK(monomial_vector(mp({{2, 1}}), e2) == combo({{{{2, 1}}, 1}}));
  CHECK(peel_word(mp({{2, 1}}), e2) == std::vector<MonomialStep>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(peel_word(mp({{2}}), e2), std::invalid_argument);
  // The peel monomial need not be unitriangular.
  CHECK_THROWS_AS(monomial_vector(mp({{4, 2, 1}}), Multicharge(3, {0})), ConventionError);
}

TEST_CASE("small canonical bases") {
  auto b2 = canonical_basis(e2, 2);
  REQUIRE(b2.elements().size() == 1);
  CHECK(b2.elements()[0].vector == combo({{{{1, 1}}, 1}, {{{2}}, v}}));

  auto b0 = canonical_basis(e2, 0);
  REQUIRE(b0.elements().size() == 1);
  CHECK(b0.elements()[0].vector == FockVector::vacuum(e2));

  auto b3 = canonical_basis(e2, 3);
  REQUIRE(b3.find(mp({{2, 1}})));
  CHECK(b3.find(mp({{2, 1}}))->vector == combo({{{{2, 1}}, 1}}));
  CHECK(b3.find(mp({{1, 1, 1}}))->vector == combo({{{{1, 1, 1}}, 1}, {{{3}}, v}}));
  CHECK(b3.findings().empty());
}

TEST_CASE("closed forms reproduced by brute-force elimination") {
  for (int n : {2, 3}) {
    const auto basis = canonical_basis(e2, n);
    const auto oracle = oracle_basis(2, n, basis.labels());
    for (const auto& el : basis.elements()) CHECK(to_oracle(el.vector) == oracle.at(el.label.component(1).parts()));
  }
  const auto want11 = oracle::Vec{{{1, 1}, {{0, 1}}}, {{2}, {{1, 1}}}};
  CHECK(oracle_basis(2, 2, {mp({{1, 1}})}).at({1, 1}) == want11);
}

TEST_CASE("level one bases agree with the oracle") {
  for (int e : {2, 3})
    for (int n = 0; n <= 6; ++n) {
      const auto basis = canonical_basis(Multicharge(e, {0}), n);
      const auto oracle = oracle_basis(e, n, basis.labels());
      for (const auto& el : basis.elements()) CHECK(to_oracle(el.vector) == oracle.at(el.label.component(1).parts()));
    }
}

TEST_CASE("known e = 2 decomposition numbers at n = 4") {
  const auto m = decomposition_matrix(e2, 4);
  CHECK(m.entry(mp({{4}}), mp({{1, 1, 1, 1}})) == LaurentPoly::monomial(2));
  CHECK(m.entry(mp({{3, 1}}), mp({{1, 1, 1, 1}})) == v);
  CHECK(m.entry(mp({{2, 1, 1}}), mp({{1, 1, 1, 1}})) == v);
  CHECK(m.entry(mp({{2, 2}}), mp({{2, 1, 1}})) == v);
  CHECK(m.entry(mp({{3, 1}}), mp({{2, 1, 1}})) == LaurentPoly::monomial(2));
  CHECK(m.invariant_violations().empty());
}

TEST_CASE("decomposition matrices at v = 1") {
  const auto m3 = decomposition_matrix(e2, 3);
  REQUIRE(m3.rows() == std::vector<Multipartition>{mp({{3}}), mp({{2, 1}}), mp({{1, 1, 1}})});
  REQUIRE(m3.columns() == std::vector<Multipartition>{mp({{2, 1}}), mp({{1, 1, 1}})});
  const std::vector<std::vector<int>> want{{0, 1}, {1, 0}, {0, 1}};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(m3.at_one(m3.rows()[r], m3.columns()[c]) == want[r][c]);

  const auto m2 = decomposition_matrix(e2, 2);
  CHECK(m2.at_one(mp({{2}}), mp({{1, 1}})) == 1);
  CHECK(m2.at_one(mp({{1, 1}}), mp({{1, 1}})) == 1);

  const auto m1 = decomposition_matrix(Multicharge(3, {0, 1}), 1);
  CHECK(m1.columns().size() == 2);
  for (const auto& c : m1.columns()) CHECK(m1.at_one(c, c) == 1);
}

TEST_CASE("shape invariants on the grid") {
  for (int e : {2, 3, 4})
    for (const std::vector<int>& g : std::vector<std::vector<int>>{{0}, {0, 0}, {0, 1}})
      for (int n = 0; n <= 6; ++n) {
        const auto basis = canonical_basis(Multicharge(e, g), n);
        CHECK(basis.findings().empty());
        CHECK(DecompositionMatrix::from_basis(basis).invariant_violations().empty());
      }
}

TEST_CASE("the mirrored reading direction is reported as a convention problem") {
  CHECK_THROWS_AS(canonical_basis(Multicharge(2, {0}, ReadingDirection::top_down), 2), ConventionError);
}

TEST_CASE("expansion in the canonical basis") {
  const auto b = canonical_basis(e2, 2);
  const auto g = b.elements()[0].vector;
  auto coords = expand_in_canonical(g, b);
  REQUIRE(coords.size() == 1);
  CHECK(coords.begin()->second == LaurentPoly(1));
  CHECK(expand_in_canonical(combo({{{{1, 1}}, 1}, {{{2}}, v}}), b).at(mp({{1, 1}})) == LaurentPoly(1));
  CHECK_THROWS_AS(expand_in_canonical(combo({{{{2}}, 1}}), b), OutsideSpanError);
  try {
    expand_in_canonical(combo({{{{2}}, 1}}), b);
  } catch (const OutsideSpanError& err) {
    CHECK(err.residual() == combo({{{{2}}, 1}}));
  }
}

TEST_CASE("Kashiwara expansions") {
  CanonicalAtlas atlas(e2);
  auto r = check_kashiwara_expansion(1, mp({{2, 1}}), atlas);
  CHECK(r.ok());
  CHECK(r.e_expansion.size() == 1);
  CHECK(r.e_expansion.at(mp({{1, 1}})) == LaurentPoly(1));
  r = check_kashiwara_expansion(1, mp({{1, 1}}), atlas);
  CHECK(r.ok());
  CHECK(r.f_expansion.at(mp({{2, 1}})) == quantum_integer(2));
  for (int i = 0; i < 2; ++i) CHECK(check_kashiwara_expansion(i, mp({{}}), atlas).e_expansion.empty());
}

TEST_CASE("projective expansions") {
  CanonicalAtlas atlas(e2);
  auto p = projective_branch_expansion(1, mp({{1, 1}}), atlas, Generator::f);
  CHECK(p.ok());
  REQUIRE(p.terms.size() == 1);
  CHECK(p.terms[0].first == mp({{2, 1}}));
  CHECK(p.terms[0].second == 2);
  CHECK(projective_branch_expansion(1, mp({{}}), atlas, Generator::f).terms.empty());
  p = projective_branch_expansion(1, mp({{2, 1}}), atlas, Generator::e);
  CHECK(p.ok());
  REQUIRE(p.terms.size() == 1);
  CHECK(p.terms[0].first == mp({{1, 1}}));
  CHECK(p.terms[0].second == 1);
}

TEST_CASE("matrix serialisation") {
  const auto m = decomposition_matrix(Multicharge(3, {0, 1}), 4);
  const auto text = to_json_text(m);
  const auto back = decomposition_matrix_from_json(text);
  CHECK(back == m);
  CHECK(to_json_text(back) == text);
  CHECK_THROWS(decomposition_matrix_from_json("{\"format\":\"other\"}"));

  std::ostringstream csv;
  write_csv(csv, decomposition_matrix(e2, 2));
  CHECK(csv.str() == "row,\"[[1,1]]\"\n\"[[2]]\",v\n\"[[1,1]]\",1\n");
  std::ostringstream ones;
  write_csv(ones, decomposition_matrix(e2, 2), true);
  CHECK(ones.str() == "row,\"[[1,1]]\"\n\"[[2]]\",1\n\"[[1,1]]\",1\n");
}

TEST_CASE("disk cache") {
  TempDir dir;
  const Multicharge ch(3, {0, 1});
  const auto key = CacheKey::make(ch, 4);
  CHECK(key == CacheKey::make(ch, 4));
  CHECK_FALSE(key == CacheKey::make(ch, 5));
  CHECK_FALSE(key == CacheKey::make(ch.with_direction(ReadingDirection::top_down), 4));
  CHECK_FALSE(key == CacheKey::make(Multicharge(3, {0, 2}), 4));
  CHECK_FALSE(key == CacheKey::make(ch, 4, "0.9.0"));

  const std::string payload = to_json_text(decomposition_matrix(ch, 4));
  cache_store(dir.path, key, payload);
  CHECK(cache_load(dir.path, key) == payload);
  CHECK_FALSE(cache_load(dir.path, CacheKey::make(ch, 4, "0.9.0")).has_value());

  // Flip one byte of the payload.
  const auto file = dir.path / (key.digest + ".matrix");
  std::string bytes;
  {
    std::ifstream in(file, std::ios::binary);
    bytes.assign(std::istreambuf_iterator<char>(in), {});
  }
  bytes[bytes.size() - 3] ^= 1;
  {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out << bytes;
  }
  CHECK_THROWS_AS(cache_load(dir.path, key), CacheCorruption);
}

TEST_CASE("atlas reads through the cache") {
  TempDir dir;
  const Multicharge ch(2, {0, 1});
  std::string cold;
  {
    CanonicalAtlas atlas(ch, dir.path);
    cold = to_json_text(atlas.matrix(5));
    CHECK(atlas.cache_hits() == 0);
  }
  CanonicalAtlas warm(ch, dir.path);
  CHECK(to_json_text(warm.matrix(5)) == cold);
  CHECK(warm.cache_hits() == 1);
  const auto& a = warm.basis(5).elements();
  const auto fresh = canonical_basis(ch, 5);
  const auto& b = fresh.elements();
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].vector == b[k].vector);
}

}  // TEST_SUITE
