#include "kleshchev/branching.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace kleshchev;

namespace {
Multipartition mp(std::vector<std::vector<int>> parts) { return Multipartition::from_parts(parts); }
const Multicharge e2(2, {0});

const SimpleClass& find_class(const std::vector<SimpleClass>& classes, const Multipartition& label) {
  for (const auto& c : classes)
    if (c.label == label) return c;
  throw std::runtime_error("missing class");
}
}  // namespace

TEST_SUITE("branching") {

TEST_CASE("simple classes in Specht coordinates") {
  CanonicalAtlas atlas(e2);
  const auto c3 = simple_classes(atlas, 3);
  CHECK(find_class(c3, mp({{1, 1, 1}})).specht_coords == SpechtCombination{{mp({{1, 1, 1}}), 1}});
  CHECK(find_class(c3, mp({{2, 1}})).specht_coords == SpechtCombination{{mp({{2, 1}}), 1}});
  const auto c0 = simple_classes(atlas, 0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].specht_coords == SpechtCombination{{mp({{}}), 1}});
  // At n = 4 the coordinates invert the unitriangular block.
  const auto c4 = simple_classes(atlas, 4);
  CHECK(find_class(c4, mp({{2, 1, 1}})).specht_coords ==
        SpechtCombination{{mp({{2, 1, 1}}), 1}, {mp({{1, 1, 1, 1}}), -1}});
  CHECK(find_class(c4, mp({{1, 1, 1, 1}})).specht_coords == SpechtCombination{{mp({{1, 1, 1, 1}}), 1}});
}

TEST_CASE("coordinates invert the decomposition matrix") {
  for (const std::vector<int>& g : std::vector<std::vector<int>>{{0}, {0, 1}}) {
    CanonicalAtlas atlas(Multicharge(3, g));
    for (int n = 0; n <= 5; ++n) {
      const auto& m = atlas.matrix(n);
      for (const auto& cls : simple_classes(atlas, n)) {
        const auto back = specht_to_simples(cls.specht_coords, m);
        CHECK(back == std::map<Multipartition, BigInt>{{cls.label, 1}});
      }
    }
  }
}

TEST_CASE("restriction of Specht classes") {
  CHECK(restrict_specht(mp({{2, 1}}), 1, e2) == SpechtCombination{{mp({{1, 1}}), 1}, {mp({{2}}), 1}});
  for (int i = 0; i < 2; ++i) CHECK(restrict_specht(mp({{}}), i, e2).empty());
  CHECK(restrict_specht(mp({{1, 1}}), 0, e2).empty());
}

TEST_CASE("branching of simple classes") {
  CanonicalAtlas atlas(e2);
  auto r = branch_simple(mp({{2, 1}}), 1, atlas);
  CHECK(r.pass());
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].first == mp({{1, 1}}));
  CHECK(r.factors[0].second == 2);
  CHECK(r.socle_candidate == mp({{1, 1}}));
  CHECK(r.epsilon == 2);

  r = branch_simple(mp({{1}}), 0, atlas);
  CHECK(r.pass());
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].first == mp({{}}));
  CHECK(r.factors[0].second == 1);

  r = branch_simple(mp({{1, 1, 1}}), 1, atlas);
  CHECK(r.pass());
  CHECK(r.factors.empty());
  CHECK(r.epsilon == 0);

  CanonicalAtlas lv2(Multicharge(3, {0, 1}));
  for (const auto& single : {mp({{1}, {}}), mp({{}, {1}})}) {
    const int i = residue({single.component(1).size() ? 1 : 2, 1, 1}, lv2.charge());
    r = branch_simple(single, i, lv2);
    CHECK(r.pass());
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].first == Multipartition::empty(2));
  }
}

TEST_CASE("branching passes with exact multiplicities on a sample") {
  for (int e : {2, 3})
    for (const std::vector<int>& g : std::vector<std::vector<int>>{{0}, {0, 1}}) {
      CanonicalAtlas atlas(Multicharge(e, g));
      for (int n = 0; n <= 5; ++n)
        for (const auto& label : atlas.basis(n).labels())
          for (int i = 0; i < e; ++i) {
            const auto r = branch_simple(label, i, atlas);
            CHECK(r.pass());
            CHECK(r.uniqueness_ok);
            CHECK(r.multiplicity_ok);
          }
    }
}

TEST_CASE("dimensions of simple modules") {
  CanonicalAtlas atlas(e2);
  CHECK(dim_simple(mp({{2, 1}}), atlas) == 2);
  CHECK(dim_simple(mp({{1}}), atlas) == 1);
  CHECK(dim_simple(mp({{1, 1, 1}}), atlas) == 1);
  CHECK(dim_simple(mp({{2, 1, 1}}), atlas) == 2);
  const auto g = generate_crystal(e2, 4);
  for (int n = 0; n <= 4; ++n)
    for (const auto& label : g.level(n)) {
      const auto rep = verify_dim_bound(g, label, atlas);
      CHECK(rep.ok());
      CHECK(rep.dimension >= rep.paths);
    }
  const auto rep = verify_dim_bound(generate_crystal(e2, 3), mp({{2, 1}}), atlas);
  REQUIRE(rep.specht_dimension.has_value());
  CHECK(*rep.specht_dimension == 2);
  CHECK(rep.dimension == 2);
  CHECK(rep.paths == 1);
}

TEST_CASE("restriction dimensions add up") {
  for (const std::vector<int>& g : std::vector<std::vector<int>>{{0}, {0, 0}}) {
    CanonicalAtlas atlas(Multicharge(2, g));
    for (int n = 1; n <= 5; ++n)
      for (const auto& label : atlas.basis(n).labels()) CHECK_FALSE(check_restriction_dimension(label, atlas));
  }
}

TEST_CASE("branch report export") {
  CanonicalAtlas atlas(e2);
  std::vector<BranchReport> reports;
  for (const auto& label : atlas.basis(3).labels())
    for (int i = 0; i < 2; ++i) reports.push_back(branch_simple(label, i, atlas));
  std::ostringstream csv, table;
  write_branch_csv(csv, reports);
  CHECK(csv.str().find("3,\"[[2,1]]\",1,\"[[1,1]]\",2,0,\"[[1,1]] x2\",pass") != std::string::npos);
  write_branch_table(table, reports);
  CHECK(table.str().find("[[2,1]]") != std::string::npos);
  const auto j = branch_reports_json(reports);
  CHECK(j.find("composition-series") != std::string::npos);
}

}  // TEST_SUITE
