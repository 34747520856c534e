#include "kleshchev/crystal.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace kleshchev;

namespace {
Multipartition mp(std::vector<std::vector<int>> parts) { return Multipartition::from_parts(parts); }
const Multicharge e2(2, {0});

const std::vector<std::vector<int>> kCharges{{0}, {0, 0}, {0, 1}};
}  // namespace

TEST_SUITE("crystal") {

TEST_CASE("signature examples") {
  auto s = signature(mp({{1, 1}}), 1, e2);
  CHECK(s.word() == "RA");
  CHECK(s.reduced_word() == "RA");
  CHECK(s.epsilon == 1);
  CHECK(s.phi == 1);
  CHECK(s.good_removable == Node{1, 2, 1});
  CHECK(s.good_addable == Node{1, 1, 2});

  s = signature(mp({{2, 1}}), 1, e2);
  CHECK(s.word() == "RR");
  CHECK(s.epsilon == 2);
  CHECK(s.phi == 0);
  CHECK(s.good_removable == Node{1, 1, 2});

  for (int i = 0; i < 2; ++i) {
    s = signature(mp({{}}), i, e2);
    CHECK(s.epsilon == 0);
    CHECK_FALSE(s.good_removable.has_value());
  }
}

TEST_CASE("signature agrees with string reduction") {
  for (auto dir : {ReadingDirection::bottom_up, ReadingDirection::top_down})
    for (int e : {2, 3, 4})
      for (const auto& g : kCharges) {
        Multicharge ch(e, g, dir);
        const bool bottom_up = dir == ReadingDirection::bottom_up;
        for (int n = 0; n <= 5; ++n)
          for (const auto& m : multipartitions_of(n, ch.level()))
            for (int i = 0; i < e; ++i) {
              const auto s = signature(m, i, ch);
              const auto w = oracle::word(m.to_parts(), i, e, g, bottom_up);
              const auto red = oracle::reduce(w);
              CHECK(s.word() == oracle::letters(w));
              CHECK(s.reduced_word() == oracle::letters(red));
              CHECK(s.epsilon == oracle::count(red, 'R'));
              CHECK(s.phi == oracle::count(red, 'A'));
              oracle::Shape up, down;
              const auto f = f_tilde(m, i, ch);
              CHECK(f.has_value() == oracle::f_good(m.to_parts(), i, e, g, bottom_up, up));
              if (f) CHECK(f->to_parts() == up);
              const auto d = e_tilde(m, i, ch);
              CHECK(d.has_value() == oracle::e_good(m.to_parts(), i, e, g, bottom_up, down));
              if (d) CHECK(d->to_parts() == down);
            }
      }
}

TEST_CASE("Kashiwara operators on small shapes") {
  CHECK(e_tilde(mp({{1, 1}}), 1, e2) == mp({{1}}));
  for (int i = 0; i < 2; ++i) CHECK_FALSE(e_tilde(mp({{}}), i, e2).has_value());
  CHECK(e_tilde(*e_tilde(mp({{2, 1}}), 1, e2), 1, e2) == mp({{1}}));
  CHECK(f_tilde(mp({{}}), 0, e2) == mp({{1}}));
  CHECK(f_tilde(mp({{1}}), 1, e2) == mp({{1, 1}}));
  CHECK(f_tilde(mp({{1, 1}}), 1, e2) == mp({{2, 1}}));
  CHECK_FALSE(f_tilde(mp({{1}}), 0, e2).has_value());
}

TEST_CASE("weights") {
  CHECK(weight_of(mp({{2}}), e2).pairing(1) == 0);
  CHECK(weight_of(mp({{2, 1}}), e2).pairing(1) == -2);
  const Weight top = weight_of(mp({{}}), e2);
  CHECK(top == highest_weight(e2));
  CHECK(top.alpha_coeffs == std::vector<int>{0, 0});
  CHECK(top.pairing(0) == 1);
  CHECK(top.pairing(1) == 0);
  // phi - epsilon = <h_i, wt> on every multipartition.
  for (int e : {2, 3, 4})
    for (const auto& g : kCharges) {
      Multicharge ch(e, g);
      for (int n = 0; n <= 5; ++n)
        for (const auto& m : multipartitions_of(n, ch.level()))
          for (int i = 0; i < e; ++i)
            CHECK(phi(m, i, ch) - epsilon(m, i, ch) == weight_of(m, ch).pairing(i));
    }
}

TEST_CASE("crystal generation") {
  auto g = generate_crystal(e2, 2);
  std::set<Multipartition> labels;
  for (const auto& v : g.vertices()) labels.insert(v.label);
  CHECK(labels == std::set<Multipartition>{mp({{}}), mp({{1}}), mp({{1, 1}})});
  CHECK(generate_crystal(e2, 0).vertices().size() == 1);
  const auto level3 = generate_crystal(e2, 3).level(3);
  CHECK(std::set<Multipartition>(level3.begin(), level3.end()) ==
        std::set<Multipartition>{mp({{2, 1}}), mp({{1, 1, 1}})});
  CHECK_THROWS_AS(generate_crystal(Multicharge(3, {0, 1}), 8, 50), ResourceCapExceeded);
}

TEST_CASE("Kleshchev membership matches a breadth-first oracle") {
  CHECK(is_kleshchev(mp({{1, 1}}), e2));
  CHECK(is_kleshchev(mp({{}}), e2));
  CHECK_FALSE(is_kleshchev(mp({{2}}), e2));
  for (auto dir : {ReadingDirection::bottom_up, ReadingDirection::top_down})
    for (int e : {2, 3, 4})
      for (const auto& g : kCharges) {
        Multicharge ch(e, g, dir);
        const auto levels = oracle::bfs(e, g, 6, dir == ReadingDirection::bottom_up);
        const auto graph = generate_crystal(ch, 6);
        for (int n = 0; n <= 6; ++n) {
          std::set<oracle::Shape> got;
          for (const auto& m : graph.level(n)) got.insert(m.to_parts());
          CHECK(got == levels[static_cast<std::size_t>(n)]);
          for (const auto& m : multipartitions_of(n, ch.level()))
            CHECK(is_kleshchev(m, ch) == levels[static_cast<std::size_t>(n)].count(m.to_parts()) > 0);
        }
      }
}

TEST_CASE("restricted partitions at level one") {
  // e-restricted partitions: 2-restricted counts equal distinct-part counts.
  const std::vector<std::size_t> distinct{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
  const auto g = generate_crystal(e2, 10);
  for (int n = 0; n <= 10; ++n) CHECK(g.level(n).size() == distinct[static_cast<std::size_t>(n)]);
  const auto g3 = generate_crystal(Multicharge(3, {0}), 8);
  for (int n = 0; n <= 8; ++n)
    for (const auto& m : g3.level(n)) {
      const auto& rows = m.component(1).parts();
      for (std::size_t r = 0; r < rows.size(); ++r)
        CHECK(rows[r] - (r + 1 < rows.size() ? rows[r + 1] : 0) < 3);
    }
}

TEST_CASE("axiom checker") {
  CHECK(check_axioms(generate_crystal(e2, 8)).empty());
  CHECK(check_axioms(generate_crystal(e2, 0)).empty());

  auto g = generate_crystal(e2, 4);
  REQUIRE_FALSE(g.edges().empty());
  auto& edge = g.mutable_edges()[2];
  const Multipartition src = g.vertices()[edge.source].label;
  edge.color = 1 - edge.color;
  const auto report = check_axioms(g);
  REQUIRE_FALSE(report.empty());
  bool names_vertex = false;
  for (const auto& v : report) {
    CHECK_FALSE(v.axiom.empty());
    if (v.vertex == src) names_vertex = true;
  }
  CHECK(names_vertex);

  auto h = generate_crystal(Multicharge(3, {0, 1}), 4);
  h.mutable_vertices()[3].epsilon[0] += 1;
  CHECK_FALSE(check_axioms(h).empty());
}

TEST_CASE("path counts") {
  const auto g = generate_crystal(e2, 4);
  CHECK(count_paths(g, mp({{1, 1, 1}})) == 1);
  CHECK(count_paths(g, mp({{}})) == 1);
  CHECK(count_paths(g, mp({{2, 1}})) == 1);
  const auto h = generate_crystal(Multicharge(3, {0, 1}), 2);
  // [[],[1]] grows into [[],[1,1]], so [[1],[1]] has a single path.
  CHECK(count_paths(h, mp({{1}, {1}})) == 1);
  CHECK(count_paths(h, mp({{}, {1, 1}})) == 1);
  CHECK_THROWS_AS(count_paths(g, mp({{2}})), std::invalid_argument);
}

TEST_CASE("Freudenthal multiplicities") {
  CHECK(weight_multiplicity(e2, highest_weight(e2)) == 1);
  CHECK(weight_multiplicity(e2, highest_weight(e2).minus_alpha(0)) == 1);
  FreudenthalOracle f(e2, 8);
  CHECK(f.multiplicity(std::vector<int>{-1, 0}) == 0);
  CHECK(f.multiplicity(std::vector<int>{0, 1}) == 0);
  // Lambda_0 - delta has multiplicity 1 at level one, e = 2.
  CHECK(f.multiplicity(std::vector<int>{1, 1}) == 1);
  // Lambda_0 - 2 delta: two 2-restricted partitions of 4 of that content.
  CHECK(f.multiplicity(std::vector<int>{2, 2}) == 2);
  CHECK_THROWS_AS(f.multiplicity(std::vector<int>{5, 5}), ResourceCapExceeded);
}

TEST_CASE("listing and DOT output") {
  std::ostringstream dot, csv;
  const auto g = generate_crystal(e2, 2);
  write_dot(dot, g);
  CHECK(dot.str().find("digraph") == 0);
  CHECK(dot.str().find("[[1,1]]") != std::string::npos);
  write_listing(csv, g, ',');
  CHECK(csv.str().find("\"[[1]]\",1,[-1;2],[1;0],[0;2]") != std::string::npos);
}

}  // TEST_SUITE
