#include "kleshchev/crystal.hpp"
#include "kleshchev/fock.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kleshchev;

namespace {
Multipartition mp(std::vector<std::vector<int>> parts) { return Multipartition::from_parts(parts); }
const Multicharge e2(2, {0});
const LaurentPoly v = LaurentPoly::monomial(1);

FockVector basis(const std::vector<std::vector<int>>& parts, const Multicharge& ch = e2) {
  return FockVector::basis(ch, mp(parts));
}

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
}  // namespace

TEST_SUITE("fock") {

TEST_CASE("generator action on small vectors") {
  CHECK(f_op(1, basis({{1}})) == combo({{{{1, 1}}, 1}, {{{2}}, v}}));
  CHECK(f_op(1, FockVector::vacuum(e2)).is_zero());
  CHECK(f_op(0, FockVector::vacuum(e2)) == basis({{1}}));
  CHECK(e_op(1, basis({{1, 1}})) == combo({{{{1}}, LaurentPoly::monomial(-1)}}));
  CHECK(e_op(1, basis({{2}})) == basis({{1}}));
  for (int i = 0; i < 2; ++i) CHECK(e_op(i, FockVector::vacuum(e2)).is_zero());
}

TEST_CASE("level one action agrees with an independent implementation") {
  for (int e : {2, 3, 4}) {
    Multicharge ch(e, {0});
    for (int n = 0; n <= 6; ++n)
      for (const auto& m : multipartitions_of(n, 1))
        for (int i = 0; i < e; ++i) {
          const auto x = FockVector::basis(ch, m);
          CHECK(to_oracle(f_op(i, x)) == oracle::f(i, to_oracle(x), e, 0));
        }
  }
}

TEST_CASE("divided powers") {
  CHECK(divided_power(Generator::f, 1, 2, basis({{1}})) == basis({{2, 1}}));
  CHECK(divided_power(Generator::f, 1, 0, basis({{1}})) == basis({{1}}));
  CHECK(divided_power(Generator::f, 1, 3, basis({{1}})).is_zero());
  CHECK(f_op(1, f_op(1, basis({{1}}))) == combo({{{{2, 1}}, v + LaurentPoly::monomial(-1)}}));
}

TEST_CASE("specialisation at v = 1") {
  const auto s = specialize_v1(combo({{{{1, 1}}, 1}, {{{2}}, v}}));
  CHECK(s.size() == 2);
  CHECK(s.at(mp({{1, 1}})) == 1);
  CHECK(s.at(mp({{2}})) == 1);
  CHECK(specialize_v1(FockVector(e2)).empty());
  CHECK(specialize_v1(combo({{{{2, 1}}, v + LaurentPoly::monomial(-1)}})).at(mp({{2, 1}})) == 2);
}

TEST_CASE("commutator and Serre relations") {
  CHECK(verify_commutators(e2, 6).empty());
  CHECK(verify_serre(Multicharge(3, {0}), 5).empty());
  CHECK(verify_serre(e2, 4).empty());
  CHECK(verify_commutators(Multicharge(3, {0, 1}), 4).empty());
  CHECK(verify_serre(Multicharge(4, {0, 1}), 3).empty());
  CHECK(verify_commutators(Multicharge(3, {0, 2}, ReadingDirection::top_down), 4).empty());
  // e_i f_i on the vacuum is [<h_i, Lambda>] times the vacuum.
  const auto vac = FockVector::vacuum(e2);
  CHECK(e_op(0, f_op(0, vac)) == quantum_integer(1) * vac);
  CHECK(e_op(1, f_op(1, vac)).is_zero());
}

TEST_CASE("fault injection: a flipped exponent is caught") {
  FockOperators broken;
  broken.e = [](int i, const FockVector& x) {
    FockVector y = e_op(i, x), out(x.charge());
    out.set_homogeneous_size(y.homogeneous_size());
    for (const auto& [m, c] : y.terms()) out.add_term(m, c.bar());
    return out;
  };
  CHECK_FALSE(verify_commutators(e2, 3, broken).empty());
  // Divided powers of the broken operator need not even be integral.
  bool caught = false;
  try {
    caught = !verify_serre(e2, 3, broken).empty();
  } catch (const InexactDivision&) {
    caught = true;
  }
  CHECK(caught);
  FockOperators skewed;
  skewed.f = [](int i, const FockVector& x) { return v * f_op(i, x); };
  CHECK_FALSE(verify_commutators(e2, 3, skewed).empty());
}

TEST_CASE("adjointness of e_i and f_i on basis vectors") {
  // coef of lambda in e_i mu = coef of mu in f_i lambda times v^{1 - <h_i, wt lambda>}.
  for (int e : {2, 3})
    for (const std::vector<int>& g : std::vector<std::vector<int>>{{0}, {0, 1}}) {
      Multicharge ch(e, g);
      for (int n = 0; n <= 4; ++n)
        for (const auto& lam : multipartitions_of(n, ch.level()))
          for (int i = 0; i < e; ++i) {
            const auto up = f_op(i, FockVector::basis(ch, lam));
            const int h = weight_of(lam, ch).pairing(i);
            for (const auto& [mu, c] : up.terms())
              CHECK(e_op(i, FockVector::basis(ch, mu)).coeff(lam) == c.shifted(1 - h));
          }
    }
}

TEST_CASE("the good addable node attains the lowest exponent") {
  for (int e : {2, 3})
    for (const std::vector<int>& g : std::vector<std::vector<int>>{{0}, {0, 1}}) {
      Multicharge ch(e, g);
      for (int n = 0; n <= 5; ++n)
        for (const auto& lam : multipartitions_of(n, ch.level()))
          for (int i = 0; i < e; ++i) {
            const auto good = f_tilde(lam, i, ch);
            const auto up = f_op(i, FockVector::basis(ch, lam));
            if (!good) continue;
            int lowest = 1 << 20;
            for (const auto& [mu, c] : up.terms()) lowest = std::min(lowest, c.min_degree());
            CHECK(up.coeff(*good).min_degree() == lowest);
          }
    }
}

TEST_CASE("printing") {
  CHECK(to_string(FockVector(e2)) == "0");
  CHECK(to_string(combo({{{{1, 1}}, 1}, {{{2}}, v}})) == "(v)[[2]] + [[1,1]]");
}

}  // TEST_SUITE
