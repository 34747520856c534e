#include "kleshchev/fock.hpp"

#include "kleshchev/crystal.hpp"

#include <algorithm>

namespace kleshchev {

FockVector FockVector::basis(const Multicharge& charge, const Multipartition& mp) {
  check_compatible(mp, charge);
  FockVector v(charge);
  v.terms_.emplace(mp, LaurentPoly(1));
  v.homogeneous_size_ = mp.size();
  return v;
}

FockVector FockVector::vacuum(const Multicharge& charge) {
  return basis(charge, Multipartition::empty(charge.level()));
}

LaurentPoly FockVector::coeff(const Multipartition& mp) const {
  auto it = terms_.find(mp);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void FockVector::add_term(const Multipartition& mp, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  if (homogeneous_size_ && *homogeneous_size_ != mp.size()) homogeneous_size_.reset();
}

namespace {
std::optional<int> merged_size(const FockVector& a, const FockVector& b) {
  if (a.is_zero() && !a.homogeneous_size()) return b.homogeneous_size();
  if (b.is_zero() && !b.homogeneous_size()) return a.homogeneous_size();
  if (a.homogeneous_size() == b.homogeneous_size()) return a.homogeneous_size();
  return std::nullopt;
}
}  // namespace

FockVector& FockVector::operator+=(const FockVector& other) {
  auto size = merged_size(*this, other);
  for (const auto& [mp, c] : other.terms_) add_term(mp, c);
  homogeneous_size_ = size;
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  auto size = merged_size(*this, other);
  for (const auto& [mp, c] : other.terms_) add_term(mp, -c);
  homogeneous_size_ = size;
  return *this;
}

FockVector& FockVector::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second = kv.second * c;
  return *this;
}

std::vector<std::pair<Multipartition, LaurentPoly>> FockVector::sorted_terms() const {
  std::vector<std::pair<Multipartition, LaurentPoly>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (linear_dominance_less(b.first, a.first)) return true;
    if (linear_dominance_less(a.first, b.first)) return false;
    return a.first < b.first;
  });
  return out;
}

namespace {

std::vector<SignatureLetter> reading_letters(const Multipartition& mp, int i,
                                             const Multicharge& charge) {
  return signature(mp, i, charge).letters;
}

FockVector shifted_size(const FockVector& vec, int delta) {
  FockVector out(vec.charge());
  if (vec.homogeneous_size()) out.set_homogeneous_size(*vec.homogeneous_size() + delta);
  return out;
}

}  // namespace

FockVector f_op(int i, const FockVector& vec) {
  FockVector out = shifted_size(vec, 1);
  for (const auto& [mp, c] : vec.terms()) {
    int exponent = 0;
    for (const auto& letter : reading_letters(mp, i, vec.charge())) {
      if (letter.kind == Letter::A) {
        out.add_term(mp.with_node(letter.node), c.shifted(exponent));
        ++exponent;
      } else {
        --exponent;
      }
    }
  }
  return out;
}

FockVector e_op(int i, const FockVector& vec) {
  FockVector out = shifted_size(vec, -1);
  for (const auto& [mp, c] : vec.terms()) {
    const auto letters = reading_letters(mp, i, vec.charge());
    int exponent = 0;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (it->kind == Letter::R) {
        out.add_term(mp.without_node(it->node), c.shifted(exponent));
        ++exponent;
      } else {
        --exponent;
      }
    }
  }
  return out;
}

FockVector divided_power(Generator g, int i, int k, const FockVector& vec,
                         const FockOperators& ops) {
  if (k < 0) throw std::invalid_argument("divided power exponent must be >= 0");
  FockVector current = vec;
  const auto& op = ops.get(g);
  for (int t = 0; t < k; ++t) current = op(i, current);
  if (k < 2) return current;
  const LaurentPoly denom = quantum_factorial(k);
  FockVector out(current.charge());
  out.set_homogeneous_size(current.homogeneous_size());
  for (const auto& [mp, c] : current.terms()) out.add_term(mp, c.divided_by(denom));
  return out;
}

std::map<Multipartition, BigInt> specialize_v1(const FockVector& vec) {
  std::map<Multipartition, BigInt> out;
  for (const auto& [mp, c] : vec.terms()) {
    BigInt value = c.evaluate_at_one();
    if (value != 0) out.emplace(mp, value);
  }
  return out;
}

namespace {

std::vector<Multipartition> all_up_to(const Multicharge& charge, int n_max) {
  std::vector<Multipartition> out;
  for (int n = 0; n <= n_max; ++n) {
    auto level = multipartitions_of(n, charge.level());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

std::vector<RelationViolation> verify_commutators(const Multicharge& charge, int n_max,
                                                  const FockOperators& ops) {
  std::vector<RelationViolation> report;
  for (const auto& mp : all_up_to(charge, n_max)) {
    const FockVector base = FockVector::basis(charge, mp);
    const Weight wt = weight_of(mp, charge);
    for (int i = 0; i < charge.e(); ++i) {
      for (int j = 0; j < charge.e(); ++j) {
        FockVector lhs = ops.e(i, ops.f(j, base)) - ops.f(j, ops.e(i, base));
        FockVector rhs(charge);
        if (i == j) rhs = quantum_integer(wt.pairing(i)) * base;
        if (!(lhs == rhs)) {
          report.push_back({mp, i, j, "[e_i,f_j]",
                            "got " + to_string(lhs) + ", expected " + to_string(rhs)});
        }
      }
    }
  }
  return report;
}

std::vector<RelationViolation> verify_serre(const Multicharge& charge, int n_max,
                                            const FockOperators& ops) {
  std::vector<RelationViolation> report;
  for (const auto& mp : all_up_to(charge, n_max)) {
    const FockVector base = FockVector::basis(charge, mp);
    for (int i = 0; i < charge.e(); ++i) {
      for (int j = 0; j < charge.e(); ++j) {
        if (i == j) continue;
        const int top = 1 - charge.cartan(i, j);
        for (Generator g : {Generator::e, Generator::f}) {
          FockVector total(charge);
          for (int k = 0; k <= top; ++k) {
            FockVector term = divided_power(g, i, top - k, base, ops);
            term = ops.get(g)(j, term);
            term = divided_power(g, i, k, term, ops);
            if (k % 2 == 0)
              total += term;
            else
              total -= term;
          }
          if (!total.is_zero()) {
            report.push_back({mp, i, j, g == Generator::e ? "serre(e)" : "serre(f)",
                              "nonzero: " + to_string(total)});
          }
        }
      }
    }
  }
  return report;
}

std::string to_string(const FockVector& vec) {
  if (vec.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [mp, c] : vec.sorted_terms()) {
    if (!first) s += " + ";
    first = false;
    if (c == LaurentPoly(1))
      s += to_string(mp);
    else
      s += "(" + to_string(c) + ")" + to_string(mp);
  }
  return s;
}

}  // namespace kleshchev
