#include "kleshchev/laurent.hpp"

#include <cctype>
#include <sstream>

namespace kleshchev {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, BigInt coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.prune();
  return p;
}

void LaurentPoly::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_degree() const {
  if (is_zero()) throw std::logic_error("degree of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (is_zero()) throw std::logic_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.terms_[ka + kb] += ca * cb;
  out.prune();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& kv : out.terms_) kv.second = -kv.second;
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw InexactDivision("division by the zero polynomial");
  const int dmax = divisor.max_degree();
  const int dspan = dmax - divisor.min_degree();
  const BigInt& dlead = divisor.terms_.rbegin()->second;

  LaurentPoly quotient;
  LaurentPoly rem = *this;
  while (!rem.is_zero()) {
    if (rem.max_degree() - rem.min_degree() < dspan)
      throw InexactDivision(to_string(*this) + " is not divisible by " + to_string(divisor));
    const auto& [rk, rc] = *rem.terms_.rbegin();
    if (rc % dlead != 0)
      throw InexactDivision(to_string(*this) + " is not divisible by " + to_string(divisor));
    LaurentPoly step = monomial(rk - dmax, rc / dlead);
    quotient += step;
    rem -= step * divisor;
  }
  return quotient;
}

bool LaurentPoly::is_bar_symmetric() const { return bar() == *this; }

bool LaurentPoly::in_positive_v_span() const {
  return is_zero() || terms_.begin()->first >= 1;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  for (const auto& kv : terms_)
    if (kv.second < 0) return false;
  return true;
}

BigInt LaurentPoly::evaluate_at_one() const {
  BigInt s = 0;
  for (const auto& kv : terms_) s += kv.second;
  return s;
}

LaurentPoly quantum_integer(int n) {
  if (n < 0) return -quantum_integer(-n);
  LaurentPoly out;
  for (int k = -(n - 1); k <= n - 1; k += 2) out += LaurentPoly::monomial(k);
  return out;
}

LaurentPoly quantum_factorial(int n) {
  if (n < 0) throw std::invalid_argument("quantum factorial of a negative integer");
  LaurentPoly out = 1;
  for (int k = 2; k <= n; ++k) out *= quantum_integer(k);
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << 'v';
    if (k != 1) out << '^' << k;
  }
  return out.str();
}

LaurentPoly parse_laurent(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  if (s == "0") return {};

  auto fail = [&] { throw std::invalid_argument("malformed polynomial: " + std::string(text)); };
  auto read_int = [&](std::size_t& pos, bool allow_sign) -> std::string {
    std::size_t start = pos;
    if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };

  LaurentPoly out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    std::string digits = read_int(pos, false);
    BigInt coeff = digits.empty() ? BigInt(1) : BigInt(digits);
    int exponent = 0;
    if (pos < s.size() && s[pos] == 'v') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string e = read_int(pos, true);
        if (e.empty() || e == "-" || e == "+") fail();
        exponent = std::stoi(e);
      }
    } else if (digits.empty()) {
      fail();
    }
    out += LaurentPoly::monomial(exponent, sign * coeff);
  }
  return out;
}

}  // namespace kleshchev
