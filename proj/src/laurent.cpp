#include "tetralab/laurent.hpp"

#include <algorithm>

#include "tetralab/error.hpp"

namespace tetralab {

Laurent::Laurent(long long constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

Laurent Laurent::monomial(int exponent, BigInt coefficient) {
  Laurent l;
  if (coefficient != 0) l.terms_.emplace_back(exponent, std::move(coefficient));
  return l;
}

Laurent Laurent::from_terms(const std::map<int, BigInt>& terms) {
  Laurent l;
  for (const auto& [e, c] : terms)
    if (c != 0) l.terms_.emplace_back(e, c);
  return l;
}

bool Laurent::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

BigInt Laurent::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int Laurent::min_exponent() const {
  if (terms_.empty()) throw UsageError("min_exponent of zero polynomial");
  return terms_.front().first;
}

int Laurent::max_exponent() const {
  if (terms_.empty()) throw UsageError("max_exponent of zero polynomial");
  return terms_.back().first;
}

Laurent& Laurent::operator+=(const Laurent& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigInt c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Laurent& Laurent::operator-=(const Laurent& other) { return *this += -other; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1)
    return Laurent::monomial(a.terms_[0].first + b.terms_[0].first, a.terms_[0].second * b.terms_[0].second);
  std::map<int, BigInt> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  return Laurent::from_terms(acc);
}

Laurent& Laurent::operator*=(const Laurent& other) { return *this = *this * other; }

BigInt Laurent::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

BigInt Laurent::evaluate(long long x) const {
  if (x == 1) return at_one();
  BigInt s = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && x != -1) throw UsageError("evaluate: negative exponent at non-unit point");
    const unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    s += c * boost::multiprecision::pow(BigInt(x), k);
  }
  return s;
}

Laurent Laurent::substitute_power(int k) const {
  if (k == 0) return monomial(0, at_one());
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_back(e * k, c);
  if (k < 0) std::reverse(r.terms_.begin(), r.terms_.end());
  return r;
}

Laurent Laurent::reflect() const { return substitute_power(-1); }

std::string Laurent::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace tetralab
