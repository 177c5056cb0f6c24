// Copyright 2026 The LayerScope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact univariate polynomials in d with big-integer coefficients, and
// rational functions kept in a canonical reduced form.

#ifndef LAYERSCOPE_POLY_RATIONAL_HPP_
#define LAYERSCOPE_POLY_RATIONAL_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

#include "layerscope/error.hpp"

namespace layerscope {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// num / den; the sign is moved to the numerator first because the two-argument
// cpp_rational constructor rejects some negative denominators.
inline BigRational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw Error(ErrorCode::kZeroDenominator, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return BigRational(num, den);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const BigRational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const BigRational& x) {
  return x.convert_to<double>();
}

// "a/b" or "a"; denominators must be nonzero.
inline BigRational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty() || s.size() > 4096) {
      throw Error(ErrorCode::kParse, "bad rational '" + std::string(text) + "'");
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() ||
        !std::all_of(s.begin() + start, s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(ErrorCode::kParse, "bad rational '" + std::string(text) + "'");
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(const BigInt& constant) : coeffs_{constant} { trim(); }  // NOLINT
  IntPolynomial(int constant) : IntPolynomial(BigInt(constant)) {}       // NOLINT
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static IntPolynomial from_ints(std::initializer_list<long long> low_to_high) {
    std::vector<BigInt> c;
    for (long long x : low_to_high) c.emplace_back(x);
    return IntPolynomial(std::move(c));
  }

  static IntPolynomial monomial(const BigInt& coeff, int power) {
    std::vector<BigInt> c(power + 1);
    c[power] = coeff;
    return IntPolynomial(std::move(c));
  }

  // The variable d.
  static IntPolynomial d() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt coeff(int power) const {
    if (power < 0 || power > degree()) return 0;
    return coeffs_[power];
  }

  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

  bool is_constant() const { return degree() <= 0; }

  int term_count() const {
    return static_cast<int>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
  }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  BigInt eval(long long x) const { return eval(BigInt(x)); }

  BigRational eval_rational(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // Nonnegative gcd of the coefficients; 0 for the zero polynomial.
  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    return g;
  }

  IntPolynomial divided_by(const BigInt& k) const {
    std::vector<BigInt> c = coeffs_;
    for (auto& x : c) x /= k;
    return IntPolynomial(std::move(c));
  }

  // Primitive part with positive leading coefficient.
  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (leading() < 0) g = -g;
    return divided_by(g);
  }

  IntPolynomial operator-() const {
    std::vector<BigInt> c = coeffs_;
    for (auto& x : c) x = -x;
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t x = 0; x < a.coeffs_.size(); ++x) {
      if (a.coeffs_[x] == 0) continue;
      for (std::size_t y = 0; y < b.coeffs_.size(); ++y) c[x + y] += a.coeffs_[x] * b.coeffs_[y];
    }
    return IntPolynomial(std::move(c));
  }

  IntPolynomial& operator+=(const IntPolynomial& b) { return *this = *this + b; }
  IntPolynomial& operator-=(const IntPolynomial& b) { return *this = *this - b; }
  IntPolynomial& operator*=(const IntPolynomial& b) { return *this = *this * b; }

  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
inline IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) { return a - b; }
inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

// d^power.
inline IntPolynomial d_pow(int power) { return IntPolynomial::monomial(1, power); }

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
inline IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroDenominator, "pseudo-division by zero");
  const BigInt lead = b.leading();
  int steps = a.degree() - b.degree() + 1;
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const IntPolynomial shift = IntPolynomial::monomial(a.leading(), a.degree() - b.degree());
    a = a * IntPolynomial(lead) - shift * b;
    --steps;
  }
  for (; steps > 0; --steps) a = a * IntPolynomial(lead);
  return a;
}

// Primitive gcd with positive leading coefficient (integer content ignored);
// gcd(0, 0) = 0.
inline IntPolynomial poly_gcd(const IntPolynomial& x, const IntPolynomial& y) {
  IntPolynomial a = x.primitive_part();
  IntPolynomial b = y.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// a / b when b divides a with an integer quotient; throws otherwise.
inline IntPolynomial exact_divide(IntPolynomial a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroDenominator, "polynomial division by zero");
  std::vector<BigInt> q(std::max(a.degree() - b.degree() + 1, 0));
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    BigInt quot, rem;
    boost::multiprecision::divide_qr(a.leading(), b.leading(), quot, rem);
    if (rem != 0) throw Error(ErrorCode::kInvalidParams, "inexact polynomial division");
    q[shift] = quot;
    a -= IntPolynomial::monomial(quot, shift) * b;
  }
  if (!a.is_zero()) throw Error(ErrorCode::kInvalidParams, "inexact polynomial division");
  return IntPolynomial(std::move(q));
}

// Descending powers, "2d^4 - d + 1" style; "0" for the zero polynomial.
inline std::string poly_format(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt c = p.coeff(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += "d";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  return os << poly_format(p);
}

// Parses the poly_format grammar (also accepts '*' and surrounding spaces).
inline IntPolynomial parse_polynomial(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s += c;
  }
  if (s.empty()) throw Error(ErrorCode::kParse, "empty polynomial");
  IntPolynomial out;
  std::size_t pos = 0;
  auto fail = [&] { throw Error(ErrorCode::kParse, "bad polynomial '" + std::string(text) + "'"); };
  auto digits = [&] {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos - start > 4096) fail();
    return s.substr(start, pos - start);
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    std::string coeff = digits();
    int power = 0;
    if (pos < s.size() && s[pos] == 'd') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::string e = digits();
        if (e.empty() || e.size() > 6) fail();
        power = std::stoi(e);
      }
    } else if (coeff.empty()) {
      fail();
    }
    const BigInt c = coeff.empty() ? BigInt(1) : BigInt(coeff);
    out += IntPolynomial::monomial(sign * c, power);
  }
  return out;
}

// num / den with: no common polynomial factor, den leading coefficient > 0,
// gcd(content(num), content(den)) = 1. Zero is 0 / 1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(const IntPolynomial& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(int constant) : num_(constant), den_(1) {}     // NOLINT

  static RationalFunction make(IntPolynomial num, IntPolynomial den) {
    if (den.is_zero()) throw Error(ErrorCode::kZeroDenominator, "rational function with zero denominator");
    RationalFunction r;
    if (num.is_zero()) return r;
    const IntPolynomial g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = exact_divide(num, g);
      den = exact_divide(den, g);
    }
    BigInt h = boost::multiprecision::gcd(num.content(), den.content());
    if (den.leading() < 0) h = -h;
    r.num_ = num.divided_by(h);
    r.den_ = den.divided_by(h);
    return r;
  }

  static RationalFunction from_rational(const BigRational& x) {
    return make(IntPolynomial(BigInt(boost::multiprecision::numerator(x))),
                IntPolynomial(BigInt(boost::multiprecision::denominator(x))));
  }

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return make(a.num_ + b.num_, a.den_);
    return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return make(a.num_ - b.num_, a.den_);
    return make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return make(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw Error(ErrorCode::kZeroDenominator, "division by the zero rational function");
    return make(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction operator-() const { return make(-num_, den_); }

  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  // Canonical forms are unique, so structural equality is value equality.
  bool operator==(const RationalFunction&) const = default;

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

inline RationalFunction rf_make(const IntPolynomial& num, const IntPolynomial& den) {
  return RationalFunction::make(num, den);
}
inline RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) { return a + b; }
inline RationalFunction rf_sub(const RationalFunction& a, const RationalFunction& b) { return a - b; }
inline RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) { return a * b; }
inline RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b) { return a / b; }

inline BigRational rf_eval(const RationalFunction& a, const BigInt& x) {
  const BigInt den = a.den().eval(x);
  if (den == 0) {
    throw Error(ErrorCode::kPoleAtValue, "denominator vanishes at d = " + x.str());
  }
  return make_rational(a.num().eval(x), den);
}

inline BigRational rf_eval(const RationalFunction& a, long long x) {
  return rf_eval(a, BigInt(x));
}

inline std::string rf_format(const RationalFunction& a) {
  const std::string num = poly_format(a.num());
  if (a.den() == IntPolynomial(1)) return num;
  auto wrap = [](const IntPolynomial& p, const std::string& s) {
    return p.term_count() > 1 ? "(" + s + ")" : s;
  };
  return wrap(a.num(), num) + " / " + wrap(a.den(), poly_format(a.den()));
}

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& a) {
  return os << rf_format(a);
}

// "P / Q", "(P) / (Q)" or "P"; the result is canonicalized.
inline RationalFunction rf_parse(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    return s;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return RationalFunction(parse_polynomial(strip(text)));
  return rf_make(parse_polynomial(strip(text.substr(0, slash))),
                 parse_polynomial(strip(text.substr(slash + 1))));
}

// Coefficients that fit in 64 bits are JSON numbers, larger ones strings.
inline nlohmann::json poly_to_json(const IntPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max()) {
      out.push_back(c.convert_to<std::int64_t>());
    } else {
      out.push_back(c.str());
    }
  }
  return out;
}

inline IntPolynomial poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "polynomial JSON must be an array");
  std::vector<BigInt> c;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      c.emplace_back(x.get<std::int64_t>());
    } else if (x.is_string()) {
      c.push_back(parse_rational(x.get<std::string>()).convert_to<BigInt>());
    } else {
      throw Error(ErrorCode::kParse, "polynomial coefficient must be an integer");
    }
  }
  return IntPolynomial(std::move(c));
}

inline nlohmann::json rf_to_json(const RationalFunction& a) {
  return {{"num", poly_to_json(a.num())}, {"den", poly_to_json(a.den())}};
}

inline RationalFunction rf_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw Error(ErrorCode::kParse, "rational function JSON needs num and den");
  }
  return rf_make(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace layerscope

#endif  // LAYERSCOPE_POLY_RATIONAL_HPP_
