// Copyright 2026 The ufrac Authors.
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

#include "ufrac/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace ufrac {
namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::make(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) {
      throw InvalidInput("malformed rational '" + std::string(text) + "'");
    }
  } else {
    std::string_view dtext = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || dtext.empty() ||
        dtext[0] == '-' || dtext[0] == '+' || !parse_integer(dtext, den)) {
      throw InvalidInput("malformed rational '" + std::string(text) + "'");
    }
  }
  return make(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidInput("division by zero rational");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational make_rational(const Integer& num, const Integer& den) {
  return Rational::make(num, den);
}

Rational unit_fraction(std::uint64_t d) {
  return Rational::make(Integer(1), to_integer(d));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

Integer to_integer(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return Integer(static_cast<unsigned long>(v));
}

bool fits_u64(const Integer& v) { return sgn(v) >= 0 && v.fits_ulong_p(); }

std::uint64_t to_u64(const Integer& v) { return v.get_ui(); }

}  // namespace ufrac
