// Copyright 2026 The lazyeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LAZYEQ_RATIONAL_HPP_
#define LAZYEQ_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "lazyeq/error.hpp"

namespace lazyeq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "n", "-n" and "n/d".
inline Rational ParseRational(std::string_view text) {
  auto bad = [&]() -> Rational {
    Fail(ErrorKind::kParse, "malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) return bad();
  auto parse_int = [&](std::string_view s, bool allow_sign) -> BigInt {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ++i;
    if (i == s.size()) bad();
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') bad();
    }
    return BigInt(std::string(s));
  };
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    std::string_view s = text;
    if (s[0] == '+') s.remove_prefix(1);
    return Rational(parse_int(s, true));
  }
  std::string_view num = text.substr(0, slash);
  if (!num.empty() && num[0] == '+') num.remove_prefix(1);
  BigInt n = parse_int(num, true);
  BigInt d = parse_int(text.substr(slash + 1), false);
  if (d == 0)
    Fail(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

// Integers print without a denominator.
inline std::string FormatRational(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

inline long double ToLongDouble(const Rational& q) {
  return q.convert_to<long double>();
}

}  // namespace lazyeq

#endif  // LAZYEQ_RATIONAL_HPP_
