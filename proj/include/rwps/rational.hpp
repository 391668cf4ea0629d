/*
   Copyright 2026 the rwps authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rwps {

/// Arbitrary-precision integers and rationals. Rational is always stored
/// in lowest terms with a positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class FieldMismatchError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a recurrence coefficient c_n leaves (0,1) or is otherwise
/// unusable; carries the offending index.
class CoefficientError : public std::domain_error {
   public:
    CoefficientError(long index, const std::string& what) : std::domain_error(what), index_(index) {}
    long index() const noexcept { return index_; }

   private:
    long index_;
};

class TableExhaustedError : public std::out_of_range {
   public:
    TableExhaustedError(long index, const std::string& what) : std::out_of_range(what), index_(index) {}
    long index() const noexcept { return index_; }

   private:
    long index_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline Integer num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer den(const Rational& x) { return boost::multiprecision::denominator(x); }

/// Renders as "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Parses "p" or "p/q" with q > 0. Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&](const char* why) {
        throw std::invalid_argument("invalid rational \"" + std::string(text) + "\": " + why);
    };
    if (text.empty()) bad("empty");
    std::string_view num_part = text;
    std::string_view den_part;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
        if (den_part.empty()) bad("missing denominator");
    }
    auto check_digits = [&](std::string_view s, bool allow_sign) {
        if (s.empty()) bad("missing digits");
        size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) bad("missing digits");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') bad("not a base-10 integer");
    };
    check_digits(num_part, true);
    Integer n{std::string(num_part)};
    if (den_part.empty()) return Rational(n);
    check_digits(den_part, false);
    Integer d{std::string(den_part)};
    if (d <= 0) bad("denominator must be positive");
    return Rational(n, d);
}

}  // namespace rwps
