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

#include <concepts>
#include <map>
#include <string>
#include <utility>

#include "rwps/number_field.hpp"
#include "rwps/rational.hpp"

namespace rwps {

template <class S>
concept ChebScalar = requires(const S& a, const S& b, const Rational& r) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a * r } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

/// A polynomial in the Chebyshev first-kind basis {T_0, T_1, ...} with
/// scalar coefficients S (Rational, or FieldElement of some Q(cos(pi/k))).
/// Sparse: zero coefficients are never stored. Values are immutable in
/// spirit; all operations return fresh polynomials.
template <ChebScalar S>
class ChebPoly {
   public:
    ChebPoly() = default;

    static ChebPoly basis(int n, S coeff) {
        if (n < 0) throw std::logic_error("ChebPoly: negative T index");
        ChebPoly p;
        p.add_term(n, std::move(coeff));
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Max stored index, or -1 for the zero polynomial.
    int degree() const noexcept { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    const std::map<int, S>& terms() const noexcept { return coeffs_; }

    const S* coeff_ptr(int n) const {
        auto it = coeffs_.find(n);
        return it == coeffs_.end() ? nullptr : &it->second;
    }

    void add_term(int n, S c) {
        if (rwps::is_zero(c)) return;
        if (n < 0) throw std::logic_error("ChebPoly: negative T index");
        auto it = coeffs_.find(n);
        if (it == coeffs_.end()) {
            coeffs_.emplace(n, std::move(c));
        } else {
            it->second = it->second + c;
            if (rwps::is_zero(it->second)) coeffs_.erase(it);
        }
    }

    friend ChebPoly operator+(const ChebPoly& a, const ChebPoly& b) {
        ChebPoly out = a;
        for (const auto& [n, c] : b.coeffs_) out.add_term(n, c);
        return out;
    }
    friend ChebPoly operator-(const ChebPoly& a, const ChebPoly& b) {
        ChebPoly out = a;
        for (const auto& [n, c] : b.coeffs_) out.add_term(n, -c);
        return out;
    }
    ChebPoly operator-() const {
        ChebPoly out;
        for (const auto& [n, c] : coeffs_) out.coeffs_.emplace(n, -c);
        return out;
    }
    friend ChebPoly operator*(const ChebPoly& p, const S& s) {
        ChebPoly out;
        if (rwps::is_zero(s)) return out;
        for (const auto& [n, c] : p.coeffs_) out.add_term(n, c * s);
        return out;
    }
    friend ChebPoly operator*(const S& s, const ChebPoly& p) { return p * s; }

    /// Exact product through the linearization T_m T_n = (T_{m+n} + T_{|m-n|})/2.
    friend ChebPoly operator*(const ChebPoly& a, const ChebPoly& b) {
        ChebPoly out;
        const Rational half(1, 2);
        for (const auto& [m, cm] : a.coeffs_)
            for (const auto& [n, cn] : b.coeffs_) {
                S c = cm * cn;
                if (m == 0 || n == 0) {
                    out.add_term(m + n, std::move(c));
                } else {
                    c = c * half;
                    out.add_term(m + n, c);
                    out.add_term(m > n ? m - n : n - m, std::move(c));
                }
            }
        return out;
    }

    friend bool operator==(const ChebPoly& a, const ChebPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const ChebPoly& a, const ChebPoly& b) { return !(a == b); }

    /// x * P, using x T_n = (T_{n+1} + T_{n-1})/2 and x T_0 = T_1.
    ChebPoly mul_x() const {
        ChebPoly out;
        const Rational half(1, 2);
        for (const auto& [n, c] : coeffs_) {
            if (n == 0) {
                out.add_term(1, c);
            } else {
                S h = c * half;
                out.add_term(n + 1, h);
                out.add_term(n - 1, std::move(h));
            }
        }
        return out;
    }

    /// P(T_k(x)): every T_n maps to T_{nk}.
    ChebPoly compose_Tk(int k) const {
        if (k <= 0) throw std::invalid_argument("compose_Tk: k must be >= 1");
        ChebPoly out;
        for (const auto& [n, c] : coeffs_) out.coeffs_.emplace(n * k, c);
        return out;
    }

    /// Exact value at x = 1 (coefficient sum, since T_n(1) = 1);
    /// zero polynomials need an explicit zero to return.
    S eval_one(S zero) const {
        S sum = std::move(zero);
        for (const auto& [n, c] : coeffs_) sum = sum + c;
        return sum;
    }

   private:
    std::map<int, S> coeffs_;
};

using RationalChebPoly = ChebPoly<Rational>;
using FieldChebPoly = ChebPoly<FieldElement>;

inline Rational eval_one(const ChebPoly<Rational>& p) { return p.eval_one(Rational(0)); }

inline FieldElement eval_one(const ChebPoly<FieldElement>& p, const std::shared_ptr<const NumberField>& field) {
    return p.eval_one(field->zero());
}

/// U_n in the T basis: U_{-1} = 0; otherwise 2(T_n + T_{n-2} + ...),
/// with the trailing T_0 carrying coefficient 1 when n is even.
inline ChebPoly<Rational> u_in_t(int n) {
    if (n < -1) throw std::invalid_argument("u_in_t: index below -1");
    ChebPoly<Rational> out;
    for (int m = n; m >= 0; m -= 2) out.add_term(m, m == 0 ? Rational(1) : Rational(2));
    return out;
}

inline ChebPoly<FieldElement> promote(const ChebPoly<Rational>& p, const std::shared_ptr<const NumberField>& field) {
    ChebPoly<FieldElement> out;
    for (const auto& [n, c] : p.terms()) out.add_term(n, field->from_rational(c));
    return out;
}

/// Exact evaluation at x = |cos(pi/k)|.
inline FieldElement eval_at_algebraic(const ChebPoly<Rational>& p, int k) {
    auto field = NumberField::get(k);
    FieldElement sum = field->zero();
    for (const auto& [n, c] : p.terms()) sum = sum + field->cheb_value(ChebKind::T, n) * c;
    return sum;
}

inline FieldElement eval_at_algebraic(const ChebPoly<FieldElement>& p, int k) {
    auto field = NumberField::get(k);
    FieldElement sum = field->zero();
    for (const auto& [n, c] : p.terms()) sum = sum + field->cheb_value(ChebKind::T, n) * c;
    return sum;
}

namespace detail {
inline std::string cheb_coeff_str(const Rational& c, bool lead) {
    std::string s = rwps::to_string(c);
    if (!lead && !s.empty() && s[0] == '-') s = s.substr(1);
    return s;
}
}  // namespace detail

/// Renders "1/2*T5 + 1/6*T3 + 1/3*T1" (descending degree, exact values).
inline std::string to_string(const ChebPoly<Rational>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const bool lead = out.empty();
        if (!lead) out += num(it->second) < 0 ? " - " : " + ";
        out += detail::cheb_coeff_str(it->second, lead) + "*T" + std::to_string(it->first);
    }
    return out;
}

inline std::string to_string(const ChebPoly<FieldElement>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + it->second.str() + ")*T" + std::to_string(it->first);
    }
    return out;
}

}  // namespace rwps
