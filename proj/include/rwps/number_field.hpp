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

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "rwps/minpoly.hpp"
#include "rwps/rational.hpp"

namespace rwps {

class FieldElement;

enum class ChebKind { T, U };

/// The real algebraic number field Q(cos(pi/k)), realized as
/// Q[x]/(m(x)) with m the minimal polynomial of theta = 2cos(pi/k).
/// Instances are immutable and shared; obtain them via get(k).
class NumberField : public std::enable_shared_from_this<NumberField> {
   public:
    static std::shared_ptr<const NumberField> get(int k) {
        static std::map<int, std::shared_ptr<const NumberField>> cache;
        static std::mutex mutex;
        std::lock_guard lock(mutex);
        auto& slot = cache[k];
        if (!slot) slot = std::shared_ptr<const NumberField>(new NumberField(k));
        return slot;
    }

    int k() const noexcept { return minpoly_.k; }
    int degree() const noexcept { return minpoly_.degree(); }
    const MinPoly& minimal_polynomial() const noexcept { return minpoly_; }

    /// Label "Q(cos(pi/k))".
    std::string label() const { return "Q(cos(pi/" + std::to_string(k()) + "))"; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(Rational r) const;
    /// The generator theta = 2cos(pi/k).
    FieldElement theta() const;
    /// |cos(pi/k)| as an exact element: theta/2 for k >= 2, 1 for k = 1.
    FieldElement abs_cos() const;

    /// T_n or U_n evaluated at |cos(pi/k)|, exact. U_{-1} = 0.
    FieldElement cheb_value(ChebKind kind, int n) const;

    /// Coordinates of the product p*q reduced modulo the minimal polynomial.
    std::vector<Rational> reduce_product(const std::vector<Rational>& p, const std::vector<Rational>& q) const;

    double theta_approx() const noexcept { return 2.0 * std::cos(M_PI / k()); }

   private:
    explicit NumberField(int k) : minpoly_(rwps::minimal_polynomial(k)) {
        const int d = degree();
        // theta^(d+i) reduced to the power basis, for i in [0, d-2].
        // theta^d = -sum_j m_j theta^j.
        if (d >= 1) {
            std::vector<Rational> cur(static_cast<size_t>(d));
            for (int j = 0; j < d; ++j) cur[static_cast<size_t>(j)] = -Rational(minpoly_.coefficients[static_cast<size_t>(j)]);
            high_powers_.push_back(cur);
            for (int i = 1; i <= d - 2; ++i) {
                std::vector<Rational> next(static_cast<size_t>(d));
                // next = theta * cur, reduced
                Rational carry = cur[static_cast<size_t>(d - 1)];
                for (int j = d - 1; j >= 1; --j) next[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
                next[0] = 0;
                if (!is_zero(carry))
                    for (int j = 0; j < d; ++j) next[static_cast<size_t>(j)] += carry * high_powers_[0][static_cast<size_t>(j)];
                high_powers_.push_back(next);
                cur = std::move(next);
            }
        }
    }

    MinPoly minpoly_;
    std::vector<std::vector<Rational>> high_powers_;  // theta^(d+i), i = 0..d-2

    mutable std::mutex cheb_mutex_;
    mutable std::vector<std::vector<Rational>> t_values_;  // T_n(|cos(pi/k)|) coords
    mutable std::vector<std::vector<Rational>> u_values_;  // U_n(|cos(pi/k)|) coords
};

/// An element of Q(cos(pi/k)), stored as a coordinate vector in the power
/// basis {1, theta, ..., theta^(d-1)}. Reduction is canonical, so equality
/// and the zero test are coordinate-wise and exact. Elements of distinct
/// fields never mix silently: arithmetic across k values throws.
class FieldElement {
   public:
    FieldElement(std::shared_ptr<const NumberField> field, std::vector<Rational> coords)
        : field_(std::move(field)), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != field_->degree())
            throw std::invalid_argument("FieldElement: coordinate length does not match field degree");
    }

    const std::shared_ptr<const NumberField>& field() const noexcept { return field_; }
    int k() const noexcept { return field_->k(); }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_zero() const noexcept {
        for (const auto& c : coords_)
            if (!rwps::is_zero(c)) return false;
        return true;
    }

    bool is_rational() const noexcept {
        for (size_t i = 1; i < coords_.size(); ++i)
            if (!rwps::is_zero(coords_[i])) return false;
        return true;
    }

    /// The value as a Rational; only valid when is_rational().
    const Rational& as_rational() const {
        if (!is_rational()) throw std::domain_error("FieldElement: not a rational constant");
        return coords_[0];
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_fields(a, b);
        auto c = a.coords_;
        for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
        return FieldElement(a.field_, std::move(c));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_fields(a, b);
        auto c = a.coords_;
        for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
        return FieldElement(a.field_, std::move(c));
    }
    FieldElement operator-() const {
        auto c = coords_;
        for (auto& x : c) x = -x;
        return FieldElement(field_, std::move(c));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_fields(a, b);
        return FieldElement(a.field_, a.field_->reduce_product(a.coords_, b.coords_));
    }
    friend FieldElement operator*(const FieldElement& a, const Rational& s) {
        auto c = a.coords_;
        for (auto& x : c) x *= s;
        return FieldElement(a.field_, std::move(c));
    }
    friend FieldElement operator*(const Rational& s, const FieldElement& a) { return a * s; }
    friend FieldElement operator+(const FieldElement& a, const Rational& s) {
        auto c = a.coords_;
        c[0] += s;
        return FieldElement(a.field_, std::move(c));
    }
    friend FieldElement operator-(const FieldElement& a, const Rational& s) { return a + Rational(-s); }
    friend FieldElement operator/(const FieldElement& a, const Rational& s) {
        if (rwps::is_zero(s)) throw std::domain_error("FieldElement: division by zero");
        auto c = a.coords_;
        for (auto& x : c) x /= s;
        return FieldElement(a.field_, std::move(c));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        check_fields(a, b);
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial.
    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
        const int d = field_->degree();
        if (d == 1) return FieldElement(field_, {Rational(1) / coords_[0]});

        using Poly = std::vector<Rational>;
        auto deg = [](const Poly& p) {
            for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
                if (!rwps::is_zero(p[static_cast<size_t>(i)])) return i;
            return -1;
        };
        Poly m(static_cast<size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) m[static_cast<size_t>(i)] = Rational(field_->minimal_polynomial().coefficients[static_cast<size_t>(i)]);
        Poly r0 = m, r1 = coords_;
        Poly s0 = {Rational(0)}, s1 = {Rational(1)};  // s tracks the coefficient of this element
        while (deg(r1) > 0) {
            // divide r0 by r1
            Poly q(static_cast<size_t>(std::max(deg(r0) - deg(r1), 0)) + 1, Rational(0));
            Poly rem = r0;
            const int d1 = deg(r1);
            const Rational lead = r1[static_cast<size_t>(d1)];
            for (int i = deg(rem); i >= d1; --i) {
                Rational c = rem[static_cast<size_t>(i)] / lead;
                if (rwps::is_zero(c)) continue;
                q[static_cast<size_t>(i - d1)] = c;
                for (int j = 0; j <= d1; ++j) rem[static_cast<size_t>(i - d1 + j)] -= c * r1[static_cast<size_t>(j)];
            }
            // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
            Poly qs(q.size() + s1.size(), Rational(0));
            for (size_t i = 0; i < q.size(); ++i)
                if (!rwps::is_zero(q[i]))
                    for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
            Poly s2(std::max(s0.size(), qs.size()), Rational(0));
            for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r1 is a nonzero constant: gcd is 1 up to scale, since m is irreducible.
        const Rational g = r1[0];
        std::vector<Rational> inv(static_cast<size_t>(d), Rational(0));
        for (size_t i = 0; i < s1.size(); ++i) {
            if (i < inv.size())
                inv[i] = s1[i] / g;
            else if (!rwps::is_zero(s1[i]))
                throw std::logic_error("FieldElement::inverse: cofactor degree exceeds field degree");
        }
        return FieldElement(field_, std::move(inv));
    }

    double approx() const noexcept {
        double th = field_->theta_approx(), p = 1.0, sum = 0.0;
        for (const auto& c : coords_) {
            sum += to_double(c) * p;
            p *= th;
        }
        return sum;
    }

    /// Exact rendering as a polynomial in th = 2cos(pi/k); degree-1 fields
    /// render as plain rationals.
    std::string str() const {
        if (is_rational()) return rwps::to_string(coords_[0]);
        std::string out;
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (rwps::is_zero(coords_[i])) continue;
            std::string term = rwps::to_string(coords_[i]);
            if (i >= 1) {
                if (term == "1")
                    term = "";
                else if (term == "-1")
                    term = "-";
                else
                    term += "*";
                term += i == 1 ? "th" : "th^" + std::to_string(i);
            }
            if (!out.empty()) {
                if (!term.empty() && term[0] == '-')
                    out += " - ", term = term.substr(1);
                else
                    out += " + ";
            }
            out += term;
        }
        return out.empty() ? "0" : out;
    }

   private:
    static void check_fields(const FieldElement& a, const FieldElement& b) {
        if (a.field_->k() != b.field_->k())
            throw FieldMismatchError("mixed arithmetic between Q(cos(pi/" + std::to_string(a.field_->k()) + ")) and Q(cos(pi/" +
                                     std::to_string(b.field_->k()) + "))");
    }

    std::shared_ptr<const NumberField> field_;
    std::vector<Rational> coords_;
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline double to_double(const FieldElement& x) { return x.approx(); }
inline std::string to_string(const FieldElement& x) { return x.str(); }

inline FieldElement NumberField::zero() const { return from_rational(Rational(0)); }
inline FieldElement NumberField::one() const { return from_rational(Rational(1)); }

inline FieldElement NumberField::from_rational(Rational r) const {
    std::vector<Rational> c(static_cast<size_t>(degree()), Rational(0));
    c[0] = std::move(r);
    return FieldElement(shared_from_this(), std::move(c));
}

inline FieldElement NumberField::theta() const {
    if (degree() == 1) {
        // theta is rational: theta = -m_0 for monic linear m.
        return from_rational(-Rational(minpoly_.coefficients[0]));
    }
    std::vector<Rational> c(static_cast<size_t>(degree()), Rational(0));
    c[1] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

inline FieldElement NumberField::abs_cos() const {
    // cos(pi/k) >= 0 for k >= 2; for k = 1, cos(pi) = -1 and |cos(pi)| = -theta/2.
    return theta() * (k() == 1 ? Rational(-1, 2) : Rational(1, 2));
}

inline std::vector<Rational> NumberField::reduce_product(const std::vector<Rational>& p, const std::vector<Rational>& q) const {
    const int d = degree();
    std::vector<Rational> prod(static_cast<size_t>(2 * d - 1), Rational(0));
    for (int i = 0; i < d; ++i) {
        if (is_zero(p[static_cast<size_t>(i)])) continue;
        for (int j = 0; j < d; ++j) {
            if (is_zero(q[static_cast<size_t>(j)])) continue;
            prod[static_cast<size_t>(i + j)] += p[static_cast<size_t>(i)] * q[static_cast<size_t>(j)];
        }
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + d);
    for (int i = d; i <= 2 * d - 2; ++i) {
        if (is_zero(prod[static_cast<size_t>(i)])) continue;
        const auto& red = high_powers_[static_cast<size_t>(i - d)];
        for (int j = 0; j < d; ++j) out[static_cast<size_t>(j)] += prod[static_cast<size_t>(i)] * red[static_cast<size_t>(j)];
    }
    return out;
}

inline FieldElement NumberField::cheb_value(ChebKind kind, int n) const {
    if (kind == ChebKind::U && n == -1) return zero();
    if (n < 0) throw std::invalid_argument("cheb_value: negative index");
    std::lock_guard lock(cheb_mutex_);
    auto& vals = kind == ChebKind::T ? t_values_ : u_values_;
    if (vals.empty()) {
        const FieldElement x = abs_cos();
        vals.push_back(one().coords());
        vals.push_back(kind == ChebKind::T ? x.coords() : (x * Rational(2)).coords());
    }
    while (static_cast<int>(vals.size()) <= n) {
        const size_t m = vals.size();
        FieldElement prev(shared_from_this(), vals[m - 1]);
        FieldElement prev2(shared_from_this(), vals[m - 2]);
        vals.push_back((abs_cos() * Rational(2) * prev - prev2).coords());
    }
    return FieldElement(shared_from_this(), vals[static_cast<size_t>(n)]);
}

/// T_n(|cos(pi/k)|) or U_n(|cos(pi/k)|) as an exact field element.
inline FieldElement cheb_value(ChebKind kind, int n, int k) { return NumberField::get(k)->cheb_value(kind, n); }

/// Inverse in Q(cos(pi/k)); throws std::domain_error on zero.
inline FieldElement field_inverse(const FieldElement& x) { return x.inverse(); }

}  // namespace rwps
