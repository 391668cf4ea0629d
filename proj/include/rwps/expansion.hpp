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

#include <stdexcept>
#include <utility>
#include <vector>

#include "rwps/family.hpp"

namespace rwps {

/// Connection coefficients r_n(0..floor(n/2)) of P_n to the T basis:
/// P_n = sum_j r_n(j) T_{n-2j}. Read off the generated polynomial.
inline std::vector<Rational> r_coeffs(const Family& family, int n) {
    if (n < 0) throw std::invalid_argument("r_coeffs: negative degree");
    const auto& p = family.polynomial(n);
    std::vector<Rational> row;
    row.reserve(static_cast<size_t>(n / 2) + 1);
    for (int j = 0; j <= n / 2; ++j) {
        const Rational* c = p.coeff_ptr(n - 2 * j);
        row.push_back(c ? *c : Rational(0));
    }
    return row;
}

/// Triangular tables r, p, q; row n holds indices j = 0..floor(n/2).
/// p and q satisfy the coupled recursion driven by the family's a_n, with
/// p_0(0) = 0, q_0(0) = 1; r rows come from the generated polynomials.
/// Out-of-range accesses resolve to 0, which realizes the index
/// conventions p_n(-1) = 0 and q_{2n-1}(n) = 0 as total functions.
struct ExpansionTables {
    int N = -1;
    std::vector<std::vector<Rational>> r, p, q;

    Rational r_at(int n, int j) const { return at(r, n, j); }
    Rational p_at(int n, int j) const { return at(p, n, j); }
    Rational q_at(int n, int j) const { return at(q, n, j); }

    friend bool operator==(const ExpansionTables& a, const ExpansionTables& b) {
        return a.N == b.N && a.r == b.r && a.p == b.p && a.q == b.q;
    }

   private:
    static Rational at(const std::vector<std::vector<Rational>>& t, int n, int j) {
        if (n < 0 || n >= static_cast<int>(t.size())) return Rational(0);
        const auto& row = t[static_cast<size_t>(n)];
        if (j < 0 || j >= static_cast<int>(row.size())) return Rational(0);
        return row[static_cast<size_t>(j)];
    }
};

/// Builds rows 0..N of r, p and q.
inline ExpansionTables pq_tables(const Family& family, int N) {
    if (N < 0) throw std::invalid_argument("pq_tables: negative horizon");
    ExpansionTables t;
    t.N = N;
    t.r.reserve(static_cast<size_t>(N) + 1);
    t.p.assign(1, {Rational(0)});
    t.q.assign(1, {Rational(1)});
    for (int n = 0; n <= N; ++n) t.r.push_back(r_coeffs(family, n));
    for (int n = 1; n <= N; ++n) {
        const Rational an = family.a(n);
        const Rational twist = 2 * an - 1;  // = 1 - 2 c_n
        const Rational scale = Rational(1) / (2 * an);
        std::vector<Rational> pn, qn;
        pn.reserve(static_cast<size_t>(n / 2) + 1);
        qn.reserve(static_cast<size_t>(n / 2) + 1);
        for (int j = 0; j <= n / 2; ++j) {
            if (n % 2 == 0 && j == n / 2) {
                pn.emplace_back(0);
                qn.push_back(t.p_at(n - 1, n / 2 - 1));
            } else {
                pn.push_back((twist * t.q_at(n - 1, j) + t.p_at(n - 1, j - 1)) * scale);
                qn.push_back((t.q_at(n - 1, j) + twist * t.p_at(n - 1, j - 1)) * scale);
            }
        }
        t.p.push_back(std::move(pn));
        t.q.push_back(std::move(qn));
    }
    return t;
}

/// P_m(x;k) assembled from precomputed tables: with m = kn + i,
/// P_m(x;k) = sum_j [p_n(j) T_{kn-2jk-i} + q_n(j) T_{kn-2jk+i}].
/// The tables do not depend on k or i. A negative first index can only
/// carry the zero coefficient p_n(n/2) and is skipped.
inline ChebPoly<Rational> assemble_sieved(const ExpansionTables& tables, int k, int m) {
    if (k < 1) throw std::invalid_argument("assemble_sieved: k must be >= 1");
    if (m < 0) throw std::invalid_argument("assemble_sieved: negative degree");
    const int n = m / k;
    const int i = m % k;
    if (n > tables.N) throw std::out_of_range("assemble_sieved: tables only reach row " + std::to_string(tables.N));
    ChebPoly<Rational> out;
    for (int j = 0; j <= n / 2; ++j) {
        const Rational pj = tables.p_at(n, j);
        const Rational qj = tables.q_at(n, j);
        const int base = k * n - 2 * j * k;
        if (base - i < 0) {
            if (!is_zero(pj)) throw std::logic_error("assemble_sieved: negative T index with nonzero coefficient");
        } else {
            out.add_term(base - i, pj);
        }
        out.add_term(base + i, qj);
    }
    return out;
}

/// P_m(x;k) of the k-sieved family, straight from the expansion tables of
/// the parent family (no sieved recurrence involved).
inline ChebPoly<Rational> sieved_poly_expansion(const Family& family, int k, int m) {
    if (k < 1) throw std::invalid_argument("sieved_poly_expansion: k must be >= 1");
    if (m < 0) throw std::invalid_argument("sieved_poly_expansion: negative degree");
    return assemble_sieved(pq_tables(family, m / k), k, m);
}

/// p_n(j) as the partial sum of r-row differences:
/// p_n(j) = sum_{i=0}^{j} [r_n(i) - r_{n+1}(i)].
inline Rational p_via_partial_sums(const Family& family, int n, int j) {
    if (n < 0 || j < 0 || j > n / 2) throw std::invalid_argument("p_via_partial_sums: index out of range");
    const auto rn = r_coeffs(family, n);
    const auto rn1 = r_coeffs(family, n + 1);
    Rational sum(0);
    for (int i = 0; i <= j; ++i) sum += rn[static_cast<size_t>(i)] - rn1[static_cast<size_t>(i)];
    return sum;
}

namespace detail {
/// Pochhammer symbol (x)_m = x (x+1) ... (x+m-1).
inline Rational pochhammer(const Rational& x, int m) {
    Rational out(1);
    for (int i = 0; i < m; ++i) out *= x + i;
    return out;
}

inline Rational binomial(int n, int j) {
    Rational out(1);
    for (int i = 1; i <= j; ++i) out *= Rational(n - j + i) / i;
    return out;
}
}  // namespace detail

/// Closed forms for the ultraspherical family: returns (r_n(j), p_n(j)).
/// r_n(j) = 2 binom(n,j) (a+1/2)_j (a+1/2)_{n-j} / (2a+1)_n, halved at the
/// central entry of even rows; p_n(j) = (2j+2a+1)/(2n+4a+2) r_n(j), zero at
/// the central entry. alpha = -1/2 is rejected (that family is chebyshev_t
/// and the quotient degenerates).
inline std::pair<Rational, Rational> ultraspherical_rp(const Rational& alpha, int n, int j) {
    if (alpha <= -1) throw std::invalid_argument("ultraspherical_rp: alpha must be > -1");
    if (alpha == Rational(-1, 2)) throw std::invalid_argument("ultraspherical_rp: alpha = -1/2 is excluded");
    if (n < 0 || j < 0 || j > n / 2) throw std::invalid_argument("ultraspherical_rp: index out of range");
    const Rational half_shift = alpha + Rational(1, 2);
    const bool central = n % 2 == 0 && j == n / 2;
    Rational r;
    if (central) {
        const Rational p = detail::pochhammer(half_shift, n / 2);
        r = detail::binomial(n, n / 2) * p * p / detail::pochhammer(2 * alpha + 1, n);
    } else {
        r = 2 * detail::binomial(n, j) * detail::pochhammer(half_shift, j) * detail::pochhammer(half_shift, n - j) /
            detail::pochhammer(2 * alpha + 1, n);
    }
    Rational p = central ? Rational(0) : (Rational(2 * j) + 2 * alpha + 1) / (Rational(2 * n) + 4 * alpha + 2) * r;
    return {std::move(r), std::move(p)};
}

}  // namespace rwps
