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

#include "rwps/expansion.hpp"
#include "rwps/family.hpp"
#include "rwps/number_field.hpp"

namespace rwps {

namespace detail {
template <ChebScalar S>
FieldElement promote_scalar(const S& c, const std::shared_ptr<const NumberField>& field) {
    if constexpr (std::is_same_v<S, Rational>) {
        return field->from_rational(c);
    } else {
        if (c.k() != field->k())
            throw FieldMismatchError("operator input lives in " + c.field()->label() + ", not " + field->label());
        return c;
    }
}
}  // namespace detail

/// The sieved Askey-Wilson operator D_k: the linear extension of
/// T_n -> U_{n-1}(|cos(pi/k)|) U_{n-1}(x), with T_0 -> 0. D_1 is d/dx;
/// for k >= 2 the kernel is infinite-dimensional (every T_n with k | n).
/// Output coefficients live in Q(cos(pi/k)).
template <ChebScalar S>
ChebPoly<FieldElement> apply_Dk(const ChebPoly<S>& poly, int k) {
    auto field = NumberField::get(k);
    ChebPoly<FieldElement> out;
    for (const auto& [n, c] : poly.terms()) {
        if (n == 0) continue;
        const FieldElement factor = field->cheb_value(ChebKind::U, n - 1) * detail::promote_scalar(c, field);
        if (factor.is_zero()) continue;
        // u_in_t(n-1): coefficients 2 on T_{n-1}, T_{n-3}, ..., 1 on T_0.
        for (int m = n - 1; m >= 0; m -= 2) out.add_term(m, m == 0 ? factor : factor * Rational(2));
    }
    return out;
}

/// The sieved averaging operator A_k: linear extension of
/// T_n -> T_n(|cos(pi/k)|) T_n(x). A_1 is the identity.
template <ChebScalar S>
ChebPoly<FieldElement> apply_Ak(const ChebPoly<S>& poly, int k) {
    auto field = NumberField::get(k);
    ChebPoly<FieldElement> out;
    for (const auto& [n, c] : poly.terms())
        out.add_term(n, field->cheb_value(ChebKind::T, n) * detail::promote_scalar(c, field));
    return out;
}

/// Fourier coefficient tables of a family under D_k and A_k:
///   D_k P_n = sum_j kappa_n(j;k) P_j h(j),   j < n, n-j odd;
///   A_k P_n = sum_j alpha_n(j;k) P_j h(j),   j <= n, n-j even;
/// sigma(n;k) = kappa_n(n-1;k). Entries are exact elements of Q(cos(pi/k)).
/// Either table may be absent depending on how the structure was built;
/// out-of-range reads return 0.
struct FourierTable {
    int k = 0;
    int N = -1;
    std::shared_ptr<const NumberField> field;
    std::vector<std::vector<FieldElement>> kappa;  // row n: j = 0..n-1
    std::vector<std::vector<FieldElement>> alpha;  // row n: j = 0..n

    bool has_kappa() const noexcept { return !kappa.empty(); }
    bool has_alpha() const noexcept { return !alpha.empty(); }

    FieldElement kappa_at(int n, int j) const {
        if (n < 0 || n >= static_cast<int>(kappa.size()) || j < 0 || j >= n) return field->zero();
        return kappa[static_cast<size_t>(n)][static_cast<size_t>(j)];
    }
    FieldElement alpha_at(int n, int j) const {
        if (n < 0 || n >= static_cast<int>(alpha.size()) || j < 0 || j > n) return field->zero();
        return alpha[static_cast<size_t>(n)][static_cast<size_t>(j)];
    }
    FieldElement sigma(int n) const {
        if (n < 1) throw std::invalid_argument("FourierTable::sigma: n must be >= 1");
        return kappa_at(n, n - 1);
    }

    friend bool operator==(const FourierTable& a, const FourierTable& b) {
        return a.k == b.k && a.N == b.N && a.kappa == b.kappa && a.alpha == b.alpha;
    }
};

namespace detail {
enum class FourierPart { Kappa, Alpha, Both };

inline FourierTable fourier_build(const Family& family, int k, int N, FourierPart part) {
    if (k < 1) throw std::invalid_argument("fourier table: k must be >= 1");
    if (N < 0) throw std::invalid_argument("fourier table: negative horizon");
    FourierTable t;
    t.k = k;
    t.N = N;
    t.field = NumberField::get(k);
    const auto h = family.weights(N);
    const bool want_kappa = part != FourierPart::Alpha;
    const bool want_alpha = part != FourierPart::Kappa;
    for (int n = 0; n <= N; ++n) {
        const auto& pn = family.polynomial(n);
        if (want_kappa) {
            auto coeffs = expand_in_P(family, apply_Dk(pn, k));
            std::vector<FieldElement> row;
            row.reserve(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) {
                FieldElement e = j < static_cast<int>(coeffs.size()) ? coeffs[static_cast<size_t>(j)] : t.field->zero();
                row.push_back(e / h[static_cast<size_t>(j)]);
            }
            t.kappa.push_back(std::move(row));
        }
        if (want_alpha) {
            auto coeffs = expand_in_P(family, apply_Ak(pn, k));
            std::vector<FieldElement> row;
            row.reserve(static_cast<size_t>(n) + 1);
            for (int j = 0; j <= n; ++j) {
                FieldElement e = j < static_cast<int>(coeffs.size()) ? coeffs[static_cast<size_t>(j)] : t.field->zero();
                row.push_back(e / h[static_cast<size_t>(j)]);
            }
            t.alpha.push_back(std::move(row));
        }
    }
    return t;
}
}  // namespace detail

/// kappa rows 0..N (the D_k Fourier coefficients).
inline FourierTable kappa_table(const Family& family, int k, int N) {
    return detail::fourier_build(family, k, N, detail::FourierPart::Kappa);
}

/// alpha rows 0..N (the A_k Fourier coefficients).
inline FourierTable alpha_table(const Family& family, int k, int N) {
    return detail::fourier_build(family, k, N, detail::FourierPart::Alpha);
}

/// Both tables at once.
inline FourierTable fourier_table(const Family& family, int k, int N) {
    return detail::fourier_build(family, k, N, detail::FourierPart::Both);
}

/// Closed form U_{n-1}(|cos(pi/k)|) / (c_n h(n)) for sigma(n;k).
inline FieldElement sigma_closed_form(const Family& family, int k, int n) {
    if (n < 1) throw std::invalid_argument("sigma_closed_form: n must be >= 1");
    const auto h = family.weights(n);
    return cheb_value(ChebKind::U, n - 1, k) / (family.c(n) * h[static_cast<size_t>(n)]);
}

/// sigma(n;k) two ways: (table value kappa_n(n-1;k), closed form).
/// Callers assert equality.
inline std::pair<FieldElement, FieldElement> sigma_val(const Family& family, int k, int n) {
    if (n < 1) throw std::invalid_argument("sigma_val: n must be >= 1");
    const FourierTable t = kappa_table(family, k, n);
    return {t.sigma(n), sigma_closed_form(family, k, n)};
}

/// Closed form T_n(|cos(pi/k)|) / h(n) for the alpha diagonal, any n >= 0.
inline FieldElement alpha_diag_closed_form(const Family& family, int k, int n) {
    if (n < 0) throw std::invalid_argument("alpha_diag_closed_form: negative index");
    const auto h = family.weights(n);
    return cheb_value(ChebKind::T, n, k) / h[static_cast<size_t>(n)];
}

/// Closed forms for the two nontrivial alpha diagonals:
///   alpha_n(n;k)   = T_n(|cos(pi/k)|) / h(n)
///   alpha_n(n-2;k) = U_{n-2}(|cos(pi/k)|) sin^2(pi/k)
///                    (n - 4 sum_{j<n} a_{j-1} c_j) / (2 c_{n-1} c_n h(n))
/// with sin^2(pi/k) = 1 - cos^2(pi/k) exact in the field. The second
/// component requires n >= 2.
inline std::pair<FieldElement, FieldElement> alpha_closed_forms(const Family& family, int k, int n) {
    if (n < 2) throw std::invalid_argument("alpha_closed_forms: n must be >= 2");
    auto field = NumberField::get(k);
    const auto h = family.weights(n);
    const FieldElement diag = field->cheb_value(ChebKind::T, n) / h[static_cast<size_t>(n)];

    const FieldElement c = field->abs_cos();
    const FieldElement sin2 = field->one() - c * c;
    Rational partial(0);
    for (long j = 1; j <= n - 1; ++j) partial += family.a(j - 1) * family.c(j);
    const Rational scalar = (Rational(n) - 4 * partial) / (2 * family.c(n - 1) * family.c(n) * h[static_cast<size_t>(n)]);
    const FieldElement sub = field->cheb_value(ChebKind::U, n - 2) * sin2 * scalar;
    return {diag, sub};
}

/// Product-rule defect D_k(PQ) - [D_k P A_k Q + A_k P D_k Q]; identically
/// the zero polynomial.
template <ChebScalar S>
ChebPoly<FieldElement> product_rule_residual(const ChebPoly<S>& p, const ChebPoly<S>& q, int k) {
    return apply_Dk(p * q, k) - (apply_Dk(p, k) * apply_Ak(q, k) + apply_Ak(p, k) * apply_Dk(q, k));
}

/// Defect of the kappa three-term relation
///   a_n kappa_{n+1}(j) + c_n kappa_{n-1}(j)
///     - |cos(pi/k)| [a_j kappa_n(j+1) + c_j kappa_n(j-1)] - alpha_n(j);
/// identically zero. c_0 = 0 removes the kappa_n(-1) term. The table must
/// hold both parts through row n+1.
inline FieldElement kappa_recurrence_residual(const Family& family, const FourierTable& t, int n, int j) {
    if (n < 0 || j < 0) throw std::invalid_argument("kappa_recurrence_residual: negative index");
    if (n + 1 > t.N) throw std::out_of_range("kappa_recurrence_residual: table rows exhausted");
    if (!t.has_kappa() || !t.has_alpha()) throw std::invalid_argument("kappa_recurrence_residual: needs both table parts");
    const FieldElement lhs = t.kappa_at(n + 1, j) * family.a(n) + t.kappa_at(n - 1, j) * family.c(n);
    FieldElement bracket = t.kappa_at(n, j + 1) * family.a(j);
    if (j >= 1) bracket = bracket + t.kappa_at(n, j - 1) * family.c(j);
    const FieldElement rhs = t.field->abs_cos() * bracket + t.alpha_at(n, j);
    return lhs - rhs;
}

/// Convenience overload building the tables on the fly.
inline FieldElement kappa_recurrence_residual(const Family& family, int k, int n, int j) {
    return kappa_recurrence_residual(family, fourier_table(family, k, n + 1), n, j);
}

}  // namespace rwps
