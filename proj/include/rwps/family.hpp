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

#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "rwps/cheb_poly.hpp"
#include "rwps/rational.hpp"

namespace rwps {

/// A random walk polynomial sequence (RWPS): P_0 = 1, P_1 = x,
/// x P_n = a_n P_{n+1} + c_n P_{n-1} with c_n in (0,1) and a_n = 1 - c_n.
/// A Family supplies the coefficient stream c_n and generates the
/// polynomials (cached, exact, in the T basis). Families are immutable;
/// copies share state. The per-family polynomial cache is synchronized.
class Family {
   public:
    enum class Kind { ChebyshevT, Ultraspherical, Table, Sieved, Custom };

    static Family chebyshev_t() { return Family(std::make_shared<Impl>(Kind::ChebyshevT)); }

    /// Ultraspherical family with c_n = n/(2n + 2*alpha + 1); alpha > -1.
    /// alpha = -1/2 is allowed and coincides with chebyshev_t.
    static Family ultraspherical(Rational alpha) {
        if (alpha <= -1) throw std::invalid_argument("ultraspherical: alpha must be > -1");
        auto impl = std::make_shared<Impl>(Kind::Ultraspherical);
        impl->alpha = std::move(alpha);
        return Family(std::move(impl));
    }

    static Family table(std::vector<Rational> c) {
        auto impl = std::make_shared<Impl>(Kind::Table);
        impl->c_table = std::move(c);
        return Family(std::move(impl));
    }

    static Family sieved(Family inner, int k) {
        if (k < 1) throw std::invalid_argument("sieved: k must be >= 1");
        auto impl = std::make_shared<Impl>(Kind::Sieved);
        impl->inner = std::make_shared<Family>(std::move(inner));
        impl->sieve_k = k;
        return Family(std::move(impl));
    }

    static Family custom(std::string name, std::function<Rational(long)> c) {
        auto impl = std::make_shared<Impl>(Kind::Custom);
        impl->custom_name = std::move(name);
        impl->custom_c = std::move(c);
        return Family(std::move(impl));
    }

    /// The k-sieved companion: c(n;k) = c_{n/k} when k | n, 1/2 otherwise.
    /// k = 1 returns the family unchanged.
    Family sieve(int k) const {
        if (k < 1) throw std::invalid_argument("sieve: k must be >= 1");
        if (k == 1) return *this;
        return sieved(*this, k);
    }

    Kind kind() const noexcept { return impl_->kind; }
    const Rational& alpha() const { return impl_->alpha; }
    int sieve_k() const noexcept { return impl_->sieve_k; }
    const Family& inner() const { return *impl_->inner; }
    const std::vector<Rational>& table_values() const { return impl_->c_table; }

    /// Recurrence coefficient c_n, n >= 1; validated to lie in (0,1) at
    /// access, with the failing index in the error. c(0) = 0 by convention.
    Rational c(long n) const {
        if (n <= 0) {
            if (n == 0) return Rational(0);
            throw std::invalid_argument("Family::c: index must be >= 0");
        }
        Rational value = impl_->raw_c(n);
        if (value <= 0 || value >= 1)
            throw CoefficientError(n, "c_" + std::to_string(n) + " = " + rwps::to_string(value) + " is outside (0,1)");
        return value;
    }

    /// a_n = 1 - c_n; a_0 = 1.
    Rational a(long n) const { return Rational(1) - c(n); }

    /// Canonical description; used as the cache/report key.
    const std::string& fingerprint() const {
        std::call_once(impl_->fp_once, [&] { impl_->fingerprint = impl_->make_fingerprint(); });
        return impl_->fingerprint;
    }

    /// Orthonormalization weights h(0..N): h(0) = 1, h(n) = h(n-1) a_{n-1}/c_n.
    std::vector<Rational> weights(int N) const {
        std::vector<Rational> h;
        h.reserve(static_cast<size_t>(N) + 1);
        h.emplace_back(1);
        for (int n = 1; n <= N; ++n) h.push_back(h.back() * a(n - 1) / c(n));
        return h;
    }

    /// P_n in the T basis, normalized so P_n(1) = 1. Cached.
    const ChebPoly<Rational>& polynomial(int n) const {
        if (n < 0) throw std::invalid_argument("Family::polynomial: negative degree");
        std::lock_guard lock(impl_->poly_mutex);
        auto& cache = impl_->polys;
        if (cache.empty()) {
            cache.push_back(ChebPoly<Rational>::basis(0, Rational(1)));
            cache.push_back(ChebPoly<Rational>::basis(1, Rational(1)));
        }
        while (static_cast<int>(cache.size()) <= n) {
            const long m = static_cast<long>(cache.size()) - 1;  // build P_{m+1}
            const Rational cm = c(m);
            ChebPoly<Rational> next = (cache.back().mul_x() - cache[static_cast<size_t>(m - 1)] * cm) * (Rational(1) / a(m));
            cache.push_back(std::move(next));
        }
        return cache[static_cast<size_t>(n)];
    }

   private:
    struct Impl {
        explicit Impl(Kind kd) : kind(kd) {}

        Kind kind;
        Rational alpha;
        std::vector<Rational> c_table;
        std::shared_ptr<Family> inner;
        int sieve_k = 1;
        std::string custom_name;
        std::function<Rational(long)> custom_c;

        std::once_flag fp_once;
        std::string fingerprint;
        std::mutex poly_mutex;
        // deque: growth never invalidates references handed out earlier,
        // so concurrent readers stay valid while new rows are appended
        std::deque<ChebPoly<Rational>> polys;

        Rational raw_c(long n) const {
            switch (kind) {
                case Kind::ChebyshevT:
                    return Rational(1, 2);
                case Kind::Ultraspherical:
                    return Rational(n) / (Rational(2 * n) + 2 * alpha + 1);
                case Kind::Table:
                    if (n > static_cast<long>(c_table.size()))
                        throw TableExhaustedError(n, "table family has no c_" + std::to_string(n) + " (length " +
                                                         std::to_string(c_table.size()) + ")");
                    return c_table[static_cast<size_t>(n - 1)];
                case Kind::Sieved:
                    return n % sieve_k == 0 ? inner->c(n / sieve_k) : Rational(1, 2);
                case Kind::Custom:
                    return custom_c(n);
            }
            throw std::logic_error("Family: unknown kind");
        }

        std::string make_fingerprint() const {
            switch (kind) {
                case Kind::ChebyshevT:
                    return "chebyshev_t";
                case Kind::Ultraspherical:
                    return "ultraspherical(alpha=" + rwps::to_string(alpha) + ")";
                case Kind::Table: {
                    std::string out = "table(";
                    for (size_t i = 0; i < c_table.size(); ++i) {
                        if (i) out += ",";
                        out += rwps::to_string(c_table[i]);
                    }
                    return out + ")";
                }
                case Kind::Sieved:
                    return "sieved(k=" + std::to_string(sieve_k) + ";" + inner->fingerprint() + ")";
                case Kind::Custom:
                    return "custom(" + custom_name + ")";
            }
            throw std::logic_error("Family: unknown kind");
        }
    };

    explicit Family(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<Impl> impl_;
};

/// Kernel polynomial: the degree-n polynomial orthogonal with respect to
/// (1-x^2) dmu, normalized to 1 at x = 1; equals the h-weighted average of
/// P_n, P_{n-2}, ....
inline ChebPoly<Rational> kernel_polynomial(const Family& family, int n) {
    if (n < 0) throw std::invalid_argument("kernel_polynomial: negative degree");
    const auto h = family.weights(n);
    ChebPoly<Rational> sum;
    Rational total(0);
    for (int j = n; j >= 0; j -= 2) {
        sum = sum + family.polynomial(j) * h[static_cast<size_t>(j)];
        total += h[static_cast<size_t>(j)];
    }
    return sum * (Rational(1) / total);
}

/// The constant C_n* with (1-x^2) P_n* = C_n* (P_{n+2} - P_n), computed by
/// two independent routes (the h-sum form and the Christoffel-Darboux form).
/// Both components must agree; callers assert equality.
inline std::pair<Rational, Rational> c_star(const Family& family, int n) {
    if (n < 0) throw std::invalid_argument("c_star: negative index");
    const auto h = family.weights(n + 2);
    const Rational top = -family.c(n + 1) * family.c(n + 2) * h[static_cast<size_t>(n + 2)];
    Rational parity_sum(0);
    for (int j = n; j >= 0; j -= 2) parity_sum += h[static_cast<size_t>(j)];
    Rational full_sum(0);
    for (int j = 0; j <= n; ++j) full_sum += h[static_cast<size_t>(j)];
    const Rational cd_den = full_sum + family.c(n + 1) * h[static_cast<size_t>(n + 1)];
    return {top / parity_sum, Rational(2) * top / cd_den};
}

/// Expansion coefficients e_0..e_d of poly in the family's P basis, by
/// descending-degree elimination. Exact; empty for the zero polynomial.
template <ChebScalar S>
std::vector<S> expand_in_P(const Family& family, ChebPoly<S> poly) {
    std::vector<std::pair<int, S>> found;
    while (!poly.is_zero()) {
        const int d = poly.degree();
        const S& lead = *poly.coeff_ptr(d);
        const ChebPoly<Rational>& basis = family.polynomial(d);
        const Rational& basis_lead = *basis.coeff_ptr(d);
        S e = lead * (Rational(1) / basis_lead);
        if constexpr (std::is_same_v<S, Rational>) {
            poly = poly - basis * e;
        } else {
            poly = poly - promote(basis, e.field()) * e;
        }
        found.emplace_back(d, std::move(e));
    }
    if (found.empty()) return {};
    std::vector<S> out;
    out.reserve(static_cast<size_t>(found.front().first) + 1);
    const S zero = found.front().second - found.front().second;
    for (int j = 0; j <= found.front().first; ++j) out.push_back(zero);
    for (auto& [d, e] : found) out[static_cast<size_t>(d)] = std::move(e);
    return out;
}

}  // namespace rwps
