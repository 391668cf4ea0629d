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

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "rwps/rational.hpp"

namespace rwps {

/// Monic integer minimal polynomial of 2cos(pi/k) over Q.
/// coefficients[i] is the coefficient of x^i; the last entry is 1.
struct MinPoly {
    int k = 0;
    std::vector<Integer> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

namespace detail {

// Coefficient vectors c[0..d], low degree first.
using IntPoly = std::vector<Integer>;

inline IntPoly ipoly_xn_minus_1(int n) {
    IntPoly p(static_cast<size_t>(n) + 1, Integer(0));
    p[0] = -1;
    p[static_cast<size_t>(n)] = 1;
    return p;
}

// Exact division of integer polynomials; divisor must be monic-led and
// divide evenly (both hold for cyclotomic factors).
inline IntPoly ipoly_divide_exact(IntPoly dividend, const IntPoly& divisor) {
    const int dd = static_cast<int>(dividend.size()) - 1;
    const int dv = static_cast<int>(divisor.size()) - 1;
    IntPoly quot(static_cast<size_t>(dd - dv) + 1, Integer(0));
    for (int i = dd - dv; i >= 0; --i) {
        Integer c = dividend[static_cast<size_t>(i + dv)] / divisor.back();
        quot[static_cast<size_t>(i)] = c;
        if (c != 0)
            for (int j = 0; j <= dv; ++j) dividend[static_cast<size_t>(i + j)] -= c * divisor[static_cast<size_t>(j)];
    }
    for (const auto& r : dividend)
        if (r != 0) throw std::logic_error("cyclotomic division left a remainder");
    return quot;
}

/// Cyclotomic polynomial Phi_n, computed by dividing x^n - 1 by all
/// proper cyclotomic factors Phi_d, d | n, d < n. Memoized.
inline const IntPoly& cyclotomic(int n) {
    static std::map<int, IntPoly> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // Recurse without re-locking.
    struct Builder {
        std::map<int, IntPoly>& cache;
        const IntPoly& get(int m) {
            if (auto it = cache.find(m); it != cache.end()) return it->second;
            IntPoly p = ipoly_xn_minus_1(m);
            for (int d = 1; d < m; ++d)
                if (m % d == 0) p = ipoly_divide_exact(std::move(p), get(d));
            return cache.emplace(m, std::move(p)).first->second;
        }
    } builder{cache};
    return builder.get(n);
}

}  // namespace detail

/// Minimal polynomial of 2cos(pi/k): fold the (palindromic) cyclotomic
/// polynomial Phi_{2k}(x) = x^{D/2} * Psi(x + 1/x) and return Psi.
/// Degree is phi(2k)/2 for k >= 2; k = 1 gives x + 2.
inline MinPoly minimal_polynomial(int k) {
    if (k <= 0) throw std::invalid_argument("minimal_polynomial: k must be >= 1");
    if (k == 1) return MinPoly{1, {Integer(2), Integer(1)}};

    const auto& phi = detail::cyclotomic(2 * k);
    const int D = static_cast<int>(phi.size()) - 1;
    const int d = D / 2;

    // V_m(y) = x^m + x^-m restricted to y = x + 1/x:
    // V_0 = 2, V_1 = y, V_m = y*V_{m-1} - V_{m-2}.
    std::vector<detail::IntPoly> V(static_cast<size_t>(d) + 1);
    V[0] = {Integer(2)};
    if (d >= 1) V[1] = {Integer(0), Integer(1)};
    for (int m = 2; m <= d; ++m) {
        detail::IntPoly v(static_cast<size_t>(m) + 1, Integer(0));
        for (size_t i = 0; i < V[static_cast<size_t>(m - 1)].size(); ++i) v[i + 1] = V[static_cast<size_t>(m - 1)][i];
        for (size_t i = 0; i < V[static_cast<size_t>(m - 2)].size(); ++i) v[i] -= V[static_cast<size_t>(m - 2)][i];
        V[static_cast<size_t>(m)] = std::move(v);
    }

    detail::IntPoly psi(static_cast<size_t>(d) + 1, Integer(0));
    psi[0] = phi[static_cast<size_t>(d)];  // constant term a_{D/2}
    for (int m = 1; m <= d; ++m) {
        const Integer& a = phi[static_cast<size_t>(d - m)];
        if (a != 0)
            for (size_t i = 0; i < V[static_cast<size_t>(m)].size(); ++i) psi[i] += a * V[static_cast<size_t>(m)][i];
    }
    return MinPoly{k, std::move(psi)};
}

/// "x^2 - x - 1" style rendering, descending powers.
inline std::string to_string(const MinPoly& mp) {
    std::string out;
    for (int i = mp.degree(); i >= 0; --i) {
        const Integer& c = mp.coefficients[static_cast<size_t>(i)];
        if (c == 0) continue;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string var = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        if (mag != 1 || i == 0) {
            out += mag.str();
            if (!var.empty()) out += var;
        } else {
            out += var;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace rwps
