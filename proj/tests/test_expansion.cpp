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

#include <catch2/catch_amalgamated.hpp>

#include "rwps/expansion.hpp"

using namespace rwps;

namespace {

ChebPoly<Rational> T(int n) { return ChebPoly<Rational>::basis(n, Rational(1)); }

const Family kUltra = Family::ultraspherical(Rational(1, 2));
const Family kCheb = Family::chebyshev_t();

}  // namespace

TEST_CASE("r rows") {
    CHECK(r_coeffs(kUltra, 1) == std::vector<Rational>{Rational(1)});
    CHECK(r_coeffs(kUltra, 2) == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
    for (int n = 0; n <= 10; ++n) {
        const auto row = r_coeffs(kCheb, n);
        REQUIRE(static_cast<int>(row.size()) == n / 2 + 1);
        for (size_t j = 0; j < row.size(); ++j) CHECK(row[j] == (j == 0 ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("coupled p/q recursion") {
    const ExpansionTables t = pq_tables(kUltra, 4);
    CHECK(t.p[0] == std::vector<Rational>{Rational(0)});
    CHECK(t.q[0] == std::vector<Rational>{Rational(1)});
    CHECK(t.p[1] == std::vector<Rational>{Rational(1, 3)});
    CHECK(t.q[1] == std::vector<Rational>{Rational(2, 3)});
    CHECK(t.p[2] == std::vector<Rational>{Rational(1, 6), Rational(0)});
    CHECK(t.q[2] == std::vector<Rational>{Rational(1, 2), Rational(1, 3)});
    // even-row tail: q_n(n/2) = p_{n-1}(n/2 - 1)
    CHECK(t.q[4][2] == t.p[3][1]);
    // out-of-range index conventions resolve to zero
    CHECK(t.p_at(3, -1) == Rational(0));
    CHECK(t.q_at(3, 2) == Rational(0));
}

TEST_CASE("sieved expansions from tables") {
    CHECK(sieved_poly_expansion(kUltra, 2, 3) == T(3) * Rational(2, 3) + T(1) * Rational(1, 3));
    CHECK(sieved_poly_expansion(kUltra, 2, 5) ==
          T(5) * Rational(1, 2) + T(3) * Rational(1, 6) + T(1) * Rational(1, 3));
    for (int k = 1; k <= 6; ++k)
        for (int i = 0; i < k; ++i) CHECK(sieved_poly_expansion(kUltra, k, i) == T(i));
}

TEST_CASE("tables agree with the sieved recurrence") {
    for (const Family& fam : {kUltra, kCheb, Family::ultraspherical(Rational(-1, 4))}) {
        const ExpansionTables t = pq_tables(fam, 20);
        for (int k = 1; k <= 4; ++k) {
            const Family sieved = fam.sieve(k);
            for (int m = 0; m <= 20; ++m) CHECK(assemble_sieved(t, k, m) == sieved.polynomial(m));
        }
    }
}

TEST_CASE("tables do not depend on k") {
    const ExpansionTables t = pq_tables(kUltra, 12);
    for (int k : {2, 3, 5}) {
        const Family sieved = kUltra.sieve(k);
        for (int m = 0; m <= 12; ++m) CHECK(assemble_sieved(t, k, m) == sieved.polynomial(m));
    }
}

TEST_CASE("polynomial mapping at multiples of k") {
    for (int k = 1; k <= 5; ++k) {
        const Family sieved = kUltra.sieve(k);
        for (int m = 0; m <= 10; ++m) CHECK(sieved.polynomial(k * m) == kUltra.polynomial(m).compose_Tk(k));
    }
}

TEST_CASE("inbound and outbound relations") {
    for (const Family& fam : {kUltra, kCheb}) {
        const ExpansionTables t = pq_tables(fam, 41);
        for (int n = 1; n <= 40; ++n)
            for (int j = 0; j <= n / 2; ++j) CHECK(t.r_at(n, j) == t.p_at(n - 1, j - 1) + t.q_at(n - 1, j));
        for (int n = 0; n <= 40; ++n)
            for (int j = 0; j <= n / 2; ++j) CHECK(t.q_at(n, j) == t.r_at(n, j) - t.p_at(n, j));
    }
}

TEST_CASE("p via partial sums") {
    CHECK(p_via_partial_sums(kUltra, 0, 0) == Rational(0));
    CHECK(p_via_partial_sums(kUltra, 2, 0) == Rational(1, 6));
    for (int n = 0; n <= 10; ++n)
        for (int j = 0; j <= n / 2; ++j) CHECK(p_via_partial_sums(kCheb, n, j) == Rational(0));
    const ExpansionTables t = pq_tables(kUltra, 20);
    for (int n = 0; n <= 20; ++n)
        for (int j = 0; j <= n / 2; ++j) CHECK(p_via_partial_sums(kUltra, n, j) == t.p_at(n, j));
}

TEST_CASE("ultraspherical closed forms") {
    CHECK(ultraspherical_rp(Rational(1, 2), 2, 1) == std::pair{Rational(1, 3), Rational(0)});
    CHECK(ultraspherical_rp(Rational(1, 2), 2, 0) == std::pair{Rational(2, 3), Rational(1, 6)});
    for (const Rational alpha : {Rational(-1, 4), Rational(1), Rational(7, 2)}) {
        const auto [r10, p10] = ultraspherical_rp(alpha, 1, 0);
        CHECK(r10 == Rational(1));
        CHECK(p10 == (2 * alpha + 1) / (4 * alpha + 4));
    }
    CHECK_THROWS_AS(ultraspherical_rp(Rational(-1, 2), 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(ultraspherical_rp(Rational(1, 2), 3, 2), std::invalid_argument);
}

TEST_CASE("closed forms match the generated tables") {
    for (const Rational alpha : {Rational(-1, 4), Rational(1, 2), Rational(1), Rational(7, 2)}) {
        const Family fam = Family::ultraspherical(alpha);
        const ExpansionTables t = pq_tables(fam, 15);
        for (int n = 0; n <= 15; ++n)
            for (int j = 0; j <= n / 2; ++j) {
                const auto [r, p] = ultraspherical_rp(alpha, n, j);
                CHECK(r == t.r_at(n, j));
                CHECK(p == t.p_at(n, j));
            }
    }
}
