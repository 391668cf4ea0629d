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

#include "rwps/cheb_poly.hpp"

using namespace rwps;

namespace {

ChebPoly<Rational> T(int n) { return ChebPoly<Rational>::basis(n, Rational(1)); }

struct Rng {
    unsigned long long state;
    unsigned long long next() {
        state += 0x9e3779b97f4a7c15ull;
        unsigned long long z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    ChebPoly<Rational> sparse_poly(int max_degree) {
        ChebPoly<Rational> p;
        const int terms = 1 + static_cast<int>(next() % 6);
        for (int t = 0; t < terms; ++t) {
            const int deg = static_cast<int>(next() % (max_degree + 1));
            const long long n = static_cast<long long>(next() % 201) - 100;
            const long long d = 1 + static_cast<long long>(next() % 40);
            p.add_term(deg, Rational(n, d));
        }
        return p;
    }
};

}  // namespace

TEST_CASE("product linearization") {
    CHECK(T(1) * T(1) == T(2) * Rational(1, 2) + T(0) * Rational(1, 2));
    CHECK(T(2) * T(3) == T(5) * Rational(1, 2) + T(1) * Rational(1, 2));
    const ChebPoly<Rational> p = T(4) * Rational(2, 3) + T(1) * Rational(-1, 5);
    CHECK(p * T(0) == p);
    CHECK((p - p).is_zero());
    CHECK((ChebPoly<Rational>{} * p).is_zero());
}

TEST_CASE("multiplication by x") {
    CHECK(T(0).mul_x() == T(1));
    CHECK(T(1).mul_x() == T(2) * Rational(1, 2) + T(0) * Rational(1, 2));
    CHECK(ChebPoly<Rational>{}.mul_x().is_zero());
}

TEST_CASE("U in the T basis") {
    CHECK(u_in_t(-1).is_zero());
    CHECK(u_in_t(0) == T(0));
    CHECK(u_in_t(1) == T(1) * Rational(2));
    CHECK(u_in_t(2) == T(2) * Rational(2) + T(0));
    CHECK_THROWS_AS(u_in_t(-2), std::invalid_argument);
}

TEST_CASE("evaluation") {
    CHECK(eval_one(T(5)) == Rational(1));
    CHECK(eval_one(ChebPoly<Rational>{}) == Rational(0));
    // U_2(0) = -1
    CHECK(eval_at_algebraic(u_in_t(2), 2) == NumberField::get(2)->from_rational(Rational(-1)));
    const auto f4 = NumberField::get(4);
    CHECK(eval_at_algebraic(T(2), 4) == f4->zero());  // T_2(cos(pi/4)) = 0
}

TEST_CASE("degree and coefficient access") {
    CHECK(ChebPoly<Rational>{}.degree() == -1);
    const auto p = T(7) * Rational(1, 3) + T(2);
    CHECK(p.degree() == 7);
    REQUIRE(p.coeff_ptr(2) != nullptr);
    CHECK(*p.coeff_ptr(2) == Rational(1));
    CHECK(p.coeff_ptr(5) == nullptr);
    // cancellation drops stored terms
    auto q = p - T(7) * Rational(1, 3);
    CHECK(q.degree() == 2);
    CHECK(q.coeff_ptr(7) == nullptr);
}

TEST_CASE("negative T indices are an internal error") {
    CHECK_THROWS_AS(T(-1), std::logic_error);
    ChebPoly<Rational> p;
    CHECK_THROWS_AS(p.add_term(-3, Rational(1)), std::logic_error);
}

TEST_CASE("difference identity (2x^2-2) U_{n-1} = T_{n+1} - T_{n-1}") {
    ChebPoly<Rational> factor;  // 2x^2 - 2 = T_2 - T_0
    factor.add_term(2, Rational(1));
    factor.add_term(0, Rational(-1));
    for (int n = 1; n <= 40; ++n) CHECK(factor * u_in_t(n - 1) == T(n + 1) - T(n - 1));
}

TEST_CASE("mixed products 2 T_m U_{n-1}") {
    for (int n = 0; n <= 20; ++n)
        for (int m = 0; m <= n; ++m) CHECK(T(m) * u_in_t(n - 1) * Rational(2) == u_in_t(m + n - 1) + u_in_t(n - m - 1));
    for (int m = 0; m <= 20; ++m)
        for (int n = 0; n <= m; ++n) CHECK(T(m) * u_in_t(n - 1) * Rational(2) == u_in_t(m + n - 1) - u_in_t(m - n - 1));
}

TEST_CASE("product is commutative and associative") {
    Rng rng{7};
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = rng.sparse_poly(30), b = rng.sparse_poly(30), c = rng.sparse_poly(30);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("composition with T_k") {
    const auto p = T(3) * Rational(1, 2) + T(1) * Rational(1, 2);
    const auto q = p.compose_Tk(4);
    CHECK(q == T(12) * Rational(1, 2) + T(4) * Rational(1, 2));
    CHECK(p.compose_Tk(1) == p);
}

TEST_CASE("rendering") {
    const auto p = T(5) * Rational(1, 2) + T(3) * Rational(1, 6) + T(1) * Rational(1, 3);
    CHECK(to_string(p) == "1/2*T5 + 1/6*T3 + 1/3*T1");
    CHECK(to_string(T(2) * Rational(-4, 3) + T(0) * Rational(-1, 3)) == "-4/3*T2 - 1/3*T0");
    CHECK(to_string(ChebPoly<Rational>{}) == "0");
}

TEST_CASE("field-coefficient polynomials detect mixed fields") {
    auto f4 = NumberField::get(4);
    auto f5 = NumberField::get(5);
    auto p = ChebPoly<FieldElement>::basis(1, f4->theta());
    auto q = ChebPoly<FieldElement>::basis(1, f5->theta());
    CHECK_THROWS_AS(p + q, FieldMismatchError);
    CHECK_THROWS_AS(p * q, FieldMismatchError);
    CHECK(eval_one(p * p, f4) == f4->from_rational(Rational(2)));  // theta^2 = 2, T_1^2 at 1
    CHECK_THROWS_AS(eval_at_algebraic(p, 5), FieldMismatchError);
}
