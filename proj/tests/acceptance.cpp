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

// End-to-end acceptance suite. Every check is exact (zero tolerance);
// one PASS/FAIL line is printed per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <string>
#include <vector>

#include "rwps/rwps.hpp"

using namespace rwps;

namespace {

int failures = 0;
std::string detail;

void note(const std::string& message) {
    if (detail.empty()) detail = message;
}

bool expect(bool ok, const std::string& message) {
    if (!ok) note(message);
    return ok;
}

void criterion(int index, const std::string& name, bool ok, double seconds) {
    std::printf("%s  criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(), seconds,
                ok ? "" : " -- ", ok ? "" : detail.c_str());
    if (!ok) ++failures;
    detail.clear();
}

struct Rng {
    unsigned long long state;
    unsigned long long next() {
        state += 0x9e3779b97f4a7c15ull;
        unsigned long long z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    Rational coefficient() {
        const long long d = 2 + static_cast<long long>(next() % 30);
        return Rational(1 + static_cast<long long>(next() % (d - 1)), d);
    }
    Family table_family(int length) {
        std::vector<Rational> c;
        for (int i = 0; i < length; ++i) c.push_back(coefficient());
        return Family::table(std::move(c));
    }
    ChebPoly<Rational> poly(int max_degree) {
        ChebPoly<Rational> p;
        const int terms = 1 + static_cast<int>(next() % 5);
        for (int t = 0; t < terms; ++t)
            p.add_term(static_cast<int>(next() % (max_degree + 1)),
                       Rational(static_cast<long long>(next() % 41) - 20, 1 + static_cast<long long>(next() % 12)));
        return p;
    }
};

std::vector<Family> builtin_families() {
    Rng rng{20260811};
    return {Family::chebyshev_t(), Family::ultraspherical(Rational(-1, 4)), Family::ultraspherical(Rational(1, 2)),
            Family::ultraspherical(Rational(1)), rng.table_family(52)};
}

ChebPoly<Rational> T(int n) { return ChebPoly<Rational>::basis(n, Rational(1)); }

long totient(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

bool criterion_expansion_oracle() {
    bool ok = true;
    for (const Family& fam : builtin_families()) {
        const ExpansionTables tables = pq_tables(fam, 48);
        for (int k = 1; k <= 6 && ok; ++k) {
            const Family sieved = fam.sieve(k);
            for (int m = 0; m <= 48 && ok; ++m)
                ok = expect(assemble_sieved(tables, k, m) == sieved.polynomial(m),
                            fam.fingerprint().substr(0, 24) + " k=" + std::to_string(k) + " m=" + std::to_string(m));
        }
    }
    return ok;
}

bool criterion_relations() {
    bool ok = true;
    for (const Family& fam : builtin_families()) {
        const ExpansionTables t = pq_tables(fam, 41);
        for (int n = 1; n <= 40; ++n)
            for (int j = 0; j <= n / 2; ++j)
                ok = ok && expect(t.r_at(n, j) == t.p_at(n - 1, j - 1) + t.q_at(n - 1, j),
                                  "inbound relation at n=" + std::to_string(n));
        for (int n = 0; n <= 40; ++n)
            for (int j = 0; j <= n / 2; ++j) {
                ok = ok && expect(t.q_at(n, j) == t.r_at(n, j) - t.p_at(n, j), "outbound relation at n=" + std::to_string(n));
                ok = ok && expect(t.p_at(n, j) == p_via_partial_sums(fam, n, j), "partial sums at n=" + std::to_string(n));
            }
        if (!ok) break;
    }
    return ok;
}

bool criterion_ultraspherical_closed_forms() {
    bool ok = true;
    for (const Rational alpha : {Rational(-1, 4), Rational(1, 2), Rational(1), Rational(7, 2)}) {
        const Family fam = Family::ultraspherical(alpha);
        const ExpansionTables t = pq_tables(fam, 30);
        for (int n = 0; n <= 30; ++n)
            for (int j = 0; j <= n / 2; ++j) {
                const auto [r, p] = ultraspherical_rp(alpha, n, j);
                ok = ok && expect(r == t.r_at(n, j) && p == t.p_at(n, j),
                                  "alpha=" + to_string(alpha) + " n=" + std::to_string(n) + " j=" + std::to_string(j));
            }
        if (!ok) break;
    }
    return ok;
}

bool criterion_polynomial_mapping() {
    bool ok = true;
    for (const Family& fam : builtin_families())
        for (int k = 1; k <= 5; ++k) {
            const Family sieved = fam.sieve(k);
            for (int m = 0; m <= 10; ++m)
                ok = ok && expect(sieved.polynomial(k * m) == fam.polynomial(m).compose_Tk(k),
                                  "mapping k=" + std::to_string(k) + " m=" + std::to_string(m));
        }
    return ok;
}

bool criterion_fourier_closed_forms() {
    bool ok = true;
    for (const Family& fam : builtin_families()) {
        for (int k = 1; k <= 6 && ok; ++k) {
            const FourierTable t = fourier_table(fam, k, 30);
            for (int n = 1; n <= 30; ++n)
                ok = ok && expect(t.sigma(n) == sigma_closed_form(fam, k, n), "sigma n=" + std::to_string(n) + " k=" + std::to_string(k));
            for (int n = 0; n <= 30; ++n)
                ok = ok && expect(t.alpha_at(n, n) == alpha_diag_closed_form(fam, k, n),
                                  "alpha diagonal n=" + std::to_string(n) + " k=" + std::to_string(k));
            for (int n = 2; n <= 30; ++n) {
                const auto [diag, sub] = alpha_closed_forms(fam, k, n);
                ok = ok && expect(t.alpha_at(n, n) == diag && t.alpha_at(n, n - 2) == sub,
                                  "alpha closed forms n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
        }
        if (!ok) break;
    }
    return ok;
}

bool criterion_product_rule_and_recurrence() {
    bool ok = true;
    Rng rng{424242};
    for (int k = 1; k <= 6; ++k)
        for (int trial = 0; trial < 200 && ok; ++trial)
            ok = expect(product_rule_residual(rng.poly(12), rng.poly(12), k).is_zero(),
                        "product rule k=" + std::to_string(k) + " trial=" + std::to_string(trial));
    for (const Family& fam : builtin_families()) {
        for (int k = 1; k <= 5 && ok; ++k) {
            const FourierTable t = fourier_table(fam, k, 26);
            for (int n = 0; n <= 25; ++n)
                for (int j = 0; j <= n; ++j)
                    ok = ok && expect(kappa_recurrence_residual(fam, t, n, j).is_zero(),
                                      "kappa recurrence n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
        if (!ok) break;
    }
    return ok;
}

bool criterion_characterization_equivalence() {
    Rng rng{777};
    std::vector<Family> families;
    for (int i = 0; i < 50; ++i) families.push_back(rng.table_family(26));

    std::vector<std::future<bool>> jobs;
    for (const Family& fam : families)
        jobs.push_back(std::async(std::launch::async, [fam] {
            for (int k = 2; k <= 4; ++k) {
                const Verdict direct = check_sieved_direct(fam, k, 24);
                const CharacterizationReport r = characterization_report(fam, k, 24);
                if (r.family != fam.fingerprint()) return false;
                for (const auto& c : r.conditions)
                    if (c.verdict.holds != direct.holds) return false;
                const CharacterizationReport rs = characterization_report(fam.sieve(k), k, 24);
                if (!rs.all_hold) return false;
            }
            return true;
        }));
    bool ok = true;
    for (size_t i = 0; i < jobs.size(); ++i)
        ok = ok && expect(jobs[i].get(), "equivalence broke for random family #" + std::to_string(i));
    return ok;
}

bool criterion_central_equation() {
    bool ok = true;
    for (const Family& fam : builtin_families())
        for (int k = 2; k <= 6; ++k)
            ok = ok && expect(verify_central_equation(fam.sieve(k), k, 40).holds,
                              "sieved " + fam.fingerprint().substr(0, 24) + " k=" + std::to_string(k));
    // single-coefficient perturbations are caught at the first eligible index
    Rng rng{5150};
    for (const Family& parent : {Family::chebyshev_t(), rng.table_family(44)}) {
        for (int k = 2; k <= 6 && ok; ++k) {
            const Family sieved = parent.sieve(k);
            std::vector<Rational> stream;
            for (long n = 1; n <= 42; ++n) stream.push_back(sieved.c(n));
            for (int m = 1; m <= 40 && ok; ++m) {
                if (m % k == 0) continue;
                auto broken = stream;
                broken[static_cast<size_t>(m - 1)] = broken[static_cast<size_t>(m - 1)] == Rational(1, 3) ? Rational(2, 5) : Rational(1, 3);
                const Verdict v = verify_central_equation(Family::table(broken), k, 40);
                ok = expect(!v.holds && v.n == m,
                            "perturbation at m=" + std::to_string(m) + " k=" + std::to_string(k) + " detected at " +
                                std::to_string(v.n));
            }
        }
    }
    return ok;
}

bool criterion_worked_values() {
    const Family ultra = Family::ultraspherical(Rational(1, 2));
    const Family sieved = ultra.sieve(2);
    bool ok = true;

    const ChebPoly<Rational> p5 = T(5) * Rational(1, 2) + T(3) * Rational(1, 6) + T(1) * Rational(1, 3);
    ok = ok && expect(sieved_poly_expansion(ultra, 2, 5) == p5, "P_5(x;2) from tables");
    ok = ok && expect(sieved.polynomial(5) == p5, "P_5(x;2) from the recurrence");

    const FourierTable t = kappa_table(ultra, 2, 3);
    ok = ok && expect(t.kappa_at(3, 0) == t.field->from_rational(Rational(1, 2)), "kappa_3(0;2) = 1/2");
    ok = ok && expect(t.sigma(3) == t.field->from_rational(Rational(-1, 6)), "sigma(3;2) = -1/6");

    auto f2 = NumberField::get(2);
    const auto img = apply_Dk(sieved.polynomial(3), 2);
    ok = ok && expect(img == promote(kernel_polynomial(sieved, 2), f2) * f2->from_rational(Rational(-5, 3)),
                      "D_2 P_3(x;2) = (-5/3) kernel_2");
    return ok;
}

bool criterion_number_field_layer() {
    bool ok = true;
    for (int k = 2; k <= 24; ++k)
        ok = ok && expect(minimal_polynomial(k).degree() == totient(2 * k) / 2, "minpoly degree at k=" + std::to_string(k));

    Rng rng{31337};
    for (int k : {1, 2, 3, 4, 5, 7, 9, 12}) {
        auto field = NumberField::get(k);
        const int d = field->degree();
        auto random_element = [&] {
            std::vector<Rational> coords;
            for (int i = 0; i < d; ++i) {
                const long long n = static_cast<long long>(rng.next() % 2000001) - 1000000;
                coords.emplace_back(n, 1 + static_cast<long long>(rng.next() % 1000000));
            }
            return FieldElement(field, std::move(coords));
        };
        for (int trial = 0; trial < 10 && ok; ++trial) {
            const FieldElement a = random_element(), b = random_element(), c = random_element();
            ok = ok && expect((a + b) + c == a + (b + c), "associativity of + in field k=" + std::to_string(k));
            ok = ok && expect(a * (b + c) == a * b + a * c, "distributivity in field k=" + std::to_string(k));
            if (!a.is_zero()) ok = ok && expect(a * a.inverse() == field->one(), "inverse in field k=" + std::to_string(k));
        }
    }
    for (int k = 1; k <= 12 && ok; ++k) {
        auto field = NumberField::get(k);
        const FieldElement x = field->abs_cos();
        const FieldElement x2m1 = x * x - field->one();
        for (int n = 0; n <= 50; ++n) {
            const FieldElement tn = field->cheb_value(ChebKind::T, n);
            const FieldElement un = field->cheb_value(ChebKind::U, n - 1);
            ok = ok && expect(tn * tn - x2m1 * un * un == field->one(), "Pell identity n=" + std::to_string(n));
            ok = ok && expect(tn == field->cheb_value(ChebKind::T, n + 2 * k), "periodicity n=" + std::to_string(n));
        }
    }
    return ok;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    struct Entry {
        const char* name;
        bool (*check)();
    };
    const Entry entries[] = {
        {"expansion oracle: tables vs sieved recurrence (k<=6, m<=48)", criterion_expansion_oracle},
        {"inbound/outbound/partial-sum relations (n<=40)", criterion_relations},
        {"ultraspherical closed forms r/p (n<=30)", criterion_ultraspherical_closed_forms},
        {"polynomial mapping P_{km}(x;k) = P_m(T_k(x)) (k<=5, m<=10)", criterion_polynomial_mapping},
        {"kappa/alpha/sigma closed forms (n<=30, k<=6)", criterion_fourier_closed_forms},
        {"product rule and kappa recurrence residuals", criterion_product_rule_and_recurrence},
        {"characterization equivalence on 50 random families (k=2..4, N=24)", criterion_characterization_equivalence},
        {"partial-sum identity and perturbation detection (n<=40, k<=6)", criterion_central_equation},
        {"worked exact values, bit for bit", criterion_worked_values},
        {"number-field layer: degrees, axioms, Chebyshev identities", criterion_number_field_layer},
    };
    int index = 0;
    for (const Entry& e : entries) {
        ++index;
        const auto start = Clock::now();
        bool ok = false;
        try {
            ok = e.check();
        } catch (const std::exception& ex) {
            note(std::string("exception: ") + ex.what());
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        criterion(index, e.name, ok, seconds);
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 10 acceptance criteria passed\n");
    return 0;
}
