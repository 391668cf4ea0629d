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

#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rwps/operators.hpp"

namespace rwps {

/// Outcome of one finite-horizon condition check. A check never claims
/// more than its horizon: "holds" means holds-up-to-N. Failures carry the
/// first offending index and an exact witness (never a decimal).
struct Verdict {
    bool holds = true;
    long n = -1;
    std::string witness;      // exact offending value(s)
    std::string field_label;  // "Q" or "Q(cos(pi/k))"

    static Verdict pass() { return {}; }
    static Verdict fail(long n, std::string witness, std::string field_label) {
        return Verdict{false, n, std::move(witness), std::move(field_label)};
    }
};

class InternalConsistencyError : public std::logic_error {
   public:
    InternalConsistencyError(std::string first, std::string second, long horizon)
        : std::logic_error("conditions \"" + first + "\" and \"" + second +
                           "\" disagree; smallest horizon exhibiting the disagreement is N = " + std::to_string(horizon)),
          first_(std::move(first)),
          second_(std::move(second)),
          horizon_(horizon) {}

    const std::string& first_condition() const noexcept { return first_; }
    const std::string& second_condition() const noexcept { return second_; }
    long horizon() const noexcept { return horizon_; }

   private:
    std::string first_, second_;
    long horizon_;
};

namespace detail {
inline std::string q_label(int k) { return "Q(cos(pi/" + std::to_string(k) + "))"; }
}

/// Condition (i), literally: c_n = 1/2 for every n <= N not divisible by k.
inline Verdict check_sieved_direct(const Family& family, int k, int N) {
    if (k < 1) throw std::invalid_argument("check_sieved_direct: k must be >= 1");
    const Rational half(1, 2);
    for (long n = 1; n <= N; ++n) {
        if (n % k == 0) continue;
        const Rational cn = family.c(n);
        if (cn != half) return Verdict::fail(n, "c_" + std::to_string(n) + " = " + to_string(cn), "Q");
    }
    return Verdict::pass();
}

/// Every P_n is an eigenvector of A_k with eigenvalue T_n(|cos(pi/k)|);
/// on hold the eigenvalue is also checked against P_n(|cos(pi/k)|).
inline Verdict check_eigen(const Family& family, int k, int N) {
    auto field = NumberField::get(k);
    for (int n = 0; n <= N; ++n) {
        const auto& pn = family.polynomial(n);
        const FieldElement lambda = field->cheb_value(ChebKind::T, n);
        const ChebPoly<FieldElement> residual = apply_Ak(pn, k) - promote(pn, field) * lambda;
        if (!residual.is_zero())
            return Verdict::fail(n, "A_" + std::to_string(k) + " P_" + std::to_string(n) + " - T_" + std::to_string(n) +
                                        "(|cos(pi/k)|) P_" + std::to_string(n) + " = " + to_string(residual),
                                 detail::q_label(k));
    }
    for (int n = 0; n <= N; ++n) {
        const FieldElement value = eval_at_algebraic(family.polynomial(n), k);
        const FieldElement lambda = field->cheb_value(ChebKind::T, n);
        if (value != lambda)
            return Verdict::fail(n, "eigenvalue " + lambda.str() + " differs from P_" + std::to_string(n) +
                                        "(|cos(pi/k)|) = " + value.str(),
                                 detail::q_label(k));
    }
    return Verdict::pass();
}

/// alpha_{n+1}(n-1;k) = 0 for 1 <= n <= N-1.
inline Verdict check_alpha_vanishing(const Family& family, int k, int N) {
    const FourierTable t = alpha_table(family, k, N);
    for (int n = 1; n <= N - 1; ++n) {
        const FieldElement v = t.alpha_at(n + 1, n - 1);
        if (!v.is_zero())
            return Verdict::fail(n, "alpha_" + std::to_string(n + 1) + "(" + std::to_string(n - 1) + ";" + std::to_string(k) +
                                        ") = " + v.str(),
                                 detail::q_label(k));
    }
    return Verdict::pass();
}

/// D_k P_n is a multiple of the kernel polynomial of degree n-1, checked
/// two equivalent ways for each n: directly against
/// D_k P_n(1) * kernel_polynomial(n-1), and through the orthogonality of
/// (1-x^2) D_k P_n to P_0..P_{n-2}. The two routes must agree.
inline Verdict check_Dk_kernel_property(const Family& family, int k, int N) {
    if (k < 1) throw std::invalid_argument("check_Dk_kernel_property: k must be >= 1");
    auto field = NumberField::get(k);
    ChebPoly<Rational> one_minus_x2;  // (T_0 - T_2)/2
    one_minus_x2.add_term(0, Rational(1, 2));
    one_minus_x2.add_term(2, Rational(-1, 2));
    for (int n = 1; n <= N; ++n) {
        const ChebPoly<FieldElement> img = apply_Dk(family.polynomial(n), k);

        const FieldElement at_one = eval_one(img, field);
        const ChebPoly<FieldElement> expected = promote(kernel_polynomial(family, n - 1), field) * at_one;
        const bool direct_ok = img == expected;

        auto coeffs = expand_in_P(family, promote(one_minus_x2, field) * img);
        int bad_j = -1;
        for (int j = 0; j <= n - 2 && j < static_cast<int>(coeffs.size()); ++j) {
            if (!coeffs[static_cast<size_t>(j)].is_zero()) {
                bad_j = j;
                break;
            }
        }
        const bool orth_ok = bad_j < 0;

        if (direct_ok != orth_ok)
            throw std::logic_error("check_Dk_kernel_property: the multiple-of-kernel route and the orthogonality route disagree at n = " +
                                   std::to_string(n));
        if (!direct_ok)
            return Verdict::fail(n, "<(1-x^2) D_" + std::to_string(k) + " P_" + std::to_string(n) + ", P_" + std::to_string(bad_j) +
                                        "> coefficient = " + coeffs[static_cast<size_t>(bad_j)].str(),
                                 detail::q_label(k));
    }
    return Verdict::pass();
}

enum class KappaMode { Full, Weakened };

/// The kappa/sigma coincidence conditions. Full mode requires, for each
/// 1 <= n <= N-4, kappa_{n+2}(n-1;k) = sigma(n+2;k) together with the
/// existence of m <= floor((n-1)/2) with kappa_{n+4}(n-1-2m;k) =
/// sigma(n+4;k). Weakened mode keeps only the first clause for k >= 3 and
/// switches to the odd-index variant for k in {1,2}.
inline Verdict check_kappa_conditions(const Family& family, int k, int N, KappaMode mode) {
    if (k < 1) throw std::invalid_argument("check_kappa_conditions: k must be >= 1");
    if (N < 5)
        throw std::invalid_argument("check_kappa_conditions: horizon N = " + std::to_string(N) +
                                    " is too small (rows up to n+4 are required; need N >= 5)");
    const FourierTable t = kappa_table(family, k, N);

    auto sigma = [&](int n) { return t.sigma(n); };
    auto mismatch = [&](int fail_n, int row, int col) {
        return Verdict::fail(fail_n, "kappa_" + std::to_string(row) + "(" + std::to_string(col) + ";" + std::to_string(k) + ") = " +
                                         t.kappa_at(row, col).str() + ", sigma(" + std::to_string(row) + ";" + std::to_string(k) +
                                         ") = " + sigma(row).str(),
                             detail::q_label(k));
    };
    auto no_match = [&](int fail_n, int row) {
        return Verdict::fail(fail_n, "no admissible m with kappa_" + std::to_string(row) + "(.;" + std::to_string(k) + ") = sigma(" +
                                         std::to_string(row) + ";" + std::to_string(k) + ") = " + sigma(row).str(),
                             detail::q_label(k));
    };

    if (mode == KappaMode::Full) {
        for (int n = 1; n <= N - 4; ++n) {
            if (t.kappa_at(n + 2, n - 1) != sigma(n + 2)) return mismatch(n, n + 2, n - 1);
            bool found = false;
            for (int m = 0; m <= (n - 1) / 2 && !found; ++m) found = t.kappa_at(n + 4, n - 1 - 2 * m) == sigma(n + 4);
            if (!found) return no_match(n, n + 4);
        }
        return Verdict::pass();
    }

    if (k >= 3) {
        for (int n = 1; n <= N - 2; ++n)
            if (t.kappa_at(n + 2, n - 1) != sigma(n + 2)) return mismatch(n, n + 2, n - 1);
        return Verdict::pass();
    }
    // k in {1,2}: odd-index variant.
    for (int n = 1; 2 * n + 1 <= N; ++n)
        if (t.kappa_at(2 * n + 1, 2 * n - 2) != sigma(2 * n + 1)) return mismatch(n, 2 * n + 1, 2 * n - 2);
    for (int n = 1; 2 * n + 3 <= N; ++n) {
        bool found = false;
        for (int m = 0; m <= n - 1 && !found; ++m) found = t.kappa_at(2 * n + 3, 2 * m) == sigma(2 * n + 3);
        if (!found) return no_match(n, 2 * n + 3);
    }
    return Verdict::pass();
}

/// The partial-sum identity 4 sum_{j<=n} a_{j-1} c_j = n + 1 at every
/// n <= N with k not dividing n.
inline Verdict verify_central_equation(const Family& family, int k, int N) {
    if (k < 1) throw std::invalid_argument("verify_central_equation: k must be >= 1");
    Rational sum(0);
    for (long n = 1; n <= N; ++n) {
        sum += family.a(n - 1) * family.c(n);
        if (n % k == 0) continue;
        if (4 * sum != n + 1)
            return Verdict::fail(n, "4*sum_{j<=" + std::to_string(n) + "} a_{j-1} c_j = " + to_string(4 * sum) + " != " +
                                        std::to_string(n + 1),
                                 "Q");
    }
    return Verdict::pass();
}

/// k = 1 companion: fit alpha = 1/(2 c_1) - 3/2 and compare the whole
/// coefficient stream against n/(2n + 2 alpha + 1) up to N.
inline std::pair<Rational, Verdict> check_ultraspherical_fit(const Family& family, int N) {
    const Rational alpha = Rational(1) / (2 * family.c(1)) - Rational(3, 2);
    for (long n = 1; n <= N; ++n) {
        const Rational expected = Rational(n) / (Rational(2 * n) + 2 * alpha + 1);
        const Rational got = family.c(n);
        if (got != expected)
            return {alpha, Verdict::fail(n, "c_" + std::to_string(n) + " = " + to_string(got) + " != " + to_string(expected) +
                                                " (fitted alpha = " + to_string(alpha) + ")",
                                         "Q")};
    }
    return {alpha, Verdict::pass()};
}

struct ConditionResult {
    std::string condition;
    Verdict verdict;
};

/// Joint report over all implemented conditions. The checks run
/// concurrently; the verdicts are then cross-validated, since the
/// conditions are equivalent: for k >= 2 all six must agree, for k = 1
/// the averaging-side conditions hold unconditionally while the
/// D_1-side conditions must agree with the ultraspherical fit.
struct CharacterizationReport {
    std::string family;
    int k = 0;
    int N = 0;
    std::string mode;
    std::vector<ConditionResult> conditions;
    bool all_hold = false;
    std::optional<Rational> fitted_alpha;  // k = 1 only

    const Verdict& verdict_of(const std::string& condition) const {
        for (const auto& c : conditions)
            if (c.condition == condition) return c.verdict;
        throw std::out_of_range("no condition \"" + condition + "\" in report");
    }
};

inline CharacterizationReport characterization_report(const Family& family, int k, int N, KappaMode mode = KappaMode::Full) {
    if (k < 1) throw std::invalid_argument("characterization_report: k must be >= 1");
    auto direct = std::async(std::launch::async, [&] { return check_sieved_direct(family, k, N); });
    auto eigen = std::async(std::launch::async, [&] { return check_eigen(family, k, N); });
    auto alpha_vanish = std::async(std::launch::async, [&] { return check_alpha_vanishing(family, k, N); });
    auto dk_kernel = std::async(std::launch::async, [&] { return check_Dk_kernel_property(family, k, N); });
    auto kappa = std::async(std::launch::async, [&] { return check_kappa_conditions(family, k, N, mode); });
    auto central = std::async(std::launch::async, [&] { return verify_central_equation(family, k, N); });

    CharacterizationReport report;
    report.family = family.fingerprint();
    report.k = k;
    report.N = N;
    report.mode = mode == KappaMode::Full ? "full" : "weakened";
    report.conditions.push_back({"direct", direct.get()});
    report.conditions.push_back({"thm3.1-ii", eigen.get()});
    report.conditions.push_back({"thm3.1-iii", alpha_vanish.get()});
    report.conditions.push_back({"thm3.2-ii", dk_kernel.get()});
    report.conditions.push_back({"thm3.2-iv", kappa.get()});
    report.conditions.push_back({"eq3.7", central.get()});

    std::vector<std::vector<std::string>> equivalence_classes;
    if (k >= 2) {
        equivalence_classes = {{"direct", "thm3.1-ii", "thm3.1-iii", "thm3.2-ii", "thm3.2-iv", "eq3.7"}};
    } else {
        auto [alpha, fit] = check_ultraspherical_fit(family, N);
        report.fitted_alpha = alpha;
        report.conditions.push_back({"thm3.2-i-prime", fit});
        equivalence_classes = {{"direct", "thm3.1-ii", "thm3.1-iii", "eq3.7"}, {"thm3.2-i-prime", "thm3.2-ii", "thm3.2-iv"}};
    }
    for (const auto& cls : equivalence_classes) {
        for (size_t i = 1; i < cls.size(); ++i) {
            const Verdict& a = report.verdict_of(cls[0]);
            const Verdict& b = report.verdict_of(cls[i]);
            if (a.holds != b.holds) {
                const Verdict& failing = a.holds ? b : a;
                throw InternalConsistencyError(cls[0], cls[i], failing.n);
            }
        }
    }
    report.all_hold = true;
    for (const auto& c : report.conditions) report.all_hold = report.all_hold && c.verdict.holds;
    return report;
}

}  // namespace rwps
