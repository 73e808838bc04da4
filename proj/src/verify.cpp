#include "sinai/verify.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <set>

#include "sinai/asymptotics.hpp"
#include "sinai/bijection.hpp"
#include "sinai/excursion_counts.hpp"
#include "sinai/sterneck.hpp"

namespace sinai {

namespace {

CheckResult run_check(std::string name, const std::function<std::string()>& body) {
    // Bodies return an empty string on success, a reason otherwise.
    try {
        std::string failure = body();
        return {std::move(name), failure.empty(), failure.empty() ? "ok" : failure};
    } catch (const std::exception& e) {
        return {std::move(name), false, std::string("exception: ") + e.what()};
    }
}

std::string phi_three_routes() {
    const int dp_n = 20;
    const auto rec = phi_recurrence(dp_n);
    const auto dp = phi_dp_table(dp_n);
    for (int n = 0; n <= dp_n; ++n) {
        if (rec[n] != dp[n]) {
            return "dp and recurrence differ at n = " + std::to_string(n);
        }
    }
    for (int n = 0; n <= 6; ++n) {
        if (phi_bruteforce(n) != rec[n]) {
            return "brute force and recurrence differ at n = " + std::to_string(n);
        }
    }
    return {};
}

std::string xi_oracles() {
    for (int n = 1; n <= 6; ++n) {
        const BigCount closed = xi(n);
        const BigCount brute = brute_count({4 * n - 1, 2 * n, 3 * n, 4 * n, false});
        if (closed != brute) {
            return "xi(" + std::to_string(n) + ") = " + closed.get_str() + " but enumeration gives " + brute.get_str();
        }
        if (2 * closed != lambda_vs(2 * n, 2 * n, 0)) {
            return "2 xi(n) != Lambda_2n(2n, 0) at n = " + std::to_string(n);
        }
    }
    return {};
}

std::string lambda_oracles() {
    for (int k = 1; k <= 6; ++k) {
        for (int m = 1; m <= 6; ++m) {
            for (int s = 0; s < m; ++s) {
                if (lambda_vs(k, m, s) != brute_count({m - 1, k, s, m, true})) {
                    return "Lambda_" + std::to_string(k) + "(" + std::to_string(m) + ", " + std::to_string(s) +
                           ") disagrees with enumeration";
                }
            }
        }
    }
    return {};
}

std::string bijection_roundtrips() {
    for (int n = 1; n <= 4; ++n) {
        const auto marked = enumerate_marked(n);
        std::set<ResidueSubset> seen;
        for (const auto& m : marked) {
            const auto t = upsilon(m);
            if (!seen.insert(t).second) {
                return "upsilon is not injective at n = " + std::to_string(n);
            }
            if (upsilon_inverse(t) != m) {
                return "upsilon_inverse(upsilon(m)) != m for " + m.excursion.to_string();
            }
        }
        const auto targets = residue_subsets(n);
        if (std::vector<ResidueSubset>(seen.begin(), seen.end()) != targets) {
            return "image of upsilon is not the residue-subset family at n = " + std::to_string(n);
        }
    }
    return {};
}

std::string series_identity() {
    const int order = 20;
    const auto series = sparre_andersen_series(order);
    const auto probs = excursion_probabilities(phi_dp_table(order));
    for (int n = 0; n <= order; ++n) {
        if (series[n] != probs[n]) {
            return "series coefficient " + std::to_string(n) + " differs from Phi_n / 2^{4n}";
        }
    }
    return {};
}

std::string renewal_identities() {
    const auto phi = phi_recurrence(5);
    const auto irreducible = phi_irreducible(phi);
    for (int n = 1; n <= 5; ++n) {
        if (phi_marked(n) != xi(n)) {
            return "Phi'_n != Xi_n at n = " + std::to_string(n);
        }
        if (phi_irreducible_bruteforce(n) != irreducible[n]) {
            return "irreducible series inversion disagrees with enumeration at n = " + std::to_string(n);
        }
    }
    return {};
}

std::string constant_algebra() {
    const auto lambda = lambda_enclosure(1000);
    const auto c = limit_constants(lambda.value);
    const double lhs = c.excursion.midpoint();
    const double rhs = c.phi.midpoint() / c.local.midpoint();
    if (std::abs(lhs / rhs - 1.0) > 1e-12) {
        return "(1/2) sqrt(pi/6) e^lambda != c_phi / c_local";
    }
    const double g1 = gamma_quarter(precision_for_digits(kDefaultDigits)).to_double();
    const double g2 = gamma_quarter_agm(precision_for_digits(kDefaultDigits)).to_double();
    if (std::abs(g1 / g2 - 1.0) > 1e-14) {
        return "Gamma(1/4) evaluations disagree";
    }
    return {};
}

}  // namespace

std::vector<CheckResult> run_verification() {
    return {
        run_check("phi_three_routes", phi_three_routes),
        run_check("xi_oracles", xi_oracles),
        run_check("lambda_vs_oracles", lambda_oracles),
        run_check("bijection_roundtrips", bijection_roundtrips),
        run_check("sparre_andersen_series", series_identity),
        run_check("renewal_identities", renewal_identities),
        run_check("constant_algebra", constant_algebra),
    };
}

}  // namespace sinai
