#pragma once

#include <string>
#include <vector>

namespace sinai {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Desk-scale invariant suite behind the `verify` subcommand: the three Phi
// routes, the Xi and Lambda oracles, bijection round trips, the exp-series
// identity, the renewal identities and the limit-constant algebra.
std::vector<CheckResult> run_verification();

}  // namespace sinai
