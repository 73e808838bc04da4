#include "sinai/bijection.hpp"

#include <algorithm>
#include <string>

#include "sinai/errors.hpp"
#include "sinai/excursion_counts.hpp"

namespace sinai {

namespace {

constexpr int kResidueSubsetMaxN = 6;

void collect_subsets(int next, int max, int remaining, std::int64_t sum, std::vector<int>& chosen, int n,
                     std::vector<ResidueSubset>& out) {
    if (remaining == 0) {
        const std::int64_t r = sum % (4 * n);
        if (r == n || r == 3 * n) {
            out.push_back({DownTimeSet(chosen, 4 * n), n});
        }
        return;
    }
    for (int v = next; v + remaining - 1 <= max; ++v) {
        chosen.push_back(v);
        collect_subsets(v + 1, max, remaining - 1, sum + v, chosen, n, out);
        chosen.pop_back();
    }
}

}  // namespace

std::vector<int> first_part_up_times(const Walk& excursion) {
    const auto parts = irreducible_decomposition(excursion);
    if (parts.empty()) {
        throw InvalidArgument("the empty excursion has no irreducible part");
    }
    std::vector<int> ups;
    const Walk& first = parts.front();
    for (std::size_t k = 0; k < first.length(); ++k) {
        if (first[k] == Step::Up) {
            ups.push_back(static_cast<int>(k));
        }
    }
    return ups;
}

ResidueSubset upsilon(const MarkedExcursion& m) {
    if (!classify(m.excursion).sinai_excursion || m.excursion.empty()) {
        throw InvalidArgument("upsilon needs a non-empty Sinai excursion, got " + m.excursion.to_string());
    }
    const auto ups = first_part_up_times(m.excursion);
    if (m.j < 1 || m.j > static_cast<int>(ups.size())) {
        throw InvalidArgument("shift index j = " + std::to_string(m.j) + " outside [1, " +
                              std::to_string(ups.size()) + "]");
    }
    const Walk shifted = m.excursion.rotated_left(static_cast<std::size_t>(ups[static_cast<std::size_t>(m.j - 1)]));
    return {down_times(shifted), static_cast<int>(m.excursion.length() / 4)};
}

bool is_residue_subset(const DownTimeSet& times, int n) {
    if (n < 1 || times.length() != 4 * n || times.size() != static_cast<std::size_t>(2 * n)) {
        return false;
    }
    if (times.times().front() < 1) {
        return false;
    }
    const std::int64_t r = times.sum() % (4 * n);
    return r == n || r == 3 * n;
}

InverseTrace upsilon_inverse_trace(const ResidueSubset& t) {
    if (!is_residue_subset(t.times, t.n)) {
        throw InvalidArgument("not a size-2n subset of {1..4n-1} summing to n or 3n mod 4n: {" +
                              t.times.to_string() + "}");
    }
    const int len = 4 * t.n;
    const Walk x = walk_from_down_times(t.times);
    const auto heights = x.heights();
    const std::int64_t area = x.areas().back();
    if (area % len != 0) {
        throw InternalError("bridge area " + std::to_string(area) + " is not divisible by 4n");
    }
    InverseTrace trace;
    trace.axis = area / len;

    bool found = false;
    for (int m = len; m >= 1; --m) {
        const int pos = m % len;
        if (heights[static_cast<std::size_t>(pos)] != trace.axis || x[static_cast<std::size_t>(pos)] != Step::Up) {
            continue;
        }
        Walk candidate = x.rotated_left(static_cast<std::size_t>(pos));
        if (!classify(candidate).sinai_excursion) {
            continue;
        }
        ++trace.qualifying_points;
        if (!found) {
            found = true;
            trace.shift = m;
            trace.result.excursion = std::move(candidate);
        }
    }
    if (!found) {
        throw InternalError("no cyclic shift of {" + t.times.to_string() + "} is a Sinai excursion");
    }
    const int up_time = (len - trace.shift) % len;
    const auto ups = first_part_up_times(trace.result.excursion);
    const auto it = std::find(ups.begin(), ups.end(), up_time);
    if (it == ups.end()) {
        throw InternalError("recovered shift " + std::to_string(up_time) +
                            " is not an up time of the first irreducible part");
    }
    trace.result.j = static_cast<int>(it - ups.begin()) + 1;
    return trace;
}

MarkedExcursion upsilon_inverse(const ResidueSubset& t) {
    return upsilon_inverse_trace(t).result;
}

std::vector<MarkedExcursion> enumerate_marked(int n) {
    std::vector<MarkedExcursion> out;
    if (n < 1) {
        return out;
    }
    for (Walk& w : enumerate_excursions(n)) {
        const int shifts = static_cast<int>(first_part_up_times(w).size());
        for (int j = 1; j <= shifts; ++j) {
            out.push_back({w, j});
        }
    }
    return out;
}

std::vector<ResidueSubset> enumerate_image(int n) {
    std::vector<ResidueSubset> out;
    for (const auto& m : enumerate_marked(n)) {
        out.push_back(upsilon(m));
    }
    return out;
}

std::vector<ResidueSubset> residue_subsets(int n) {
    if (n < 1) {
        throw InvalidArgument("residue_subsets needs n >= 1");
    }
    if (n > kResidueSubsetMaxN) {
        throw ResourceGuard("residue_subsets refused: n = " + std::to_string(n) + " exceeds the guard of " +
                            std::to_string(kResidueSubsetMaxN));
    }
    std::vector<ResidueSubset> out;
    std::vector<int> chosen;
    collect_subsets(1, 4 * n - 1, 2 * n, 0, chosen, n, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sinai
