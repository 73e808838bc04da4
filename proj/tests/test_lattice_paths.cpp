#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sinai/errors.hpp"
#include "sinai/lattice_paths.hpp"

using namespace sinai;

namespace {

Walk walk_from_mask(std::uint32_t mask, int len) {
    std::vector<Step> steps;
    for (int k = 0; k < len; ++k) {
        steps.push_back(((mask >> k) & 1U) ? Step::Down : Step::Up);
    }
    return Walk(steps);
}

// Calls f on every size-k subset of {lo, ..., hi} with the given sum.
void for_each_subset_with_sum(int lo, int hi, int k, std::int64_t sum, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> cur;
    std::function<void(int, std::int64_t)> rec = [&](int next, std::int64_t left) {
        const int need = k - static_cast<int>(cur.size());
        if (need == 0) {
            if (left == 0) {
                f(cur);
            }
            return;
        }
        for (int v = next; v <= hi - need + 1; ++v) {
            // smallest and largest completions
            const std::int64_t min_rest = static_cast<std::int64_t>(need) * v + static_cast<std::int64_t>(need) * (need - 1) / 2;
            const std::int64_t max_rest = static_cast<std::int64_t>(need) * hi - static_cast<std::int64_t>(need) * (need - 1) / 2;
            if (min_rest > left) {
                break;
            }
            if (max_rest < left) {
                continue;
            }
            cur.push_back(v);
            rec(v + 1, left - v);
            cur.pop_back();
        }
    };
    rec(lo, sum);
}

}  // namespace

TEST_CASE("walk parsing and serialization") {
    const Walk w = Walk::parse("UDDU");
    CHECK(w.length() == 4);
    CHECK(w.to_string() == "UDDU");
    CHECK(w.heights() == std::vector<std::int64_t>{0, 1, 0, -1, 0});
    CHECK(w.areas() == std::vector<std::int64_t>{0, 1, 1, 0, 0});
    CHECK_THROWS_AS(Walk::parse("UXD"), InvalidArgument);
    CHECK(Walk::parse("").empty());
    CHECK(w.rotated_left(1).to_string() == "DDUU");
}

TEST_CASE("classify on the small examples") {
    const auto c = classify(Walk::parse("UDDU"));
    CHECK(c.sinai_excursion);
    CHECK(c.irreducible);
    CHECK(c.kind() == ExcursionClass::Kind::IrreducibleSinaiExcursion);

    const auto empty = classify(Walk{});
    CHECK(empty.sinai_excursion);

    const auto neg = classify(Walk::parse("DUUD"));
    CHECK(neg.bridge);
    CHECK_FALSE(neg.sinai_walk);
    CHECK(neg.kind() == ExcursionClass::Kind::Bridge);

    CHECK(classify(Walk::parse("UU")).kind() == ExcursionClass::Kind::SinaiWalk);
    CHECK(classify(Walk::parse("DD")).kind() == ExcursionClass::Kind::General);

    const auto twice = classify(Walk::parse("UDDUUDDU"));
    CHECK(twice.sinai_excursion);
    CHECK_FALSE(twice.irreducible);
    CHECK(to_string(ExcursionClass::Kind::SinaiExcursion) == "sinai_excursion");
}

TEST_CASE("UDDU is the only excursion of length 4") {
    int found = 0;
    for (std::uint32_t m = 0; m < 16; ++m) {
        const Walk w = walk_from_mask(m, 4);
        if (classify(w).sinai_excursion) {
            ++found;
            CHECK(w.to_string() == "UDDU");
        }
    }
    CHECK(found == 1);
}

TEST_CASE("excursions need length divisible by 4") {
    for (int len = 1; len <= 14; ++len) {
        if (len % 4 == 0) {
            continue;
        }
        for (std::uint32_t m = 0; m < (1U << len); ++m) {
            REQUIRE_FALSE(classify(walk_from_mask(m, len)).sinai_excursion);
        }
    }
}

TEST_CASE("down times") {
    CHECK(down_times(standard_excursion(2)).to_string() == "1,2,5,6");
    CHECK(walk_from_down_times(DownTimeSet({2, 3}, 4)).to_string() == "UUDD");
    CHECK(DownTimeSet::parse("1,2,5,6", 8) == DownTimeSet({1, 2, 5, 6}, 8));
    CHECK(DownTimeSet::parse("", 4).size() == 0);
    CHECK_THROWS_AS(DownTimeSet({2, 1}, 4), InvalidArgument);
    CHECK_THROWS_AS(DownTimeSet({4}, 4), InvalidArgument);
    CHECK_THROWS_AS(DownTimeSet::parse("1,,2", 4), InvalidArgument);
    CHECK_THROWS_AS(DownTimeSet::parse("1,2,", 4), InvalidArgument);
}

TEST_CASE("area from down times") {
    CHECK(area_from_down_times(DownTimeSet({1, 2, 5, 6}, 8)) == 0);
    CHECK(area_from_down_times(DownTimeSet({0, 3}, 4)) == 0);
    CHECK(area_from_down_times(DownTimeSet({2, 3}, 4)) == 4);
    CHECK_THROWS_AS(area_from_down_times(DownTimeSet({1}, 4)), InvalidArgument);
    CHECK_THROWS_AS(area_from_down_times(DownTimeSet({1, 2}, 3)), InvalidArgument);
}

TEST_CASE("area identity over every bridge up to length 24") {
    for (int len = 4; len <= 24; len += 4) {
        std::int64_t checked = 0;
        for (std::uint32_t m = 0; m < (1U << len); ++m) {
            if (std::popcount(m) != len / 2) {
                continue;
            }
            std::int64_t height = 0;
            std::int64_t area = 0;
            std::int64_t sum = 0;
            for (int k = 0; k < len; ++k) {
                const bool down = (m >> k) & 1U;
                height += down ? -1 : 1;
                area += height;
                sum += down ? k : 0;
            }
            const std::int64_t n = len / 4;
            REQUIRE(area == -2 * n * (4 * n - 1) + 2 * sum);
            ++checked;
        }
        CHECK(checked > 0);
    }
    // The library function on the same identity, through Walk objects.
    for (int len = 4; len <= 16; len += 4) {
        for (std::uint32_t m = 0; m < (1U << len); ++m) {
            if (std::popcount(m) != len / 2) {
                continue;
            }
            const Walk w = walk_from_mask(m, len);
            REQUIRE(w.areas().back() == area_from_down_times(down_times(w)));
        }
    }
}

TEST_CASE("down time round trips") {
    for (int len = 0; len <= 12; ++len) {
        for (std::uint32_t m = 0; m < (1U << len); ++m) {
            const Walk w = walk_from_mask(m, len);
            const DownTimeSet t = down_times(w);
            REQUIRE(walk_from_down_times(t) == w);
            REQUIRE(down_times(walk_from_down_times(t)) == t);
        }
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const int len = 24;
        const Walk w = walk_from_mask(static_cast<std::uint32_t>(rng()) & ((1U << len) - 1), len);
        REQUIRE(walk_from_down_times(down_times(w)) == w);
    }
}

TEST_CASE("standard excursion") {
    CHECK(standard_excursion(1).heights() == std::vector<std::int64_t>{0, 1, 0, -1, 0});
    const Walk w3 = standard_excursion(3);
    CHECK(w3.length() == 12);
    CHECK(classify(w3).sinai_excursion);
    for (auto h : w3.heights()) {
        CHECK(std::abs(h) <= 1);
    }
    CHECK(down_times(w3).to_string() == "1,2,5,6,9,10");
}

TEST_CASE("majorization examples") {
    const DownTimeSet y({1, 2, 5, 6}, 8);
    CHECK(is_majorized(DownTimeSet({1, 3, 4, 6}, 8), y));
    CHECK(is_majorized(y, y));
    CHECK_FALSE(is_majorized(DownTimeSet({1, 2, 4, 7}, 8), y));
}

TEST_CASE("majorization characterizes excursions for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const DownTimeSet standard = down_times(standard_excursion(n));
        std::int64_t total = 0;
        std::int64_t excursions = 0;
        std::vector<std::string> counterexamples;
        for_each_subset_with_sum(1, 4 * n - 1, 2 * n, static_cast<std::int64_t>(n) * (4 * n - 1), [&](const std::vector<int>& v) {
            const DownTimeSet t(v, 4 * n);
            const bool exc = classify(walk_from_down_times(t)).sinai_excursion;
            excursions += exc;
            ++total;
            if (is_majorized(t, standard) != exc && counterexamples.size() < 5) {
                counterexamples.push_back(t.to_string());
            }
        });
        INFO("n = " << n << ", subsets " << total << ", excursions " << excursions);
        for (const auto& c : counterexamples) {
            MESSAGE("counterexample at n = " << n << ": {" << c << "}");
        }
        CHECK(counterexamples.empty());
    }
}

TEST_CASE("irreducible decomposition") {
    const auto parts = irreducible_decomposition(Walk::parse("UDDUUDDU"));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].to_string() == "UDDU");
    CHECK(parts[1].to_string() == "UDDU");
    CHECK(irreducible_decomposition(Walk::parse("UUDDDDUU")).size() == 1);
    CHECK(irreducible_decomposition(standard_excursion(2)).size() == 2);
    CHECK(renewal_times(standard_excursion(3)) == std::vector<std::size_t>{4, 8});
    CHECK(irreducible_decomposition(Walk{}).empty());
    CHECK_THROWS_AS(irreducible_decomposition(Walk::parse("DUUD")), InvalidArgument);
}

TEST_CASE("decomposition parts concatenate back") {
    for (int len = 4; len <= 20; len += 4) {
        for (std::uint32_t m = 0; m < (1U << len); ++m) {
            if (std::popcount(m) != len / 2) {
                continue;
            }
            const Walk w = walk_from_mask(m, len);
            if (!classify(w).sinai_excursion) {
                continue;
            }
            const auto parts = irreducible_decomposition(w);
            for (const auto& p : parts) {
                REQUIRE(classify(p).irreducible);
                REQUIRE(p.length() % 4 == 0);
            }
            REQUIRE(concatenate(parts) == w);
        }
    }
}
