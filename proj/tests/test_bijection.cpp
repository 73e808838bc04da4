#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sinai/bijection.hpp"
#include "sinai/errors.hpp"
#include "sinai/excursion_counts.hpp"
#include "sinai/sterneck.hpp"

using namespace sinai;

namespace {

std::vector<std::string> images_of(const std::string& excursion) {
    const Walk w = Walk::parse(excursion);
    std::vector<std::string> out;
    const int marks = static_cast<int>(first_part_up_times(w).size());
    for (int j = 1; j <= marks; ++j) {
        out.push_back(upsilon({w, j}).times.to_string());
    }
    return out;
}

ResidueSubset subset(const std::vector<int>& t, int n) {
    return ResidueSubset{DownTimeSet(t, 4 * n), n};
}

}  // namespace

TEST_CASE("up times of the first part") {
    CHECK(first_part_up_times(Walk::parse("UDDUUDDU")) == std::vector<int>{0, 3});
    CHECK(first_part_up_times(Walk::parse("UDUDDUDU")) == std::vector<int>{0, 2, 5, 7});
    CHECK(first_part_up_times(Walk::parse("UUDDDDUU")) == std::vector<int>{0, 1, 6, 7});
}

TEST_CASE("figure vectors for n = 2") {
    CHECK(images_of("UDDUUDDU") == std::vector<std::string>{"1,2,5,6", "2,3,6,7"});
    CHECK(images_of("UDUDDUDU") == std::vector<std::string>{"1,3,4,6", "1,2,4,7", "1,4,6,7", "2,4,5,7"});
    CHECK(images_of("UUDDDDUU") == std::vector<std::string>{"2,3,4,5", "1,2,3,4", "4,5,6,7", "3,4,5,6"});
}

TEST_CASE("inverse on figure vectors") {
    const auto a = upsilon_inverse(subset({2, 3, 6, 7}, 2));
    CHECK(a.excursion.to_string() == "UDDUUDDU");
    CHECK(a.j == 2);
    const auto b = upsilon_inverse(subset({1, 2, 5, 6}, 2));
    CHECK(b.excursion.to_string() == "UDDUUDDU");
    CHECK(b.j == 1);
    const auto c = upsilon_inverse(subset({1, 2, 3, 4}, 2));
    CHECK(c.excursion.to_string() == "UUDDDDUU");
    CHECK(c.j == 2);
    const auto trace = upsilon_inverse_trace(subset({2, 3, 6, 7}, 2));
    CHECK(trace.result == a);
    CHECK(trace.qualifying_points >= 1);
}

TEST_CASE("inverse rejects malformed subsets") {
    CHECK_THROWS_AS(upsilon_inverse(subset({0, 1, 2, 3}, 2)), InvalidArgument);
    CHECK_THROWS_AS(upsilon_inverse(subset({1, 2, 3}, 2)), InvalidArgument);
    CHECK_THROWS_AS(upsilon_inverse(subset({1, 2, 3, 5}, 2)), InvalidArgument);
    CHECK_THROWS_AS(upsilon({Walk::parse("UDDU"), 3}), InvalidArgument);
    CHECK_THROWS_AS(upsilon({Walk::parse("UDDU"), 0}), InvalidArgument);
    CHECK_THROWS_AS(upsilon({Walk::parse("DUUD"), 1}), InvalidArgument);
}

TEST_CASE("images for small n") {
    const auto one = residue_subsets(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].times.to_string() == "1,2");
    CHECK(one[1].times.to_string() == "2,3");

    auto img2 = enumerate_image(2);
    CHECK(img2.size() == 10);
    std::sort(img2.begin(), img2.end());
    CHECK(img2 == residue_subsets(2));

    const auto three = residue_subsets(3);
    CHECK(three.size() == 80);
    CHECK(brute_count({11, 6, 3, 12, false}) + brute_count({11, 6, 9, 12, false}) == 80);
}

TEST_CASE("upsilon is a bijection for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        INFO("n = " << n);
        const auto marked = enumerate_marked(n);
        const auto image = enumerate_image(n);
        REQUIRE(marked.size() == image.size());
        REQUIRE(BigCount(static_cast<unsigned long>(image.size())) == 2 * xi(n));

        const std::set<ResidueSubset> distinct(image.begin(), image.end());
        REQUIRE(distinct.size() == image.size());

        for (std::size_t i = 0; i < marked.size(); ++i) {
            REQUIRE(is_residue_subset(image[i].times, n));
            REQUIRE(upsilon_inverse(image[i]) == marked[i]);
        }
        const auto all = residue_subsets(n);
        REQUIRE(all == std::vector<ResidueSubset>(distinct.begin(), distinct.end()));
        for (const auto& t : all) {
            REQUIRE(upsilon(upsilon_inverse(t)) == t);
        }
    }
}

TEST_CASE("residue law under shifts") {
    // Rotating a bridge left by one moves every down time back by one; a
    // down time at 0 wraps to 4n - 1. The sum changes by 4n |{0} cap t| - 2n.
    for (int n = 1; n <= 4; ++n) {
        for (const auto& w : enumerate_excursions(n)) {
            const std::int64_t len = 4 * n;
            for (std::size_t s = 0; s + 1 < w.length(); ++s) {
                const auto a = down_times(w.rotated_left(s));
                const auto b = down_times(w.rotated_left(s + 1));
                const bool wraps = w[s] == Step::Down;
                REQUIRE(b.sum() - a.sum() == (wraps ? len : 0) - 2 * n);
            }
        }
    }
    for (int n = 1; n <= 4; ++n) {
        for (const auto& t : enumerate_image(n)) {
            const auto r = t.times.sum() % (4 * n);
            REQUIRE((r == n || r == 3 * n));
        }
    }
}

TEST_CASE("qualifying point multiplicities") {
    for (int n = 1; n <= 5; ++n) {
        std::map<int, int> histogram;
        for (const auto& t : residue_subsets(n)) {
            const auto trace = upsilon_inverse_trace(t);
            REQUIRE(trace.qualifying_points >= 1);
            REQUIRE(trace.shift > 0);
            REQUIRE(trace.shift <= 4 * n);
            ++histogram[trace.qualifying_points];
        }
        std::string line;
        for (auto [k, count] : histogram) {
            line += " " + std::to_string(k) + ":" + std::to_string(count);
        }
        MESSAGE("n = " << n << " qualifying points (multiplicity:subsets)" << line);
    }
}
