#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sinai {

enum class Step : std::int8_t { Down = -1, Up = 1 };

// A finite +-1 walk started at height 0. Heights S_k and areas
// A_k = S_1 + ... + S_k are derived on demand.
class Walk {
public:
    Walk() = default;
    explicit Walk(std::vector<Step> steps) : steps_(std::move(steps)) {}

    // Parses a string over {U, D}.
    static Walk parse(std::string_view ud);

    std::size_t length() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    std::span<const Step> steps() const { return steps_; }
    Step operator[](std::size_t k) const { return steps_[k]; }

    // Both have length() + 1 entries; index 0 is the starting point.
    std::vector<std::int64_t> heights() const;
    std::vector<std::int64_t> areas() const;

    std::string to_string() const;

    // Increment k of the result is increment (k + shift) mod L of *this.
    Walk rotated_left(std::size_t shift) const;

    friend bool operator==(const Walk&, const Walk&) = default;
    friend auto operator<=>(const Walk&, const Walk&) = default;

private:
    std::vector<Step> steps_;
};

Walk concatenate(std::span<const Walk> parts);

// Times k whose increment k is a down step, for a walk of length L.
class DownTimeSet {
public:
    DownTimeSet() = default;
    // Throws InvalidArgument unless times are strictly increasing in [0, L-1].
    DownTimeSet(std::vector<int> times, int length);

    // Parses "1,2,5,6"; the empty string is the empty set.
    static DownTimeSet parse(std::string_view csv, int length);

    std::span<const int> times() const { return times_; }
    int length() const { return length_; }
    std::size_t size() const { return times_.size(); }
    std::int64_t sum() const;

    std::string to_string() const;

    friend bool operator==(const DownTimeSet&, const DownTimeSet&) = default;
    friend auto operator<=>(const DownTimeSet&, const DownTimeSet&) = default;

private:
    std::vector<int> times_;
    int length_ = 0;
};

struct ExcursionClass {
    enum class Kind { General, Bridge, SinaiWalk, SinaiExcursion, IrreducibleSinaiExcursion };

    bool bridge = false;
    bool sinai_walk = false;
    bool sinai_excursion = false;
    bool irreducible = false;

    // The most specific flag that is set. A Sinai walk that is not a bridge
    // reports SinaiWalk; a bridge with a negative area reports Bridge.
    Kind kind() const;
};

std::string_view to_string(ExcursionClass::Kind kind);

// An excursion is irreducible when no interior time has S_k = A_k = 0.
// (The area is also zero one step before each such renewal time, where the
// walk sits at height -1, so strict interior positivity of the area alone
// would rule out every excursion.)
ExcursionClass classify(const Walk& w);

DownTimeSet down_times(const Walk& w);
Walk walk_from_down_times(const DownTimeSet& t);

// Total area of the bridge of length 4n encoded by t, from the down times
// alone: -2n(4n-1) + 2 * sum(t).
std::int64_t area_from_down_times(const DownTimeSet& t);

// The sawtooth U D D U repeated n times; heights 0,1,0,-1,0,...
Walk standard_excursion(int n);

// x is majorized by y in the convention used for Sinai excursions: every
// partial sum of x is >= the matching partial sum of y, with equality for
// the full sums.
bool is_majorized(const DownTimeSet& x, const DownTimeSet& y);

// Interior times where S_k = A_k = 0 (always multiples of 4 for excursions).
std::vector<std::size_t> renewal_times(const Walk& w);

// Splits a Sinai excursion at its renewal times. Throws InvalidArgument for
// anything that is not a Sinai excursion.
std::vector<Walk> irreducible_decomposition(const Walk& w);

}  // namespace sinai
