#pragma once

#include <cstdint>
#include <vector>

#include "sinai/lattice_paths.hpp"

namespace sinai {

// A Sinai excursion of length 4n together with a shift index j in
// [1, 2k], where 4k is the length of its first irreducible part. j selects
// the j-th time before an up step of that part (i_1 = 0, i_{2k} = 4k - 1).
struct MarkedExcursion {
    Walk excursion;
    int j = 1;

    friend bool operator==(const MarkedExcursion&, const MarkedExcursion&) = default;
    friend auto operator<=>(const MarkedExcursion&, const MarkedExcursion&) = default;
};

// A size-2n subset of {1, ..., 4n-1} whose sum is n or 3n mod 4n.
struct ResidueSubset {
    DownTimeSet times;
    int n = 0;

    friend bool operator==(const ResidueSubset&, const ResidueSubset&) = default;
    friend auto operator<=>(const ResidueSubset&, const ResidueSubset&) = default;
};

// Times before up steps inside the first irreducible part of an excursion.
std::vector<int> first_part_up_times(const Walk& excursion);

// Down times of the excursion cyclically shifted left by i_j.
ResidueSubset upsilon(const MarkedExcursion& m);

struct InverseTrace {
    MarkedExcursion result;
    int shift = 0;            // m: time in X where the chosen excursion starts (0 < m <= 4n)
    std::int64_t axis = 0;    // delta: the translated axis height, A / (4n)
    int qualifying_points = 0;  // how many candidate m start an excursion w.r.t. the axis
};

// Rebuilds the bridge X from the subset, lowers the axis to delta = A/(4n)
// so the total area vanishes, and takes the rightmost point on the axis
// before an up step whose cyclic shift is a Sinai excursion. Throws
// InvalidArgument for malformed subsets and InternalError if no point
// qualifies.
InverseTrace upsilon_inverse_trace(const ResidueSubset& t);
MarkedExcursion upsilon_inverse(const ResidueSubset& t);

bool is_residue_subset(const DownTimeSet& times, int n);

// Every (excursion, j) pair of size n, excursions in enumeration order.
std::vector<MarkedExcursion> enumerate_marked(int n);

// The image of upsilon over enumerate_marked(n), as a multiset in the same
// order (duplicates preserved so callers can test injectivity).
std::vector<ResidueSubset> enumerate_image(int n);

// All size-2n subsets of {1, ..., 4n-1} summing to n or 3n mod 4n, sorted.
std::vector<ResidueSubset> residue_subsets(int n);

}  // namespace sinai
