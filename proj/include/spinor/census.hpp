#pragma once

// Exhaustive census of n x n skew-symmetric matrices over F_p by rank.
// A skew matrix is indexed by its strictly-upper-triangular entries read
// row by row as base-p digits (least significant first).

#include <cstdint>
#include <map>

namespace spinor::iso {

inline constexpr std::uint64_t kDefaultCensusCap = std::uint64_t{1} << 24;

// p^(n(n-1)/2), saturating at UINT64_MAX.
std::uint64_t skew_matrix_count(int n, std::uint64_t p);

// Reference implementation on the generic exact-field matrix.
std::map<int, std::uint64_t> skew_rank_census_serial(int n, std::uint64_t p,
                                                     std::uint64_t cap = kDefaultCensusCap);

// OpenMP implementation; threads <= 0 uses the OpenMP default.
std::map<int, std::uint64_t> skew_rank_census(int n, std::uint64_t p,
                                              std::uint64_t cap = kDefaultCensusCap, int threads = 0);

}  // namespace spinor::iso
