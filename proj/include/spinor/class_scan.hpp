#pragma once

// Enumerate integer vectors x of length r with
//   x_i >= 1 for i <= strict_prefix,  x_i >= 0 otherwise,  sum x_i = degree
// in ascending lexicographic order, and scan them for the maximum of a linear
// functional w . x.
//
// scan_classes_serial is the reference implementation; scan_classes_parallel
// splits the work by the value of x_1 across OpenMP threads and merges the
// per-thread results in lexicographic order, so the two agree bit for bit.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace spinor::kernels {

struct ClassScan {
  std::uint64_t count = 0;
  // Populated only when the scan was asked to keep them.
  std::vector<std::vector<std::int64_t>> classes;
  std::vector<std::int64_t> values;
  std::optional<std::int64_t> max_value;
  std::vector<std::int64_t> argmax;  // first maximizer in lexicographic order
  std::uint64_t argmax_count = 0;

  bool operator==(const ClassScan&) const = default;
};

// Number of vectors the scan visits; saturates at UINT64_MAX.
std::uint64_t count_classes(int r, int strict_prefix, std::int64_t degree);

ClassScan scan_classes_serial(std::span<const std::int64_t> weights, int strict_prefix,
                              std::int64_t degree, bool keep_classes);

// threads <= 0 uses the OpenMP default.
ClassScan scan_classes_parallel(std::span<const std::int64_t> weights, int strict_prefix,
                                std::int64_t degree, bool keep_classes, int threads = 0);

}  // namespace spinor::kernels
