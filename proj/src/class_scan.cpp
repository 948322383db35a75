#include "spinor/class_scan.hpp"

#include <omp.h>

#include <numeric>

#include "spinor/error.hpp"

namespace spinor::kernels {

namespace {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

void validate(std::span<const std::int64_t> weights, int strict_prefix, std::int64_t degree) {
  if (weights.empty()) throw ArgumentError("empty weight vector");
  if (strict_prefix < 0 || strict_prefix > static_cast<int>(weights.size()))
    throw ArgumentError("strict prefix out of range");
  if (degree < 0) throw ArgumentError("negative degree");
}

class Accumulator {
 public:
  explicit Accumulator(bool keep) : keep_(keep) {}

  void visit(const std::vector<std::int64_t>& x, std::int64_t value) {
    ++result_.count;
    if (keep_) {
      result_.classes.push_back(x);
      result_.values.push_back(value);
    }
    if (!result_.max_value || value > *result_.max_value) {
      result_.max_value = value;
      result_.argmax = x;
      result_.argmax_count = 1;
    } else if (value == *result_.max_value) {
      ++result_.argmax_count;
    }
  }

  // Appends a scan that follows this one in lexicographic order.
  void merge(ClassScan&& later) {
    result_.count += later.count;
    if (keep_) {
      std::move(later.classes.begin(), later.classes.end(), std::back_inserter(result_.classes));
      result_.values.insert(result_.values.end(), later.values.begin(), later.values.end());
    }
    if (!later.max_value) return;
    if (!result_.max_value || *later.max_value > *result_.max_value) {
      result_.max_value = later.max_value;
      result_.argmax = std::move(later.argmax);
      result_.argmax_count = later.argmax_count;
    } else if (*later.max_value == *result_.max_value) {
      result_.argmax_count += later.argmax_count;
    }
  }

  ClassScan take() { return std::move(result_); }

 private:
  bool keep_;
  ClassScan result_;
};

// Lexicographic walk over the suffix starting at `from`, with x[0..from)
// held fixed by the caller.
void walk(std::span<const std::int64_t> weights, int strict_prefix, std::int64_t degree, int from,
          std::vector<std::int64_t>& x, Accumulator& acc) {
  const int r = static_cast<int>(weights.size());
  auto lower = [&](int i) -> std::int64_t { return i < strict_prefix ? 1 : 0; };

  std::int64_t fixed = 0;
  for (int i = 0; i < from; ++i) fixed += x[i];
  std::int64_t suffix_floor = 0;
  for (int i = from; i < r; ++i) suffix_floor += lower(i);
  if (fixed + suffix_floor > degree) return;

  for (int i = from; i < r - 1; ++i) x[i] = lower(i);
  x[r - 1] = degree - fixed - (suffix_floor - lower(r - 1));

  while (true) {
    std::int64_t value = 0;
    for (int i = 0; i < r; ++i) value += weights[i] * x[i];
    acc.visit(x, value);

    // Rightmost position in [from, r-2] whose suffix still has slack above
    // its floors; on exit `slack` is that suffix's total slack.
    std::int64_t slack = x[r - 1] - lower(r - 1);
    int pos = r - 2;
    while (pos >= from && slack == 0) {
      slack += x[pos] - lower(pos);
      --pos;
    }
    if (pos < from) return;
    ++x[pos];
    for (int i = pos + 1; i < r - 1; ++i) x[i] = lower(i);
    x[r - 1] = lower(r - 1) + slack - 1;
  }
}

}  // namespace

std::uint64_t count_classes(int r, int strict_prefix, std::int64_t degree) {
  const std::int64_t free = degree - strict_prefix;
  if (free < 0 || r < 1) return 0;
  return binomial_saturating(static_cast<std::uint64_t>(free) + r - 1, static_cast<std::uint64_t>(r - 1));
}

ClassScan scan_classes_serial(std::span<const std::int64_t> weights, int strict_prefix,
                              std::int64_t degree, bool keep_classes) {
  validate(weights, strict_prefix, degree);
  Accumulator acc(keep_classes);
  std::vector<std::int64_t> x(weights.size(), 0);
  walk(weights, strict_prefix, degree, 0, x, acc);
  return acc.take();
}

ClassScan scan_classes_parallel(std::span<const std::int64_t> weights, int strict_prefix,
                                std::int64_t degree, bool keep_classes, int threads) {
  validate(weights, strict_prefix, degree);
  const int r = static_cast<int>(weights.size());
  if (r == 1) return scan_classes_serial(weights, strict_prefix, degree, keep_classes);

  const std::int64_t first_min = strict_prefix > 0 ? 1 : 0;
  std::int64_t rest_floor = std::max(0, strict_prefix - 1);
  const std::int64_t first_max = degree - rest_floor;
  if (first_max < first_min) return {};

  const std::int64_t chunks = first_max - first_min + 1;
  std::vector<ClassScan> partial(static_cast<std::size_t>(chunks));
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (std::int64_t c = 0; c < chunks; ++c) {
    Accumulator acc(keep_classes);
    std::vector<std::int64_t> x(r, 0);
    x[0] = first_min + c;
    walk(weights, strict_prefix, degree, 1, x, acc);
    partial[static_cast<std::size_t>(c)] = acc.take();
  }

  Accumulator merged(keep_classes);
  for (auto& p : partial) merged.merge(std::move(p));
  return merged.take();
}

}  // namespace spinor::kernels
