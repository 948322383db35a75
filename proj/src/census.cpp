#include "spinor/census.hpp"

#include <omp.h>

#include <array>
#include <limits>
#include <vector>

#include "spinor/error.hpp"
#include "spinor/matrix.hpp"

namespace spinor::iso {

namespace {

constexpr int kMaxCensusRank = 12;

std::uint64_t checked_count(int n, std::uint64_t p, std::uint64_t cap) {
  if (n < 1) throw ArgumentError("census needs n >= 1");
  if (!is_prime(p)) throw ArgumentError("census modulus " + std::to_string(p) + " is not prime");
  if (n > kMaxCensusRank) throw CapExceeded("census rank too large");
  const auto total = skew_matrix_count(n, p);
  if (total > cap)
    throw CapExceeded("census of " + std::to_string(total) + " matrices exceeds cap " + std::to_string(cap));
  return total;
}

std::map<int, std::uint64_t> empty_histogram(int n) {
  std::map<int, std::uint64_t> h;
  for (int r = 0; r <= n; r += 2) h[r] = 0;
  return h;
}

// Fills the upper triangle from the digits of `index` and mirrors it.
template <class Store>
void decode(std::uint64_t index, int n, std::uint64_t p, Store&& store) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto digit = static_cast<std::uint32_t>(index % p);
      index /= p;
      store(i, j, digit);
    }
}

int rank_mod_p(std::array<std::uint32_t, kMaxCensusRank * kMaxCensusRank>& a, int n, std::uint32_t p) {
  auto at = [&](int i, int j) -> std::uint32_t& { return a[static_cast<std::size_t>(i) * kMaxCensusRank + j]; };
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  };
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i)
      if (at(i, col)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < n; ++j) std::swap(at(pivot, j), at(rank, j));
    const std::uint64_t pinv = inv(at(rank, col));
    for (int i = rank + 1; i < n; ++i) {
      if (!at(i, col)) continue;
      const std::uint64_t factor = at(i, col) * pinv % p;
      for (int j = col; j < n; ++j)
        at(i, j) = static_cast<std::uint32_t>((at(i, j) + (p - factor) * at(rank, j)) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::uint64_t skew_matrix_count(int n, std::uint64_t p) {
  const int entries = n * (n - 1) / 2;
  std::uint64_t total = 1;
  for (int t = 0; t < entries; ++t) {
    if (total > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    total *= p;
  }
  return total;
}

std::map<int, std::uint64_t> skew_rank_census_serial(int n, std::uint64_t p, std::uint64_t cap) {
  const auto total = checked_count(n, p, cap);
  const PrimeField field(p);
  auto hist = empty_histogram(n);
  for (std::uint64_t index = 0; index < total; ++index) {
    Matrix<PrimeField> a(field, n, n);
    decode(index, n, p, [&](int i, int j, std::uint32_t v) {
      a(i, j) = v;
      a(j, i) = field.neg(v);
    });
    ++hist[a.rank()];
  }
  return hist;
}

std::map<int, std::uint64_t> skew_rank_census(int n, std::uint64_t p, std::uint64_t cap, int threads) {
  const auto total = checked_count(n, p, cap);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  const auto prime = static_cast<std::uint32_t>(p);
  std::vector<std::array<std::uint64_t, kMaxCensusRank + 1>> local(nthreads);
  for (auto& l : local) l.fill(0);

#pragma omp parallel num_threads(nthreads)
  {
    auto& counts = local[omp_get_thread_num()];
    std::array<std::uint32_t, kMaxCensusRank * kMaxCensusRank> a{};
#pragma omp for schedule(static)
    for (std::int64_t index = 0; index < static_cast<std::int64_t>(total); ++index) {
      for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * kMaxCensusRank + i] = 0;
      decode(static_cast<std::uint64_t>(index), n, p, [&](int i, int j, std::uint32_t v) {
        a[static_cast<std::size_t>(i) * kMaxCensusRank + j] = v;
        a[static_cast<std::size_t>(j) * kMaxCensusRank + i] = v ? prime - v : 0;
      });
      ++counts[rank_mod_p(a, n, prime)];
    }
  }

  auto hist = empty_histogram(n);
  for (const auto& l : local)
    for (int r = 0; r <= n; ++r)
      if (l[r]) hist[r] += l[r];
  return hist;
}

}  // namespace spinor::iso
