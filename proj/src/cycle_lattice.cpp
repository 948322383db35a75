#include "spinor/cycle_lattice.hpp"

#include <algorithm>

#include "spinor/class_scan.hpp"
#include "spinor/error.hpp"

namespace spinor::cycles {

namespace {

void require_rank(int n) {
  if (n < 3) throw ArgumentError("rank must be >= 3");
}

void require_degree(std::int64_t d) {
  if (d < 1) throw ArgumentError("degree must be >= 1");
}

}  // namespace

int word_length(int n) {
  require_rank(n);
  return n * (n - 1) / 2;
}

std::int64_t intersect(const DivisorClass& divisor, const OneCycleClass& cycle) {
  if (divisor.size() != cycle.size()) throw ArgumentError("class length mismatch");
  std::int64_t s = 0;
  for (int i = 0; i < divisor.size(); ++i) s += divisor.coeffs[i] * cycle.pairings[i];
  return s;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  if (a.size() != b.size()) throw ArgumentError("class length mismatch");
  DivisorClass out = a;
  for (int i = 0; i < a.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  if (a.size() != b.size()) throw ArgumentError("class length mismatch");
  DivisorClass out = a;
  for (int i = 0; i < a.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

DivisorClass basis_divisor(int r, int i) {
  if (i < 1 || i > r) throw ArgumentError("basis index out of range");
  DivisorClass xi{std::vector<std::int64_t>(r, 0)};
  xi.coeffs[i - 1] = 1;
  return xi;
}

std::vector<DivisorClass> relative_tangent_classes(const bs::PairingMatrix& pm) {
  const int r = pm.r();
  std::vector<DivisorClass> tangents;
  tangents.reserve(r);
  for (int i = 1; i <= r; ++i) {
    DivisorClass t{std::vector<std::int64_t>(r, 0)};
    for (int k = 1; k <= i; ++k) t.coeffs[k - 1] = pm.at(k, i);
    tangents.push_back(std::move(t));
  }
  return tangents;
}

DivisorClass anticanonical(const bs::Quiver& quiver) {
  DivisorClass k{std::vector<std::int64_t>(quiver.size(), 0)};
  for (int i = 1; i <= quiver.size(); ++i) k.coeffs[i - 1] = quiver.height(i) + 1;
  return k;
}

DivisorClass ample_pullback(int r) {
  if (r < 1) throw ArgumentError("word length must be >= 1");
  return DivisorClass{std::vector<std::int64_t>(r, 1)};
}

std::int64_t degree(const OneCycleClass& x) {
  std::int64_t s = 0;
  for (auto v : x.pairings) s += v;
  return s;
}

bool is_in_A1_plus(const OneCycleClass& x, int n) {
  if (x.size() != word_length(n)) throw ArgumentError("class length does not match n(n-1)/2");
  for (int i = 1; i <= x.size(); ++i) {
    const auto v = x.pairing(i);
    if (v < 0) return false;
    if (i <= n - 2 && v == 0) return false;
  }
  return true;
}

bool FibrationReport::all_positive() const {
  return std::all_of(steps.begin(), steps.end(), [](const FibrationStep& s) { return s.value > 0; });
}

FibrationReport fibration_positivity(const OneCycleClass& x, const std::vector<DivisorClass>& tangents) {
  const int r = x.size();
  if (static_cast<int>(tangents.size()) != r) throw ArgumentError("tangent class count mismatch");
  FibrationReport report;
  report.steps.reserve(r);
  for (int i = 1; i <= r; ++i) {
    const auto relative = tangents[i - 1] - basis_divisor(r, i);
    report.steps.push_back({i, intersect(relative, x), x.pairing(i) > 0});
  }
  return report;
}

std::int64_t mor_dimension(const OneCycleClass& x, const bs::Quiver& quiver) {
  if (!is_in_A1_plus(x, quiver.n()))
    throw DomainError("dimension formula only holds on the positive cone A_1^+");
  return intersect(anticanonical(quiver), x);
}

std::int64_t dimension_bound(int n, std::int64_t d) {
  require_rank(n);
  require_degree(d);
  return 2 * static_cast<std::int64_t>(n - 1) * d - static_cast<std::int64_t>(n - 2) * (n - 3) / 2;
}

std::int64_t expected_dimension(int n, std::int64_t d) {
  require_rank(n);
  require_degree(d);
  return 2 * static_cast<std::int64_t>(n - 1) * d;
}

std::uint64_t count_positive_classes(int n, std::int64_t d) {
  return kernels::count_classes(word_length(n), n - 2, d);
}

std::vector<OneCycleClass> enumerate_positive_classes(int n, std::int64_t d, int threads) {
  const int r = word_length(n);
  const std::vector<std::int64_t> zero(r, 0);
  auto scan = kernels::scan_classes_parallel(zero, n - 2, std::max<std::int64_t>(d, 0), true, threads);
  std::vector<OneCycleClass> out;
  out.reserve(scan.classes.size());
  for (auto& c : scan.classes) out.push_back(OneCycleClass{std::move(c)});
  return out;
}

ExtremalClass extremal_class(int n, std::int64_t d, int threads) {
  const auto word = bs::spinor_word(n);
  const auto weights = anticanonical(bs::build_quiver(word));
  auto scan = kernels::scan_classes_parallel(weights.coeffs, n - 2, d, false, threads);
  if (!scan.max_value) throw DomainError("no positive class of degree " + std::to_string(d));
  ExtremalClass out;
  out.cls = OneCycleClass{std::move(scan.argmax)};
  out.dimension = *scan.max_value;
  out.unique = scan.argmax_count == 1;
  out.attains_bound = out.dimension == dimension_bound(n, d);
  return out;
}

StratumCount stratum_dims(int n, std::int64_t d, int k) {
  require_rank(n);
  require_degree(d);
  if (k < 2 || k > n - 1) throw ArgumentError("stratum index k must lie in [2, n-1]");
  StratumCount s;
  s.n = n;
  s.d = d;
  s.k = k;
  s.dim_Mk = (n - k) * d + k * (n - k);
  s.fiber_dim = (n - 2) * d + k * (k - 1) / 2;
  s.total_dim = (2 * n - k - 2) * d + k * (n - k) + k * (k - 1) / 2;
  s.bound = 2 * static_cast<std::int64_t>(n - 1) * d;
  s.admissible = s.total_dim < s.bound;
  return s;
}

DegreeThreshold degree_threshold(int n) {
  require_rank(n);
  DegreeThreshold out{n, 0, 0};
  // Each stratum k is admissible exactly for d > (n-k) + (k-1)/2, so the
  // search terminates by d = n.
  for (std::int64_t d = 1;; ++d) {
    bool all = true;
    for (int k = 2; k <= n - 1 && all; ++k) all = stratum_dims(n, d, k).admissible;
    if (all) {
      out.threshold = d;
      break;
    }
  }
  std::int64_t best_slack = 0;
  for (int k = 2; k <= n - 1; ++k) {
    const auto s = stratum_dims(n, out.threshold, k);
    const auto slack = s.bound - s.total_dim;
    if (out.binding_stratum == 0 || slack < best_slack) {
      best_slack = slack;
      out.binding_stratum = k;
    }
  }
  return out;
}

std::int64_t min_degree_threshold(int n) { return degree_threshold(n).threshold; }

IncidenceBalance incidence_balance(int n) {
  require_rank(n);
  IncidenceBalance b;
  b.n = n;
  const std::int64_t N = static_cast<std::int64_t>(n) * (n - 1) / 2;
  b.dim_GB = static_cast<std::int64_t>(n) * (n - 1);
  b.fiber_a = 2 * static_cast<std::int64_t>(n - 1) + N;
  b.fiber_b = (2 * static_cast<std::int64_t>(n) - 3) + N;
  b.penalty = static_cast<std::int64_t>(n - 2) * (n - 3) / 2;
  b.balances_a = b.dim_GB - b.fiber_a == b.penalty;
  b.balances_b = b.dim_GB - b.fiber_b == b.penalty;
  return b;
}

}  // namespace spinor::cycles
