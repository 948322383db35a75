#pragma once

// Divisor and 1-cycle class arithmetic on the Bott-Samelson tower over the
// spinor variety, in the basis xi_1..xi_r of section divisors.
//
// A 1-cycle class is stored through its pairings x_i = alpha . xi_i, which
// is faithful because the xi_i form a basis of the Picard group. The
// pushforward degree is sum x_i since the pullback of the ample generator is
// sum xi_i.

#include <cstdint>
#include <string>
#include <vector>

#include "spinor/bs_word.hpp"

namespace spinor::cycles {

struct DivisorClass {
  std::vector<std::int64_t> coeffs;

  int size() const { return static_cast<int>(coeffs.size()); }
  std::int64_t coeff(int i) const { return coeffs.at(i - 1); }
  bool operator==(const DivisorClass&) const = default;
};

struct OneCycleClass {
  std::vector<std::int64_t> pairings;

  int size() const { return static_cast<int>(pairings.size()); }
  std::int64_t pairing(int i) const { return pairings.at(i - 1); }
  bool operator==(const OneCycleClass&) const = default;
};

std::int64_t intersect(const DivisorClass& divisor, const OneCycleClass& cycle);
DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass basis_divisor(int r, int i);

int word_length(int n);  // r = n(n-1)/2

// T_i = sum_{k <= i} <gamma_k^vee, gamma_i> xi_k
std::vector<DivisorClass> relative_tangent_classes(const bs::PairingMatrix& pm);
// -K = sum (h(i) + 1) xi_i
DivisorClass anticanonical(const bs::Quiver& quiver);
DivisorClass ample_pullback(int r);

std::int64_t degree(const OneCycleClass& x);
// x_i >= 0 for all i and x_i > 0 for i <= n-2.
bool is_in_A1_plus(const OneCycleClass& x, int n);

struct FibrationStep {
  int index = 0;
  std::int64_t value = 0;  // (T_i - xi_i) . x
  bool free = false;       // x . xi_i > 0; otherwise the step is rigid
};

struct FibrationReport {
  std::vector<FibrationStep> steps;
  bool all_positive() const;
};

FibrationReport fibration_positivity(const OneCycleClass& x, const std::vector<DivisorClass>& tangents);

// -K . x; throws DomainError outside A_1^+.
std::int64_t mor_dimension(const OneCycleClass& x, const bs::Quiver& quiver);
// 2(n-1)d - (n-2)(n-3)/2
std::int64_t dimension_bound(int n, std::int64_t d);
// 2(n-1)d
std::int64_t expected_dimension(int n, std::int64_t d);

std::uint64_t count_positive_classes(int n, std::int64_t d);
std::vector<OneCycleClass> enumerate_positive_classes(int n, std::int64_t d, int threads = 0);

struct ExtremalClass {
  OneCycleClass cls;
  std::int64_t dimension = 0;
  bool unique = false;
  bool attains_bound = false;
};

// Exhaustive argmax of mor_dimension over the positive classes of degree d.
ExtremalClass extremal_class(int n, std::int64_t d, int threads = 0);

struct StratumCount {
  int n = 0;
  std::int64_t d = 0;
  int k = 0;
  std::int64_t dim_Mk = 0;      // (n-k)d + k(n-k)
  std::int64_t fiber_dim = 0;   // (n-2)d + k(k-1)/2
  std::int64_t total_dim = 0;   // (2n-k-2)d + k(n-k) + k(k-1)/2
  std::int64_t bound = 0;       // 2(n-1)d
  bool admissible = false;      // total_dim < bound
};

StratumCount stratum_dims(int n, std::int64_t d, int k);

struct DegreeThreshold {
  int n = 0;
  std::int64_t threshold = 0;
  int binding_stratum = 0;  // k with the least slack bound - total at the threshold
};

DegreeThreshold degree_threshold(int n);
std::int64_t min_degree_threshold(int n);

struct IncidenceBalance {
  int n = 0;
  std::int64_t dim_GB = 0;
  std::int64_t fiber_a = 0;  // 2(n-1) + n(n-1)/2
  std::int64_t fiber_b = 0;  // (2n-3) + n(n-1)/2
  std::int64_t penalty = 0;  // (n-2)(n-3)/2
  bool balances_a = false;
  bool balances_b = false;
};

IncidenceBalance incidence_balance(int n);

}  // namespace spinor::cycles
