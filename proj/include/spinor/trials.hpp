#pragma once

// Seeded randomized checks of the isotropic-subspace model. Every random
// draw goes through Rng, so a (field, n, seed, trials) tuple replays exactly.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spinor/isotropic.hpp"

namespace spinor::iso {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish integer in [lo, hi]; modulo reduction keeps the stream
  // identical across standard libraries.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

template <class F>
typename F::Element random_element(const F& field, Rng& rng) {
  if (field.characteristic() == 0) return field.from_int(rng.uniform(-4, 4));
  return field.from_int(rng.uniform(0, static_cast<std::int64_t>(field.characteristic()) - 1));
}

template <class F>
Vec<F> random_vector(const F& field, int size, Rng& rng) {
  Vec<F> v = zero_vector(field, size);
  for (auto& x : v) x = random_element(field, rng);
  return v;
}

// Random vector inside a subspace: a random combination of its basis.
template <class F>
Vec<F> random_vector_in(const Subspace<F>& s, Rng& rng) {
  const F& field = s.field();
  Vec<F> v = zero_vector(field, s.ambient_dim());
  for (const auto& b : s.vectors()) v = add(field, v, scale(field, random_element(field, rng), b));
  return v;
}

// Sum of `terms` random rank-2 skew matrices u v^T - v u^T; rank <= 2*terms.
template <class F>
SkewChart<F> random_skew(const F& field, int n, int terms, Rng& rng) {
  Matrix<F> a(field, n, n);
  for (int t = 0; t < terms; ++t) {
    const auto u = random_vector(field, n, rng);
    const auto v = random_vector(field, n, rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a(i, j) = field.add(a(i, j), field.sub(field.mul(u[i], v[j]), field.mul(v[i], u[j])));
  }
  return SkewChart<F>(std::move(a));
}

// Random complete flag of V from a random basis (redrawn until independent).
template <class F>
CompleteFlag<F> random_flag(const Subspace<F>& v, Rng& rng) {
  while (true) {
    std::vector<Vec<F>> basis;
    for (int i = 0; i < v.dim(); ++i) basis.push_back(random_vector_in(v, rng));
    if (Subspace<F>::span(v.field(), v.ambient_dim(), basis).dim() == v.dim())
      return CompleteFlag<F>::from_basis(v.field(), v.ambient_dim(), basis);
  }
}

struct PropertyOutcome {
  explicit PropertyOutcome(std::string property) : name(std::move(property)) {}

  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;  // inputs outside the property's precondition
  std::string first_failure;

  bool passed() const { return failed == 0; }
};

struct TrialReport {
  std::string field;
  int n = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<PropertyOutcome> properties;

  bool passed() const {
    for (const auto& p : properties)
      if (!p.passed()) return false;
    return true;
  }
};

namespace detail {

inline void record(PropertyOutcome& out, bool ok, const std::string& what) {
  ++out.checked;
  if (!ok) {
    if (out.failed == 0) out.first_failure = what;
    ++out.failed;
  }
}

}  // namespace detail

template <class F>
PropertyOutcome check_chart_law(const HyperbolicSpace<F>& h, int trials, Rng& rng) {
  PropertyOutcome out{"chart-law"};
  const auto e = h.span_e();
  for (int t = 0; t < trials; ++t) {
    const auto chart = random_skew(h.field(), h.n(), static_cast<int>(rng.uniform(0, h.n() / 2)), rng);
    const auto x = from_skew_chart(h, chart);
    const int got = meet(x, e).dim();
    const int want = h.n() - chart.rank();
    detail::record(out, got == want && is_maximal_isotropic(h, x),
                   "trial " + std::to_string(t) + ": dim " + std::to_string(got) + " vs " + std::to_string(want));
  }
  return out;
}

template <class F>
PropertyOutcome check_modular_law(const HyperbolicSpace<F>& h, int trials, Rng& rng) {
  PropertyOutcome out{"modular-law"};
  const int m = h.dim();
  for (int t = 0; t < trials; ++t) {
    std::vector<Vec<F>> a, b;
    const auto ka = rng.uniform(0, m), kb = rng.uniform(0, m);
    for (int i = 0; i < ka; ++i) a.push_back(random_vector(h.field(), m, rng));
    for (int i = 0; i < kb; ++i) b.push_back(random_vector(h.field(), m, rng));
    // Share some vectors so that intersections are nontrivial.
    if (!a.empty() && !b.empty()) b.front() = a.back();
    const auto s = Subspace<F>::span(h.field(), m, a);
    const auto u = Subspace<F>::span(h.field(), m, b);
    const auto cap = meet(s, u);
    const auto cup = join(s, u);
    const bool ok = cap.dim() + cup.dim() == s.dim() + u.dim() && s.contains(cap) && u.contains(cap) &&
                    cup.contains(s) && cup.contains(u);
    detail::record(out, ok, "trial " + std::to_string(t));
  }
  return out;
}

// Transverse-chart points against a random flag of V = span(e).
template <class F>
std::pair<PropertyOutcome, PropertyOutcome> check_chain_and_cell(const HyperbolicSpace<F>& h, int trials,
                                                                 Rng& rng) {
  PropertyOutcome chain{"reconstruct-chain"};
  PropertyOutcome cell{"open-cell"};
  const int n = h.n();
  const auto v = h.span_e();
  for (int t = 0; t < trials; ++t) {
    const auto chart = random_skew(h.field(), n, n / 2, rng);
    const auto x = transverse_chart(h, chart);
    const auto flag = random_flag(v, rng);
    if (!membership_in_U(h, x, v)) {
      ++chain.skipped;
      ++cell.skipped;
      continue;
    }
    const auto point = meet(x, v);
    const bool degenerate = flag.at(n - 2).contains(point);
    const bool generic = !flag.at(n - 1).contains(point);
    detail::record(cell, in_open_cell(h, x, v, flag) == generic, "trial " + std::to_string(t));
    if (degenerate) {
      bool threw = false;
      try {
        reconstruct_chain(h, x, v, flag);
      } catch (const DegenerateError&) {
        threw = true;
      }
      detail::record(chain, threw, "trial " + std::to_string(t) + ": degenerate flag accepted");
      continue;
    }
    const auto links = reconstruct_chain(h, x, v, flag);
    bool ok = static_cast<int>(links.size()) == n - 1 && links.front() == point;
    for (int i = 1; ok && i <= n - 1; ++i) {
      const auto& li = links[i - 1];
      ok = li.dim() == i && li.contains(flag.at(i - 1)) && v.contains(li) &&
           (i == 1 || li.contains(links[i - 2]));
    }
    detail::record(chain, ok, "trial " + std::to_string(t));
  }
  return {chain, cell};
}

template <class F>
PropertyOutcome check_flag_lemma(const HyperbolicSpace<F>& h, int trials, Rng& rng) {
  PropertyOutcome out{"flag-lemma"};
  const auto v = h.span_e();
  const int n = h.n();
  for (int t = 0; t < trials; ++t) {
    std::vector<Vec<F>> points;
    for (int i = 0; i < n - 1; ++i) points.push_back(random_vector_in(v, rng));
    const bool general = Subspace<F>::span(h.field(), h.dim(), points).dim() == n - 1;
    if (!general) {
      bool threw = false;
      try {
        build_flag_from_points(v, points);
      } catch (const DegenerateError&) {
        threw = true;
      }
      ++out.skipped;
      if (!threw) detail::record(out, false, "trial " + std::to_string(t) + ": degenerate points accepted");
      continue;
    }
    const auto flag = build_flag_from_points(v, points);
    bool ok = flag.length() == n && flag.top() == v;
    for (int i = 1; ok && i <= n - 1; ++i)
      ok = flag.at(i + 1).contains(points[i - 1]) && !flag.at(i).contains(points[i - 1]);
    detail::record(out, ok, "trial " + std::to_string(t));
  }
  return out;
}

template <class F>
TrialReport run_trials(const F& field, int n, std::uint64_t seed, int trials) {
  const auto h = hyperbolic_space(n, field);
  Rng rng(seed);
  TrialReport report{field.name(), n, seed, trials, {}};
  report.properties.push_back(check_chart_law(h, trials, rng));
  report.properties.push_back(check_modular_law(h, trials, rng));
  auto [chain, cell] = check_chain_and_cell(h, trials, rng);
  report.properties.push_back(std::move(chain));
  report.properties.push_back(std::move(cell));
  report.properties.push_back(check_flag_lemma(h, trials, rng));
  return report;
}

}  // namespace spinor::iso
