#pragma once

// Maximal isotropic subspaces of the split quadratic space of dimension 2n.
//
// Coordinates are (x_1..x_n | y_1..y_n) in the basis e_1..e_n, f_1..f_n with
//   b(e_i, f_j) = delta_ij,  b(e_i, e_j) = b(f_i, f_j) = 0,
//   q(v) = sum x_i y_i.

#include <string>
#include <utility>
#include <vector>

#include "spinor/error.hpp"
#include "spinor/matrix.hpp"

namespace spinor::iso {

template <class F>
class HyperbolicSpace {
 public:
  using Element = typename F::Element;

  HyperbolicSpace(F field, int n) : field_(std::move(field)), n_(n) {
    if (n < 1) throw ArgumentError("hyperbolic space needs n >= 1");
  }

  const F& field() const { return field_; }
  int n() const { return n_; }
  int dim() const { return 2 * n_; }

  Vec<F> e(int i) const { return unit(i - 1); }
  Vec<F> f(int i) const { return unit(n_ + i - 1); }

  Element bilinear(const Vec<F>& u, const Vec<F>& v) const {
    Element s = field_.zero();
    for (int i = 0; i < n_; ++i) {
      s = field_.add(s, field_.mul(u[i], v[n_ + i]));
      s = field_.add(s, field_.mul(u[n_ + i], v[i]));
    }
    return s;
  }

  Element quadratic(const Vec<F>& v) const {
    Element s = field_.zero();
    for (int i = 0; i < n_; ++i) s = field_.add(s, field_.mul(v[i], v[n_ + i]));
    return s;
  }

  Matrix<F> gram() const {
    Matrix<F> g(field_, dim(), dim());
    for (int i = 0; i < n_; ++i) {
      g(i, n_ + i) = field_.one();
      g(n_ + i, i) = field_.one();
    }
    return g;
  }

  Subspace<F> span_e() const { return span_range(0); }
  Subspace<F> span_f() const { return span_range(n_); }

  // Exchange e_i and f_i (an isometry that swaps the two families of
  // maximal isotropic subspaces).
  Vec<F> swap(const Vec<F>& v, int i) const {
    Vec<F> out = v;
    std::swap(out[i - 1], out[n_ + i - 1]);
    return out;
  }

  Subspace<F> swap(const Subspace<F>& s, int i) const {
    std::vector<Vec<F>> rows;
    for (const auto& v : s.vectors()) rows.push_back(swap(v, i));
    return Subspace<F>::span(field_, dim(), rows);
  }

 private:
  Vec<F> unit(int index) const {
    Vec<F> v = zero_vector(field_, dim());
    v[index] = field_.one();
    return v;
  }

  Subspace<F> span_range(int offset) const {
    std::vector<Vec<F>> rows;
    for (int i = 0; i < n_; ++i) rows.push_back(unit(offset + i));
    return Subspace<F>::span(field_, dim(), rows);
  }

  F field_;
  int n_;
};

template <class F>
HyperbolicSpace<F> hyperbolic_space(int n, F field) {
  if (n < 3) throw ArgumentError("spinor geometry requires n >= 3");
  return HyperbolicSpace<F>(std::move(field), n);
}

template <class F>
bool is_totally_isotropic(const HyperbolicSpace<F>& h, const Subspace<F>& s) {
  if (s.ambient_dim() != h.dim()) throw ArgumentError("subspace not in this space");
  const auto& field = h.field();
  const auto rows = s.vectors();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!field.is_zero(h.quadratic(rows[i]))) return false;
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (!field.is_zero(h.bilinear(rows[i], rows[j]))) return false;
  }
  return true;
}

template <class F>
bool is_maximal_isotropic(const HyperbolicSpace<F>& h, const Subspace<F>& s) {
  return s.dim() == h.n() && is_totally_isotropic(h, s);
}

template <class F>
class SkewChart {
 public:
  explicit SkewChart(Matrix<F> a) : a_(std::move(a)) {
    if (!a_.is_skew()) throw ArgumentError("chart matrix is not skew-symmetric");
  }

  const Matrix<F>& matrix() const { return a_; }
  int size() const { return a_.rows(); }
  int rank() const { return a_.rank(); }

 private:
  Matrix<F> a_;
};

// Row space of [I | A]: v_i = e_i + sum_j A_ij f_j. Maximal isotropic since
// b(v_i, v_k) = A_ik + A_ki = 0.
template <class F>
Subspace<F> from_skew_chart(const HyperbolicSpace<F>& h, const SkewChart<F>& chart) {
  const int n = h.n();
  if (chart.size() != n) throw ArgumentError("chart size does not match n");
  std::vector<Vec<F>> rows;
  for (int i = 0; i < n; ++i) {
    Vec<F> v = zero_vector(h.field(), h.dim());
    v[i] = h.field().one();
    for (int j = 0; j < n; ++j) v[n + j] = chart.matrix()(i, j);
    rows.push_back(std::move(v));
  }
  return Subspace<F>::span(h.field(), h.dim(), rows);
}

// Chart into the family of maximal isotropics meeting span(e) in odd
// dimension. For odd n the raw chart already lands there; for even n it is
// followed by the swap e_n <-> f_n.
template <class F>
Subspace<F> transverse_chart(const HyperbolicSpace<F>& h, const SkewChart<F>& chart) {
  auto x = from_skew_chart(h, chart);
  if (h.n() % 2 == 0) x = h.swap(x, h.n());
  return x;
}

template <class F>
bool membership_in_U(const HyperbolicSpace<F>& h, const Subspace<F>& x, const Subspace<F>& v) {
  if (!is_maximal_isotropic(h, x) || !is_maximal_isotropic(h, v))
    throw PreconditionError("membership in U needs two maximal isotropic subspaces");
  return meet(x, v).dim() == 1;
}

// F_1 < F_2 < ... < F_m with dim F_k = k; F_m is the space being flagged.
template <class F>
class CompleteFlag {
 public:
  explicit CompleteFlag(std::vector<Subspace<F>> members) : members_(std::move(members)) {
    for (std::size_t k = 0; k < members_.size(); ++k) {
      if (members_[k].dim() != static_cast<int>(k + 1))
        throw ArgumentError("flag member " + std::to_string(k + 1) + " has the wrong dimension");
      if (k > 0 && !members_[k].contains(members_[k - 1]))
        throw ArgumentError("flag members are not nested");
    }
  }

  // F_k = span(b_1..b_k); throws DegenerateError if the basis is dependent.
  static CompleteFlag from_basis(const F& field, int ambient, const std::vector<Vec<F>>& basis) {
    std::vector<Subspace<F>> members;
    std::vector<Vec<F>> prefix;
    for (const auto& b : basis) {
      prefix.push_back(b);
      auto s = Subspace<F>::span(field, ambient, prefix);
      if (s.dim() != static_cast<int>(prefix.size())) throw DegenerateError("flag basis is dependent");
      members.push_back(std::move(s));
    }
    return CompleteFlag(std::move(members));
  }

  int length() const { return static_cast<int>(members_.size()); }
  // F_k for 1 <= k <= length(); F_0 is the zero subspace.
  Subspace<F> at(int k) const {
    if (k == 0) return Subspace<F>::zero(top().field(), top().ambient_dim());
    return members_.at(k - 1);
  }
  const Subspace<F>& top() const { return members_.back(); }

 private:
  std::vector<Subspace<F>> members_;
};

namespace detail {

template <class F>
Subspace<F> point_of(const HyperbolicSpace<F>& h, const Subspace<F>& x, const Subspace<F>& v,
                     const CompleteFlag<F>& flag) {
  if (!(flag.top() == v)) throw ArgumentError("flag does not end at V");
  if (v.dim() != h.n()) throw ArgumentError("V must have dimension n");
  if (!membership_in_U(h, x, v)) throw PreconditionError("x does not meet V in dimension exactly 1");
  return meet(x, v);
}

}  // namespace detail

// L_1 = x ∩ V and L_i = L_1 + F_{i-1} for i in [1, n-1]; dim L_i = i.
// Throws DegenerateError when L_1 lies in F_{n-2}.
template <class F>
std::vector<Subspace<F>> reconstruct_chain(const HyperbolicSpace<F>& h, const Subspace<F>& x,
                                           const Subspace<F>& v, const CompleteFlag<F>& flag) {
  const auto point = detail::point_of(h, x, v, flag);
  const int n = h.n();
  std::vector<Subspace<F>> chain;
  chain.reserve(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    auto li = join(point, flag.at(i - 1));
    if (li.dim() != i)
      throw DegenerateError("x ∩ V lies in flag member F_" + std::to_string(i - 1));
    chain.push_back(std::move(li));
  }
  return chain;
}

// x is in the open cell iff x ∩ V lies in no proper member of the flag.
template <class F>
bool in_open_cell(const HyperbolicSpace<F>& h, const Subspace<F>& x, const Subspace<F>& v,
                  const CompleteFlag<F>& flag) {
  const auto point = detail::point_of(h, x, v, flag);
  for (int k = 1; k < flag.length(); ++k)
    if (flag.at(k).contains(point)) return false;
  return true;
}

// Complete flag F_1 < ... < F_m = V with q_i in F_{i+1} \ F_i for every
// point q_1..q_{m-1}. Built top-down: F_i is span(q_1..q_{i-1}) plus the
// first basis vector of F_{i+1} outside span(q_1..q_i).
template <class F>
CompleteFlag<F> build_flag_from_points(const Subspace<F>& v, const std::vector<Vec<F>>& points) {
  const F& field = v.field();
  const int m = v.dim();
  const int ambient = v.ambient_dim();
  if (static_cast<int>(points.size()) != m - 1)
    throw ArgumentError("need exactly dim V - 1 points");
  for (const auto& q : points)
    if (!v.contains(q)) throw ArgumentError("point outside V");

  std::vector<Subspace<F>> prefix_spans;  // span(q_1..q_i), i = 0..m-1
  std::vector<Vec<F>> prefix;
  prefix_spans.push_back(Subspace<F>::zero(field, ambient));
  for (const auto& q : points) {
    prefix.push_back(q);
    auto s = Subspace<F>::span(field, ambient, prefix);
    if (s.dim() != static_cast<int>(prefix.size()))
      throw DegenerateError("points are not in general position");
    prefix_spans.push_back(std::move(s));
  }

  std::vector<Subspace<F>> members(m, v);
  for (int i = m - 1; i >= 1; --i) {
    const auto& above = members[i];  // F_{i+1}
    const auto& avoid = prefix_spans[i];
    const Vec<F>* extra = nullptr;
    std::vector<Vec<F>> candidates = above.vectors();
    for (const auto& c : candidates)
      if (!avoid.contains(c)) {
        extra = &c;
        break;
      }
    if (!extra) throw DegenerateError("no room to avoid the point");
    auto rows = prefix_spans[i - 1].vectors();
    rows.push_back(*extra);
    members[i - 1] = Subspace<F>::span(field, ambient, rows);
  }
  return CompleteFlag<F>(std::move(members));
}

}  // namespace spinor::iso
