#include "spinor/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "spinor/error.hpp"

namespace spinor::weyl {

namespace {

void require_rank(int n) {
  if (n < 3) throw ArgumentError("D_n requires n >= 3, got " + std::to_string(n));
}

void require_same_rank(const RootVector& a, const RootVector& b) {
  if (a.rank() != b.rank()) throw ArgumentError("root vectors of different rank");
}

}  // namespace

RootVector RootVector::unit(int n, int i) {
  if (i < 1 || i > n) throw ArgumentError("basis index out of range");
  std::vector<int> c(n, 0);
  c[i - 1] = 1;
  return RootVector(std::move(c));
}

int RootVector::dot(const RootVector& other) const {
  require_same_rank(*this, other);
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += coords_[i] * other.coords_[i];
  return s;
}

bool RootVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

bool RootVector::is_root() const {
  int nonzero = 0;
  for (int c : coords_) {
    if (c == 0) continue;
    if (c != 1 && c != -1) return false;
    ++nonzero;
  }
  return nonzero == 2;
}

bool RootVector::is_positive() const {
  for (int c : coords_)
    if (c != 0) return c > 0;
  return false;
}

RootVector RootVector::operator+(const RootVector& o) const {
  RootVector r = *this;
  r += o;
  return r;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  require_same_rank(*this, o);
  for (int i = 0; i < rank(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RootVector RootVector::operator-(const RootVector& o) const { return *this + (-o); }

RootVector RootVector::operator-() const { return *this * -1; }

RootVector RootVector::operator*(int c) const {
  RootVector r = *this;
  for (int& x : r.coords_) x *= c;
  return r;
}

std::string RootVector::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < rank(); ++i) {
    int c = coords_[i];
    if (c == 0) continue;
    if (c < 0)
      out << "-";
    else if (!first)
      out << "+";
    if (c != 1 && c != -1) out << (c < 0 ? -c : c);
    out << "e_" << (i + 1);
    first = false;
  }
  if (first) return "0";
  return out.str();
}

WeylElement::WeylElement(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  const auto n = perm_.size();
  if (signs_.size() != n) throw ArgumentError("perm and signs differ in length");
  std::vector<bool> seen(n, false);
  for (int p : perm_) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[p])
      throw ArgumentError("not a permutation");
    seen[p] = true;
  }
  int product = 1;
  for (int s : signs_) {
    if (s != 1 && s != -1) throw ArgumentError("signs must be +-1");
    product *= s;
  }
  if (product != 1) throw ArgumentError("odd number of sign changes: not in W(D_n)");
}

WeylElement WeylElement::identity(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return WeylElement(std::move(perm), std::vector<int>(n, 1));
}

RootVector WeylElement::apply(const RootVector& v) const {
  if (v.rank() != rank()) throw ArgumentError("rank mismatch");
  std::vector<int> out(rank(), 0);
  for (int i = 0; i < rank(); ++i) out[perm_[i]] += signs_[i] * v[i];
  return RootVector(std::move(out));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> perm(rank()), signs(rank());
  for (int i = 0; i < rank(); ++i) {
    perm[perm_[i]] = i;
    signs[perm_[i]] = signs_[i];
  }
  return WeylElement(std::move(perm), std::move(signs));
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  if (other.rank() != rank()) throw ArgumentError("rank mismatch");
  std::vector<int> perm(rank()), signs(rank());
  for (int i = 0; i < rank(); ++i) {
    perm[i] = perm_[other.perm_[i]];
    signs[i] = signs_[other.perm_[i]] * other.signs_[i];
  }
  return WeylElement(std::move(perm), std::move(signs));
}

std::string WeylElement::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < rank(); ++i) {
    if (i) out << " ";
    out << (signs_[i] < 0 ? "-" : "") << (perm_[i] + 1);
  }
  out << "]";
  return out.str();
}

RootVector simple_root(int n, int u) {
  require_rank(n);
  if (u < 1 || u > n) throw ArgumentError("simple root index out of range");
  std::vector<int> c(n, 0);
  if (u < n) {
    c[u - 1] = 1;
    c[u] = -1;
  } else {
    c[n - 2] = 1;
    c[n - 1] = 1;
  }
  return RootVector(std::move(c));
}

int coroot_pairing(const RootVector& gamma, const RootVector& delta) {
  const int norm = gamma.squared_length();
  if (norm == 0) throw ArgumentError("coroot of the zero vector");
  const int num = 2 * gamma.dot(delta);
  if (num % norm != 0) throw ArgumentError("pairing is not integral");
  return num / norm;
}

RootVector reflect(const RootVector& gamma, const RootVector& delta) {
  return delta - gamma * coroot_pairing(gamma, delta);
}

WeylElement simple_reflection(int n, int u) {
  require_rank(n);
  if (u < 1 || u > n) throw ArgumentError("simple root index out of range");
  std::vector<int> perm(n), signs(n, 1);
  for (int i = 0; i < n; ++i) perm[i] = i;
  if (u < n) {
    std::swap(perm[u - 1], perm[u]);
  } else {
    perm[n - 2] = n - 1;
    perm[n - 1] = n - 2;
    signs[n - 2] = -1;
    signs[n - 1] = -1;
  }
  return WeylElement(std::move(perm), std::move(signs));
}

WeylElement weyl_from_word(int n, std::span<const int> word) {
  require_rank(n);
  WeylElement w = WeylElement::identity(n);
  for (int u : word) w = w * simple_reflection(n, u);
  return w;
}

std::vector<RootVector> positive_roots(int n) {
  std::vector<RootVector> roots;
  roots.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      roots.push_back(RootVector::unit(n, i) - RootVector::unit(n, j));
      roots.push_back(RootVector::unit(n, i) + RootVector::unit(n, j));
    }
  return roots;
}

int length(const WeylElement& w) {
  // Counting pairs directly: w^{-1}(e_i +- e_j) = s_i e_a +- s_j e_b.
  const WeylElement inv = w.inverse();
  const int n = inv.rank();
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int sign : {-1, 1}) {
        // image = s_i e_{p_i} + sign * s_j e_{p_j}; negative iff the
        // coefficient at the smaller index is negative.
        const int pi = inv.perm()[i], pj = inv.perm()[j];
        const int ci = inv.signs()[i], cj = sign * inv.signs()[j];
        const int leading = pi < pj ? ci : cj;
        if (leading < 0) ++count;
      }
  return count;
}

WeylElement longest_element(int n) {
  require_rank(n);
  std::vector<int> perm(n), signs(n, -1);
  for (int i = 0; i < n; ++i) perm[i] = i;
  if (n % 2 == 1) signs[n - 1] = 1;
  return WeylElement(std::move(perm), std::move(signs));
}

WeylElement min_coset_rep(const WeylElement& w, const ParabolicDatum& parabolic) {
  const int n = w.rank();
  if (parabolic.n != n) throw ArgumentError("parabolic datum rank mismatch");
  WeylElement rep = w;
  int len = length(rep);
  bool descended = true;
  while (descended) {
    descended = false;
    for (int u = 1; u <= n; ++u) {
      if (u == parabolic.excluded_root) continue;
      WeylElement next = rep * simple_reflection(n, u);
      const int next_len = length(next);
      if (next_len < len) {
        rep = std::move(next);
        len = next_len;
        descended = true;
        break;
      }
    }
  }
  return rep;
}

bool is_reduced(int n, std::span<const int> word) {
  return length(weyl_from_word(n, word)) == static_cast<int>(word.size());
}

}  // namespace spinor::weyl
