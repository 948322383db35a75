#pragma once

// Root system and Weyl group of type D_n in Bourbaki conventions.
//
// Roots live in the ambient lattice Z^n with orthonormal basis e_1..e_n:
//   alpha_u = e_u - e_{u+1}   (1 <= u <= n-1)
//   alpha_n = e_{n-1} + e_n
// Weyl group elements are signed permutations with an even number of sign
// changes. All indices in this interface are 1-based, matching the usual
// numbering of simple roots.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spinor::weyl {

class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::vector<int> coords) : coords_(std::move(coords)) {}

  static RootVector zero(int n) { return RootVector(std::vector<int>(n, 0)); }
  // e_i, 1-based
  static RootVector unit(int n, int i);

  int rank() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[i]; }  // 0-based
  const std::vector<int>& coords() const { return coords_; }

  int dot(const RootVector& other) const;
  int squared_length() const { return dot(*this); }
  bool is_zero() const;
  // Two nonzero coordinates, each +-1.
  bool is_root() const;
  // First nonzero coordinate positive.
  bool is_positive() const;

  RootVector operator+(const RootVector& o) const;
  RootVector operator-(const RootVector& o) const;
  RootVector operator-() const;
  RootVector operator*(int c) const;
  RootVector& operator+=(const RootVector& o);

  bool operator==(const RootVector&) const = default;
  auto operator<=>(const RootVector&) const = default;

  // "e_3+e_5", "e_1-e_2", "0"
  std::string to_string() const;

 private:
  std::vector<int> coords_;
};

// w(e_i) = signs[i] * e_{perm[i]}, stored 0-based.
class WeylElement {
 public:
  static WeylElement identity(int n);
  // Throws ArgumentError unless perm is a permutation of 0..n-1 and signs
  // are +-1 with product +1.
  WeylElement(std::vector<int> perm, std::vector<int> signs);

  int rank() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  RootVector apply(const RootVector& v) const;
  WeylElement inverse() const;
  // (a * b)(v) = a(b(v))
  WeylElement operator*(const WeylElement& other) const;

  bool operator==(const WeylElement&) const = default;
  auto operator<=>(const WeylElement&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

struct ParabolicDatum {
  int n = 0;
  int excluded_root = 0;

  static ParabolicDatum spinor(int n) { return {n, n}; }
};

RootVector simple_root(int n, int u);
// <gamma^vee, delta> = 2 (gamma, delta) / (gamma, gamma)
int coroot_pairing(const RootVector& gamma, const RootVector& delta);
RootVector reflect(const RootVector& gamma, const RootVector& delta);

WeylElement simple_reflection(int n, int u);
WeylElement weyl_from_word(int n, std::span<const int> word);
std::vector<RootVector> positive_roots(int n);

// Number of positive roots sent to negative roots; equals the length of any
// reduced word.
int length(const WeylElement& w);
WeylElement longest_element(int n);
WeylElement min_coset_rep(const WeylElement& w, const ParabolicDatum& parabolic);
bool is_reduced(int n, std::span<const int> word);

}  // namespace spinor::weyl
