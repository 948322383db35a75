#pragma once

// The reduced word of the minimal coset representative of w_0 in
// W(D_n)/W_P (P maximal parabolic for alpha_n), its inversion roots, the
// coroot pairing matrix and the associated Bott-Samelson quiver.
//
// Letters and quiver vertices are numbered 1..r with r = n(n-1)/2.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinor/weyl.hpp"

namespace spinor::bs {

using weyl::RootVector;

struct SpinorWord {
  int n = 0;
  std::vector<int> betas;  // simple-root index of letter i at betas[i-1]

  int length() const { return static_cast<int>(betas.size()); }
  int beta(int i) const { return betas.at(i - 1); }
};

// a_k = (k-1)(2n-k)/2, the offset of block k of the word.
int a_index(int n, int k);

// Letter i = a_k + j (1 <= j <= n-k) carries
//   alpha_{n-j}  if j >= 2
//   alpha_n      if j = 1 and n-k odd
//   alpha_{n-1}  if j = 1 and n-k even
SpinorWord spinor_word(int n);

// gamma_i = s_{beta_1} ... s_{beta_{i-1}} (beta_i)
std::vector<RootVector> gamma_roots(const SpinorWord& word);

class PairingMatrix {
 public:
  PairingMatrix(int n, int r, std::vector<int> entries)
      : n_(n), r_(r), entries_(std::move(entries)) {}

  int n() const { return n_; }
  int r() const { return r_; }
  // <gamma_k^vee, gamma_i>, 1 <= k <= i <= r.
  int at(int k, int i) const;

 private:
  int n_;
  int r_;
  std::vector<int> entries_;  // row-major r x r, zero below the diagonal
};

PairingMatrix pairing_matrix(const SpinorWord& word);

class Quiver {
 public:
  Quiver(int n, std::vector<int> labels, std::vector<std::pair<int, int>> arrows);

  int n() const { return n_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int label(int i) const { return labels_.at(i - 1); }
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  // Number of vertices on the longest path from i to r, endpoints included.
  int height(int i) const { return heights_.at(i - 1); }
  const std::vector<int>& heights() const { return heights_; }

  std::vector<int> predecessors(int i) const;
  std::vector<int> successors(int i) const;

 private:
  int n_;
  std::vector<int> labels_;
  std::vector<std::pair<int, int>> arrows_;  // sorted (i, j), i < j
  std::vector<int> heights_;
};

// (i, j) is an arrow iff i < j, beta_i and beta_j are equal or adjacent in
// the Dynkin diagram, and no letter strictly between carries beta_i or beta_j.
Quiver build_quiver(const SpinorWord& word);

struct LemmaWitness {
  int k = 0;
  int i = 0;
  int value = 0;
};

struct LemmaClause {
  std::string name;
  bool passed = true;
  int checked = 0;
  std::vector<LemmaWitness> failures;
};

struct LemmaReport {
  int n = 0;
  std::vector<LemmaClause> clauses;

  bool passed() const;
};

// Clause "i":  <gamma_{k-1}^vee, gamma_{a_k+j}> = 1, k in [2,n-1], j in [1,n-k].
// Clause "ii": <gamma_j^vee, gamma_i> = 1 for distinct i, j in [1,n-1].
// Clause "prefix-sum": gamma_i = beta_1 + ... + beta_i for i <= n-1.
LemmaReport verify_lemma(const SpinorWord& word);

std::map<int, int> root_multiplicities(const SpinorWord& word);

// digraph BS { "v<i>" [label="<i>:a<u>"]; "v<i>" -> "v<j>"; }
std::string dot_export(const Quiver& quiver);

}  // namespace spinor::bs
