#include "spinor/bs_word.hpp"

#include <algorithm>
#include <sstream>

#include "spinor/error.hpp"

namespace spinor::bs {

namespace {

bool dynkin_adjacent(int n, int u, int v) {
  return weyl::coroot_pairing(weyl::simple_root(n, u), weyl::simple_root(n, v)) == -1;
}

}  // namespace

int a_index(int n, int k) {
  if (n < 3) throw ArgumentError("rank must be >= 3");
  if (k < 1 || k > n) throw ArgumentError("level k out of range [1, n]");
  return (k - 1) * (2 * n - k) / 2;
}

SpinorWord spinor_word(int n) {
  if (n < 3) throw ArgumentError("rank must be >= 3");
  SpinorWord word{n, {}};
  word.betas.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int k = 1; k <= n - 1; ++k) {
    for (int j = 1; j <= n - k; ++j) {
      if (j >= 2)
        word.betas.push_back(n - j);
      else if ((n - k) % 2 == 1)
        word.betas.push_back(n);
      else
        word.betas.push_back(n - 1);
    }
  }
  return word;
}

std::vector<RootVector> gamma_roots(const SpinorWord& word) {
  const int n = word.n;
  std::vector<RootVector> gammas;
  gammas.reserve(word.betas.size());
  for (int i = 0; i < word.length(); ++i) {
    RootVector g = weyl::simple_root(n, word.betas[i]);
    for (int k = i - 1; k >= 0; --k) g = weyl::reflect(weyl::simple_root(n, word.betas[k]), g);
    gammas.push_back(std::move(g));
  }
  return gammas;
}

int PairingMatrix::at(int k, int i) const {
  if (k < 1 || i < 1 || k > r_ || i > r_) throw ArgumentError("pairing index out of range");
  if (k > i) throw ArgumentError("pairing matrix is upper triangular (k <= i)");
  return entries_[static_cast<std::size_t>(k - 1) * r_ + (i - 1)];
}

PairingMatrix pairing_matrix(const SpinorWord& word) {
  const auto gammas = gamma_roots(word);
  const int r = word.length();
  std::vector<int> entries(static_cast<std::size_t>(r) * r, 0);
  for (int k = 0; k < r; ++k)
    for (int i = k; i < r; ++i)
      entries[static_cast<std::size_t>(k) * r + i] = weyl::coroot_pairing(gammas[k], gammas[i]);
  return PairingMatrix(word.n, r, std::move(entries));
}

Quiver::Quiver(int n, std::vector<int> labels, std::vector<std::pair<int, int>> arrows)
    : n_(n), labels_(std::move(labels)), arrows_(std::move(arrows)) {
  std::sort(arrows_.begin(), arrows_.end());
  const int r = size();
  for (auto [i, j] : arrows_)
    if (i < 1 || j > r || i >= j) throw ArgumentError("quiver arrows must point downward");
  // Arrows go from smaller to larger index, so a reverse sweep sees every
  // successor before its source.
  heights_.assign(r, 1);
  for (auto it = arrows_.rbegin(); it != arrows_.rend(); ++it) {
    auto [i, j] = *it;
    heights_[i - 1] = std::max(heights_[i - 1], heights_[j - 1] + 1);
  }
}

std::vector<int> Quiver::predecessors(int i) const {
  if (i < 1 || i > size()) throw ArgumentError("vertex out of range");
  std::vector<int> out;
  for (auto [a, b] : arrows_)
    if (b == i) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Quiver::successors(int i) const {
  if (i < 1 || i > size()) throw ArgumentError("vertex out of range");
  std::vector<int> out;
  for (auto [a, b] : arrows_)
    if (a == i) out.push_back(b);
  return out;
}

Quiver build_quiver(const SpinorWord& word) {
  const int n = word.n;
  const int r = word.length();
  std::vector<std::pair<int, int>> arrows;
  for (int i = 1; i <= r; ++i) {
    const int bi = word.beta(i);
    for (int j = i + 1; j <= r; ++j) {
      const int bj = word.beta(j);
      if (bi != bj && !dynkin_adjacent(n, bi, bj)) continue;
      bool blocked = false;
      for (int k = i + 1; k < j && !blocked; ++k) {
        const int bk = word.beta(k);
        blocked = bk == bi || bk == bj;
      }
      if (!blocked) arrows.emplace_back(i, j);
    }
  }
  return Quiver(n, word.betas, std::move(arrows));
}

bool LemmaReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const LemmaClause& c) { return c.passed; });
}

LemmaReport verify_lemma(const SpinorWord& word) {
  const int n = word.n;
  const auto gammas = gamma_roots(word);
  const auto pm = pairing_matrix(word);
  LemmaReport report{n, {}};

  LemmaClause first{"i", true, 0, {}};
  for (int k = 2; k <= n - 1; ++k)
    for (int j = 1; j <= n - k; ++j) {
      const int i = a_index(n, k) + j;
      const int v = pm.at(k - 1, i);
      ++first.checked;
      if (v != 1) first.failures.push_back({k - 1, i, v});
    }
  first.passed = first.failures.empty();

  LemmaClause second{"ii", true, 0, {}};
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (i == j) continue;
      // The pairing is symmetric on roots of equal length.
      const int v = weyl::coroot_pairing(gammas[j - 1], gammas[i - 1]);
      ++second.checked;
      if (v != 1) second.failures.push_back({j, i, v});
    }
  second.passed = second.failures.empty();

  LemmaClause prefix{"prefix-sum", true, 0, {}};
  RootVector partial = RootVector::zero(n);
  for (int i = 1; i <= n - 1; ++i) {
    partial += weyl::simple_root(n, word.beta(i));
    ++prefix.checked;
    if (partial != gammas[i - 1]) prefix.failures.push_back({0, i, 0});
  }
  prefix.passed = prefix.failures.empty();

  report.clauses = {std::move(first), std::move(second), std::move(prefix)};
  return report;
}

std::map<int, int> root_multiplicities(const SpinorWord& word) {
  std::map<int, int> counts;
  for (int u = 1; u <= word.n; ++u) counts[u] = 0;
  for (int b : word.betas) ++counts[b];
  return counts;
}

std::string dot_export(const Quiver& quiver) {
  std::ostringstream out;
  out << "digraph BS {\n";
  for (int i = 1; i <= quiver.size(); ++i)
    out << "  \"v" << i << "\" [label=\"" << i << ":a" << quiver.label(i) << "\"];\n";
  for (auto [i, j] : quiver.arrows()) out << "  \"v" << i << "\" -> \"v" << j << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace spinor::bs
