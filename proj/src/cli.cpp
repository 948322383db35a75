#include "spinor/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "spinor/bs_word.hpp"
#include "spinor/census.hpp"
#include "spinor/class_scan.hpp"
#include "spinor/cycle_lattice.hpp"
#include "spinor/error.hpp"
#include "spinor/trials.hpp"
#include "spinor/weyl.hpp"

namespace spinor::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kClassListCap = std::uint64_t{1} << 20;

struct RunConfig {
  int n = 0;
  std::optional<std::int64_t> d;
  std::string field = "Q";
  std::uint64_t seed = 1;
  int trials = 100;
  bool census = false;
  std::string format = "json";
  std::string output;
  int threads = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json header(const char* command, const RunConfig& cfg) {
  Json j;
  j["schema"] = "1";
  j["command"] = command;
  j["n"] = cfg.n;
  return j;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("format '" + cfg.format + "' is not supported by this command");
}

// ---------------------------------------------------------------- quiver

int cmd_quiver(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"dot", "json", "text"});
  const auto word = bs::spinor_word(cfg.n);
  const auto quiver = bs::build_quiver(word);
  if (cfg.format == "dot") {
    out << bs::dot_export(quiver);
    return kOk;
  }
  if (cfg.format == "text") {
    out << "n=" << cfg.n << " r=" << quiver.size() << "\n";
    for (int i = 1; i <= quiver.size(); ++i) {
      out << i << " a" << quiver.label(i) << " h=" << quiver.height(i) << " ->";
      for (int j : quiver.successors(i)) out << " " << j;
      out << "\n";
    }
    return kOk;
  }
  Json j = header("quiver", cfg);
  j["r"] = quiver.size();
  j["word"] = word.betas;
  Json vertices = Json::array();
  for (int i = 1; i <= quiver.size(); ++i)
    vertices.push_back({{"id", i}, {"label", quiver.label(i)}, {"height", quiver.height(i)}});
  j["vertices"] = vertices;
  Json arrows = Json::array();
  for (auto [a, b] : quiver.arrows()) arrows.push_back({a, b});
  j["arrows"] = arrows;
  j["heights"] = quiver.heights();
  out << j.dump(2) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  Json witnesses = Json::array();

  void expect(bool ok, Json witness) {
    ++checked;
    if (ok) return;
    passed = false;
    if (witnesses.size() < 16) witnesses.push_back(std::move(witness));
  }

  Json to_json() const {
    return {{"name", name}, {"passed", passed}, {"checked", checked}, {"witnesses", witnesses}};
  }
};

std::vector<Check> word_checks(int n, const bs::SpinorWord& word) {
  std::vector<Check> checks;
  const int r = word.length();

  Check len{"word-length"};
  len.expect(r == n * (n - 1) / 2, {{"length", r}});
  checks.push_back(len);

  Check reduced{"word-reduced"};
  reduced.expect(weyl::is_reduced(n, word.betas), {{"length", weyl::length(weyl::weyl_from_word(n, word.betas))}});
  checks.push_back(reduced);

  Check w0bar{"word-represents-w0bar"};
  const auto from_word = weyl::weyl_from_word(n, word.betas);
  const auto rep = weyl::min_coset_rep(weyl::longest_element(n), weyl::ParabolicDatum::spinor(n));
  w0bar.expect(from_word == rep, {{"word", from_word.to_string()}, {"coset_rep", rep.to_string()}});
  checks.push_back(w0bar);

  Check gammas{"gamma-distinct-positive"};
  const auto roots = bs::gamma_roots(word);
  std::set<weyl::RootVector> seen;
  for (int i = 0; i < r; ++i) {
    const auto& g = roots[i];
    gammas.expect(g.is_root() && g.is_positive() && seen.insert(g).second, {{"i", i + 1}, {"gamma", g.to_string()}});
  }
  checks.push_back(gammas);
  return checks;
}

std::vector<Check> verify_suite(int n, int threads) {
  const auto word = bs::spinor_word(n);
  const int r = word.length();
  auto checks = word_checks(n, word);

  const auto pm = bs::pairing_matrix(word);
  Check range{"pairing-range"};
  for (int i = 1; i <= r; ++i) {
    range.expect(pm.at(i, i) == 2, {{"k", i}, {"i", i}, {"value", pm.at(i, i)}});
    for (int k = 1; k < i; ++k) {
      const int v = pm.at(k, i);
      range.expect(v == 0 || v == 1, {{"k", k}, {"i", i}, {"value", v}});
    }
  }
  checks.push_back(range);

  for (const auto& clause : bs::verify_lemma(word).clauses) {
    Check c{"lemma-" + clause.name};
    c.checked = static_cast<std::uint64_t>(clause.checked);
    c.passed = clause.passed;
    for (const auto& w : clause.failures) c.witnesses.push_back({{"k", w.k}, {"i", w.i}, {"value", w.value}});
    checks.push_back(c);
  }

  const auto quiver = bs::build_quiver(word);
  Check downward{"quiver-downward"};
  for (auto [i, j] : quiver.arrows()) downward.expect(i < j, {{"arrow", {i, j}}});
  checks.push_back(downward);

  Check heights{"heights-pinned"};
  heights.expect(quiver.height(r) == 1, {{"i", r}, {"h", quiver.height(r)}});
  heights.expect(quiver.height(r - 1) == 2, {{"i", r - 1}, {"h", quiver.height(r - 1)}});
  heights.expect(quiver.height(1) == 2 * n - 3, {{"i", 1}, {"h", quiver.height(1)}});
  for (int i = 1; i <= n - 1; ++i)
    heights.expect(quiver.height(i) == 2 * (n - 1) - i, {{"i", i}, {"h", quiver.height(i)}});
  checks.push_back(heights);

  Check preds{"predecessors-bounded"};
  for (int i = 1; i <= r; ++i) {
    const auto p = quiver.predecessors(i);
    std::set<int> labels;
    bool ok = p.size() <= 3;
    for (int j : p) {
      const int lj = quiver.label(j), li = quiver.label(i);
      ok = ok && labels.insert(lj).second &&
           (lj == li || weyl::coroot_pairing(weyl::simple_root(n, lj), weyl::simple_root(n, li)) == -1);
    }
    preds.expect(ok, {{"i", i}, {"predecessors", p}});
  }
  checks.push_back(preds);

  const auto tangents = cycles::relative_tangent_classes(pm);
  const auto minus_k = cycles::anticanonical(quiver);
  Check canonical{"canonical-identity"};
  for (int k = 1; k <= r; ++k) {
    std::int64_t sum = 0;
    for (const auto& t : tangents) sum += t.coeff(k);
    canonical.expect(sum == minus_k.coeff(k), {{"k", k}, {"sum_T", sum}, {"h_plus_1", minus_k.coeff(k)}});
  }
  checks.push_back(canonical);

  // Positivity over every class of small degree; extremal class a bit higher.
  Check positivity{"fibration-positivity"};
  for (std::int64_t d = n - 2; d <= n + 1; ++d) {
    if (d < 1) continue;
    for (const auto& x : cycles::enumerate_positive_classes(n, d, threads)) {
      const auto report = cycles::fibration_positivity(x, tangents);
      positivity.expect(report.all_positive(), {{"x", x.pairings}});
    }
  }
  checks.push_back(positivity);

  Check extremal{"extremal-class"};
  for (std::int64_t d = n - 1; d <= n + 1; ++d) {
    const auto e = cycles::extremal_class(n, d, threads);
    std::vector<std::int64_t> expected(r, 0);
    expected[0] = d - n + 3;
    for (int i = 2; i <= n - 2; ++i) expected[i - 1] = 1;
    extremal.expect(e.attains_bound && e.unique && e.cls.pairings == expected,
                    {{"d", d}, {"argmax", e.cls.pairings}, {"dim", e.dimension}, {"unique", e.unique}});
  }
  checks.push_back(extremal);

  // Full weight on xi_1 pairs with -K to the expected dimension 2(n-1)d.
  Check expected_dim{"expected-dimension"};
  for (std::int64_t d = 1; d <= n + 1; ++d) {
    cycles::OneCycleClass x{std::vector<std::int64_t>(r, 0)};
    x.pairings[0] = d;
    expected_dim.expect(cycles::intersect(minus_k, x) == cycles::expected_dimension(n, d), {{"d", d}});
  }
  checks.push_back(expected_dim);

  Check threshold{"degree-threshold"};
  const auto t = cycles::degree_threshold(n);
  threshold.expect(t.threshold == n - 1 && t.binding_stratum == 2,
                   {{"threshold", t.threshold}, {"binding_stratum", t.binding_stratum}});
  checks.push_back(threshold);

  Check balance{"incidence-balance"};
  const auto b = cycles::incidence_balance(n);
  balance.expect(b.balances_b, {{"dim_GB", b.dim_GB}, {"fiber_b", b.fiber_b}, {"penalty", b.penalty}});
  checks.push_back(balance);

  return checks;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  const auto checks = verify_suite(cfg.n, cfg.threads);
  Json j = header("verify", cfg);
  Json list = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    list.push_back(c.to_json());
    all = all && c.passed;
  }
  j["checks"] = list;
  j["passed"] = all;
  out << j.dump(2) << "\n";
  return all ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- classes

int cmd_classes(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  if (!cfg.d) throw UsageError("classes requires --d");
  const int n = cfg.n;
  const std::int64_t d = *cfg.d;
  const auto count = cycles::count_positive_classes(n, d);
  if (count > kClassListCap)
    throw CapExceeded(std::to_string(count) + " classes exceed the listing cap of " + std::to_string(kClassListCap));

  const auto quiver = bs::build_quiver(bs::spinor_word(n));
  const auto weights = cycles::anticanonical(quiver);
  const auto scan = kernels::scan_classes_parallel(weights.coeffs, n - 2, d, true, cfg.threads);
  const auto threshold = cycles::min_degree_threshold(n);

  Json j = header("classes", cfg);
  j["d"] = d;
  Json classes = Json::array();
  for (std::size_t i = 0; i < scan.classes.size(); ++i)
    classes.push_back({{"x", scan.classes[i]}, {"dim", scan.values[i]}});
  j["classes"] = classes;
  j["count"] = scan.count;
  if (scan.max_value) {
    j["max_dim"] = *scan.max_value;
    j["argmax"] = scan.argmax;
  } else {
    j["max_dim"] = nullptr;
    j["argmax"] = nullptr;
  }
  j["unique"] = scan.argmax_count == 1;
  j["bound"] = cycles::dimension_bound(n, d);
  j["expected_dim"] = cycles::expected_dimension(n, d);
  j["threshold"] = threshold;
  j["below_threshold"] = d < threshold;
  out << j.dump(2) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- config

Json trial_json(const iso::TrialReport& report) {
  Json props = Json::array();
  for (const auto& p : report.properties) {
    Json jp = {{"name", p.name}, {"passed", p.passed()}, {"checked", p.checked}, {"failed", p.failed}, {"skipped", p.skipped}};
    if (!p.passed()) jp["first_failure"] = p.first_failure;
    props.push_back(jp);
  }
  return props;
}

int cmd_config(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  if (cfg.trials < 0) throw UsageError("--trials must be non-negative");
  std::optional<std::uint64_t> prime;
  if (cfg.field != "Q") {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(cfg.field, &used);
      if (used != cfg.field.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("--field must be Q or a prime, got '" + cfg.field + "'");
    }
    if (!iso::is_prime(p)) throw UsageError("--field " + cfg.field + " is not prime");
    prime = p;
  }
  if (cfg.census && !prime) throw UsageError("--census needs a prime field");

  // The census cap is checked before any trial work starts.
  if (cfg.census) {
    const auto total = iso::skew_matrix_count(cfg.n, *prime);
    if (total > iso::kDefaultCensusCap)
      throw CapExceeded("census of " + std::to_string(total) + " matrices exceeds cap " +
                        std::to_string(iso::kDefaultCensusCap));
  }

  const auto report = prime ? iso::run_trials(iso::PrimeField(*prime), cfg.n, cfg.seed, cfg.trials)
                            : iso::run_trials(iso::Rationals{}, cfg.n, cfg.seed, cfg.trials);
  Json j = header("config", cfg);
  j["field"] = cfg.field;
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["properties"] = trial_json(report);
  bool all = report.passed();

  if (cfg.census) {
    const auto hist = iso::skew_rank_census(cfg.n, *prime, iso::kDefaultCensusCap, cfg.threads);
    Json ranks = Json::object();
    std::uint64_t total = 0, degenerate = 0, odd = 0;
    for (auto [rank, count] : hist) {
      ranks[std::to_string(rank)] = count;
      total += count;
      if (rank <= cfg.n - 3) degenerate += count;
      if (rank % 2) odd += count;
    }
    const bool ok = odd == 0 && total == iso::skew_matrix_count(cfg.n, *prime);
    j["census"] = {{"p", *prime},
                   {"total", total},
                   {"ambient_exponent", cfg.n * (cfg.n - 1) / 2},
                   {"ranks", ranks},
                   {"degenerate_rank_max", cfg.n - 3},
                   {"degenerate_count", degenerate},
                   {"passed", ok}};
    all = all && ok;
  }
  j["passed"] = all;
  out << j.dump(2) << "\n";
  return all ? kOk : kVerificationFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "rank n of D_n (n >= 3)")->required();
  sub->add_option("--format", cfg.format, "json | dot | text");
  sub->add_option("--output", cfg.output, "write to this file instead of standard output");
}

}  // namespace

int threads_from_environment() {
  const char* raw = std::getenv("SPINOR_LAB_THREADS");
  if (!raw || !*raw) return 0;
  const std::string s(raw);
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v <= 0 || v > 4096)
    throw ArgumentError("SPINOR_LAB_THREADS must be a positive integer, got '" + s + "'");
  return static_cast<int>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Bott-Samelson and isotropic-subspace verification lab for the spinor variety", "spinor_lab"};
  app.require_subcommand(1);

  auto* quiver = app.add_subcommand("quiver", "emit the Bott-Samelson quiver (dot, json, text)");
  add_common(quiver, cfg);

  auto* verify = app.add_subcommand("verify", "run the combinatorial invariant suite for one n");
  add_common(verify, cfg);

  auto* classes = app.add_subcommand("classes", "enumerate positive 1-cycle classes of degree d");
  add_common(classes, cfg);
  classes->add_option("--d", cfg.d, "degree d >= 1");

  auto* config = app.add_subcommand("config", "seeded isotropic-subspace trials and skew-rank census");
  add_common(config, cfg);
  config->add_option("--field", cfg.field, "Q or a prime p");
  config->add_option("--seed", cfg.seed, "64-bit seed");
  config->add_option("--trials", cfg.trials, "number of random trials per property");
  config->add_flag("--census", cfg.census, "exhaustive census of skew matrices over F_p");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream buffer;
  try {
    cfg.threads = threads_from_environment();
    if (cfg.n < 3) throw UsageError("--n must be at least 3");
    if (cfg.d && *cfg.d < 1) throw UsageError("--d must be at least 1");
    int code = kOk;
    if (*quiver)
      code = cmd_quiver(cfg, buffer);
    else if (*verify)
      code = cmd_verify(cfg, buffer);
    else if (*classes)
      code = cmd_classes(cfg, buffer);
    else
      code = cmd_config(cfg, buffer);

    if (cfg.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw UsageError("cannot open output file '" + cfg.output + "'");
      file << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  }
}

}  // namespace spinor::cli
