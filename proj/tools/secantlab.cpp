// secantlab: embed curves, compute secant ideals and Betti tables, and check
// them against the closed-form predictions.
//
// Exit codes: 0 all rows match, 1 some row mismatches, 2 input error,
// 3 resource limit hit.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "secantlab.hpp"

using namespace secantlab;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitMatch = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct RunConfig {
  std::vector<std::string> files;
  std::string ideal_file;
  std::vector<int> ks{1};
  std::optional<std::uint64_t> prime;
  std::uint64_t seed = 20231;
  std::uint64_t budget = kDefaultPairBudget;
  std::optional<long> max_degree;
  std::string output;
  std::string format = "text";
  unsigned jobs = 1;
  bool timing = false;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void validate(const RunConfig& c) {
  if (c.prime && (*c.prime < 3 || *c.prime >= (1ULL << 31) || !is_prime(*c.prime)))
    throw InputError("--prime " + std::to_string(*c.prime) + " is not an odd prime below 2^31");
  for (int k : c.ks)
    if (k < 0) throw InputError("--k must be non-negative");
  if (c.budget == 0) throw InputError("--budget must be positive");
  if (c.jobs == 0) throw InputError("--jobs must be positive");
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw InputError("cannot write " + c.output);
  out << text;
}

double ms_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

json ms_value(const RunConfig& c, double ms) { return c.timing ? json(std::llround(ms)) : json(0); }

const std::string& single_file(const RunConfig& c) {
  if (c.files.size() != 1) throw InputError("expected exactly one --file");
  return c.files.front();
}

CurveSpec load_curve(const RunConfig& c, const std::string& path) { return parse_curve_file(read_file(path), c.prime); }

json betti_json(const BettiTable& B) {
  json e = json::array();
  for (const auto& [k, v] : B.entries) e.push_back({k.first, k.second, v});
  json j{{"r", B.r()}, {"entries", e}};
  if (B.degree_bound) j["degree_bound"] = *B.degree_bound;
  return j;
}

json ideal_json(const Ideal& I) {
  json g = json::array();
  for (const auto& f : I.generators()) g.push_back(f.to_string());
  return g;
}

// ---------------------------------------------------------------- curve

int cmd_curve(const RunConfig& c) {
  const std::string& path = single_file(c);
  CurveSpec spec = load_curve(c, path);
  auto t0 = std::chrono::steady_clock::now();
  CurveEmbedding e = embed(spec.model, spec.degree, f4_options(c.budget));
  double ms = ms_since(t0);
  if (c.format == "json") {
    json basis = json::array();
    for (const auto& m : e.basis) basis.push_back({{"x", m.x_exp}, {"y", m.y_exp}, {"pole", m.pole}});
    json j{{"curve", spec.model.describe()}, {"genus", spec.model.genus()}, {"degree", e.d}, {"r", e.r()},
           {"basis", basis},         {"ideal", ideal_json(e.ideal)},    {"prime", spec.model.field().characteristic()},
           {"ms", ms_value(c, ms)}};
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "curve: " << spec.model.describe() << "  (genus " << spec.model.genus() << ", F_"
        << spec.model.field().characteristic() << ")\n";
    out << "embedding: degree " << e.d << " into P^" << e.r() << "\nbasis:";
    for (const auto& m : e.basis) out << " x^" << m.x_exp << "*y^" << m.y_exp << "[" << m.pole << "]";
    out << "\nideal (" << e.ideal.generators().size() << " generators):\n";
    for (const auto& f : e.ideal.generators()) out << "  " << f.to_string() << "\n";
    if (c.timing) out << "time: " << std::llround(ms) << " ms\n";
    emit(c, out.str());
  }
  return kExitMatch;
}

// ---------------------------------------------------------------- secant

int cmd_secant(const RunConfig& c) {
  const std::string& path = single_file(c);
  if (c.ks.size() != 1) throw InputError("secant takes a single --k");
  const int k = c.ks.front();
  CurveSpec spec = load_curve(c, path);
  CurveEmbedding e = embed(spec.model, spec.degree, f4_options(c.budget));
  JoinOptions jo;
  jo.seed = c.seed;
  jo.gb = f4_options(c.budget);
  auto t0 = std::chrono::steady_clock::now();
  Ideal S = secant_join({k, e.ideal}, jo);
  HilbertData hd = hilbert_data(S, jo.gb);
  double ms = ms_since(t0);
  if (c.format == "json") {
    json j{{"curve", spec.model.describe()}, {"degree", e.d},
           {"k", k},
           {"r", e.r()},
           {"ideal", ideal_json(S)},
           {"dim", hd.projective_dimension()},
           {"hilbert_degree", hd.degree},
           {"hilbert_numerator", int_poly_to_string(hd.numerator)},
           {"seed", c.seed},
           {"prime", spec.model.field().characteristic()},
           {"ms", ms_value(c, ms)}};
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "Sigma_" << k << " of " << spec.model.describe() << " embedded in P^" << e.r() << "\n";
    if (S.is_zero()) out << "fills P^" << e.r() << " (zero ideal)\n";
    out << "dim " << hd.projective_dimension() << ", degree " << hd.degree << ", " << S.generators().size()
        << " minimal generators\n";
    for (const auto& f : S.generators()) out << "  " << f.to_string() << "\n";
    if (c.timing) out << "time: " << std::llround(ms) << " ms\n";
    emit(c, out.str());
  }
  return kExitMatch;
}

// ---------------------------------------------------------------- betti

int cmd_betti(const RunConfig& c) {
  Ideal I;
  int ndp_d = 2;
  std::string label;
  if (!c.ideal_file.empty()) {
    if (!c.files.empty()) throw InputError("give either --ideal or --file, not both");
    I = parse_ideal_file(read_file(c.ideal_file), c.prime);
    label = c.ideal_file;
  } else {
    const std::string& path = single_file(c);
    if (c.ks.size() != 1) throw InputError("betti takes a single --k");
    CurveSpec spec = load_curve(c, path);
    CurveEmbedding e = embed(spec.model, spec.degree, f4_options(c.budget));
    JoinOptions jo;
    jo.seed = c.seed;
    jo.gb = f4_options(c.budget);
    I = secant_join({c.ks.front(), e.ideal}, jo);
    ndp_d = c.ks.front() + 2;
    label = path + " k=" + std::to_string(c.ks.front());
  }
  if (!I.is_homogeneous()) throw InputError("betti needs a homogeneous ideal");
  ResolutionOptions ro;
  ro.gb = f4_options(c.budget);
  ro.degree_bound = c.max_degree;
  auto t0 = std::chrono::steady_clock::now();
  BettiTable B = betti_table(I, ro, c.seed);
  double ms = ms_since(t0);
  if (!c.ideal_file.empty() && B.total(1) > 0) ndp_d = std::max(2, min_generator_degree(B));
  const bool truncated = B.degree_bound.has_value();
  HilbertData hd = hilbert_data(I, ro.gb);
  NdpWindow w = max_ndp_p(B, ndp_d);

  if (c.format == "json") {
    json j{{"input", label}, {"betti", betti_json(B)}};
    j["regularity"] = truncated ? json(nullptr) : json(regularity(B));
    j["projective_dimension"] = truncated ? json(nullptr) : json(projective_dimension(B));
    j["acm"] = truncated ? json(nullptr) : json(is_acm(B, hd));
    j["ndp"] = {{"d", ndp_d}, {"p", w.all ? (truncated ? json(nullptr) : json("all")) : json(w.p)}};
    j["seed"] = c.seed;
    j["prime"] = I.ring()->field().characteristic();
    j["ms"] = ms_value(c, ms);
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << to_text(B);
    auto known = [&](auto v) { return truncated ? std::string("unknown (truncated)") : std::to_string(v); };
    out << "regularity: " << known(regularity(B)) << "\n";
    out << "projective dimension: " << known(projective_dimension(B)) << "\n";
    out << "ACM: " << (truncated ? "unknown (truncated)" : is_acm(B, hd) ? "true" : "false") << "\n";
    out << "N_{" << ndp_d << ",p}: ";
    if (!truncated)
      out << (w.all ? "holds for all p" : "holds for p <= " + std::to_string(w.p));
    else if (w.all)
      out << "no violation in degrees <= " << *B.degree_bound;
    else
      out << "fails for p >= " << w.p + 1 << "; smaller p checked in degrees <= " << *B.degree_bound << " only";
    out << "\n";
    if (c.timing) out << "time: " << std::llround(ms) << " ms\n";
    emit(c, out.str());
  }
  return kExitMatch;
}

// ---------------------------------------------------------------- verify

struct Instance {
  std::string file;
  int k = 1;
};

struct Outcome {
  json report;
  std::string text;
  int code = kExitMatch;
};

int exit_code(const VerificationReport& rep) {
  if (rep.any_mismatch()) return kExitMismatch;
  for (const auto& r : rep.rows)
    if (r.verdict == Verdict::skipped && r.reason.rfind("ResourceLimit", 0) == 0) return kExitResource;
  return kExitMatch;
}

Outcome run_instance(const RunConfig& c, const Instance& inst) {
  Outcome o;
  CurveSpec spec;
  try {
    spec = load_curve(c, inst.file);
  } catch (const std::exception& e) {
    o.code = kExitInput;
    o.report = {{"instance", {{"curve_file", inst.file}, {"k", inst.k}}}, {"error", e.what()}};
    o.text = inst.file + ": " + e.what() + "\n";
    return o;
  }
  VerifyOptions vo;
  vo.seed = c.seed;
  vo.gb = f4_options(c.budget);
  vo.degree_bound = c.max_degree;
  VerificationReport rep;
  double embed_ms = 0;
  try {
    auto t0 = std::chrono::steady_clock::now();
    CurveEmbedding e = embed(spec.model, spec.degree, vo.gb);
    embed_ms = ms_since(t0);
    rep = verify(e, inst.k, vo);
  } catch (const ResourceLimit& e) {
    rep.curve = spec.model.describe();
    rep.genus = spec.model.genus();
    rep.deg_L = spec.degree;
    rep.k = inst.k;
    rep.prime = spec.model.field().characteristic();
    rep.seed = c.seed;
    for (const auto& n : report_row_names())
      rep.rows.push_back({n, "", "", Verdict::skipped, detail::resource_reason(e), 0});
  } catch (const Error& e) {
    o.code = kExitInput;
    o.report = {{"instance", {{"curve_file", inst.file}, {"k", inst.k}}}, {"error", e.what()}};
    o.text = inst.file + ": " + e.what() + "\n";
    return o;
  }
  o.code = exit_code(rep);

  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"name", r.name},
                    {"predicted", r.predicted},
                    {"computed", r.computed},
                    {"verdict", r.verdict_text()},
                    {"ms", ms_value(c, r.ms)}});
  json instance{{"curve_file", inst.file}, {"curve", rep.curve}, {"genus", rep.genus},
                {"degree", rep.deg_L},     {"k", inst.k},        {"r", rep.r}};
  o.report = {{"instance", instance}, {"rows", rows}, {"seed", rep.seed}, {"prime", rep.prime}};
  if (rep.betti) o.report["betti"] = betti_json(*rep.betti);
  if (c.timing) {
    json stages{{"embed", std::llround(embed_ms)}};
    for (const auto& [name, ms] : rep.stage_ms) stages[name] = std::llround(ms);
    o.report["stages_ms"] = stages;
  }

  std::ostringstream out;
  out << inst.file << "  Sigma_" << inst.k << " of " << rep.curve << ", deg L = " << rep.deg_L << ", F_" << rep.prime
      << ", seed " << rep.seed << "\n";
  std::size_t wp = 9, wc = 8;
  for (const auto& r : rep.rows) {
    wp = std::max(wp, r.predicted.size());
    wc = std::max(wc, r.computed.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  out << "  " << pad("row", 16) << pad("predicted", wp + 2) << pad("computed", wc + 2) << "verdict\n";
  for (const auto& r : rep.rows)
    out << "  " << pad(r.name, 16) << pad(r.predicted, wp + 2) << pad(r.computed, wc + 2) << r.verdict_text() << "\n";
  if (rep.betti) out << to_text(*rep.betti);
  if (c.timing) {
    out << "  time (ms): embed " << std::llround(embed_ms);
    for (const auto& [name, ms] : rep.stage_ms) out << ", " << name << " " << std::llround(ms);
    out << "\n";
  }
  o.text = out.str();
  return o;
}

int combine(const std::vector<Outcome>& outs) {
  int code = kExitMatch;
  auto rank = [](int c) { return c == kExitInput ? 3 : c == kExitMismatch ? 2 : c == kExitResource ? 1 : 0; };
  for (const auto& o : outs)
    if (rank(o.code) > rank(code)) code = o.code;
  return code;
}

std::vector<Outcome> run_all(const RunConfig& c, const std::vector<Instance>& todo) {
  std::vector<Outcome> outs(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) outs[i] = run_instance(c, todo[i]);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(c.jobs, todo.size()); ++t) pool.emplace_back(worker);
  worker();
  return outs;
}

std::vector<Instance> instances(const RunConfig& c) {
  if (c.files.empty()) throw InputError("verify needs at least one --file");
  std::vector<Instance> v;
  for (const auto& f : c.files)
    for (int k : c.ks) v.push_back({f, k});
  return v;
}

void emit_outcomes(const RunConfig& c, const std::vector<Outcome>& outs) {
  if (c.format == "json") {
    json j;
    if (outs.size() == 1) {
      j = outs.front().report;
    } else {
      j = json::array();
      for (const auto& o : outs) j.push_back(o.report);
    }
    emit(c, j.dump(2) + "\n");
  } else {
    std::string all;
    for (const auto& o : outs) all += o.text;
    emit(c, all);
  }
}

int cmd_verify(const RunConfig& c) {
  auto outs = run_all(c, instances(c));
  emit_outcomes(c, outs);
  return combine(outs);
}

// ---------------------------------------------------------------- bench

int cmd_bench(RunConfig c) {
  c.timing = true;
  auto outs = run_all(c, instances(c));
  emit_outcomes(c, outs);
  return combine(outs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secant varieties of curves: Groebner bases, Betti tables and predicted invariants"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<std::uint64_t> budget_flag;
  std::optional<std::uint64_t> prime_flag;

  auto common = [&](CLI::App* sub, bool curve_input) {
    if (curve_input) sub->add_option("--file", cfg.files, "curve description file")->check(CLI::ExistingFile);
    sub->add_option("--prime", prime_flag, "override the field characteristic of the input");
    sub->add_option("--seed", cfg.seed, "seed for every randomized choice");
    sub->add_option("--budget", budget_flag, "S-pair budget per Groebner computation");
    sub->add_option("--output", cfg.output, "write output here instead of stdout");
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", cfg.timing, "report wall-clock times instead of 0");
  };

  CLI::App* curve = app.add_subcommand("curve", "embed a curve and print its ideal");
  common(curve, true);
  CLI::App* secant = app.add_subcommand("secant", "compute the secant ideal Sigma_k");
  common(secant, true);
  secant->add_option("--k", cfg.ks, "secant index")->expected(1);
  CLI::App* betti = app.add_subcommand("betti", "Betti table of an ideal file or of Sigma_k");
  common(betti, true);
  betti->add_option("--ideal", cfg.ideal_file, "ideal description file")->check(CLI::ExistingFile);
  betti->add_option("--k", cfg.ks, "secant index")->expected(1);
  betti->add_option("--max-degree", cfg.max_degree, "resolve only up to this internal degree");
  CLI::App* ver = app.add_subcommand("verify", "compare computed invariants of Sigma_k with predictions");
  common(ver, true);
  ver->add_option("--k", cfg.ks, "secant indices (repeatable)");
  ver->add_option("--max-degree", cfg.max_degree, "resolve only up to this internal degree");
  ver->add_option("--jobs", cfg.jobs, "run instances on this many threads");
  CLI::App* bench = app.add_subcommand("bench", "verify with per-stage timings");
  common(bench, true);
  bench->add_option("--k", cfg.ks, "secant indices (repeatable)");
  bench->add_option("--max-degree", cfg.max_degree, "resolve only up to this internal degree");
  bench->add_option("--jobs", cfg.jobs, "run instances on this many threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (const char* env = std::getenv("SECANTLAB_PAIR_BUDGET")) {
      try {
        cfg.budget = std::stoull(env);
      } catch (const std::exception&) {
        throw InputError(std::string("SECANTLAB_PAIR_BUDGET is not a number: ") + env);
      }
    }
    if (budget_flag) cfg.budget = *budget_flag;
    cfg.prime = prime_flag;
    validate(cfg);
    if (*curve) return cmd_curve(cfg);
    if (*secant) return cmd_secant(cfg);
    if (*betti) return cmd_betti(cfg);
    if (*ver) return cmd_verify(cfg);
    return cmd_bench(cfg);
  } catch (const ResourceLimit& e) {
    std::cerr << "secantlab: " << e.what() << "\n";
    return kExitResource;
  } catch (const InputError& e) {
    std::cerr << "secantlab: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "secantlab: " << e.what() << "\n";
    return kExitInput;
  }
}
