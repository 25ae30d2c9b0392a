#ifndef SECANTLAB_ORACLE_HPP
#define SECANTLAB_ORACLE_HPP

// Closed-form predictions for secant varieties Σ_k of a curve of genus g
// embedded by a line bundle of degree deg_L, and the comparator that checks
// them against Groebner/resolution computations.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secantlab/curves.hpp"
#include "secantlab/homalg.hpp"
#include "secantlab/ideal_ops.hpp"

namespace secantlab {

/// deg L >= 2g + 2k + 1, the standing hypothesis of every prediction below.
inline bool hypothesis_holds(int g, int deg_L, int k) { return deg_L >= 2 * g + 2 * k + 1; }

inline std::int64_t predicted_degree(int g, int deg_L, int k) {
  std::int64_t s = 0;
  for (int i = 0; i <= std::min(k + 1, g); ++i) s += binomial(deg_L - g - k - i, k + 1 - i) * binomial(g, i);
  return s;
}

/// Multiplicity of Σ_k at a point of Σ_m \ Σ_{m-1}.
inline std::int64_t predicted_multiplicity(int g, int deg_L, int k, int m) {
  if (m < 0 || m > k) throw InvalidArgument("multiplicity needs 0 <= m <= k");
  std::int64_t s = 0;
  for (int i = 0; i <= std::min(k - m, g); ++i)
    s += binomial(deg_L - g - m - 1 - k - i, k - m - i) * binomial(g, i);
  if (k > m && s != predicted_degree(g, deg_L - 2 * (m + 1), k - m - 1))
    throw Error("internal: multiplicity/degree identity broken");
  return s;
}

/// (reg O_{Σ_k}, reg Σ_k).
inline std::pair<int, int> predicted_regularity(int g, int k) {
  return g == 0 ? std::pair{k + 1, k + 2} : std::pair{2 * k + 2, 2 * k + 3};
}

inline std::int64_t predicted_canonical_h0(int g, int k) { return binomial(g + k, k + 1); }

/// Largest p with N_{k+2,p} guaranteed; negative when nothing is.
inline int predicted_p_max(int g, int deg_L, int k) { return deg_L - 2 * g - 2 * k - 1; }

struct PredictionRecord {
  int g = 0, deg_L = 0, k = 0, r = 0;
  bool hypothesis = false;
  int dim = 0;
  std::int64_t degree = 0;
  int reg_structure = 0, reg_embedded = 0;
  int p_max = -1;
  bool acm = false;
  /// Exactly k+2 when p_max >= 1; otherwise only a lower bound.
  int min_gen_degree = 0;
  bool min_gen_exact = false;
  std::int64_t canonical_h0 = 0;
  std::pair<int, int> corner{0, 0};
};

inline PredictionRecord predict(int g, int deg_L, int k) {
  PredictionRecord p;
  p.g = g;
  p.deg_L = deg_L;
  p.k = k;
  p.r = deg_L - g;
  p.hypothesis = hypothesis_holds(g, deg_L, k);
  p.dim = 2 * k + 1;
  p.degree = predicted_degree(g, deg_L, k);
  std::tie(p.reg_structure, p.reg_embedded) = predicted_regularity(g, k);
  p.p_max = predicted_p_max(g, deg_L, k);
  p.acm = p.p_max >= 0;
  p.min_gen_degree = k + 2;
  p.min_gen_exact = p.p_max >= 1;
  p.canonical_h0 = predicted_canonical_h0(g, k);
  p.corner = {p.r - 2 * k - 1, 2 * k + 2};
  return p;
}

enum class Verdict { match, lower_bound, mismatch, skipped };

struct ReportRow {
  std::string name;
  std::string predicted;
  std::string computed;
  Verdict verdict = Verdict::skipped;
  std::string reason;  // set for skipped rows
  double ms = 0;

  std::string verdict_text() const {
    switch (verdict) {
      case Verdict::match: return "match";
      case Verdict::lower_bound: return "match (prediction is a lower bound)";
      case Verdict::mismatch: return "mismatch";
      case Verdict::skipped: break;
    }
    return "skipped(" + reason + ")";
  }
};

struct VerifyOptions {
  std::uint64_t seed = 20231;
  GbOptions gb = f4_options();
  /// Resolve only up to this degree; rows needing more are skipped.
  std::optional<long> degree_bound;
  JoinOptions::Layout layout = JoinOptions::Layout::iterated;
};

struct VerificationReport {
  std::string curve;  // model description
  int genus = 0, deg_L = 0, k = 0, r = 0;
  std::uint64_t prime = 0, seed = 0;
  PredictionRecord prediction;
  std::vector<ReportRow> rows;
  std::optional<BettiTable> betti;
  std::optional<Ideal> secant_ideal;
  std::vector<std::pair<std::string, double>> stage_ms;
  std::string diagnostic;

  const ReportRow& row(const std::string& name) const {
    for (const auto& r : rows)
      if (r.name == name) return r;
    throw InvalidArgument("no report row " + name);
  }
  bool any_mismatch() const {
    return std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.verdict == Verdict::mismatch; });
  }
  bool any_skipped() const {
    return std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.verdict == Verdict::skipped; });
  }
};

/// Row names, in report order.
inline const std::vector<std::string>& report_row_names() {
  static const std::vector<std::string> names{"dim",        "degree", "reg_structure", "reg_embedded",
                                              "ndp_window", "acm",    "min_gen_degree", "canonical_h0"};
  return names;
}

namespace detail {

inline std::string show(bool b) { return b ? "true" : "false"; }
inline std::string show(std::int64_t v) { return std::to_string(v); }
inline std::string show(int v) { return std::to_string(v); }

inline ReportRow exact_row(std::string name, const std::string& pred, const std::string& comp, double ms) {
  return {std::move(name), pred, comp, pred == comp ? Verdict::match : Verdict::mismatch, "", ms};
}

inline std::string resource_reason(const ResourceLimit& e) {
  return "ResourceLimit (processed " + std::to_string(e.pairs_processed()) + " pairs, budget " +
         std::to_string(e.budget()) + ")";
}

inline ReportRow skipped_row(std::string name, std::string pred, std::string reason) {
  return {std::move(name), std::move(pred), "", Verdict::skipped, std::move(reason), 0};
}

}  // namespace detail

/// Computes Σ_k of the embedded curve, its Hilbert data and Betti table, and
/// compares every invariant with the closed-form prediction. Never throws for
/// computational failures; affected rows are marked skipped instead.
inline VerificationReport verify(const CurveEmbedding& emb, int k, const VerifyOptions& options = {}) {
  using clk = std::chrono::steady_clock;
  auto elapsed = [](clk::time_point t) { return std::chrono::duration<double, std::milli>(clk::now() - t).count(); };
  if (k < 0) throw InvalidArgument("k must be non-negative");

  VerificationReport rep;
  rep.curve = emb.model.describe();
  rep.genus = emb.model.genus();
  rep.deg_L = emb.d;
  rep.k = k;
  rep.r = emb.r();
  rep.prime = emb.model.field().characteristic();
  rep.seed = options.seed;
  const PredictionRecord P = predict(rep.genus, rep.deg_L, k);
  rep.prediction = P;
  const auto& names = report_row_names();

  auto pred_text = [&](const std::string& name) -> std::string {
    if (name == "dim") return detail::show(P.dim);
    if (name == "degree") return detail::show(P.degree);
    if (name == "reg_structure") return detail::show(P.reg_structure);
    if (name == "reg_embedded") return detail::show(P.reg_embedded);
    if (name == "ndp_window") return detail::show(P.p_max);
    if (name == "acm") return detail::show(P.acm);
    if (name == "min_gen_degree") return (P.min_gen_exact ? "" : ">= ") + detail::show(P.min_gen_degree);
    return detail::show(P.canonical_h0);
  };
  auto skip_all = [&](const std::string& reason) {
    rep.rows.clear();
    for (const auto& n : names) rep.rows.push_back(detail::skipped_row(n, pred_text(n), reason));
  };

  if (!P.hypothesis && 2 * k + 1 < rep.r) {
    skip_all("hypothesis deg L >= 2g+2k+1 not met");
    return rep;
  }

  JoinOptions jo;
  jo.seed = options.seed;
  jo.gb = options.gb;
  jo.layout = options.layout;
  HilbertData hd;
  double t_join = 0, t_hilb = 0, t_res = 0;
  try {
    auto t0 = clk::now();
    Ideal S = secant_join({k, emb.ideal}, jo);
    t_join = elapsed(t0);
    rep.stage_ms.emplace_back("secant_join", t_join);
    rep.secant_ideal = S;
    t0 = clk::now();
    hd = hilbert_data(S, options.gb);
    t_hilb = elapsed(t0);
    rep.stage_ms.emplace_back("hilbert", t_hilb);
    if (!S.is_zero()) {
      t0 = clk::now();
      ResolutionOptions ro;
      ro.gb = options.gb;
      ro.degree_bound = options.degree_bound;
      rep.betti = betti_table(S, ro, options.seed);
      t_res = elapsed(t0);
      rep.stage_ms.emplace_back("resolution", t_res);
    }
  } catch (const ResourceLimit& e) {
    rep.diagnostic = detail::resource_reason(e);
    if (!rep.secant_ideal) {
      skip_all(rep.diagnostic);
      return rep;
    }
  }

  const Ideal& S = *rep.secant_ideal;
  if (S.is_zero()) {
    // Σ_k is all of P^r: only the degree is meaningful.
    for (const auto& n : names) {
      if (n == "degree" && P.hypothesis)
        rep.rows.push_back(detail::exact_row(n, pred_text(n), detail::show(hd.degree), t_join + t_hilb));
      else if (n == "degree")
        rep.rows.push_back(detail::skipped_row(n, pred_text(n), "hypothesis deg L >= 2g+2k+1 not met"));
      else
        rep.rows.push_back(detail::skipped_row(n, pred_text(n), "fills ambient"));
    }
    return rep;
  }

  rep.rows.push_back(detail::exact_row("dim", pred_text("dim"), detail::show(hd.projective_dimension()), t_join + t_hilb));
  rep.rows.push_back(detail::exact_row("degree", pred_text("degree"), detail::show(hd.degree), t_join + t_hilb));

  if (!rep.betti) {
    for (std::size_t i = 2; i < names.size(); ++i)
      rep.rows.push_back(detail::skipped_row(names[i], pred_text(names[i]), rep.diagnostic));
    return rep;
  }
  const BettiTable& B = *rep.betti;
  const bool truncated = B.degree_bound.has_value();
  const std::string trunc_reason = truncated ? "resolution truncated at degree " + std::to_string(*B.degree_bound) : "";

  if (truncated) {
    rep.rows.push_back(detail::skipped_row("reg_structure", pred_text("reg_structure"), trunc_reason));
    rep.rows.push_back(detail::skipped_row("reg_embedded", pred_text("reg_embedded"), trunc_reason));
  } else {
    int reg = regularity(B);
    rep.rows.push_back(detail::exact_row("reg_structure", pred_text("reg_structure"), detail::show(reg), t_res));
    rep.rows.push_back(detail::exact_row("reg_embedded", pred_text("reg_embedded"), detail::show(reg + 1), t_res));
  }

  {
    // N_{k+2,p}: compare the largest p found with p_max.
    NdpWindow w = max_ndp_p(B, k + 2);
    ReportRow row{"ndp_window", pred_text("ndp_window"), "", Verdict::match, "", t_res};
    if (truncated && w.all) {
      row = detail::skipped_row("ndp_window", row.predicted, trunc_reason);
    } else if (w.all) {
      row.computed = "all";
      row.verdict = Verdict::lower_bound;
    } else {
      row.computed = detail::show(w.p);
      row.verdict = w.p == P.p_max ? Verdict::match : w.p > P.p_max ? Verdict::lower_bound : Verdict::mismatch;
    }
    rep.rows.push_back(row);
  }

  if (truncated)
    rep.rows.push_back(detail::skipped_row("acm", pred_text("acm"), trunc_reason));
  else
    rep.rows.push_back(detail::exact_row("acm", pred_text("acm"), detail::show(is_acm(B, hd)), t_res));

  if (B.total(1) == 0) {
    // only possible when truncation cut off every generator
    rep.rows.push_back(detail::skipped_row("min_gen_degree", pred_text("min_gen_degree"), trunc_reason));
  } else {
    ReportRow row{"min_gen_degree", pred_text("min_gen_degree"), "", Verdict::match, "", t_res};
    int m = min_generator_degree(B);
    row.computed = detail::show(m);
    if (m < P.min_gen_degree || (P.min_gen_exact && m != P.min_gen_degree))
      row.verdict = Verdict::mismatch;
    else if (m > P.min_gen_degree)
      row.verdict = Verdict::lower_bound;
    rep.rows.push_back(row);
  }

  {
    auto [i, q] = P.corner;
    if (i < 0) {
      rep.rows.push_back(detail::skipped_row("canonical_h0", pred_text("canonical_h0"), "corner index negative"));
    } else if (truncated && i + q > *B.degree_bound) {
      rep.rows.push_back(detail::skipped_row("canonical_h0", pred_text("canonical_h0"), trunc_reason));
    } else {
      rep.rows.push_back(detail::exact_row("canonical_h0", pred_text("canonical_h0"), detail::show(koszul_dim(B, i, q)), t_res));
    }
  }
  return rep;
}

}  // namespace secantlab

#endif  // SECANTLAB_ORACLE_HPP
