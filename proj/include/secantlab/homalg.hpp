#ifndef SECANTLAB_HOMALG_HPP
#define SECANTLAB_HOMALG_HPP

#include <optional>
#include <random>

#include "secantlab/betti.hpp"
#include "secantlab/hilbert.hpp"
#include "secantlab/resolution.hpp"

namespace secantlab {

inline bool is_acm(const BettiTable& B, const HilbertData& hd) { return is_acm(B, hd.projective_dimension()); }

/// Image of I after substituting random linear forms in x_0..x_{n-c-1} for the
/// last c variables, i.e. S/(I + (l_1..l_c)) written over n-c variables.
/// Returns nullopt unless l_1..l_c is a regular sequence on S/I, which holds
/// exactly when the Hilbert numerator is unchanged.
inline std::optional<Ideal> generic_linear_section(const Ideal& I, std::size_t count, std::uint64_t seed,
                                                   const GbOptions& opts = f4_options()) {
  const RingPtr& R = I.ring();
  const std::size_t n = R->nvars();
  if (count == 0 || count >= n) throw InvalidArgument("section must cut between 1 and n-1 variables");
  const std::size_t keep = n - count;
  std::vector<std::string> names(R->names().begin(), R->names().begin() + static_cast<std::ptrdiff_t>(keep));
  RingPtr T = make_ring(std::move(names), R->field().characteristic());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coef(1, R->field().characteristic() - 1);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < keep; ++i) images.push_back(Polynomial::variable(T, i));
  for (std::size_t i = keep; i < n; ++i) {
    std::vector<Term> t;
    for (std::size_t v = 0; v < keep; ++v) {
      Monomial m(keep);
      m.set(v, 1);
      t.push_back({m, static_cast<Coeff>(coef(rng))});
    }
    images.emplace_back(T, std::move(t));
  }
  std::vector<Polynomial> gens;
  GroebnerBasis G = I.groebner_basis(opts);
  for (const auto& g : G.elements())
    if (Polynomial h = g.substitute(images); !h.is_zero()) gens.push_back(std::move(h));
  Ideal J(T, std::move(gens));
  if (hilbert_data(J, opts).numerator != hilbert_data(I, opts).numerator) return std::nullopt;
  return J;
}

/// Graded Betti numbers of S/I. Cuts by as many generic linear forms as form a
/// regular sequence on S/I before resolving, since that leaves every β_{i,j}
/// unchanged; for Cohen-Macaulay quotients the resolved ring is Artinian.
inline BettiTable betti_table(const Ideal& I, const ResolutionOptions& opts = {}, std::uint64_t seed = 1) {
  const RingPtr& R = I.ring();
  if (!R->standard_grading() || !I.is_homogeneous() || I.is_zero() || I.groebner_basis(opts.gb).is_unit())
    return minimal_free_resolution(I, opts);
  const std::size_t n = R->nvars();
  HilbertData hd = hilbert_data(I, opts.gb);
  std::size_t c = std::min<std::size_t>(static_cast<std::size_t>(std::max(hd.krull_dimension, 0)), n - 1);
  for (; c > 0; --c) {
    auto J = generic_linear_section(I, c, seed + c, opts.gb);
    if (!J) continue;
    BettiTable B = minimal_free_resolution(*J, opts);
    B.nvars = n;
    return B;
  }
  return minimal_free_resolution(I, opts);
}

}  // namespace secantlab

#endif  // SECANTLAB_HOMALG_HPP
