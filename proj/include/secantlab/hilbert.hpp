#ifndef SECANTLAB_HILBERT_HPP
#define SECANTLAB_HILBERT_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "secantlab/groebner.hpp"
#include "secantlab/monomial_ideal.hpp"

namespace secantlab {

/// Hilbert series of S/I as numerator / (1 - t)^n, plus the data read off after
/// cancelling every factor (1 - t) from the numerator.
struct HilbertData {
  IntPoly numerator;
  IntPoly reduced;  // numerator / (1 - t)^(n - krull_dimension)
  std::size_t nvars = 0;
  int krull_dimension = -1;  // -1 for the unit ideal
  std::int64_t degree = 0;

  int projective_dimension() const noexcept { return krull_dimension - 1; }

  /// dim_k (S/I)_d.
  std::int64_t hilbert_function(long d) const {
    if (d < 0) return 0;
    return detail::series_coefficients(numerator, std::vector<int>(nvars, 1), d)[static_cast<std::size_t>(d)];
  }
};

inline std::string int_poly_to_string(const IntPoly& p, const std::string& var = "t") {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i]) continue;
    std::int64_t c = p[i];
    s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::int64_t a = c < 0 ? -c : c;
    if (i == 0 || a != 1) s += std::to_string(a);
    if (i > 0) s += (a != 1 ? "*" : "") + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s.empty() ? "0" : s;
}

/// Cancels (1 - t) factors from a numerator over (1 - t)^nvars.
inline HilbertData hilbert_data_from_numerator(IntPoly num, std::size_t nvars) {
  HilbertData hd;
  trim(num);
  hd.numerator = num;
  hd.nvars = nvars;
  if (num.empty()) return hd;
  IntPoly h = num;
  std::size_t c = 0;
  while (c < nvars) {
    std::int64_t at1 = 0;
    for (auto v : h) at1 += v;
    if (at1 != 0) break;
    // synthetic division by (1 - t): q_i = sum_{j<=i} h_j, negated
    IntPoly q(h.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      run += h[i];
      q[i] = run;
    }
    h = q;
    trim(h);
    ++c;
  }
  hd.reduced = h;
  hd.krull_dimension = static_cast<int>(nvars - c);
  for (auto v : h) hd.degree += v;
  return hd;
}

/// Hilbert data of S/I from the initial ideal under I's ring order. Needs a
/// standard-graded ring and homogeneous generators.
inline HilbertData hilbert_data(const Ideal& I, const GbOptions& opts = f4_options()) {
  if (!I.ring()->standard_grading()) throw InvalidArgument("Hilbert data needs the standard grading");
  if (!I.is_homogeneous()) throw InvalidArgument("Hilbert data needs a homogeneous ideal");
  GroebnerBasis G = I.groebner_basis(opts);
  return hilbert_data_from_numerator(monomial_hilbert_numerator(G.leading_monomials(), I.ring()->nvars()),
                                     I.ring()->nvars());
}

}  // namespace secantlab

#endif  // SECANTLAB_HILBERT_HPP
