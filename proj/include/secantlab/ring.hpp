#ifndef SECANTLAB_RING_HPP
#define SECANTLAB_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "secantlab/arith.hpp"
#include "secantlab/monomial.hpp"

namespace secantlab {

/// Polynomial ring F_p[v_0, ..., v_{n-1}] with a monomial order and a positive grading.
///
/// Variable order is declaration order; every tie-break in the library derives from it.
class PolyRing {
public:
  PolyRing(std::vector<std::string> names, PrimeField field, MonomialOrder order = MonomialOrder::grevlex(),
           std::vector<int> weights = {})
      : names_(std::move(names)), field_(field), order_(std::move(order)), weights_(std::move(weights)) {
    if (names_.size() > kMaxVars) throw InvalidArgument("too many variables");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_)
      if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size()) throw InvalidArgument("grading weight count differs from variable count");
    for (int w : weights_)
      if (w <= 0) throw InvalidArgument("grading weights must be positive");
    if (order_.kind() == MonomialOrder::Kind::block_elim && order_.block_size() > names_.size())
      throw InvalidArgument("elimination block larger than the variable set");
  }

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const PrimeField& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<int>& weights() const noexcept { return weights_; }

  bool standard_grading() const noexcept {
    for (int w : weights_)
      if (w != 1) return false;
    return true;
  }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  long weighted_degree(const Monomial& m) const noexcept {
    if (standard_grading()) return m.degree();
    long d = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) d += static_cast<long>(weights_[i]) * m[i];
    return d;
  }

  Monomial one() const { return Monomial(nvars()); }
  Monomial variable(std::size_t i) const {
    Monomial m(nvars());
    m.set(i, 1);
    return m;
  }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

private:
  std::vector<std::string> names_;
  PrimeField field_;
  MonomialOrder order_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> names, std::uint64_t p = kDefaultPrime,
                         MonomialOrder order = MonomialOrder::grevlex(), std::vector<int> weights = {}) {
  return std::make_shared<const PolyRing>(std::move(names), PrimeField(p), std::move(order), std::move(weights));
}

/// Same variables, field and grading; different order.
inline RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return std::make_shared<const PolyRing>(ring->names(), ring->field(), std::move(order), ring->weights());
}

/// Variable names "prefix0", ..., "prefix{n-1}".
inline std::vector<std::string> indexed_names(const std::string& prefix, std::size_t n, std::size_t start = 0) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(prefix + std::to_string(start + i));
  return v;
}

}  // namespace secantlab

#endif  // SECANTLAB_RING_HPP
