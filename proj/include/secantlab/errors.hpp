#ifndef SECANTLAB_ERRORS_HPP
#define SECANTLAB_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace secantlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero in prime field") {}
};

class FieldMismatch : public Error {
public:
  FieldMismatch(std::uint32_t p, std::uint32_t q)
      : Error("field mismatch: F_" + std::to_string(p) + " vs F_" + std::to_string(q)) {}
};

class NotPrime : public Error {
public:
  explicit NotPrime(std::uint64_t p) : Error(std::to_string(p) + " is not an odd prime below 2^31") {}
};

class ParseError : public Error {
public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset), reason_(what) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& reason() const noexcept { return reason_; }

private:
  std::size_t offset_;
  std::string reason_;
};

class UnknownVariable : public Error {
public:
  explicit UnknownVariable(std::string name)
      : Error("unknown variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class ArityMismatch : public Error {
public:
  ArityMismatch(std::size_t a, std::size_t b)
      : Error("monomial arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class RingMismatch : public Error {
public:
  RingMismatch() : Error("operands live in different polynomial rings") {}
};

class ZeroPolynomial : public Error {
public:
  ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

class ZeroIdeal : public Error {
public:
  ZeroIdeal() : Error("operation undefined on the zero ideal") {}
};

/// Raised when a Groebner computation exhausts its pair budget.
class ResourceLimit : public Error {
public:
  ResourceLimit(std::uint64_t processed, std::uint64_t max)
      : Error("resource limit: processed " + std::to_string(processed) + " pairs, budget " +
              std::to_string(max)),
        processed_(processed),
        max_(max) {}
  std::uint64_t pairs_processed() const noexcept { return processed_; }
  std::uint64_t budget() const noexcept { return max_; }

private:
  std::uint64_t processed_;
  std::uint64_t max_;
};

class PointNotOnVariety : public Error {
public:
  explicit PointNotOnVariety(const std::string& detail) : Error("point not on variety: " + detail) {}
};

class DuplicatePoints : public Error {
public:
  DuplicatePoints() : Error("curve points must be pairwise distinct") {}
};

class DegreeTooSmall : public Error {
public:
  DegreeTooSmall(int d, int needed)
      : Error("line bundle degree " + std::to_string(d) + " below required " + std::to_string(needed)) {}
};

class InvalidCurve : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

}  // namespace secantlab

#endif  // SECANTLAB_ERRORS_HPP
