#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace forge {

// All arithmetic is exact. A Scalar is an arbitrary-precision rational; when
// the ambient field is F_p the value is kept reduced to its canonical
// representative 0..p-1 (denominator 1). Every operation that could leave
// canonical form goes through Field, which re-reduces.
using Scalar = mpq_class;

struct field_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Field {
 public:
  enum class Kind : std::uint8_t { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  static Field prime(unsigned long p);

  Kind kind() const { return kind_; }
  unsigned long characteristic() const { return kind_ == Kind::prime ? p_ : 0; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }

  // Canonical form of an arbitrary rational in this field.
  Scalar reduce(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const { return reduce(a) == 0; }

  // Integer literal convenience, reduced into the field.
  Scalar from_int(long n) const { return reduce(Scalar(n)); }

  // Serialization: "num" or "num/den" over Q, the canonical representative
  // over F_p. parse() accepts both forms in either field.
  std::string to_string(const Scalar& a) const;
  Scalar parse(const std::string& s) const;

  std::string describe() const;  // "Q" or "F5"

 private:
  Field(Kind k, unsigned long p) : kind_(k), p_(p) {}
  Kind kind_;
  unsigned long p_;
};

}  // namespace forge
