#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>

#include <gmpxx.h>

#include <Eigen/Core>

namespace superdim {

/// Exact element of the ground field.
///
/// A value is either a rational number (modulus 0) or a residue modulo a
/// prime p, stored canonically in [0, p).  Modulus-0 values behave as
/// characteristic-zero constants: combining one with a residue reduces it
/// modulo p first, so integer constants such as signs can be mixed freely
/// with field elements.  Combining residues of different primes throws.
class Scalar {
 public:
  Scalar() = default;

  template <typename Int,
            std::enable_if_t<std::is_integral_v<Int> && !std::is_same_v<Int, bool>, int> = 0>
  Scalar(Int v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  explicit Scalar(const mpq_class& q, std::uint32_t modulus = 0);

  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  /// Rational value, or the canonical residue when modulus() != 0.
  const mpq_class& value() const { return value_; }

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "p/q", "-3" or a residue; no spaces.
  std::string to_string() const;

 private:
  static std::uint32_t common_modulus(const Scalar& a, const Scalar& b);
  void bind(std::uint32_t modulus);

  mpq_class value_;
  std::uint32_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// (-1)^e as a characteristic-free constant.
inline Scalar sign(int exponent) { return (exponent & 1) ? Scalar(-1) : Scalar(1); }

/// Ground field: Q or F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint32_t p);
  /// Parses "Q", "q", "F7", "f7".
  static Field parse(const std::string& text);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  bool two_invertible() const { return p_ != 2; }

  Scalar operator()(long v) const { return element(mpq_class(v)); }
  Scalar element(const mpq_class& q) const { return Scalar(q, p_); }
  /// Binds a modulus-0 constant to this field.
  Scalar bind(const Scalar& s) const { return s.modulus() == p_ ? s : Scalar(s.value(), p_); }

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

}  // namespace superdim

namespace Eigen {

template <>
struct NumTraits<superdim::Scalar> : GenericNumTraits<superdim::Scalar> {
  using Real = superdim::Scalar;
  using NonInteger = superdim::Scalar;
  using Nested = superdim::Scalar;
  using Literal = superdim::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
