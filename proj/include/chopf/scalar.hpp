#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chopf {

/// The ground field: either the rationals or F_p for an odd prime p.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws InvalidArgument unless p is an odd prime (characteristic 2 is never allowed).
  static FieldSpec prime(std::uint64_t p);

  bool is_prime_field() const { return kind == Kind::PrimeField; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// An exact field element tagged with its field. Rationals are kept reduced with a
/// positive denominator (GMP canonical form); residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(const FieldSpec& field, long value);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }
  static Scalar fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den);
  /// Parses "a", "a/b" (rationals) or "r" (prime field, any integer accepted and reduced).
  static Scalar parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical serialization: "a/b" with "/1" omitted, or the residue in [0, p).
  std::string to_string() const;

  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

enum class ArithOp { Add, Sub, Mul, Div };

Scalar arith(ArithOp op, const Scalar& a, const Scalar& b);

/// Square-and-multiply; negative exponents invert first.
Scalar pow(const Scalar& a, std::int64_t n);

/// Whether the field contains a full cyclic group of n-th roots of unity.
bool nth_roots_of_unity_exist(const FieldSpec& field, std::uint64_t n);

/// Multiplicative order of a nonzero scalar, or 0 if it has infinite order.
std::uint64_t multiplicative_order(const Scalar& a);

}  // namespace chopf
