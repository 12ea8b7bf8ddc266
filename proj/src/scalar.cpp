#include "chopf/scalar.hpp"

#include <algorithm>
#include <vector>

#include "chopf/error.hpp"

namespace chopf {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_signed(long v, std::uint64_t p) {
  const auto sp = static_cast<__int128>(p);
  __int128 r = static_cast<__int128>(v) % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_class modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic Miller-Rabin witnesses for all 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw Error(ErrorCode::InvalidArgument, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::to_string() const {
  return is_prime_field() ? "F" + std::to_string(p) : "Q";
}

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
  if (field_.is_prime_field()) {
    r_ = reduce_signed(value, field_.p);
  } else {
    q_ = value;
  }
}

Scalar Scalar::fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Scalar out;
  out.field_ = field;
  if (field.is_prime_field()) {
    Scalar n;
    n.field_ = field;
    n.r_ = reduce_mpz(num, field.p);
    Scalar d;
    d.field_ = field;
    d.r_ = reduce_mpz(den, field.p);
    return n / d;
  }
  out.q_ = mpq_class(num, den);
  out.q_.canonicalize();
  return out;
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return fraction(field, mpz_class(s, 10), mpz_class(1));
    }
    if (field.is_prime_field()) {
      throw Error(ErrorCode::ParseError, "prime-field scalars are plain residues, got '" + s + "'");
    }
    return fraction(field, mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "malformed scalar '" + s + "'");
  }
}

bool Scalar::is_zero() const { return field_.is_prime_field() ? r_ == 0 : q_ == 0; }

bool Scalar::is_one() const { return field_.is_prime_field() ? r_ == 1 : q_ == 1; }

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_str();
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_prime_field()) {
    out.r_ = r_ == 0 ? 0 : field_.p - r_;
  } else {
    out.q_ = -q_;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime_field()) {
    r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + other.r_) % field_.p);
  } else {
    q_ += other.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_prime_field()) {
    r_ = mul_mod(r_, other.r_, field_.p);
  } else {
    q_ *= other.q_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar out = *this;
  if (field_.is_prime_field()) {
    out.r_ = pow_mod(r_, field_.p - 2, field_.p);
  } else {
    out.q_ = 1 / q_;
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_prime_field() ? a.r_ == b.r_ : a.q_ == b.q_;
}

Scalar arith(ArithOp op, const Scalar& a, const Scalar& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div:
      if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
      return a / b;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic op");
}

Scalar pow(const Scalar& a, std::int64_t n) {
  Scalar base = a;
  if (n < 0) {
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    base = a.inverse();
  }
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Scalar result = Scalar::one(a.field());
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool nth_roots_of_unity_exist(const FieldSpec& field, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (field.is_prime_field()) return (field.p - 1) % n == 0;
  return n == 1 || n == 2;
}

std::uint64_t multiplicative_order(const Scalar& a) {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "order of zero");
  const FieldSpec& f = a.field();
  if (!f.is_prime_field()) {
    if (a.is_one()) return 1;
    if (a == Scalar(f, -1)) return 2;
    return 0;
  }
  std::uint64_t order = f.p - 1;
  for (std::uint64_t q : prime_factors(f.p - 1)) {
    while (order % q == 0 && pow_mod(a.residue(), order / q, f.p) == 1) order /= q;
  }
  return order;
}

}  // namespace chopf
