#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "chopf/error.hpp"
#include "chopf/scalar.hpp"

using namespace chopf;

namespace {

// Small independent fraction type used as an oracle for rational arithmetic.
struct Frac {
  long long n = 0;
  long long d = 1;
  Frac(long long a, long long b) {
    if (b < 0) a = -a, b = -b;
    long long g = std::gcd(a < 0 ? -a : a, b);
    if (g == 0) g = 1;
    n = a / g;
    d = b / g;
  }
  std::string str() const { return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d); }
};

Frac add(Frac a, Frac b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
Frac mul(Frac a, Frac b) { return {a.n * b.n, a.d * b.d}; }

long long brute_pow_mod(long long a, long long n, long long p) {
  long long r = 1;
  for (long long i = 0; i < n; ++i) r = r * a % p;
  return r;
}

const FieldSpec Q = FieldSpec::rationals();

Scalar q(const char* s) { return Scalar::parse(Q, s); }

}  // namespace

TEST_CASE("field spec gate") {
  CHECK(FieldSpec::prime(5).to_string() == "F5");
  CHECK_THROWS_AS(FieldSpec::prime(2), Error);
  CHECK_THROWS_AS(FieldSpec::prime(9), Error);
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
}

TEST_CASE("arith examples") {
  CHECK(arith(ArithOp::Add, q("1/2"), q("1/3")).to_string() == "5/6");
  const FieldSpec F5 = FieldSpec::prime(5);
  CHECK(arith(ArithOp::Div, Scalar(F5, 1), Scalar(F5, 2)).to_string() == "3");
  CHECK(arith(ArithOp::Mul, Scalar::zero(Q), q("-7/3")).is_zero());
  CHECK_THROWS_AS(arith(ArithOp::Div, q("1"), q("0")), Error);
  try {
    (void)arith(ArithOp::Add, q("1"), Scalar(F5, 1));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("serialization is canonical") {
  CHECK(q("4/-6").to_string() == "-2/3");
  CHECK(q("10/5").to_string() == "2");
  CHECK(q("0/7").to_string() == "0");
  const FieldSpec F7 = FieldSpec::prime(7);
  CHECK(Scalar::parse(F7, "-1").to_string() == "6");
  CHECK(Scalar::parse(F7, "15").to_string() == "1");
  CHECK_THROWS(Scalar::parse(F7, "1/2"));
  CHECK_THROWS(Scalar::parse(Q, "abc"));
}

TEST_CASE("pow examples") {
  CHECK(pow(q("-1"), 2).is_one());
  CHECK(pow(Scalar(FieldSpec::prime(5), 2), 4).is_one());
  CHECK(pow(q("1/2"), -2).to_string() == "4");
  CHECK_THROWS_AS(pow(q("0"), -1), Error);
  CHECK(pow(q("0"), 0).is_one());
}

TEST_CASE("roots of unity") {
  CHECK(nth_roots_of_unity_exist(Q, 2));
  CHECK_FALSE(nth_roots_of_unity_exist(Q, 4));
  CHECK(nth_roots_of_unity_exist(Q, 1));
  // Oracle: count the n-th roots of unity by brute force.
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    const FieldSpec F = FieldSpec::prime(p);
    for (std::uint64_t n = 1; n <= 12; ++n) {
      std::uint64_t count = 0;
      for (std::uint64_t x = 1; x < p; ++x) count += brute_pow_mod(x, n, p) == 1;
      CHECK(nth_roots_of_unity_exist(F, n) == (count == n));
    }
    for (std::uint64_t x = 1; x < p; ++x) {
      std::uint64_t ord = 1;
      while (brute_pow_mod(x, ord, p) != 1) ++ord;
      CHECK(multiplicative_order(Scalar(F, static_cast<long>(x))) == ord);
    }
  }
  CHECK(multiplicative_order(q("-1")) == 2);
  CHECK(multiplicative_order(q("2")) == 0);
}

TEST_CASE("rational arithmetic matches the oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> num(-40, 40), den(1, 40);
  for (int it = 0; it < 500; ++it) {
    Frac a(num(rng), den(rng)), b(num(rng), den(rng));
    Scalar sa = Scalar::parse(Q, a.str()), sb = Scalar::parse(Q, b.str());
    CHECK((sa + sb).to_string() == add(a, b).str());
    CHECK((sa * sb).to_string() == mul(a, b).str());
    CHECK((sa - sb).to_string() == add(a, Frac(-b.n, b.d)).str());
    if (b.n != 0) CHECK((sa / sb).to_string() == mul(a, Frac(b.d, b.n)).str());
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(11);
  for (const FieldSpec& F : {Q, FieldSpec::prime(7), FieldSpec::prime(1000003)}) {
    std::uniform_int_distribution<long> d(-50, 50);
    auto draw = [&] {
      if (F.is_prime_field()) return Scalar(F, d(rng));
      return Scalar::fraction(F, d(rng), 1 + (d(rng) + 50) % 9);
    };
    for (int it = 0; it < 200; ++it) {
      Scalar a = draw(), b = draw(), c = draw();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar::zero(F));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("pow exponent law") {
  for (const FieldSpec& F : {Q, FieldSpec::prime(11)}) {
    for (long base : {-3L, -1L, 2L, 5L}) {
      Scalar a(F, base);
      if (a.is_zero()) continue;
      for (int n = -8; n <= 8; ++n) {
        for (int m = -8; m <= 8; ++m) CHECK(pow(a, n) * pow(a, m) == pow(a, n + m));
      }
    }
  }
  CHECK(pow(q("-1"), INT64_MIN).is_one());
}
