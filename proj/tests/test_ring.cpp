#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "skein/ring.hpp"
#include "skein/rtfunctor.hpp"

using namespace skein;

namespace {

Laurent random_laurent(std::mt19937_64& rng) {
  Laurent r;
  int terms = static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i) {
    long c = static_cast<long>(rng() % 11) - 5;
    int e = static_cast<int>(rng() % 13) - 6;
    r += Laurent::mono(c, e);
  }
  return r;
}

}  // namespace

TEST_CASE("scalars agree with the closed forms") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const auto& sc = scalars(n);
    CHECK(oracle::same(sc.t, oracle::t(n)));
    CHECK(oracle::same(sc.a, oracle::a(n)));
    CHECK(oracle::same(sc.t_half_pow_n, oracle::t_half_pow_n(n)));
    oracle::Poly prod = oracle::Poly::one();
    for (int i = 1; i <= n; ++i) {
      CHECK(oracle::same(sc.c[i], oracle::c(n, i)));
      CHECK(oracle::same(sc.c_inv[i], oracle::c_inv(n, i)));
      CHECK(oracle::same(sc.g[i], oracle::g(n, i)));
      CHECK(oracle::same(sc.c[i] * sc.c[n + 1 - i], oracle::t(n)));
      prod = prod * oracle::c(n, i);
    }
    CHECK(prod == oracle::t_half_pow_n(n));
    CHECK(oracle::same(quantum_int(n, n), oracle::qint(n)));
  }
}

TEST_CASE("n = 2 scalar values") {
  const auto& sc = scalars(2);
  CHECK(sc.c[1] == Laurent::mono(-1, 5));
  CHECK(sc.c[2] == Laurent::v(1));
  CHECK(sc.t == Laurent::mono(-1, 6));
  CHECK(sc.a == Laurent::v(-5));
}

TEST_CASE("X squared is t times the identity") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    oracle::Mat x(n, n);
    for (int i = 1; i <= n; ++i) x.at(i - 1, n - i) = oracle::c(n, i);
    CHECK(matches(x_matrix(n), x));
    CHECK(oracle::mul(x, x) == oracle::scale(oracle::Mat::id(n), oracle::t(n)));
  }
}

TEST_CASE("Laurent ring axioms on seeded samples") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Laurent());
    CHECK(oracle::from(a * b) == oracle::from(a) * oracle::from(b));
    CHECK(Laurent::parse(a.str()) == a);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    if (!b.is_zero()) {
      auto d = (a * b).div_exact(b);
      REQUIRE(d.has_value());
      CHECK(*d == a);
    }
  }
}

TEST_CASE("Laurent printing") {
  CHECK(Laurent().str() == "0");
  CHECK((Laurent::mono(-1, 4) + Laurent::mono(-1, -4)).str() == "-1*v^4 + -1*v^-4");
  CHECK(Laurent::v(2).str() == "v^2");
  CHECK_THROWS_AS(Laurent::parse("v^"), ParseError);
}

TEST_CASE("big coefficients do not overflow") {
  Laurent x = Laurent(1) + Laurent::v(1);
  Laurent p = x.pow(80);
  CHECK(p.coeff(40).get_str() == "107507208733336176461620");
}
