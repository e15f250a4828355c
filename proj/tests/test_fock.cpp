#include <doctest.h>

#include "hida/fock.hpp"
#include "hida/random.hpp"

using hida::FockVector;
using hida::MultiIndex;
using hida::Scalar;
using hida::TestVector;

namespace {

FockVector e(MultiIndex a, Scalar c = Scalar(1)) { return FockVector::basis(a, c); }

Scalar exp_series(const Scalar& s, unsigned n) {
  Scalar sum, term(1);
  mpz_class fact = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    sum += hida::pow(s, k) / Scalar(mpq_class(fact));
  }
  return sum;
}

}  // namespace

TEST_CASE("wick_product examples") {
  const auto v = e({{2, 1}}, Scalar(3)) + e({{0, 1}}, Scalar::parse("1/2", "1"));
  CHECK(hida::wick_product(FockVector::vacuum(), v) == v);
  CHECK(hida::wick_product(e({{1, 2}}), e({{1, 1}, {3, 1}})) == e({{1, 3}, {3, 1}}));
  const auto s = e({{0, 1}}) + e({{1, 1}});
  CHECK(hida::wick_product(s, s) == e({{0, 2}}) + e({{0, 1}, {1, 1}}, Scalar(2)) + e({{1, 2}}));
  CHECK(hida::wick_product(FockVector{}, v).is_zero());
}

TEST_CASE("pairing examples") {
  CHECK(hida::pairing(FockVector::vacuum(), FockVector::vacuum()) == Scalar(1));
  CHECK(hida::pairing(e({{0, 2}}), e({{0, 2}})) == Scalar(2));
  CHECK(hida::pairing(e({{0, 1}}), e({{1, 1}})) == Scalar(0));
  // bilinear: no conjugation
  CHECK(hida::pairing(e({}, Scalar(0, 1)), e({}, Scalar(0, 1))) == Scalar(-1));
}

TEST_CASE("norm_squared examples") {
  for (unsigned k = 0; k < 3; ++k) {
    CHECK(hida::norm_squared(FockVector::vacuum(), k, mpq_class(7, 3)) == 1);
  }
  CHECK(hida::norm_squared(e({{0, 2}, {3, 1}}), 1, 1) == 6144);
  CHECK(hida::norm_squared(e({{0, 1}}, Scalar(2)), 0, mpq_class(1, 2)) == 1);
  CHECK(hida::norm_squared(e({{0, 1}}, Scalar(0, 2)), 0, mpq_class(1, 2)) == 1);
}

TEST_CASE("norm bound needs the doubled constant") {
  // x = y = e_(0,1): |:xy:|^2 = 2 * 16^k C^4 while |x|^2 |y|^2 = 16^k C^4
  const auto x = e({{0, 1}});
  for (unsigned k = 0; k < 3; ++k) {
    const mpq_class c = 1;
    CHECK(hida::norm_squared(hida::wick_product(x, x), k, c) > hida::norm_squared(x, k, c) * hida::norm_squared(x, k, c));
    CHECK(hida::norm_squared(hida::wick_product(x, x), k, c) <=
          hida::norm_squared(x, k, 2 * c) * hida::norm_squared(x, k, 2 * c));
  }
}

TEST_CASE("coherent examples") {
  CHECK(hida::coherent(TestVector{}, 4) == FockVector::vacuum());
  CHECK(hida::coherent(TestVector::unit(0), 2) ==
        FockVector::vacuum() + e({{0, 1}}) + e({{0, 2}}, Scalar(mpq_class(1, 2))));
  const auto xi = TestVector::unit(0) + TestVector::unit(1);
  CHECK(hida::coherent(xi, 2) == FockVector::vacuum() + e({{0, 1}}) + e({{1, 1}}) +
                                     e({{0, 2}}, Scalar(mpq_class(1, 2))) + e({{0, 1}, {1, 1}}) +
                                     e({{1, 2}}, Scalar(mpq_class(1, 2))));
}

TEST_CASE("wick_power examples") {
  const auto xi = TestVector::unit(0) + TestVector::unit(1);
  CHECK(hida::wick_power(xi, 0) == FockVector::vacuum());
  CHECK(hida::wick_power(xi, 2) == e({{0, 2}}) + e({{0, 1}, {1, 1}}, Scalar(2)) + e({{1, 2}}));
  CHECK(hida::wick_power(TestVector::unit(2, Scalar(3)), 2) == e({{2, 2}}, Scalar(9)));
}

TEST_CASE("s_transform examples") {
  CHECK(hida::s_transform(FockVector::vacuum(), TestVector::unit(1, Scalar(5))) == Scalar(1));
  CHECK(hida::s_transform(e({{0, 2}}), TestVector::unit(0, Scalar(2))) == Scalar(4));
  const auto xi = TestVector::unit(0, Scalar(2)) + TestVector::unit(1, Scalar(3));
  const auto eta = TestVector::unit(0, Scalar(3)) + TestVector::unit(1, Scalar(-2));
  CHECK(hida::s_transform(hida::coherent(xi, 5), eta) == Scalar(1));
}

TEST_CASE("truncate examples") {
  const hida::TruncationCaps caps{3, 2};
  const auto x = e({{0, 2}}) + e({{2, 1}});
  CHECK(hida::truncate(x, caps) == x);
  CHECK(hida::truncate(FockVector::vacuum() + e({{0, 3}}), caps) == FockVector::vacuum());
  CHECK(hida::truncate(e({{5, 1}}), caps).is_zero());
  CHECK(hida::truncate(hida::truncate(x + e({{0, 3}}), caps), caps) == hida::truncate(x + e({{0, 3}}), caps));
}

TEST_CASE("coherent vector equals the series of Wick powers") {
  hida::Generator g(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto xi = g.test_vector(3);
    const unsigned n = g.uniform(0, 4);
    FockVector series;
    mpz_class fact = 1;
    FockVector power = FockVector::vacuum();
    for (unsigned k = 0; k <= n; ++k) {
      if (k > 0) {
        fact *= k;
        power = hida::wick_product(power, xi.as_fock());
      }
      series += Scalar(mpq_class(1, 1) / mpq_class(fact)) * power;
    }
    CHECK(hida::coherent(xi, n) == series);
    CHECK(hida::wick_power(xi, n) == power);
  }
}

TEST_CASE("exponential pairing against an independent series") {
  hida::Generator g(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto xi = g.test_vector(4), eta = g.test_vector(4);
    const unsigned n = g.uniform(0, 6);
    Scalar dot;
    for (hida::Mode i = 0; i < 4; ++i) dot += xi.coefficient(i) * eta.coefficient(i);
    CHECK(hida::pairing(hida::coherent(xi, n), hida::coherent(eta, n)) == exp_series(dot, n));
  }
}

TEST_CASE("coherent product and S-transform multiplicativity") {
  hida::Generator g(13);
  const hida::TruncationCaps caps{3, 3};
  for (int trial = 0; trial < 20; ++trial) {
    const auto xi = g.test_vector(3), eta = g.test_vector(3);
    const unsigned n = g.uniform(0, 5);
    CHECK(hida::truncate_degree(hida::wick_product(hida::coherent(xi, n), hida::coherent(eta, n)), n) ==
          hida::coherent(xi + eta, n));
    const auto x = g.fock_vector(caps, 3), y = g.fock_vector(caps, 3);
    CHECK(hida::s_transform(hida::wick_product(x, y), eta) == hida::s_transform(x, eta) * hida::s_transform(y, eta));
  }
}

TEST_CASE("norm bound with doubled constant on random pairs") {
  hida::Generator g(17);
  const hida::TruncationCaps caps{4, 3};
  const mpq_class cs[] = {mpq_class(1, 2), mpq_class(1), mpq_class(2)};
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = g.fock_vector(caps, 3), y = g.fock_vector(caps, 3);
    for (unsigned k = 0; k < 3; ++k) {
      for (const auto& c : cs) {
        CHECK(hida::norm_squared(hida::wick_product(x, y), k, c) <=
              hida::norm_squared(x, k, 2 * c) * hida::norm_squared(y, k, 2 * c));
      }
    }
  }
}

TEST_CASE("vector arithmetic drops zeros") {
  auto x = e({{0, 1}}, Scalar(2));
  x -= e({{0, 1}}, Scalar(2));
  CHECK(x.is_zero());
  CHECK(x == FockVector{});
  CHECK(hida::inner(TestVector::unit(0, Scalar(2)), TestVector::unit(0, Scalar(0, 1))) == Scalar(0, 2));
  CHECK(TestVector::unit(0, Scalar(3)).power(MultiIndex{{0, 2}}) == Scalar(9));
  CHECK(TestVector::unit(0).power(MultiIndex{{1, 1}}) == Scalar(0));
}
