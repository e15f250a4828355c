#include <doctest.h>

#include "hida/error.hpp"
#include "hida/random.hpp"
#include "hida/symbolcalc.hpp"

using hida::BasisActionTable;
using hida::FockVector;
using hida::KernelFamily;
using hida::KernelKey;
using hida::Monomial;
using hida::MultiIndex;
using hida::Scalar;
using hida::SymbolPolynomial;
using hida::TestVector;
using hida::TruncationCaps;

namespace {

KernelFamily single(KernelKey key, Scalar c = Scalar(1)) {
  KernelFamily k(key.annihilation.size());
  k.add(key, c);
  return k;
}

KernelFamily identity_family() { return single(KernelKey{MultiIndex{}, {MultiIndex{}}}); }

Scalar exp_series(const Scalar& s, unsigned n) {
  Scalar sum;
  mpz_class fact = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    sum += hida::pow(s, k) / Scalar(mpq_class(fact));
  }
  return sum;
}

Monomial mono(MultiIndex x, MultiIndex y) { return Monomial{{std::move(x)}, std::move(y)}; }

}  // namespace

TEST_CASE("symbol_numeric examples") {
  const TruncationCaps caps{2, 3};
  const auto xi = TestVector::unit(1), eta = TestVector::unit(0);
  const TestVector xis[] = {xi};
  CHECK(hida::symbol_numeric(BasisActionTable(1, caps), xis, eta) == Scalar(0));
  CHECK(hida::symbol_numeric(hida::table_from_kernel(identity_family(), caps), xis, eta) == Scalar(1));
  const auto creation0_annihilation1 = single(KernelKey{MultiIndex{{0, 1}}, {MultiIndex{{1, 1}}}});
  CHECK(hida::symbol_numeric(hida::table_from_kernel(creation0_annihilation1, caps), xis, eta) == Scalar(1));
  const TestVector outside[] = {TestVector::unit(2)};
  CHECK_THROWS_AS(hida::symbol_numeric(BasisActionTable(1, caps), outside, eta), hida::TruncationError);
  CHECK_THROWS_AS(hida::symbol_numeric(BasisActionTable(2, caps), xis, eta), hida::ArityError);
}

TEST_CASE("symbol_poly examples") {
  CHECK(hida::symbol_poly(BasisActionTable(1, TruncationCaps{2, 2})).is_zero());

  const TruncationCaps caps{1, 2};
  SymbolPolynomial expected(1, caps);
  expected.add(mono({}, {}), Scalar(1));
  expected.add(mono({{0, 1}}, {{0, 1}}), Scalar(1));
  expected.add(mono({{0, 2}}, {{0, 2}}), Scalar(mpq_class(1, 2)));
  CHECK(hida::symbol_poly(hida::table_from_kernel(identity_family(), caps)) == expected);

  // number operator: sum_r r x^r y^r / r! = xy * exp(xy) cut one degree lower
  const TruncationCaps caps4{1, 4};
  const auto number = single(KernelKey{MultiIndex{{0, 1}}, {MultiIndex{{0, 1}}}});
  SymbolPolynomial xy(1, caps4), exp3(1, caps4);
  xy.add(mono({{0, 1}}, {{0, 1}}), Scalar(1));
  mpz_class fact = 1;
  for (unsigned s = 0; s <= 3; ++s) {
    if (s > 0) fact *= s;
    exp3.add(mono(MultiIndex::single(0, s), MultiIndex::single(0, s)), Scalar(mpq_class(1) / mpq_class(fact)));
  }
  CHECK(hida::symbol_poly(hida::table_from_kernel(number, caps4)) == xy * exp3);
}

TEST_CASE("reduced_symbol examples") {
  const TruncationCaps caps{2, 3};
  CHECK(hida::reduced_symbol(SymbolPolynomial(1, caps)).is_zero());
  CHECK(hida::reduced_symbol(hida::symbol_poly(hida::table_from_kernel(identity_family(), caps))) ==
        SymbolPolynomial::one(1, caps));
  const auto k = single(KernelKey{MultiIndex{{0, 1}}, {MultiIndex{{1, 1}}}});
  SymbolPolynomial expected(1, caps);
  expected.add(mono({{1, 1}}, {{0, 1}}), Scalar(1));
  CHECK(hida::reduced_symbol(hida::symbol_poly(hida::table_from_kernel(k, caps))) == expected);
  CHECK(hida::kernel_polynomial(k, caps) == expected);
}

TEST_CASE("exp_pairing evaluates to the truncated exponential") {
  hida::Generator g(31);
  for (int trial = 0; trial < 20; ++trial) {
    const TruncationCaps caps{3, g.uniform(0, 4)};
    const TestVector xis[] = {g.test_vector(3)};
    const auto eta = g.test_vector(3);
    CHECK(hida::exp_pairing(1, caps, Scalar(1)).evaluate(xis, eta) == exp_series(hida::inner(xis[0], eta), caps.max_degree));
    CHECK(hida::exp_pairing(1, caps, Scalar(-1)).evaluate(xis, eta) ==
          exp_series(Scalar(-1) * hida::inner(xis[0], eta), caps.max_degree));
  }
}

TEST_CASE("symbol_poly agrees with the numeric symbol") {
  hida::Generator g(37);
  const TruncationCaps caps{3, 3};
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = g.uniform(1, 2);
    const auto t = g.table(r, caps, 4);
    std::vector<TestVector> xis;
    for (std::size_t s = 0; s < r; ++s) xis.push_back(g.test_vector(3));
    const auto eta = g.test_vector(5);
    CHECK(hida::symbol_poly(t).evaluate(xis, eta) == hida::symbol_numeric(t, xis, eta));
  }
}

TEST_CASE("symbol and table determine each other") {
  hida::Generator g(41);
  for (int trial = 0; trial < 20; ++trial) {
    const TruncationCaps caps{g.uniform(1, 3), g.uniform(0, 3)};
    const auto t = g.table(g.uniform(1, 2), caps, 4);
    CHECK(hida::table_from_symbol(hida::symbol_poly(t)) == t);
  }
}

TEST_CASE("multiplying the reduced symbol by the exponentials restores the symbol") {
  hida::Generator g(43);
  const TruncationCaps caps{2, 3};
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = g.uniform(1, 2);
    const auto symbol = hida::symbol_poly(g.table(r, caps, 4));
    auto back = hida::reduced_symbol(symbol);
    for (std::size_t s = 0; s < r; ++s) back = hida::multiply_by_exp(back, s, Scalar(1));
    CHECK(back == symbol);
  }
}

TEST_CASE("kernel tables have the kernel polynomial as reduced symbol") {
  hida::Generator g(47);
  const TruncationCaps caps{3, 3};
  for (int trial = 0; trial < 20; ++trial) {
    const auto k = g.kernel_family(g.uniform(1, 2), 3, 3, 3);
    CHECK(hida::reduced_symbol(hida::symbol_poly(hida::table_from_kernel(k, caps))) == hida::kernel_polynomial(k, caps));
  }
}

TEST_CASE("symbol of Wick multiplication factorizes") {
  for (unsigned d = 0; d <= 3; ++d) {
    const TruncationCaps caps{2, d};
    const auto wick = hida::symbol_poly(hida::table_from_kernel(KernelFamily::wick_multiplication(2), caps));
    CHECK(wick == hida::exp_pairing(2, caps, Scalar(1)));
    CHECK(hida::reduced_symbol(wick) == SymbolPolynomial::one(2, caps));
  }
}

TEST_CASE("polynomial ring axioms") {
  hida::Generator g(53);
  const TruncationCaps caps{2, 3};
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = hida::symbol_poly(g.table(1, caps, 2));
    const auto q = hida::kernel_polynomial(g.kernel_family(1, 2, 3, 3), caps);
    const auto s = hida::exp_pairing(1, caps, Scalar(g.rational()));
    CHECK(p * q == q * p);
    CHECK((p * q) * s == p * (q * s));
    CHECK(p * (q + s) == p * q + p * s);
    CHECK(p * SymbolPolynomial::one(1, caps) == p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("exp and inverse exp cancel") {
  const TruncationCaps caps{2, 4};
  CHECK(hida::exp_pairing(2, caps, Scalar(1)) * hida::exp_pairing(2, caps, Scalar(-1)) == SymbolPolynomial::one(2, caps));
}

TEST_CASE("region checks") {
  SymbolPolynomial p(1, TruncationCaps{2, 2});
  CHECK_THROWS_AS(p.add(mono({{0, 3}}, {}), Scalar(1)), hida::TruncationError);
  CHECK_THROWS_AS(p.add(mono({}, {{2, 1}}), Scalar(1)), hida::TruncationError);
  p.add_truncated(mono({{0, 3}}, {}), Scalar(1));
  CHECK(p.is_zero());
  CHECK_THROWS_AS(p += SymbolPolynomial(1, TruncationCaps{2, 3}), hida::TruncationError);
}
