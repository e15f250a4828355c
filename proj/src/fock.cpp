#include "hida/fock.hpp"

#include <algorithm>
#include <vector>

namespace hida {

bool TruncationCaps::contains(const MultiIndex& a) const {
  if (degree(a) > max_degree) return false;
  const auto top = a.max_mode();
  return !top || *top < max_mode;
}

FockVector FockVector::vacuum() { return basis(MultiIndex{}); }

FockVector FockVector::basis(const MultiIndex& a, const Scalar& c) {
  FockVector v;
  v.add(a, c);
  return v;
}

Scalar FockVector::coefficient(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Scalar() : it->second;
}

std::uint32_t FockVector::max_degree() const {
  std::uint32_t d = 0;
  for (const auto& [a, c] : terms_) d = std::max(d, degree(a));
  return d;
}

void FockVector::add(const MultiIndex& a, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [a, c] : o.terms_) add(a, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [a, c] : o.terms_) add(a, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

TestVector TestVector::unit(Mode i, const Scalar& c) {
  TestVector v;
  v.add(i, c);
  return v;
}

Scalar TestVector::coefficient(Mode i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void TestVector::add(Mode i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

TestVector& TestVector::operator+=(const TestVector& o) {
  for (const auto& [i, c] : o.coeffs_) add(i, c);
  return *this;
}

Scalar TestVector::power(const MultiIndex& a) const {
  Scalar out(1);
  for (const auto& p : a.pairs()) {
    auto it = coeffs_.find(p.mode);
    if (it == coeffs_.end()) return Scalar();
    out *= hida::pow(it->second, p.count);
  }
  return out;
}

FockVector TestVector::as_fock() const {
  FockVector v;
  for (const auto& [i, c] : coeffs_) v.add(MultiIndex::single(i), c);
  return v;
}

Scalar inner(const TestVector& xi, const TestVector& eta) {
  Scalar s;
  for (const auto& [i, c] : xi.coeffs()) s += c * eta.coefficient(i);
  return s;
}

FockVector wick_product(const FockVector& x, const FockVector& y) {
  FockVector out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) out.add(concat(a, b), ca * cb);
  }
  return out;
}

Scalar pairing(const FockVector& x, const FockVector& y) {
  Scalar s;
  const auto& small = x.terms().size() <= y.terms().size() ? x : y;
  const auto& large = &small == &x ? y : x;
  for (const auto& [a, c] : small.terms()) {
    auto it = large.terms().find(a);
    if (it == large.terms().end()) continue;
    s += c * it->second * Scalar(mpq_class(pairing_weight(a)));
  }
  return s;
}

mpq_class norm_squared(const FockVector& x, std::uint32_t k, const mpq_class& c) {
  mpq_class total = 0;
  const mpq_class c2 = c * c;
  for (const auto& [a, v] : x.terms()) {
    const std::uint32_t n = degree(a);
    mpq_class cpow;
    mpz_pow_ui(cpow.get_num_mpz_t(), c2.get_num_mpz_t(), n);
    mpz_pow_ui(cpow.get_den_mpz_t(), c2.get_den_mpz_t(), n);
    mpz_class w;
    mpz_pow_ui(w.get_mpz_t(), hida_weight(a).get_mpz_t(), 2UL * k);
    mpq_class term = v.abs_squared() * cpow;
    term *= mpq_class(w * factorial_degree(a));
    total += term;
  }
  return total;
}

namespace {

std::vector<Mode> support_of(const TestVector& xi) {
  std::vector<Mode> s;
  for (const auto& [i, c] : xi.coeffs()) s.push_back(i);
  return s;
}

}  // namespace

FockVector coherent(const TestVector& xi, std::uint32_t max_degree) {
  FockVector out;
  const auto support = support_of(xi);
  for (const auto& a : multi_indices_on(support, max_degree)) {
    out.add(a, xi.power(a) / Scalar(mpq_class(pairing_weight(a))));
  }
  return out;
}

FockVector wick_power(const TestVector& xi, std::uint32_t n) {
  FockVector out;
  const auto support = support_of(xi);
  mpz_class nfact;
  mpz_fac_ui(nfact.get_mpz_t(), n);
  for (const auto& a : multi_indices_on(support, n)) {
    if (degree(a) != n) continue;
    out.add(a, xi.power(a) * Scalar(mpq_class(nfact, pairing_weight(a))));
  }
  return out;
}

Scalar s_transform(const FockVector& x, const TestVector& eta) {
  return pairing(x, coherent(eta, x.max_degree()));
}

FockVector truncate(const FockVector& x, const TruncationCaps& caps) {
  FockVector out;
  for (const auto& [a, c] : x.terms()) {
    if (caps.contains(a)) out.add(a, c);
  }
  return out;
}

FockVector truncate_degree(const FockVector& x, std::uint32_t max_degree) {
  FockVector out;
  for (const auto& [a, c] : x.terms()) {
    if (degree(a) <= max_degree) out.add(a, c);
  }
  return out;
}

}  // namespace hida
