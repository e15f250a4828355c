#include "hida/symbolcalc.hpp"

#include <string>

#include "hida/error.hpp"

namespace hida {

std::uint32_t Monomial::xi_degree() const {
  std::uint32_t d = 0;
  for (const auto& a : xi) d += degree(a);
  return d;
}

SymbolPolynomial SymbolPolynomial::one(std::size_t arity, const TruncationCaps& caps) {
  SymbolPolynomial p(arity, caps);
  p.add(Monomial{std::vector<MultiIndex>(arity), MultiIndex{}}, Scalar(1));
  return p;
}

Scalar SymbolPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

bool SymbolPolynomial::in_region(const Monomial& m) const {
  if (m.xi.size() != arity_) return false;
  if (m.xi_degree() > caps_.max_degree) return false;
  for (const auto& a : m.xi) {
    if (!caps_.contains(a)) return false;
  }
  return caps_.contains(m.eta);
}

void SymbolPolynomial::add(const Monomial& m, const Scalar& c) {
  if (!in_region(m)) throw TruncationError("monomial outside the symbol region");
  add_truncated(m, c);
}

void SymbolPolynomial::add_truncated(const Monomial& m, const Scalar& c) {
  if (c.is_zero() || !in_region(m)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar SymbolPolynomial::evaluate(std::span<const TestVector> xis, const TestVector& eta) const {
  if (xis.size() != arity_) {
    throw ArityError("symbol of arity " + std::to_string(arity_) + " evaluated at " +
                     std::to_string(xis.size()) + " arguments");
  }
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Scalar v = c * eta.power(m.eta);
    for (std::size_t j = 0; j < arity_ && !v.is_zero(); ++j) v *= xis[j].power(m.xi[j]);
    total += v;
  }
  return total;
}

void SymbolPolynomial::check_compatible(const SymbolPolynomial& o) const {
  if (o.arity_ != arity_) throw ArityError("combining symbols of different arity");
  if (o.caps_ != caps_) throw TruncationError("combining symbols with different caps");
}

SymbolPolynomial& SymbolPolynomial::operator+=(const SymbolPolynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_truncated(m, c);
  return *this;
}

SymbolPolynomial& SymbolPolynomial::operator-=(const SymbolPolynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_truncated(m, -c);
  return *this;
}

SymbolPolynomial& SymbolPolynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SymbolPolynomial operator*(const SymbolPolynomial& a, const SymbolPolynomial& b) {
  a.check_compatible(b);
  SymbolPolynomial out(a.arity_, a.caps_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.xi_degree() + mb.xi_degree() > a.caps_.max_degree) continue;
      if (degree(ma.eta) + degree(mb.eta) > a.caps_.max_degree) continue;
      Monomial m;
      m.xi.reserve(a.arity_);
      for (std::size_t j = 0; j < a.arity_; ++j) m.xi.push_back(concat(ma.xi[j], mb.xi[j]));
      m.eta = concat(ma.eta, mb.eta);
      out.add_truncated(m, ca * cb);
    }
  }
  return out;
}

SymbolPolynomial multiply_by_exp(const SymbolPolynomial& p, std::size_t slot, const Scalar& sign) {
  if (slot >= p.arity()) throw ArityError("exponential factor on a missing slot");
  SymbolPolynomial current = p;
  const auto& caps = p.caps();
  // one factor exp(sign * x_i y_i) per mode, each a finite sum inside the region
  for (Mode i = 0; i < caps.max_mode; ++i) {
    SymbolPolynomial next(p.arity(), caps);
    for (const auto& [m, c] : current.terms()) {
      Scalar coeff = c;
      Monomial shifted = m;
      for (std::uint32_t k = 0;; ++k) {
        if (!current.in_region(shifted)) break;
        next.add(shifted, coeff);
        coeff *= sign;
        coeff /= Scalar(k + 1);
        shifted.xi[slot] = shifted.xi[slot].incremented(i);
        shifted.eta = shifted.eta.incremented(i);
      }
    }
    current = std::move(next);
  }
  return current;
}

SymbolPolynomial exp_pairing(std::size_t arity, const TruncationCaps& caps, const Scalar& sign) {
  SymbolPolynomial p = SymbolPolynomial::one(arity, caps);
  for (std::size_t j = 0; j < arity; ++j) p = multiply_by_exp(p, j, sign);
  return p;
}

Scalar symbol_numeric(const BasisActionTable& t, std::span<const TestVector> xis, const TestVector& eta) {
  if (xis.size() != t.arity()) {
    throw ArityError("symbol of arity " + std::to_string(t.arity()) + " needs " + std::to_string(t.arity()) +
                     " xi arguments, got " + std::to_string(xis.size()));
  }
  const auto& caps = t.caps();
  std::vector<FockVector> args;
  args.reserve(xis.size());
  for (const auto& xi : xis) {
    if (!xi.coeffs().empty() && xi.coeffs().rbegin()->first >= caps.max_mode) {
      throw TruncationError("coherent argument uses a mode outside the caps");
    }
    args.push_back(coherent(xi, caps.max_degree));
  }
  return pairing(apply_table(t, args), coherent(eta, caps.max_degree));
}

SymbolPolynomial symbol_poly(const BasisActionTable& t) {
  SymbolPolynomial p(t.arity(), t.caps());
  for (const auto& [tuple, value] : t.rows()) {
    mpz_class weight = 1;
    for (const auto& a : tuple) weight *= pairing_weight(a);
    const Scalar inv_weight(mpq_class(1, weight));
    for (const auto& [b, c] : value.terms()) p.add(Monomial{tuple, b}, c * inv_weight);
  }
  return p;
}

BasisActionTable table_from_symbol(const SymbolPolynomial& p) {
  std::map<BasisTuple, FockVector> rows;
  for (const auto& [m, c] : p.terms()) {
    mpz_class weight = 1;
    for (const auto& a : m.xi) weight *= pairing_weight(a);
    rows[m.xi].add(m.eta, c * Scalar(mpq_class(weight)));
  }
  BasisActionTable t(p.arity(), p.caps());
  for (auto& [tuple, v] : rows) t.set(tuple, std::move(v));
  return t;
}

SymbolPolynomial reduced_symbol(const SymbolPolynomial& p) {
  SymbolPolynomial out = p;
  for (std::size_t j = 0; j < p.arity(); ++j) out = multiply_by_exp(out, j, Scalar(-1));
  return out;
}

SymbolPolynomial kernel_polynomial(const KernelFamily& k, const TruncationCaps& caps) {
  SymbolPolynomial p(k.arity(), caps);
  for (const auto& [key, c] : k.entries()) p.add(Monomial{key.annihilation, key.creation}, c);
  return p;
}

}  // namespace hida
