#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hida/fock.hpp"
#include "hida/operators.hpp"

namespace hida {

/// Monomial prod_j (x^{(j)})^{xi[j]} * y^{eta} in the formal mode coefficients
/// of the r argument slots (x) and of the output slot (y).
struct Monomial {
  std::vector<MultiIndex> xi;
  MultiIndex eta;

  std::uint32_t xi_degree() const;
  auto operator<=>(const Monomial&) const = default;
};

/// Exact polynomial symbol of an r-linear operator, truncated to the region
/// {modes < max_mode, total x-degree <= max_degree, y-degree <= max_degree}.
/// The region complement is an ideal, so truncated arithmetic is a ring.
class SymbolPolynomial {
 public:
  using Terms = std::map<Monomial, Scalar>;

  SymbolPolynomial(std::size_t arity, TruncationCaps caps) : arity_(arity), caps_(caps) {}
  static SymbolPolynomial one(std::size_t arity, const TruncationCaps& caps);

  std::size_t arity() const { return arity_; }
  const TruncationCaps& caps() const { return caps_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;

  bool in_region(const Monomial& m) const;
  /// Adds c * m. Throws TruncationError when m is outside the region.
  void add(const Monomial& m, const Scalar& c);
  /// Adds c * m, silently dropping monomials outside the region.
  void add_truncated(const Monomial& m, const Scalar& c);

  /// Value at rational points: xis[j] substitutes x^{(j)}, eta substitutes y.
  Scalar evaluate(std::span<const TestVector> xis, const TestVector& eta) const;

  SymbolPolynomial& operator+=(const SymbolPolynomial& o);
  SymbolPolynomial& operator-=(const SymbolPolynomial& o);
  SymbolPolynomial& operator*=(const Scalar& c);
  friend SymbolPolynomial operator+(SymbolPolynomial a, const SymbolPolynomial& b) { return a += b; }
  friend SymbolPolynomial operator-(SymbolPolynomial a, const SymbolPolynomial& b) { return a -= b; }
  /// Truncated product.
  friend SymbolPolynomial operator*(const SymbolPolynomial& a, const SymbolPolynomial& b);
  friend bool operator==(const SymbolPolynomial&, const SymbolPolynomial&) = default;

 private:
  void check_compatible(const SymbolPolynomial& o) const;

  std::size_t arity_;
  TruncationCaps caps_;
  Terms terms_;
};

/// P * exp(sign * <x^{(slot)}, y>), truncated to P's region.
SymbolPolynomial multiply_by_exp(const SymbolPolynomial& p, std::size_t slot, const Scalar& sign);

/// prod_j exp(sign * <x^{(j)}, y>) over every slot, truncated.
SymbolPolynomial exp_pairing(std::size_t arity, const TruncationCaps& caps, const Scalar& sign);

/// <T(phi_{xi_1},...,phi_{xi_r}), phi_eta> with every coherent vector truncated
/// at caps.max_degree. Throws ArityError on a wrong number of arguments and
/// TruncationError when some xi uses a mode outside the caps.
Scalar symbol_numeric(const BasisActionTable& t, std::span<const TestVector> xis, const TestVector& eta);

/// Exact symbol: sum over rows (A_1..A_r) -> sum_B lambda_B e_B of
/// prod_j x^{(j)A_j} / A_j! * lambda_B y^B.
SymbolPolynomial symbol_poly(const BasisActionTable& t);

/// Inverse of symbol_poly on the region.
BasisActionTable table_from_symbol(const SymbolPolynomial& p);

/// P * prod_j exp(-<x^{(j)}, y>). Exact on the whole region: each coefficient
/// only depends on coefficients of P of lower or equal degrees.
SymbolPolynomial reduced_symbol(const SymbolPolynomial& p);

/// Reduced symbol of a kernel family: sum lambda_{I,J} prod_j x^{(j)J_j} y^I.
/// Throws TruncationError when an entry falls outside the region of `caps`.
SymbolPolynomial kernel_polynomial(const KernelFamily& k, const TruncationCaps& caps);

}  // namespace hida
