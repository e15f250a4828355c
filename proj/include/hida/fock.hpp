#pragma once

#include <cstdint>
#include <map>

#include "hida/multiindex.hpp"
#include "hida/scalar.hpp"

namespace hida {

/// Finite window replacing the Hida test space: modes < max_mode and
/// degree <= max_degree.
struct TruncationCaps {
  std::uint32_t max_mode = 0;
  std::uint32_t max_degree = 0;

  bool contains(const MultiIndex& a) const;
  auto operator<=>(const TruncationCaps&) const = default;
};

/// Finitely supported element sum_A lambda_A e_A. Zero coefficients are never stored.
class FockVector {
 public:
  using Terms = std::map<MultiIndex, Scalar>;

  FockVector() = default;
  static FockVector vacuum();
  static FockVector basis(const MultiIndex& a, const Scalar& c = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const MultiIndex& a) const;
  /// Largest degree in the support; 0 for the zero vector.
  std::uint32_t max_degree() const;

  void add(const MultiIndex& a, const Scalar& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Scalar& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& c, FockVector a) { return a *= c; }
  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  Terms terms_;
};

/// Degree-one test vector xi = sum_i lambda_i e_i.
class TestVector {
 public:
  using Coeffs = std::map<Mode, Scalar>;

  TestVector() = default;
  static TestVector unit(Mode i, const Scalar& c = Scalar(1));

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coefficient(Mode i) const;
  void add(Mode i, const Scalar& c);

  TestVector& operator+=(const TestVector& o);
  friend TestVector operator+(TestVector a, const TestVector& b) { return a += b; }
  friend bool operator==(const TestVector&, const TestVector&) = default;

  /// xi^A = prod lambda_{i_j}^{r_j}; zero when A touches a mode outside the support.
  Scalar power(const MultiIndex& a) const;
  /// Embedding sum_i lambda_i e_{(i,1)} into the Fock space.
  FockVector as_fock() const;

 private:
  Coeffs coeffs_;
};

/// Bilinear <xi, eta> = sum_i xi_i eta_i.
Scalar inner(const TestVector& xi, const TestVector& eta);

/// Normalized Wick product: bilinear extension of e_A . e_B = e_{A u B}.
FockVector wick_product(const FockVector& x, const FockVector& y);

/// Bilinear pairing sum_A x_A y_A A!.
Scalar pairing(const FockVector& x, const FockVector& y);

/// ||x||^2_{k,C} = sum_A |x_A|^2 C^{2|A|} ||A||^{2k} |A|!.
mpq_class norm_squared(const FockVector& x, std::uint32_t k, const mpq_class& c);

/// Coherent vector truncated at max_degree: coefficient xi^A / A! on e_A.
FockVector coherent(const TestVector& xi, std::uint32_t max_degree);

/// Wick power :xi:^n = sum_{|A|=n} n!/A! xi^A e_A.
FockVector wick_power(const TestVector& xi, std::uint32_t n);

/// S-transform <x, phi_eta>; equals sum_A x_A eta^A.
Scalar s_transform(const FockVector& x, const TestVector& eta);

/// Drops every term outside the caps.
FockVector truncate(const FockVector& x, const TruncationCaps& caps);

/// Drops every term of degree above max_degree.
FockVector truncate_degree(const FockVector& x, std::uint32_t max_degree);

}  // namespace hida
