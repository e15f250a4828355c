#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hida/expansion.hpp"
#include "hida/linalg.hpp"
#include "hida/operators.hpp"
#include "hida/symbolcalc.hpp"

namespace hida {

/// Sign pattern of the inner terms of the coboundary. `dropped` replaces
/// (-1)^i by +1 and exists only to check that the suites catch it.
enum class CoboundarySign { alternating, dropped };

/// An r-cochain on the truncated Wick algebra. Arity 0 cochains are algebra
/// elements (a table with the single empty tuple).
class Cochain {
 public:
  explicit Cochain(BasisActionTable table) : table_(std::move(table)) {}
  static Cochain from_kernels(const KernelFamily& k, const TruncationCaps& caps);
  static Cochain element(const FockVector& phi, const TruncationCaps& caps);

  std::size_t arity() const { return table_.arity(); }
  const TruncationCaps& caps() const { return table_.caps(); }
  const BasisActionTable& table() const { return table_; }
  KernelFamily kernels() const { return extract_kernels(table_); }

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  BasisActionTable table_;
};

/// Table-level coboundary
///   dX(p1..p_{r+1}) = :p1 X(p2..): + sum_i (-1)^i X(.., :p_i p_{i+1}:, ..) + (-1)^{r+1} :X(p1..p_r) p_{r+1}:
/// evaluated on every window tuple. Merging two arguments keeps the total
/// degree, so every value it needs is in the table; Wick products by basis
/// vectors only raise degree, so truncating afterwards is exact.
Cochain coboundary(const Cochain& x, CoboundarySign sign = CoboundarySign::alternating);

/// The same coboundary on the full symbol Xi^(xi_1..xi_r, eta):
///   exp<xi_1,eta> Xi^(xi_2..) + sum_i (-1)^i Xi^(.., xi_i + xi_{i+1}, ..) + (-1)^{r+1} Xi^(..) exp<xi_{r+1},eta>.
SymbolPolynomial symbol_coboundary(const SymbolPolynomial& symbol,
                                   CoboundarySign sign = CoboundarySign::alternating);

/// Coboundary of reduced symbols (the polydifferential complex); the
/// exponential factors cancel:
///   Psi(xi_2..) + sum_i (-1)^i Psi(.., xi_i + xi_{i+1}, ..) + (-1)^{r+1} Psi(xi_1..xi_r).
SymbolPolynomial reduced_coboundary(const SymbolPolynomial& psi,
                                    CoboundarySign sign = CoboundarySign::alternating);

/// Coboundary of a kernel family computed through reduced_coboundary.
KernelFamily kernel_coboundary(const KernelFamily& k, const TruncationCaps& caps,
                               CoboundarySign sign = CoboundarySign::alternating);

struct PolydiffDegree {
  std::uint32_t l = 0;
  std::uint32_t m = 0;
  auto operator<=>(const PolydiffDegree&) const = default;
};

/// (l, m) when every reliable extracted entry has |I| = l and sum |J_j| = m;
/// nullopt for mixed strata and for the zero cochain.
std::optional<PolydiffDegree> polydiff_degree(const Cochain& x);

/// Generators a*_I a_{J_1..J_r} of arity r with |I| = l, sum |J_j| = m and
/// modes < max_mode, in lexicographic order on (I, J_1, .., J_r).
std::vector<KernelKey> stratum_basis(std::size_t r, std::uint32_t l, std::uint32_t m, std::uint32_t max_mode);

/// How the coboundary of a stratum generator is computed.
enum class ComplexRoute {
  table,            // reconstruct, table-level coboundary, extract_kernels
  polydifferential  // reduced_coboundary on the kernel polynomial
};

/// Matrix of d^r on the (l, m) stratum, columns indexed by
/// stratum_basis(r, l, m, K), rows by stratum_basis(r + 1, l, m, K).
/// Requires caps.max_degree >= l + m + r + 1 (TruncationError otherwise).
/// Throws InternalError if the image leaves the stratum.
RationalMatrix coboundary_matrix(std::size_t r, std::uint32_t l, std::uint32_t m, const TruncationCaps& caps,
                                 ComplexRoute route = ComplexRoute::table,
                                 CoboundarySign sign = CoboundarySign::alternating);

struct CohomologyDims {
  std::size_t dim_ker = 0;
  std::size_t dim_im_prev = 0;
  std::size_t dim_H = 0;
  /// Basis of ker d^r, as kernel families.
  std::vector<KernelFamily> basis_cocycles;
};

/// dim Ker d^r, dim Im d^{r-1} and their difference on the (l, m) stratum.
/// Throws InternalError when d^r d^{r-1} != 0.
CohomologyDims cohomology_dims(std::size_t r, std::uint32_t l, std::uint32_t m, const TruncationCaps& caps,
                               ComplexRoute route = ComplexRoute::table);

/// Same dimensions for the whole extensional complex of tables with these
/// caps, in raw table coordinates (no kernel extraction involved).
CohomologyDims table_complex_dims(std::size_t r, const TruncationCaps& caps);

}  // namespace hida
