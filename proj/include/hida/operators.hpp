#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hida/fock.hpp"

namespace hida {

/// Constant c'(r) in a_i e_A = c'(r_i) e_{A_i}. The standard choice is
/// c'(r) = r; `unit` (c'(r) = 1) only exists to check that the CCR and
/// adjointness suites notice a wrong constant.
enum class AnnihilationConstant { multiplicity, unit };

/// a_i: e_A -> r_i e_{A_i}, zero when mode i is absent.
FockVector apply_annihilation(Mode i, const FockVector& x,
                              AnnihilationConstant c = AnnihilationConstant::multiplicity);

/// a*_i: e_A -> e_{A^i}.
FockVector apply_creation(Mode i, const FockVector& x);

/// a_J = prod over (j, r) in J of a_j^r.
FockVector apply_annihilations(const MultiIndex& j, const FockVector& x,
                               AnnihilationConstant c = AnnihilationConstant::multiplicity);

/// a*_I = prod over (i, r) in I of (a*_i)^r.
FockVector apply_creations(const MultiIndex& i, const FockVector& x);

/// Label of one kernel monomial a*_I (a_{J_1} phi_1 ... a_{J_r} phi_r).
struct KernelKey {
  MultiIndex creation;                  // I
  std::vector<MultiIndex> annihilation;  // J_1 ... J_r

  std::uint32_t l() const { return degree(creation); }
  std::uint32_t m() const;
  auto operator<=>(const KernelKey&) const = default;
};

/// Fock-expansion data {K_{l,M}} of an r-linear operator, stored flat and
/// grouped into (l, M) blocks on demand. Arity 0 is allowed and describes an
/// algebra element (sum of lambda_I e_I).
class KernelFamily {
 public:
  struct BlockKey {
    std::uint32_t l = 0;
    std::vector<std::uint32_t> M;
    std::uint32_t m() const;
    auto operator<=>(const BlockKey&) const = default;
  };
  using Entries = std::map<KernelKey, Scalar>;

  explicit KernelFamily(std::size_t arity = 1) : arity_(arity) {}

  /// Family of the identity r-fold Wick multiplication (phi_1,...,phi_r) -> :phi_1...phi_r:.
  static KernelFamily wick_multiplication(std::size_t arity);

  std::size_t arity() const { return arity_; }
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Throws ArityError when key.annihilation has the wrong length.
  void add(const KernelKey& key, const Scalar& c);

  std::map<BlockKey, Entries> blocks() const;
  static BlockKey block_of(const KernelKey& key);

  KernelFamily& operator+=(const KernelFamily& o);
  KernelFamily& operator*=(const Scalar& c);
  friend KernelFamily operator+(KernelFamily a, const KernelFamily& b) { return a += b; }
  friend bool operator==(const KernelFamily&, const KernelFamily&) = default;

 private:
  std::size_t arity_;
  Entries entries_;
};

/// sum over entries of lambda_{I,J} a*_I :(a_{J_1} args_1)...(a_{J_r} args_r):.
/// Throws ArityError when args.size() != K.arity().
FockVector apply_kernel(const KernelFamily& k, std::span<const FockVector> args,
                        AnnihilationConstant c = AnnihilationConstant::multiplicity);

using BasisTuple = std::vector<MultiIndex>;

/// An r-tuple lies in the window of `caps` when every mode is < max_mode and
/// the degrees sum to at most max_degree.
bool in_window(const BasisTuple& tuple, const TruncationCaps& caps);

/// Every r-tuple in the window, in lexicographic order.
std::vector<BasisTuple> window_tuples(std::size_t arity, const TruncationCaps& caps);

/// Extensional r-linear operator: the image of every basis tuple in the window,
/// truncated to the caps. Missing rows are zero.
class BasisActionTable {
 public:
  using Rows = std::map<BasisTuple, FockVector>;

  BasisActionTable(std::size_t arity, TruncationCaps caps) : arity_(arity), caps_(caps) {}

  std::size_t arity() const { return arity_; }
  const TruncationCaps& caps() const { return caps_; }
  const Rows& rows() const { return rows_; }

  /// Image of a basis tuple (zero when absent). Throws TruncationError off-window.
  const FockVector& at(const BasisTuple& tuple) const;

  /// Stores the image of a basis tuple. Throws ArityError / TruncationError when
  /// the tuple is off-window or the value leaves the caps.
  void set(const BasisTuple& tuple, FockVector value);

  BasisActionTable& operator+=(const BasisActionTable& o);
  BasisActionTable& operator-=(const BasisActionTable& o);
  BasisActionTable& operator*=(const Scalar& c);
  friend BasisActionTable operator+(BasisActionTable a, const BasisActionTable& b) { return a += b; }
  friend BasisActionTable operator-(BasisActionTable a, const BasisActionTable& b) { return a -= b; }
  friend bool operator==(const BasisActionTable&, const BasisActionTable&) = default;

 private:
  void check_compatible(const BasisActionTable& o) const;

  std::size_t arity_;
  TruncationCaps caps_;
  Rows rows_;
};

/// Applies K to every window tuple and truncates the images.
BasisActionTable table_from_kernel(const KernelFamily& k, const TruncationCaps& caps,
                                   AnnihilationConstant c = AnnihilationConstant::multiplicity);

/// Multilinear extension of the stored action over the window: input tuples
/// whose degrees sum past max_degree are projected away. Every argument must
/// be supported inside the caps (TruncationError otherwise).
FockVector apply_table(const BasisActionTable& t, std::span<const FockVector> args);

}  // namespace hida
