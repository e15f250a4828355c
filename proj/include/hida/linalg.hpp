#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hida/scalar.hpp"

namespace hida {

/// Sparse exact matrix over the Gaussian rationals.
class RationalMatrix {
 public:
  using Row = std::map<std::size_t, Scalar>;

  RationalMatrix(std::size_t rows = 0, std::size_t cols = 0);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t i) const { return rows_.at(i); }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void add(std::size_t i, std::size_t j, const Scalar& v);

  bool is_zero() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::vector<Row> rows_;
  std::size_t cols_;
};

struct RankNullspace {
  std::size_t rank = 0;
  /// Basis of {v : M v = 0}, one vector per free column, each of length cols().
  std::vector<std::vector<Scalar>> nullspace;
};

/// Exact Gauss-Jordan elimination.
RankNullspace rank_nullspace(const RationalMatrix& m);

}  // namespace hida
