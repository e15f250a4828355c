#include "hida/linalg.hpp"

#include <limits>
#include <stdexcept>

namespace hida {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

Scalar RationalMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = rows_.at(i);
  auto it = r.find(j);
  return it == r.end() ? Scalar() : it->second;
}

void RationalMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (j >= cols_) throw std::out_of_range("matrix column out of range");
  auto& r = rows_.at(i);
  if (v.is_zero()) {
    r.erase(j);
  } else {
    r.insert_or_assign(j, v);
  }
}

void RationalMatrix::add(std::size_t i, std::size_t j, const Scalar& v) { set(i, j, at(i, j) + v); }

bool RationalMatrix::is_zero() const {
  for (const auto& r : rows_) {
    if (!r.empty()) return false;
  }
  return true;
}

std::vector<Scalar> RationalMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix columns");
  std::vector<Scalar> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& [j, c] : rows_[i]) out[i] += c * v[j];
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  RationalMatrix out(a.rows(), b.cols_);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto& target = out.rows_[i];
    for (const auto& [k, c] : a.rows_[i]) {
      for (const auto& [j, d] : b.rows_[k]) {
        auto [it, inserted] = target.try_emplace(j, c * d);
        if (!inserted) {
          it->second += c * d;
          if (it->second.is_zero()) target.erase(it);
        }
      }
    }
  }
  return out;
}

RankNullspace rank_nullspace(const RationalMatrix& m) {
  std::vector<RationalMatrix::Row> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m.row(i).empty()) rows.push_back(m.row(i));
  }
  std::vector<bool> used(rows.size(), false);
  std::vector<std::size_t> pivot_row_of_col(m.cols(), std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> pivot_rows;

  for (std::size_t col = 0; col < m.cols(); ++col) {
    // sparsest available row with a nonzero in this column
    std::size_t best = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || !rows[r].contains(col)) continue;
      if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
    }
    if (best == rows.size()) continue;

    const Scalar inv = Scalar(1) / rows[best].at(col);
    for (auto& [j, v] : rows[best]) v *= inv;

    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == best) continue;
      auto hit = rows[r].find(col);
      if (hit == rows[r].end()) continue;
      const Scalar factor = hit->second;
      for (const auto& [j, v] : rows[best]) {
        auto [it, inserted] = rows[r].try_emplace(j, -(factor * v));
        if (!inserted) {
          it->second -= factor * v;
          if (it->second.is_zero()) rows[r].erase(it);
        }
      }
    }
    used[best] = true;
    pivot_row_of_col[col] = best;
    pivot_rows.push_back(best);
  }

  RankNullspace out;
  out.rank = pivot_rows.size();
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (pivot_row_of_col[free] != std::numeric_limits<std::size_t>::max()) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t col = 0; col < m.cols(); ++col) {
      const std::size_t r = pivot_row_of_col[col];
      if (r == std::numeric_limits<std::size_t>::max()) continue;
      auto it = rows[r].find(free);
      if (it != rows[r].end()) v[col] = -it->second;
    }
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

}  // namespace hida
