#include "hida/hochschild.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "hida/error.hpp"

namespace hida {

namespace {

/// :v e_a: truncated to the caps.
FockVector shifted(const FockVector& v, const MultiIndex& a, const TruncationCaps& caps) {
  FockVector out;
  for (const auto& [b, c] : v.terms()) {
    MultiIndex ab = concat(b, a);
    if (caps.contains(ab)) out.add(ab, c);
  }
  return out;
}

Scalar inner_sign(std::size_t i, CoboundarySign sign) {
  if (sign == CoboundarySign::dropped) return Scalar(1);
  return (i % 2 == 0) ? Scalar(1) : Scalar(-1);
}

Scalar outer_sign(std::size_t r) { return ((r + 1) % 2 == 0) ? Scalar(1) : Scalar(-1); }

/// Psi(xi_2, .., xi_{r+1}): slot 0 of the result is free.
SymbolPolynomial prepend_slot(const SymbolPolynomial& p) {
  SymbolPolynomial out(p.arity() + 1, p.caps());
  for (const auto& [m, c] : p.terms()) {
    Monomial n;
    n.xi.reserve(m.xi.size() + 1);
    n.xi.emplace_back();
    n.xi.insert(n.xi.end(), m.xi.begin(), m.xi.end());
    n.eta = m.eta;
    out.add(n, c);
  }
  return out;
}

/// Psi(xi_1, .., xi_r): slot r of the result is free.
SymbolPolynomial append_slot(const SymbolPolynomial& p) {
  SymbolPolynomial out(p.arity() + 1, p.caps());
  for (const auto& [m, c] : p.terms()) {
    Monomial n = m;
    n.xi.emplace_back();
    out.add(n, c);
  }
  return out;
}

/// Psi(.., xi_i + xi_{i+1}, ..) for 1-based i: old slot i-1 is split into new
/// slots i-1 and i with binomial weights.
SymbolPolynomial merge_slots(const SymbolPolynomial& p, std::size_t i) {
  SymbolPolynomial out(p.arity() + 1, p.caps());
  for (const auto& [m, c] : p.terms()) {
    const MultiIndex& e = m.xi[i - 1];
    for (const auto& [f, g] : decompositions(e)) {
      Monomial n;
      n.xi.reserve(m.xi.size() + 1);
      n.xi.insert(n.xi.end(), m.xi.begin(), m.xi.begin() + static_cast<std::ptrdiff_t>(i - 1));
      n.xi.push_back(f);
      n.xi.push_back(g);
      n.xi.insert(n.xi.end(), m.xi.begin() + static_cast<std::ptrdiff_t>(i), m.xi.end());
      n.eta = m.eta;
      out.add(n, c * Scalar(mpq_class(binomial(e, f))));
    }
  }
  return out;
}

SymbolPolynomial coboundary_impl(const SymbolPolynomial& p, CoboundarySign sign, bool with_exp) {
  const std::size_t r = p.arity();
  SymbolPolynomial first = prepend_slot(p);
  SymbolPolynomial last = append_slot(p);
  if (with_exp) {
    first = multiply_by_exp(first, 0, Scalar(1));
    last = multiply_by_exp(last, r, Scalar(1));
  }
  SymbolPolynomial out = first;
  for (std::size_t i = 1; i <= r; ++i) {
    SymbolPolynomial middle = merge_slots(p, i);
    middle *= inner_sign(i, sign);
    out += middle;
  }
  last *= outer_sign(r);
  out += last;
  return out;
}

KernelFamily family_of(const SymbolPolynomial& psi) {
  KernelFamily k(psi.arity());
  for (const auto& [m, c] : psi.terms()) k.add(KernelKey{m.eta, m.xi}, c);
  return k;
}

}  // namespace

Cochain Cochain::from_kernels(const KernelFamily& k, const TruncationCaps& caps) {
  return Cochain(table_from_kernel(k, caps));
}

Cochain Cochain::element(const FockVector& phi, const TruncationCaps& caps) {
  BasisActionTable t(0, caps);
  t.set(BasisTuple{}, truncate(phi, caps));
  return Cochain(std::move(t));
}

Cochain coboundary(const Cochain& x, CoboundarySign sign) {
  const auto& t = x.table();
  const auto& caps = t.caps();
  const std::size_t r = t.arity();
  BasisActionTable out(r + 1, caps);
  for (const auto& tuple : window_tuples(r + 1, caps)) {
    FockVector v;
    const BasisTuple tail(tuple.begin() + 1, tuple.end());
    v += shifted(t.at(tail), tuple.front(), caps);
    for (std::size_t i = 1; i <= r; ++i) {
      BasisTuple merged;
      merged.reserve(r);
      for (std::size_t j = 0; j < r + 1; ++j) {
        if (j == i) continue;
        merged.push_back(j == i - 1 ? concat(tuple[j], tuple[j + 1]) : tuple[j]);
      }
      FockVector term = t.at(merged);
      term *= inner_sign(i, sign);
      v += term;
    }
    const BasisTuple head(tuple.begin(), tuple.end() - 1);
    FockVector term = shifted(t.at(head), tuple.back(), caps);
    term *= outer_sign(r);
    v += term;
    out.set(tuple, std::move(v));
  }
  return Cochain(std::move(out));
}

SymbolPolynomial symbol_coboundary(const SymbolPolynomial& symbol, CoboundarySign sign) {
  return coboundary_impl(symbol, sign, true);
}

SymbolPolynomial reduced_coboundary(const SymbolPolynomial& psi, CoboundarySign sign) {
  return coboundary_impl(psi, sign, false);
}

KernelFamily kernel_coboundary(const KernelFamily& k, const TruncationCaps& caps, CoboundarySign sign) {
  return family_of(reduced_coboundary(kernel_polynomial(k, caps), sign));
}

std::optional<PolydiffDegree> polydiff_degree(const Cochain& x) {
  const TruncationCaps& caps = x.caps();
  std::set<PolydiffDegree> strata;
  for (const auto& [block, entries] : x.kernels().blocks()) {
    if (!block_reliable(block, caps)) continue;
    strata.insert(PolydiffDegree{block.l, block.m()});
  }
  if (strata.size() != 1) return std::nullopt;
  return *strata.begin();
}

std::vector<KernelKey> stratum_basis(std::size_t r, std::uint32_t l, std::uint32_t m, std::uint32_t max_mode) {
  std::vector<std::vector<MultiIndex>> by_degree(m + 1);
  for (std::uint32_t d = 0; d <= m; ++d) by_degree[d] = multi_indices_of_degree(max_mode, d);

  std::vector<std::vector<MultiIndex>> j_tuples;
  std::vector<MultiIndex> current;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t left) {
    if (current.size() == r) {
      if (left == 0) j_tuples.push_back(current);
      return;
    }
    const bool last_slot = current.size() + 1 == r;
    for (std::uint32_t d = last_slot ? left : 0; d <= left; ++d) {
      for (const auto& a : by_degree[d]) {
        current.push_back(a);
        rec(left - d);
        current.pop_back();
      }
    }
  };
  rec(m);

  std::vector<KernelKey> out;
  for (const auto& i : multi_indices_of_degree(max_mode, l)) {
    for (const auto& j : j_tuples) out.push_back(KernelKey{i, j});
  }
  std::sort(out.begin(), out.end());
  return out;
}

RationalMatrix coboundary_matrix(std::size_t r, std::uint32_t l, std::uint32_t m, const TruncationCaps& caps,
                                 ComplexRoute route, CoboundarySign sign) {
  if (caps.max_degree < l + m + r + 1) {
    throw TruncationError("coboundary on stratum (" + std::to_string(l) + "," + std::to_string(m) +
                          ") at arity " + std::to_string(r) + " needs max_degree >= " +
                          std::to_string(l + m + r + 1));
  }
  const auto cols = stratum_basis(r, l, m, caps.max_mode);
  const auto rows = stratum_basis(r + 1, l, m, caps.max_mode);
  std::map<KernelKey, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

  RationalMatrix mat(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    KernelFamily generator(r);
    generator.add(cols[c], Scalar(1));
    const KernelFamily image = route == ComplexRoute::table
                                   ? coboundary(Cochain::from_kernels(generator, caps), sign).kernels()
                                   : kernel_coboundary(generator, caps, sign);
    for (const auto& [key, v] : image.entries()) {
      auto it = row_index.find(key);
      if (it == row_index.end()) throw InternalError("coboundary image leaves the (l, m) stratum");
      mat.set(it->second, c, v);
    }
  }
  return mat;
}

CohomologyDims cohomology_dims(std::size_t r, std::uint32_t l, std::uint32_t m, const TruncationCaps& caps,
                               ComplexRoute route) {
  const RationalMatrix current = coboundary_matrix(r, l, m, caps, route);
  const RankNullspace rn = rank_nullspace(current);
  CohomologyDims dims;
  dims.dim_ker = current.cols() - rn.rank;
  if (r > 0) {
    const RationalMatrix previous = coboundary_matrix(r - 1, l, m, caps, route);
    if (!(current * previous).is_zero()) throw InternalError("coboundary squares to a nonzero map");
    dims.dim_im_prev = rank_nullspace(previous).rank;
  }
  if (dims.dim_im_prev > dims.dim_ker) throw InternalError("image larger than kernel");
  dims.dim_H = dims.dim_ker - dims.dim_im_prev;

  const auto cols = stratum_basis(r, l, m, caps.max_mode);
  for (const auto& v : rn.nullspace) {
    KernelFamily f(r);
    for (std::size_t c = 0; c < cols.size(); ++c) f.add(cols[c], v[c]);
    dims.basis_cocycles.push_back(std::move(f));
  }
  return dims;
}

namespace {

RationalMatrix raw_coboundary_matrix(std::size_t s, const TruncationCaps& caps) {
  const auto labels = multi_indices_up_to(caps.max_mode, caps.max_degree);
  std::map<MultiIndex, std::size_t> label_index;
  for (std::size_t i = 0; i < labels.size(); ++i) label_index.emplace(labels[i], i);
  const auto in_tuples = window_tuples(s, caps);
  const auto out_tuples = window_tuples(s + 1, caps);
  std::map<BasisTuple, std::size_t> out_index;
  for (std::size_t i = 0; i < out_tuples.size(); ++i) out_index.emplace(out_tuples[i], i);

  RationalMatrix mat(out_tuples.size() * labels.size(), in_tuples.size() * labels.size());
  for (std::size_t ti = 0; ti < in_tuples.size(); ++ti) {
    for (std::size_t bi = 0; bi < labels.size(); ++bi) {
      BasisActionTable elementary(s, caps);
      elementary.set(in_tuples[ti], FockVector::basis(labels[bi]));
      const Cochain image = coboundary(Cochain(std::move(elementary)));
      const std::size_t col = ti * labels.size() + bi;
      for (const auto& [tuple, value] : image.table().rows()) {
        const std::size_t base = out_index.at(tuple) * labels.size();
        for (const auto& [b, c] : value.terms()) mat.set(base + label_index.at(b), col, c);
      }
    }
  }
  return mat;
}

}  // namespace

CohomologyDims table_complex_dims(std::size_t r, const TruncationCaps& caps) {
  const RationalMatrix current = raw_coboundary_matrix(r, caps);
  CohomologyDims dims;
  dims.dim_ker = current.cols() - rank_nullspace(current).rank;
  if (r > 0) {
    const RationalMatrix previous = raw_coboundary_matrix(r - 1, caps);
    if (!(current * previous).is_zero()) throw InternalError("coboundary squares to a nonzero map");
    dims.dim_im_prev = rank_nullspace(previous).rank;
  }
  if (dims.dim_im_prev > dims.dim_ker) throw InternalError("image larger than kernel");
  dims.dim_H = dims.dim_ker - dims.dim_im_prev;
  return dims;
}

}  // namespace hida
