#include "hida/operators.hpp"

#include <functional>
#include <numeric>
#include <string>

#include "hida/error.hpp"

namespace hida {

FockVector apply_annihilation(Mode i, const FockVector& x, AnnihilationConstant c) {
  FockVector out;
  for (const auto& [a, v] : x.terms()) {
    const std::uint32_t r = a.multiplicity(i);
    if (r == 0) continue;
    const Scalar factor = c == AnnihilationConstant::multiplicity ? Scalar(r) : Scalar(1);
    out.add(*a.decremented(i), v * factor);
  }
  return out;
}

FockVector apply_creation(Mode i, const FockVector& x) {
  FockVector out;
  for (const auto& [a, v] : x.terms()) out.add(a.incremented(i), v);
  return out;
}

FockVector apply_annihilations(const MultiIndex& j, const FockVector& x, AnnihilationConstant c) {
  FockVector out = x;
  for (const auto& p : j.pairs()) {
    for (std::uint32_t k = 0; k < p.count && !out.is_zero(); ++k) out = apply_annihilation(p.mode, out, c);
  }
  return out;
}

FockVector apply_creations(const MultiIndex& i, const FockVector& x) {
  FockVector out;
  for (const auto& [a, v] : x.terms()) out.add(concat(a, i), v);
  return out;
}

std::uint32_t KernelKey::m() const {
  std::uint32_t m = 0;
  for (const auto& j : annihilation) m += degree(j);
  return m;
}

std::uint32_t KernelFamily::BlockKey::m() const { return std::accumulate(M.begin(), M.end(), 0U); }

KernelFamily KernelFamily::wick_multiplication(std::size_t arity) {
  KernelFamily k(arity);
  k.add(KernelKey{MultiIndex{}, std::vector<MultiIndex>(arity)}, Scalar(1));
  return k;
}

void KernelFamily::add(const KernelKey& key, const Scalar& c) {
  if (key.annihilation.size() != arity_) {
    throw ArityError("kernel entry has " + std::to_string(key.annihilation.size()) +
                     " annihilation slots, family arity is " + std::to_string(arity_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

KernelFamily::BlockKey KernelFamily::block_of(const KernelKey& key) {
  BlockKey b;
  b.l = key.l();
  for (const auto& j : key.annihilation) b.M.push_back(degree(j));
  return b;
}

std::map<KernelFamily::BlockKey, KernelFamily::Entries> KernelFamily::blocks() const {
  std::map<BlockKey, Entries> out;
  for (const auto& [key, c] : entries_) out[block_of(key)].emplace(key, c);
  return out;
}

KernelFamily& KernelFamily::operator+=(const KernelFamily& o) {
  if (o.arity_ != arity_) throw ArityError("adding kernel families of different arity");
  for (const auto& [key, c] : o.entries_) add(key, c);
  return *this;
}

KernelFamily& KernelFamily::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [key, v] : entries_) v *= c;
  return *this;
}

FockVector apply_kernel(const KernelFamily& k, std::span<const FockVector> args, AnnihilationConstant c) {
  if (args.size() != k.arity()) {
    throw ArityError("operator of arity " + std::to_string(k.arity()) + " applied to " +
                     std::to_string(args.size()) + " arguments");
  }
  // a_J phi_j is shared by every entry with the same J in slot j
  std::vector<std::map<MultiIndex, FockVector>> annihilated(args.size());
  FockVector out;
  for (const auto& [key, lambda] : k.entries()) {
    FockVector product = FockVector::vacuum();
    for (std::size_t j = 0; j < args.size() && !product.is_zero(); ++j) {
      auto& cache = annihilated[j];
      auto it = cache.find(key.annihilation[j]);
      if (it == cache.end()) {
        it = cache.emplace(key.annihilation[j], apply_annihilations(key.annihilation[j], args[j], c)).first;
      }
      product = wick_product(product, it->second);
    }
    if (product.is_zero()) continue;
    product = apply_creations(key.creation, product);
    product *= lambda;
    out += product;
  }
  return out;
}

bool in_window(const BasisTuple& tuple, const TruncationCaps& caps) {
  std::uint32_t total = 0;
  for (const auto& a : tuple) {
    const auto top = a.max_mode();
    if (top && *top >= caps.max_mode) return false;
    total += degree(a);
  }
  return total <= caps.max_degree;
}

std::vector<BasisTuple> window_tuples(std::size_t arity, const TruncationCaps& caps) {
  const auto labels = multi_indices_up_to(caps.max_mode, caps.max_degree);
  std::vector<BasisTuple> out;
  BasisTuple current;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t left) {
    if (current.size() == arity) {
      out.push_back(current);
      return;
    }
    for (const auto& a : labels) {
      const auto d = degree(a);
      if (d > left) continue;
      current.push_back(a);
      rec(left - d);
      current.pop_back();
    }
  };
  rec(caps.max_degree);
  return out;
}

const FockVector& BasisActionTable::at(const BasisTuple& tuple) const {
  static const FockVector zero;
  auto it = rows_.find(tuple);
  if (it != rows_.end()) return it->second;
  if (tuple.size() != arity_ || !in_window(tuple, caps_)) {
    throw TruncationError("basis tuple outside the table window");
  }
  return zero;
}

void BasisActionTable::set(const BasisTuple& tuple, FockVector value) {
  if (tuple.size() != arity_) throw ArityError("basis tuple of wrong length for table");
  if (!in_window(tuple, caps_)) throw TruncationError("basis tuple outside the table window");
  for (const auto& [a, c] : value.terms()) {
    if (!caps_.contains(a)) throw TruncationError("table value leaves the truncation caps");
  }
  if (value.is_zero()) {
    rows_.erase(tuple);
  } else {
    rows_.insert_or_assign(tuple, std::move(value));
  }
}

void BasisActionTable::check_compatible(const BasisActionTable& o) const {
  if (o.arity_ != arity_) throw ArityError("combining tables of different arity");
  if (o.caps_ != caps_) throw TruncationError("combining tables with different caps");
}

BasisActionTable& BasisActionTable::operator+=(const BasisActionTable& o) {
  check_compatible(o);
  for (const auto& [tuple, v] : o.rows_) set(tuple, at(tuple) + v);
  return *this;
}

BasisActionTable& BasisActionTable::operator-=(const BasisActionTable& o) {
  check_compatible(o);
  for (const auto& [tuple, v] : o.rows_) set(tuple, at(tuple) - v);
  return *this;
}

BasisActionTable& BasisActionTable::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    rows_.clear();
    return *this;
  }
  for (auto& [tuple, v] : rows_) v *= c;
  return *this;
}

BasisActionTable table_from_kernel(const KernelFamily& k, const TruncationCaps& caps, AnnihilationConstant c) {
  BasisActionTable t(k.arity(), caps);
  if (k.empty()) return t;
  for (const auto& tuple : window_tuples(k.arity(), caps)) {
    std::vector<FockVector> args;
    args.reserve(tuple.size());
    for (const auto& a : tuple) args.push_back(FockVector::basis(a));
    t.set(tuple, truncate(apply_kernel(k, args, c), caps));
  }
  return t;
}

FockVector apply_table(const BasisActionTable& t, std::span<const FockVector> args) {
  if (args.size() != t.arity()) {
    throw ArityError("table of arity " + std::to_string(t.arity()) + " applied to " +
                     std::to_string(args.size()) + " arguments");
  }
  const auto& caps = t.caps();
  for (const auto& arg : args) {
    for (const auto& [a, c] : arg.terms()) {
      if (!caps.contains(a)) throw TruncationError("argument supported outside the table caps");
    }
  }
  FockVector out;
  BasisTuple tuple;
  std::function<void(std::size_t, std::uint32_t, const Scalar&)> rec =
      [&](std::size_t j, std::uint32_t left, const Scalar& weight) {
        if (j == args.size()) {
          FockVector v = t.at(tuple);
          v *= weight;
          out += v;
          return;
        }
        for (const auto& [a, c] : args[j].terms()) {
          const auto d = degree(a);
          if (d > left) continue;
          tuple.push_back(a);
          rec(j + 1, left - d, weight * c);
          tuple.pop_back();
        }
      };
  rec(0, caps.max_degree, Scalar(1));
  return out;
}

}  // namespace hida
