#include "hida/multiindex.hpp"

#include <algorithm>
#include <functional>

namespace hida {

namespace {

std::vector<ModeCount> normalize(std::vector<std::pair<Mode, std::uint32_t>> raw) {
  std::sort(raw.begin(), raw.end());
  std::vector<ModeCount> out;
  out.reserve(raw.size());
  for (const auto& [mode, count] : raw) {
    if (count == 0) continue;
    if (!out.empty() && out.back().mode == mode) {
      out.back().count += count;
    } else {
      out.push_back({mode, count});
    }
  }
  return out;
}

mpz_class factorial(std::uint32_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<std::pair<Mode, std::uint32_t>> pairs)
    : pairs_(normalize(std::vector<std::pair<Mode, std::uint32_t>>(pairs))) {}

MultiIndex::MultiIndex(std::vector<std::pair<Mode, std::uint32_t>> pairs)
    : pairs_(normalize(std::move(pairs))) {}

MultiIndex MultiIndex::single(Mode mode, std::uint32_t count) { return MultiIndex{{mode, count}}; }

std::uint32_t MultiIndex::multiplicity(Mode mode) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), mode,
                             [](const ModeCount& p, Mode m) { return p.mode < m; });
  return (it != pairs_.end() && it->mode == mode) ? it->count : 0;
}

std::optional<Mode> MultiIndex::max_mode() const {
  if (pairs_.empty()) return std::nullopt;
  return pairs_.back().mode;
}

MultiIndex MultiIndex::incremented(Mode mode, std::uint32_t by) const {
  MultiIndex out = *this;
  if (by == 0) return out;
  auto it = std::lower_bound(out.pairs_.begin(), out.pairs_.end(), mode,
                             [](const ModeCount& p, Mode m) { return p.mode < m; });
  if (it != out.pairs_.end() && it->mode == mode) {
    it->count += by;
  } else {
    out.pairs_.insert(it, ModeCount{mode, by});
  }
  return out;
}

std::optional<MultiIndex> MultiIndex::decremented(Mode mode) const {
  MultiIndex out = *this;
  auto it = std::lower_bound(out.pairs_.begin(), out.pairs_.end(), mode,
                             [](const ModeCount& p, Mode m) { return p.mode < m; });
  if (it == out.pairs_.end() || it->mode != mode) return std::nullopt;
  if (--it->count == 0) out.pairs_.erase(it);
  return out;
}

std::uint32_t degree(const MultiIndex& a) {
  std::uint32_t d = 0;
  for (const auto& p : a.pairs()) d += p.count;
  return d;
}

mpz_class hida_weight(const MultiIndex& a) {
  mpz_class w = 1;
  for (const auto& p : a.pairs()) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 2UL * p.mode + 2UL, p.count);
    w *= f;
  }
  return w;
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  std::vector<std::pair<Mode, std::uint32_t>> raw;
  raw.reserve(a.pairs().size() + b.pairs().size());
  for (const auto& p : a.pairs()) raw.emplace_back(p.mode, p.count);
  for (const auto& p : b.pairs()) raw.emplace_back(p.mode, p.count);
  return MultiIndex(std::move(raw));
}

std::vector<std::pair<MultiIndex, MultiIndex>> decompositions(const MultiIndex& a) {
  const auto pairs = a.pairs();
  std::vector<std::uint32_t> split(pairs.size(), 0);
  std::vector<std::pair<MultiIndex, MultiIndex>> out;
  while (true) {
    std::vector<std::pair<Mode, std::uint32_t>> left;
    std::vector<std::pair<Mode, std::uint32_t>> right;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      left.emplace_back(pairs[j].mode, split[j]);
      right.emplace_back(pairs[j].mode, pairs[j].count - split[j]);
    }
    out.emplace_back(MultiIndex(std::move(left)), MultiIndex(std::move(right)));
    // odometer, last mode fastest
    std::size_t j = pairs.size();
    while (j > 0) {
      --j;
      if (split[j] < pairs[j].count) {
        ++split[j];
        break;
      }
      split[j] = 0;
      if (j == 0) return out;
    }
    if (pairs.empty()) return out;
  }
}

mpz_class factorial_degree(const MultiIndex& a) { return factorial(degree(a)); }

mpz_class pairing_weight(const MultiIndex& a) {
  mpz_class w = 1;
  for (const auto& p : a.pairs()) w *= factorial(p.count);
  return w;
}

std::optional<MultiIndex> difference(const MultiIndex& a, const MultiIndex& b) {
  std::vector<std::pair<Mode, std::uint32_t>> raw;
  for (const auto& p : a.pairs()) raw.emplace_back(p.mode, p.count);
  for (const auto& q : b.pairs()) {
    const std::uint32_t have = a.multiplicity(q.mode);
    if (have < q.count) return std::nullopt;
    for (auto& r : raw) {
      if (r.first == q.mode) r.second -= q.count;
    }
  }
  return MultiIndex(std::move(raw));
}

mpz_class falling_factorial(const MultiIndex& a, const MultiIndex& b) {
  mpz_class out = 1;
  for (const auto& q : b.pairs()) {
    const std::uint32_t have = a.multiplicity(q.mode);
    for (std::uint32_t k = 0; k < q.count; ++k) out *= (have - k);
  }
  return out;
}

mpz_class binomial(const MultiIndex& a, const MultiIndex& b) {
  mpz_class out = 1;
  for (const auto& q : b.pairs()) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), a.multiplicity(q.mode), q.count);
    out *= c;
  }
  return out;
}

std::vector<MultiIndex> multi_indices_on(std::span<const Mode> support, std::uint32_t max_degree) {
  std::vector<MultiIndex> out;
  std::vector<std::pair<Mode, std::uint32_t>> current;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos, std::uint32_t left) {
    if (pos == support.size()) {
      out.emplace_back(current);
      return;
    }
    for (std::uint32_t c = 0; c <= left; ++c) {
      current.emplace_back(support[pos], c);
      rec(pos + 1, left - c);
      current.pop_back();
    }
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(std::uint32_t modes, std::uint32_t max_degree) {
  std::vector<Mode> support(modes);
  for (std::uint32_t i = 0; i < modes; ++i) support[i] = i;
  return multi_indices_on(support, max_degree);
}

std::vector<MultiIndex> multi_indices_of_degree(std::uint32_t modes, std::uint32_t deg) {
  auto all = multi_indices_up_to(modes, deg);
  std::erase_if(all, [deg](const MultiIndex& a) { return degree(a) != deg; });
  return all;
}

}  // namespace hida
