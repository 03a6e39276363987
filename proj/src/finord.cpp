#include "mcat/finord.hpp"

#include <algorithm>
#include <numeric>

namespace mcat {

bool OrdMap::is_identity() const {
  if (source != target) return false;
  for (int i = 1; i <= source; ++i)
    if (values[i - 1] != i) return false;
  return true;
}

bool OrdMap::is_bijection() const {
  if (source != target) return false;
  std::vector<char> seen(static_cast<size_t>(target), 0);
  for (int v : values) {
    if (seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

bool OrdMap::is_monotone() const {
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i - 1] > values[i]) return false;
  return true;
}

OrdMap ord_map(int source, int target, std::vector<int> values) {
  if (source < 0 || target < 0)
    throw OrdError("ord_map: negative ordinal size");
  if (static_cast<int>(values.size()) != source)
    throw OrdError("ord_map: values length does not match source");
  for (int v : values)
    if (v < 1 || v > target) throw OrdError("ord_map: value out of range");
  return OrdMap{source, target, std::move(values)};
}

OrdMap identity_map(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return OrdMap{n, n, std::move(v)};
}

OrdMap compose_map(const OrdMap& f, const OrdMap& g) {
  if (f.target != g.source)
    throw OrdError("compose_map: target of first map must equal source of second");
  std::vector<int> v(static_cast<size_t>(f.source));
  for (int i = 0; i < f.source; ++i) v[i] = g.values[f.values[i] - 1];
  return OrdMap{f.source, g.target, std::move(v)};
}

OrdMap inverse(const OrdMap& f) {
  if (!f.is_bijection()) throw OrdError("inverse: map is not a bijection");
  std::vector<int> v(static_cast<size_t>(f.source));
  for (int i = 1; i <= f.source; ++i) v[f.values[i - 1] - 1] = i;
  return OrdMap{f.source, f.target, std::move(v)};
}

std::vector<int> fiber(const OrdMap& f, int j) {
  if (j < 1 || j > f.target) throw OrdError("fiber: index out of range");
  std::vector<int> out;
  for (int i = 1; i <= f.source; ++i)
    if (f.values[i - 1] == j) out.push_back(i);
  return out;
}

OrdMap preimage(const OrdMap& f, int j) {
  std::vector<int> fib = fiber(f, j);
  int n = static_cast<int>(fib.size());
  return OrdMap{n, f.source, std::move(fib)};
}

OrdMap fiber_restriction(const OrdMap& f, const OrdMap& g, int k) {
  if (f.target != g.source)
    throw OrdError("fiber_restriction: maps are not composable");
  const OrdMap fg = compose_map(f, g);
  const std::vector<int> dom = fiber(fg, k);
  const std::vector<int> cod = fiber(g, k);
  std::vector<int> v;
  v.reserve(dom.size());
  for (int i : dom) {
    const int fi = f.values[i - 1];
    const auto it = std::lower_bound(cod.begin(), cod.end(), fi);
    v.push_back(static_cast<int>(it - cod.begin()) + 1);
  }
  return OrdMap{static_cast<int>(dom.size()), static_cast<int>(cod.size()),
                std::move(v)};
}

SigmaT sigma_t(const OrdMap& h) {
  // counts[j-1] = |h^{-1}(j)|; offset[j-1] = #elements with smaller key.
  std::vector<int> counts(static_cast<size_t>(h.target), 0);
  for (int v : h.values) ++counts[v - 1];
  std::vector<int> offset(static_cast<size_t>(h.target), 0);
  for (int j = 1; j < h.target; ++j) offset[j] = offset[j - 1] + counts[j - 1];

  std::vector<int> sigma_vals(static_cast<size_t>(h.source));
  std::vector<int> used(static_cast<size_t>(h.target), 0);
  for (int i = 0; i < h.source; ++i) {
    const int key = h.values[i];
    sigma_vals[i] = offset[key - 1] + (++used[key - 1]);
  }
  std::vector<int> t_vals = h.values;
  std::sort(t_vals.begin(), t_vals.end());
  return SigmaT{OrdMap{h.source, h.source, std::move(sigma_vals)},
                OrdMap{h.source, h.target, std::move(t_vals)}};
}

OrdMap nabla(int n) {
  return OrdMap{n, 1, std::vector<int>(static_cast<size_t>(n), 1)};
}

OrdMap inj1(int n, int m) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return OrdMap{n, n + m, std::move(v)};
}

OrdMap inj2(int n, int m) {
  std::vector<int> v(static_cast<size_t>(m));
  std::iota(v.begin(), v.end(), n + 1);
  return OrdMap{m, n + m, std::move(v)};
}

OrdMap shuffle(int n) {
  std::vector<int> v(static_cast<size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    v[i - 1] = 2 * i - 1;
    v[n + i - 1] = 2 * i;
  }
  return OrdMap{2 * n, 2 * n, std::move(v)};
}

OrdMap chi(int n) {
  std::vector<int> v(static_cast<size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    v[i - 1] = i;
    v[n + i - 1] = i;
  }
  return OrdMap{2 * n, n, std::move(v)};
}

OrdMap block_swap(int n, int m) {
  std::vector<int> v(static_cast<size_t>(n + m));
  for (int k = 1; k <= n; ++k) v[k - 1] = m + k;
  for (int k = n + 1; k <= n + m; ++k) v[k - 1] = k - n;
  return OrdMap{n + m, n + m, std::move(v)};
}

OrdMap canonical(const std::string& kind, const std::vector<int>& params) {
  const auto want = [&](size_t n) {
    if (params.size() != n)
      throw OrdError("canonical: wrong parameter count for kind '" + kind + "'");
  };
  if (kind == "identity") {
    want(1);
    return identity_map(params[0]);
  }
  if (kind == "nabla") {
    want(1);
    return nabla(params[0]);
  }
  if (kind == "inj1") {
    want(2);
    return inj1(params[0], params[1]);
  }
  if (kind == "inj2") {
    want(2);
    return inj2(params[0], params[1]);
  }
  if (kind == "shuffle") {
    want(1);
    return shuffle(params[0]);
  }
  if (kind == "chi") {
    want(1);
    return chi(params[0]);
  }
  if (kind == "block_swap") {
    want(2);
    return block_swap(params[0], params[1]);
  }
  throw OrdError("canonical: unknown kind '" + kind + "'");
}

OrdMap disjoint_union(const OrdMap& f, const OrdMap& g) {
  std::vector<int> v;
  v.reserve(static_cast<size_t>(f.source + g.source));
  v.insert(v.end(), f.values.begin(), f.values.end());
  for (int x : g.values) v.push_back(x + f.target);
  return OrdMap{f.source + g.source, f.target + g.target, std::move(v)};
}

OrdMap permute_blocks(const OrdMap& beta, const std::vector<int>& sizes) {
  if (!beta.is_bijection())
    throw OrdError("permute_blocks: beta must be a bijection");
  if (beta.source != static_cast<int>(sizes.size()))
    throw OrdError("permute_blocks: beta does not match the block count");
  const int nblocks = beta.source;
  // offset_tgt[p-1] = start of the block landing at target position p.
  const OrdMap beta_inv = nblocks > 0 ? inverse(beta) : identity_map(0);
  std::vector<int> offset_tgt(static_cast<size_t>(nblocks) + 1, 0);
  for (int p = 1; p <= nblocks; ++p)
    offset_tgt[p] = offset_tgt[p - 1] + sizes[beta_inv.values[p - 1] - 1];

  const int total = offset_tgt[nblocks];
  std::vector<int> v(static_cast<size_t>(total));
  int src = 0;
  for (int j = 1; j <= nblocks; ++j) {
    const int start = offset_tgt[beta.values[j - 1] - 1];
    for (int r = 0; r < sizes[j - 1]; ++r) v[src++] = start + r + 1;
  }
  return OrdMap{total, total, std::move(v)};
}

std::vector<OrdMap> all_maps(int source, int target) {
  std::vector<OrdMap> out;
  if (source == 0) {
    out.push_back(OrdMap{0, target, {}});
    return out;
  }
  if (target == 0) return out;  // no maps from a nonempty ordinal into 0
  std::vector<int> v(static_cast<size_t>(source), 1);
  while (true) {
    out.push_back(OrdMap{source, target, v});
    int i = source - 1;
    while (i >= 0 && v[i] == target) v[i--] = 1;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

std::vector<OrdMap> all_bijections(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<OrdMap> out;
  do {
    out.push_back(OrdMap{n, n, v});
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<OrdMap> all_monotone(int source, int target) {
  std::vector<OrdMap> out;
  if (source == 0) {
    out.push_back(OrdMap{0, target, {}});
    return out;
  }
  if (target == 0) return out;
  std::vector<int> v(static_cast<size_t>(source), 1);
  while (true) {
    out.push_back(OrdMap{source, target, v});
    int i = source - 1;
    while (i >= 0 && v[i] == target) --i;
    if (i < 0) break;
    const int next = v[i] + 1;
    for (int k = i; k < source; ++k) v[k] = next;
  }
  return out;
}

}  // namespace mcat
