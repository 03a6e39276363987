#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcat {

// Map of finite ordinals f : [source] -> [target], stored 1-based:
// values[i-1] = f(i).  source == 0 gives the unique empty map into any target.
struct OrdMap {
  int source = 0;
  int target = 0;
  std::vector<int> values;

  friend auto operator<=>(const OrdMap&, const OrdMap&) = default;

  bool is_identity() const;
  bool is_bijection() const;
  bool is_monotone() const;
};

// Raised for ill-formed maps, mismatched composites, or bad dispatcher input.
struct OrdError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Validating constructor: requires values.size() == source and
// 1 <= values[i] <= target for all i.
OrdMap ord_map(int source, int target, std::vector<int> values);

OrdMap identity_map(int n);

// Diagrammatic composite: first f, then g, so (f·g)(i) = g(f(i)).
OrdMap compose_map(const OrdMap& f, const OrdMap& g);

// Inverse of a bijection.
OrdMap inverse(const OrdMap& f);

// Elements of f^{-1}(j) in increasing order.
std::vector<int> fiber(const OrdMap& f, int j);

// The monotone injection [|f^{-1}(j)|] -> [source] enumerating the fiber over j.
OrdMap preimage(const OrdMap& f, int j);

// For f : I -> J and g : J -> K, the restriction of f over k in K written in
// fiber coordinates: a map (f·g)^{-1}(k) -> g^{-1}(k), both fibers enumerated
// increasingly.
OrdMap fiber_restriction(const OrdMap& f, const OrdMap& g, int k);

// Stable sorting factorization h = sigma · t with sigma a bijection and t
// monotone: sigma sends i to the rank of i when the source is sorted by the
// key h(i), ties kept in source order; t lists the values of h in increasing
// order.
struct SigmaT {
  OrdMap sigma;
  OrdMap t;
};
SigmaT sigma_t(const OrdMap& h);

// Named structural maps.
OrdMap nabla(int n);              // n -> 1, everything to the point
OrdMap inj1(int n, int m);        // [n] -> [n+m], i -> i
OrdMap inj2(int n, int m);        // [m] -> [n+m], j -> n+j
OrdMap shuffle(int n);            // 2n -> 2n, interleaves two n-blocks
OrdMap chi(int n);                // 2n -> n, i -> i and n+i -> i
OrdMap block_swap(int n, int m);  // n+m -> m+n, k <= n -> m+k, k > n -> k-n

// Single dispatcher over the named maps: kinds "identity", "nabla", "inj1",
// "inj2", "shuffle", "chi", "block_swap" with their integer parameters.
OrdMap canonical(const std::string& kind, const std::vector<int>& params);

// Block sum: (f ⊔ g)(i) = f(i) for i <= f.source, else g(i - f.source) + f.target.
OrdMap disjoint_union(const OrdMap& f, const OrdMap& g);

// For a bijection beta on [sizes.size()], the bijection on [sum sizes] that
// moves the j-th contiguous block (length sizes[j-1]) order-preservingly to
// block position beta(j).
OrdMap permute_blocks(const OrdMap& beta, const std::vector<int>& sizes);

// Exhaustive enumerations for small sizes, in a fixed canonical order
// (lexicographic on the value tuple).
std::vector<OrdMap> all_maps(int source, int target);
std::vector<OrdMap> all_bijections(int n);
std::vector<OrdMap> all_monotone(int source, int target);

}  // namespace mcat
