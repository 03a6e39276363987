#pragma once

#include "mcat/multicat.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace mcat {

// Object of the finite-sets ground: the set {1, ..., size}.
struct FinSetObj {
  int size = 0;

  friend auto operator<=>(const FinSetObj&, const FinSetObj&) = default;
};

// A function  X_1 x ... x X_n -> Y  between finite sets, stored as a value
// table indexed mixed-radix over the argument tuple with the FIRST argument
// most significant; elements and table values are 1-based.
struct MultiMap {
  std::vector<int> src_sizes;
  int tgt_size = 0;
  std::vector<int> table;  // length prod(src_sizes), values in [1, tgt_size]

  friend auto operator<=>(const MultiMap&, const MultiMap&) = default;
};

// Evaluate f on an argument tuple (1-based elements).
int fs_apply(const MultiMap& f, const std::vector<int>& args);

// Validating constructor.
MultiMap fs_map(std::vector<int> src_sizes, int tgt_size,
                std::vector<int> table);

// The finite-sets ground structure: composition substitutes functions into a
// function, with argument slots distributed along the fibers of the index map.
struct FinSetInstance {
  using Obj = FinSetObj;
  using Mor = MultiMap;

  // tables and hom enumerations larger than this raise SizeBound
  long long size_cap = 1'000'000;

  std::vector<Obj> source_of(const Mor& f) const;
  Obj target_of(const Mor& f) const;
  Mor identity(const Obj& x) const;
  Mor compose(const OrdMap& phi, const std::vector<Mor>& args,
              const Mor& outer) const;
  std::string show_obj(const Obj& x) const;
  std::string show_mor(const Mor& f) const;

  unsigned long long hom_size(const std::vector<Obj>& xs, const Obj& y) const;
  std::vector<Mor> enumerate_hom(const std::vector<Obj>& xs,
                                 const Obj& y) const;
  std::optional<Mor> random_mor(const std::vector<Obj>& xs, const Obj& y,
                                std::mt19937_64& rng) const;

  // closedness: underhom((X_i); Z) is the set of all functions, enumerated in
  // table order; ev evaluates; curry(f, n) moves the first n inputs inside
  Obj underhom(const std::vector<Obj>& xs, const Obj& z) const;
  Mor ev(const std::vector<Obj>& xs, const Obj& z) const;
  Mor curry(const Mor& f, int n) const;

  // completeness
  Obj product(const std::vector<Obj>& xs) const;
  Mor projection(const std::vector<Obj>& xs, int k) const;
  Mor tuple_into_product(const std::vector<Obj>& sources,
                         const std::vector<Mor>& hs) const;
  EqualizerData<FinSetInstance> equalizer(const Mor& f, const Mor& g) const;
  Mor factor_through_equalizer(const EqualizerData<FinSetInstance>& eq,
                               const Mor& j) const;
};

static_assert(EnumerableGround<FinSetInstance>);

// Free-function faces of the instance operations.
FinSetObj fs_underhom(const std::vector<FinSetObj>& xs, const FinSetObj& z);
MultiMap fs_ev(const std::vector<FinSetObj>& xs, const FinSetObj& z);
FinSetObj fs_product(const std::vector<FinSetObj>& xs);
EqualizerData<FinSetInstance> fs_equalizer(const MultiMap& f,
                                           const MultiMap& g);

}  // namespace mcat
