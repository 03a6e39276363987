#pragma once

#include "mcat/finord.hpp"

#include <concepts>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcat {

// Raised when morphisms are plugged together along incompatible signatures.
struct SignatureMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an enumeration or construction exceeds a configured size cap.
struct SizeBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A ground structure: objects, morphisms with a finite list of inputs and one
// output, identities, and composition indexed by maps of finite ordinals.
// compose(phi, args, outer) plugs args[j-1] — whose inputs sit over the fiber
// phi^{-1}(j), enumerated increasingly — into input j of outer.
template <typename G>
concept Ground =
    std::regular<typename G::Obj> && std::regular<typename G::Mor> &&
    std::totally_ordered<typename G::Obj> &&
    std::totally_ordered<typename G::Mor> &&
    requires(const G& g, const typename G::Obj& x,
             const std::vector<typename G::Obj>& xs, const typename G::Mor& f,
             const std::vector<typename G::Mor>& fs, const OrdMap& phi) {
      { g.source_of(f) } -> std::convertible_to<std::vector<typename G::Obj>>;
      { g.target_of(f) } -> std::convertible_to<typename G::Obj>;
      { g.identity(x) } -> std::convertible_to<typename G::Mor>;
      { g.compose(phi, fs, f) } -> std::convertible_to<typename G::Mor>;
      { g.show_obj(x) } -> std::convertible_to<std::string>;
      { g.show_mor(f) } -> std::convertible_to<std::string>;
    };

// Grounds whose hom sets can be listed (small ones) and counted.
template <typename G>
concept EnumerableGround =
    Ground<G> && requires(const G& g, const std::vector<typename G::Obj>& xs,
                          const typename G::Obj& y) {
      {
        g.enumerate_hom(xs, y)
      } -> std::convertible_to<std::vector<typename G::Mor>>;
      { g.hom_size(xs, y) } -> std::convertible_to<unsigned long long>;
    };

// Grounds that can draw a uniform random morphism from a hom set.
template <typename G>
concept SampleableGround =
    Ground<G> && requires(const G& g, const std::vector<typename G::Obj>& xs,
                          const typename G::Obj& y, std::mt19937_64& rng) {
      {
        g.random_mor(xs, y, rng)
      } -> std::convertible_to<std::optional<typename G::Mor>>;
    };

// Closed grounds: internal hom objects with evaluation, currying away the
// *first* block of inputs: hom((X)_I ⊔ (Y)_J; Z) ≅ hom((Y)_J; underhom((X)_I; Z)).
template <typename G>
concept ClosedGround =
    Ground<G> && requires(const G& g, const std::vector<typename G::Obj>& xs,
                          const typename G::Obj& z, const typename G::Mor& f,
                          int n) {
      { g.underhom(xs, z) } -> std::convertible_to<typename G::Obj>;
      // ev : ((X_i)_I, underhom((X)_I; Z)) -> Z, hom object last
      { g.ev(xs, z) } -> std::convertible_to<typename G::Mor>;
      // curry(f, n): move the first n inputs of f into an underhom target
      { g.curry(f, n) } -> std::convertible_to<typename G::Mor>;
    };

template <typename G>
struct EqualizerData {
  typename G::Obj obj;
  typename G::Mor include;  // unary, obj -> common source of the parallel pair

  friend auto operator<=>(const EqualizerData&, const EqualizerData&) = default;
};

// Complete grounds: finite products with multi-entry tupling, and equalizers
// of parallel unary pairs with factorization.
template <typename G>
concept CompleteGround =
    Ground<G> && requires(const G& g, const std::vector<typename G::Obj>& xs,
                          const std::vector<typename G::Mor>& hs,
                          const typename G::Mor& f, const EqualizerData<G>& e,
                          int k) {
      { g.product(xs) } -> std::convertible_to<typename G::Obj>;
      // projection(xs, k): product(xs) -> xs[k-1]
      { g.projection(xs, k) } -> std::convertible_to<typename G::Mor>;
      // tuple_into_product(sources, hs): the hs share source list `sources`;
      // the result maps `sources` into product(targets of hs)
      {
        g.tuple_into_product(xs, hs)
      } -> std::convertible_to<typename G::Mor>;
      { g.equalizer(f, f) } -> std::convertible_to<EqualizerData<G>>;
      // factor j (unary or multi-entry, landing in the pair's source and
      // equalizing it) uniquely through the inclusion
      {
        g.factor_through_equalizer(e, f)
      } -> std::convertible_to<typename G::Mor>;
    };

// ---------------------------------------------------------------------------
// Derived operations

// Composition in diagram order: all inputs of f feed the single input of the
// unary morphism h.
template <Ground G>
typename G::Mor compose1(const G& g, const typename G::Mor& f,
                         const typename G::Mor& h) {
  return g.compose(nabla(static_cast<int>(g.source_of(f).size())), {f}, h);
}

// Derived symmetric-group action: r_sigma(f) permutes the inputs of f along
// the bijection sigma, realized as composition with identities.  Input p of
// the result is input sigma(p) of f.
template <Ground G>
typename G::Mor r_sigma(const G& g, const OrdMap& sigma,
                        const typename G::Mor& f) {
  if (!sigma.is_bijection())
    throw OrdError("r_sigma: sigma must be a bijection");
  const auto src = g.source_of(f);
  if (static_cast<int>(src.size()) != sigma.target)
    throw SignatureMismatch("r_sigma: arity mismatch with the morphism");
  std::vector<typename G::Mor> ids;
  ids.reserve(src.size());
  for (const auto& x : src) ids.push_back(g.identity(x));
  return g.compose(sigma, ids, f);
}

// Inverse of curry: for f : (Y_j)_J -> underhom((X_i)_I; Z), rebuild the
// morphism ((X_i)_I, (Y_j)_J) -> Z by plugging identities and f into ev.
template <ClosedGround G>
typename G::Mor uncurry(const G& g, const std::vector<typename G::Obj>& xs,
                        const typename G::Obj& z, const typename G::Mor& f) {
  const int n = static_cast<int>(xs.size());
  const int m = static_cast<int>(g.source_of(f).size());
  std::vector<typename G::Mor> args;
  args.reserve(static_cast<size_t>(n) + 1);
  for (const auto& x : xs) args.push_back(g.identity(x));
  args.push_back(f);
  return g.compose(disjoint_union(identity_map(n), nabla(m)), args,
                   g.ev(xs, z));
}

// The name of f : (X_i)_I -> Z, a point () -> underhom((X_i)_I; Z).
template <ClosedGround G>
typename G::Mor name_of(const G& g, const typename G::Mor& f) {
  return g.curry(f, static_cast<int>(g.source_of(f).size()));
}

// ---------------------------------------------------------------------------
// Finite limits from products and equalizers

template <typename G>
struct DiagramArrow {
  int src = 0;  // 1-based indices into Diagram::objects
  int tgt = 0;
  typename G::Mor mor;  // unary, objects[src-1] -> objects[tgt-1]
};

template <typename G>
struct Diagram {
  std::vector<typename G::Obj> objects;
  std::vector<DiagramArrow<G>> arrows;
};

template <typename G>
struct LimitData {
  typename G::Obj obj;
  std::vector<typename G::Mor> legs;  // obj -> objects[v-1]
  typename G::Obj prod;
  EqualizerData<G> eq;  // equalizer presenting obj inside prod
};

// The limit as the equalizer of the two standard comparison maps out of the
// product over objects into the product over arrow targets.
template <CompleteGround G>
LimitData<G> limit(const G& g, const Diagram<G>& d) {
  const auto P = g.product(d.objects);
  const std::vector<typename G::Obj> p_src{P};
  std::vector<typename G::Mor> a_legs, b_legs;
  for (const auto& u : d.arrows) {
    a_legs.push_back(g.projection(d.objects, u.tgt));
    b_legs.push_back(compose1(g, g.projection(d.objects, u.src), u.mor));
  }
  const auto a = g.tuple_into_product(p_src, a_legs);
  const auto b = g.tuple_into_product(p_src, b_legs);
  auto eq = g.equalizer(a, b);
  std::vector<typename G::Mor> legs;
  legs.reserve(d.objects.size());
  for (int v = 1; v <= static_cast<int>(d.objects.size()); ++v)
    legs.push_back(compose1(g, eq.include, g.projection(d.objects, v)));
  return LimitData<G>{eq.obj, std::move(legs), P, std::move(eq)};
}

// Factor a commuting cone (possibly multi-entry) through the limit.
template <CompleteGround G>
typename G::Mor factor_into_limit(const G& g, const LimitData<G>& lim,
                                  const std::vector<typename G::Obj>& sources,
                                  const std::vector<typename G::Mor>& cone) {
  const auto tup = g.tuple_into_product(sources, cone);
  return g.factor_through_equalizer(lim.eq, tup);
}

// ---------------------------------------------------------------------------
// Law checking

struct CheckFailure {
  std::string law;
  std::string detail;
};

struct CheckReport {
  std::map<std::string, long long> pass_counts;
  std::map<std::string, long long> fail_counts;
  std::vector<CheckFailure> failures;  // capped sample of counterexamples
  long long skipped = 0;               // instances skipped for size, never silent
  static constexpr std::size_t max_recorded_failures = 100;

  bool ok() const { return fail_counts.empty(); }

  long long total_passed() const {
    long long n = 0;
    for (const auto& [law, c] : pass_counts) n += c;
    return n;
  }

  template <typename DetailFn>
  void record(bool passed, const std::string& law, DetailFn&& detail) {
    if (passed) {
      ++pass_counts[law];
      return;
    }
    ++fail_counts[law];
    if (failures.size() < max_recorded_failures)
      failures.push_back(CheckFailure{law, detail()});
  }

  void merge(const CheckReport& other) {
    for (const auto& [law, c] : other.pass_counts) pass_counts[law] += c;
    for (const auto& [law, c] : other.fail_counts) fail_counts[law] += c;
    for (const auto& f : other.failures)
      if (failures.size() < max_recorded_failures) failures.push_back(f);
    skipped += other.skipped;
  }
};

struct AxiomBounds {
  int max_arity = 3;               // bound on |I|, |J|, |K|
  long long shell_cap = 2048;      // enumerate object assignments up to this
  int shell_samples = 16;          // sampled assignments when over the cap
  long long tuple_cap = 2048;      // enumerate morphism tuples up to this
  int tuple_samples = 4;           // sampled tuples when over the cap
  long long enumerate_cap = 4096;  // materialize a hom only up to this size
  std::uint64_t seed = 1;
};

namespace detail {

inline unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<unsigned long long>::max() / b)
    return std::numeric_limits<unsigned long long>::max();
  return a * b;
}

inline unsigned long long sat_pow(unsigned long long base, int exp) {
  unsigned long long r = 1;
  for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

// Visit index assignments (1-based digits in [1, n]) for `slots` slots: all of
// them when n^slots <= cap, otherwise `samples` seeded random assignments.
template <typename Visit>
void for_each_assignment(std::size_t n, int slots, long long cap, int samples,
                         std::mt19937_64& rng, Visit&& visit) {
  if (n == 0) return;
  std::vector<int> pick(static_cast<size_t>(slots), 1);
  if (sat_pow(n, slots) <= static_cast<unsigned long long>(cap)) {
    while (true) {
      visit(static_cast<const std::vector<int>&>(pick));
      int i = slots - 1;
      while (i >= 0 && pick[i] == static_cast<int>(n)) pick[i--] = 1;
      if (i < 0) break;
      ++pick[i];
    }
    return;
  }
  for (int s = 0; s < samples; ++s) {
    for (auto& d : pick) d = static_cast<int>(rng() % n) + 1;
    visit(static_cast<const std::vector<int>&>(pick));
  }
}

// Draw one morphism from hom(xs; y): uniformly for sampleable grounds, from a
// materialized enumeration otherwise.  nullopt when empty or too big to list.
template <EnumerableGround G>
std::optional<typename G::Mor> sample_mor(const G& g,
                                          const std::vector<typename G::Obj>& xs,
                                          const typename G::Obj& y,
                                          const AxiomBounds& b,
                                          std::mt19937_64& rng) {
  if constexpr (SampleableGround<G>) {
    return g.random_mor(xs, y, rng);
  } else {
    const auto n = g.hom_size(xs, y);
    if (n == 0 || n > static_cast<unsigned long long>(b.enumerate_cap))
      return std::nullopt;
    auto pool = g.enumerate_hom(xs, y);
    return pool[static_cast<size_t>(rng() % pool.size())];
  }
}

template <Ground G>
std::string show_mor_list(const G& g, const std::vector<typename G::Mor>& fs) {
  std::string out = "(";
  for (size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += g.show_mor(fs[i]);
  }
  return out + ")";
}

}  // namespace detail

inline std::string show(const OrdMap& f) {
  std::string out = "[";
  for (size_t i = 0; i < f.values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f.values[i]);
  }
  out += "]:" + std::to_string(f.source) + "->" + std::to_string(f.target);
  return out;
}

// Checks unit laws and two-stage associativity on the given object pool:
// for each pair phi : I -> J, psi : J -> K within the arity bound, plugging
// (f_j) into (g_k) fiberwise and then into h must agree with plugging (f_j)
// into the already-composed mu_psi((g_k); h).
template <EnumerableGround G>
CheckReport check_axioms(const G& g, const std::vector<typename G::Obj>& objs,
                         const AxiomBounds& b) {
  CheckReport rep;
  std::mt19937_64 rng(b.seed);

  // Unit laws.
  for (int I = 0; I <= b.max_arity; ++I) {
    detail::for_each_assignment(
        objs.size(), I + 1, b.shell_cap, b.shell_samples, rng,
        [&](const std::vector<int>& pick) {
          std::vector<typename G::Obj> xs;
          for (int i = 0; i < I; ++i) xs.push_back(objs[pick[i] - 1]);
          const auto& z = objs[pick[I] - 1];
          const auto n = g.hom_size(xs, z);
          if (n == 0) return;
          if (n > static_cast<unsigned long long>(b.enumerate_cap)) {
            if constexpr (SampleableGround<G>) {
              for (int s = 0; s < b.tuple_samples; ++s) {
                auto f = g.random_mor(xs, z, rng);
                if (!f) return;
                rep.record(g.compose(nabla(I), {*f}, g.identity(z)) == *f,
                           "unit-outer", [&] { return g.show_mor(*f); });
                std::vector<typename G::Mor> ids;
                for (const auto& x : xs) ids.push_back(g.identity(x));
                rep.record(g.compose(identity_map(I), ids, *f) == *f,
                           "unit-inner", [&] { return g.show_mor(*f); });
              }
            } else {
              ++rep.skipped;
            }
            return;
          }
          std::vector<typename G::Mor> ids;
          for (const auto& x : xs) ids.push_back(g.identity(x));
          for (const auto& f : g.enumerate_hom(xs, z)) {
            rep.record(g.compose(nabla(I), {f}, g.identity(z)) == f,
                       "unit-outer", [&] { return g.show_mor(f); });
            rep.record(g.compose(identity_map(I), ids, f) == f, "unit-inner",
                       [&] { return g.show_mor(f); });
          }
        });
  }

  // Associativity sweep.
  for (int I = 0; I <= b.max_arity; ++I)
    for (int J = 0; J <= b.max_arity; ++J)
      for (int K = 0; K <= b.max_arity; ++K)
        for (const OrdMap& phi : all_maps(I, J))
          for (const OrdMap& psi : all_maps(J, K)) {
            const OrdMap phipsi = compose_map(phi, psi);
            std::vector<OrdMap> restrictions;  // phi restricted over k
            std::vector<std::vector<int>> psi_fibers;
            for (int k = 1; k <= K; ++k) {
              restrictions.push_back(fiber_restriction(phi, psi, k));
              psi_fibers.push_back(fiber(psi, k));
            }
            std::vector<std::vector<int>> phi_fibers;
            for (int j = 1; j <= J; ++j) phi_fibers.push_back(fiber(phi, j));
            std::vector<std::vector<int>> phipsi_fibers;
            for (int k = 1; k <= K; ++k)
              phipsi_fibers.push_back(fiber(phipsi, k));

            const int slots = I + J + K + 1;
            detail::for_each_assignment(
                objs.size(), slots, b.shell_cap, b.shell_samples, rng,
                [&](const std::vector<int>& pick) {
                  std::vector<typename G::Obj> X, Y, Z;
                  for (int i = 0; i < I; ++i) X.push_back(objs[pick[i] - 1]);
                  for (int j = 0; j < J; ++j)
                    Y.push_back(objs[pick[I + j] - 1]);
                  for (int k = 0; k < K; ++k)
                    Z.push_back(objs[pick[I + J + k] - 1]);
                  const auto& W = objs[pick[I + J + K] - 1];

                  // Source lists per slot, then hom sizes.
                  std::vector<std::vector<typename G::Obj>> f_src(
                      static_cast<size_t>(J)),
                      g_src(static_cast<size_t>(K));
                  for (int j = 0; j < J; ++j)
                    for (int i : phi_fibers[j]) f_src[j].push_back(X[i - 1]);
                  for (int k = 0; k < K; ++k)
                    for (int j : psi_fibers[k]) g_src[k].push_back(Y[j - 1]);

                  unsigned long long total = g.hom_size(Z, W);
                  std::vector<unsigned long long> sizes;
                  for (int j = 0; j < J; ++j) {
                    sizes.push_back(g.hom_size(f_src[j], Y[j]));
                    total = detail::sat_mul(total, sizes.back());
                  }
                  for (int k = 0; k < K; ++k) {
                    sizes.push_back(g.hom_size(g_src[k], Z[k]));
                    total = detail::sat_mul(total, sizes.back());
                  }
                  if (total == 0) return;  // vacuous shell

                  const auto run_tuple =
                      [&](const std::vector<typename G::Mor>& fs,
                          const std::vector<typename G::Mor>& gs,
                          const typename G::Mor& h) {
                        // plug (f_j) into each g_k over the restricted index
                        std::vector<typename G::Mor> bs;
                        for (int k = 0; k < K; ++k) {
                          std::vector<typename G::Mor> block;
                          for (int j : psi_fibers[k])
                            block.push_back(fs[j - 1]);
                          bs.push_back(
                              g.compose(restrictions[k], block, gs[k]));
                        }
                        const auto lhs = g.compose(phipsi, bs, h);
                        const auto rhs =
                            g.compose(phi, fs, g.compose(psi, gs, h));
                        rep.record(lhs == rhs, "associativity", [&] {
                          return "phi=" + show(phi) + " psi=" + show(psi) +
                                 " fs=" + detail::show_mor_list(g, fs) +
                                 " gs=" + detail::show_mor_list(g, gs) +
                                 " h=" + g.show_mor(h);
                        });
                      };

                  const bool materialize =
                      total <= static_cast<unsigned long long>(b.tuple_cap);
                  if (materialize) {
                    std::vector<std::vector<typename G::Mor>> pools;
                    for (int j = 0; j < J; ++j)
                      pools.push_back(g.enumerate_hom(f_src[j], Y[j]));
                    for (int k = 0; k < K; ++k)
                      pools.push_back(g.enumerate_hom(g_src[k], Z[k]));
                    pools.push_back(g.enumerate_hom(Z, W));
                    std::vector<size_t> idx(pools.size(), 0);
                    while (true) {
                      std::vector<typename G::Mor> fs, gs;
                      for (int j = 0; j < J; ++j)
                        fs.push_back(pools[j][idx[j]]);
                      for (int k = 0; k < K; ++k)
                        gs.push_back(pools[J + k][idx[J + k]]);
                      run_tuple(fs, gs, pools.back()[idx.back()]);
                      int p = static_cast<int>(pools.size()) - 1;
                      while (p >= 0 && idx[p] + 1 == pools[p].size())
                        idx[p--] = 0;
                      if (p < 0) break;
                      ++idx[p];
                    }
                  } else {
                    for (int s = 0; s < b.tuple_samples; ++s) {
                      std::vector<typename G::Mor> fs, gs;
                      bool okay = true;
                      for (int j = 0; j < J && okay; ++j) {
                        auto m = detail::sample_mor(g, f_src[j], Y[j], b, rng);
                        if (!m) okay = false;
                        else fs.push_back(*m);
                      }
                      for (int k = 0; k < K && okay; ++k) {
                        auto m = detail::sample_mor(g, g_src[k], Z[k], b, rng);
                        if (!m) okay = false;
                        else gs.push_back(*m);
                      }
                      auto h = detail::sample_mor(g, Z, W, b, rng);
                      if (!okay || !h) {
                        ++rep.skipped;
                        break;
                      }
                      run_tuple(fs, gs, *h);
                    }
                  }
                });
          }
  return rep;
}

// Checks the derived input-permutation action: identity and composition laws,
// the decomposition of composition along a map-followed-by-bijection, and the
// three-way equivariance of composition under commuting bijection squares.
template <EnumerableGround G>
CheckReport check_symmetric_action(const G& g,
                                   const std::vector<typename G::Obj>& objs,
                                   const AxiomBounds& b) {
  CheckReport rep;
  std::mt19937_64 rng(b.seed);

  const auto sample = [&](const std::vector<typename G::Obj>& xs,
                          const typename G::Obj& y)
      -> std::optional<typename G::Mor> {
    if (g.hom_size(xs, y) == 0) return std::nullopt;
    auto m = detail::sample_mor(g, xs, y, b, rng);
    if (!m) ++rep.skipped;
    return m;
  };

  // action-identity and action-compose on all bijection pairs per arity.
  for (int n = 0; n <= b.max_arity; ++n) {
    const auto bijections = all_bijections(n);
    detail::for_each_assignment(
        objs.size(), n + 1, b.shell_cap, b.shell_samples, rng,
        [&](const std::vector<int>& pick) {
          std::vector<typename G::Obj> ys;
          for (int i = 0; i < n; ++i) ys.push_back(objs[pick[i] - 1]);
          const auto& w = objs[pick[n] - 1];
          const auto f = sample(ys, w);
          if (!f) return;
          rep.record(r_sigma(g, identity_map(n), *f) == *f, "action-identity",
                     [&] { return g.show_mor(*f); });
          for (const OrdMap& phi : bijections)
            for (const OrdMap& sigma : bijections) {
              const auto lhs = r_sigma(g, compose_map(phi, sigma), *f);
              const auto rhs = r_sigma(g, phi, r_sigma(g, sigma, *f));
              rep.record(lhs == rhs, "action-compose", [&] {
                return "phi=" + show(phi) + " sigma=" + show(sigma) +
                       " f=" + g.show_mor(*f);
              });
            }
        });
  }

  // action-decompose: mu_{phi·sigma}((f_k); w) = mu_phi((f_{sigma j}); r_sigma(w)).
  for (int I = 0; I <= b.max_arity; ++I)
    for (int J = 0; J <= b.max_arity; ++J)
      for (const OrdMap& phi : all_maps(I, J))
        for (const OrdMap& sigma : all_bijections(J)) {
          const OrdMap phisigma = compose_map(phi, sigma);
          detail::for_each_assignment(
              objs.size(), I + J + 1, b.shell_cap, b.shell_samples, rng,
              [&](const std::vector<int>& pick) {
                std::vector<typename G::Obj> X, T;
                for (int i = 0; i < I; ++i) X.push_back(objs[pick[i] - 1]);
                for (int j = 0; j < J; ++j)
                  T.push_back(objs[pick[I + j] - 1]);
                const auto& W = objs[pick[I + J] - 1];
                // outer w has source (T_k)_{k in J}
                const auto w = sample(T, W);
                if (!w) return;
                std::vector<typename G::Mor> fs;
                for (int k = 1; k <= J; ++k) {
                  std::vector<typename G::Obj> src;
                  for (int i : fiber(phisigma, k)) src.push_back(X[i - 1]);
                  auto m = sample(src, T[k - 1]);
                  if (!m) return;
                  fs.push_back(*m);
                }
                const auto lhs = g.compose(phisigma, fs, *w);
                std::vector<typename G::Mor> fs2;
                for (int j = 1; j <= J; ++j)
                  fs2.push_back(fs[sigma.values[j - 1] - 1]);
                const auto rhs = g.compose(phi, fs2, r_sigma(g, sigma, *w));
                rep.record(lhs == rhs, "action-decompose", [&] {
                  return "phi=" + show(phi) + " sigma=" + show(sigma);
                });
              });
        }

  // action-equivariance: for a commuting square  psi·pi = phi·sigma  (pi, sigma
  // bijections, psi determined), composing re-coordinated arguments over phi,
  // over pi·psi, or composing first and permuting last all agree.
  for (int n = 0; n <= b.max_arity; ++n)
    for (int m = 0; m <= b.max_arity; ++m)
      for (const OrdMap& phi : all_maps(n, m))
        for (const OrdMap& sigma : all_bijections(m))
          for (const OrdMap& pi : all_bijections(n)) {
            const OrdMap psi =
                compose_map(compose_map(inverse(pi), phi), sigma);
            const OrdMap pipsi = compose_map(pi, psi);
            detail::for_each_assignment(
                objs.size(), n + m + 1, 1,  // at most one assignment each
                1, rng, [&](const std::vector<int>& pick) {
                  std::vector<typename G::Obj> X, Y;
                  for (int i = 0; i < n; ++i) X.push_back(objs[pick[i] - 1]);
                  for (int j = 0; j < m; ++j)
                    Y.push_back(objs[pick[n + j] - 1]);
                  const auto& W = objs[pick[n + m] - 1];
                  const OrdMap pi_inv = inverse(pi);
                  const OrdMap sigma_inv = inverse(sigma);

                  // u_k : (X_{pi^{-1} l})_{l in psi^{-1} k} -> Y_{sigma^{-1} k}
                  std::vector<typename G::Mor> us;
                  std::vector<typename G::Obj> w_src;
                  for (int k = 1; k <= m; ++k) {
                    std::vector<typename G::Obj> src;
                    for (int l : fiber(psi, k))
                      src.push_back(X[pi_inv.values[l - 1] - 1]);
                    const auto& yk = Y[sigma_inv.values[k - 1] - 1];
                    auto u = sample(src, yk);
                    if (!u) return;
                    us.push_back(*u);
                    w_src.push_back(yk);
                  }
                  const auto w = sample(w_src, W);
                  if (!w) return;

                  const auto position = [](const std::vector<int>& v, int x) {
                    for (size_t q = 0; q < v.size(); ++q)
                      if (v[q] == x) return static_cast<int>(q) + 1;
                    throw OrdError("equivariance: fiber position not found");
                  };

                  // path 1: over phi with fiberwise re-coordination
                  std::vector<typename G::Mor> args1;
                  for (int j = 1; j <= m; ++j) {
                    const int sj = sigma.values[j - 1];
                    const std::vector<int> dom = fiber(phi, j);
                    const std::vector<int> cod = fiber(psi, sj);
                    std::vector<int> vals;
                    for (int i : dom)
                      vals.push_back(position(cod, pi.values[i - 1]));
                    const OrdMap varpi{static_cast<int>(dom.size()),
                                       static_cast<int>(cod.size()), vals};
                    args1.push_back(r_sigma(g, varpi, us[sj - 1]));
                  }
                  const auto v1 =
                      g.compose(phi, args1, r_sigma(g, sigma, *w));

                  // path 2: over pi·psi with re-coordinated arguments
                  std::vector<typename G::Mor> args2;
                  for (int k = 1; k <= m; ++k) {
                    const std::vector<int> dom = fiber(pipsi, k);
                    const std::vector<int> cod = fiber(psi, k);
                    std::vector<int> vals;
                    for (int i : dom)
                      vals.push_back(position(cod, pi.values[i - 1]));
                    const OrdMap pik{static_cast<int>(dom.size()),
                                     static_cast<int>(cod.size()), vals};
                    args2.push_back(r_sigma(g, pik, us[k - 1]));
                  }
                  const auto v2 = g.compose(pipsi, args2, *w);

                  // path 3: compose over psi, then permute inputs along pi
                  const auto v3 = r_sigma(g, pi, g.compose(psi, us, *w));

                  rep.record(v1 == v2 && v2 == v3, "action-equivariance", [&] {
                    return "phi=" + show(phi) + " sigma=" + show(sigma) +
                           " pi=" + show(pi) + " psi=" + show(psi);
                  });
                });
          }
  return rep;
}

}  // namespace mcat
