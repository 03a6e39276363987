#pragma once

#include "mcat/multicat.hpp"

#include <map>
#include <string>
#include <vector>

namespace mcat {

// ---------------------------------------------------------------------------
// The free prop on a ground structure G.
//
// Objects are words (finite sequences) of G-objects.  A morphism from
// (X_i)_{i in I} to (Y_j)_{j in J} is an index map phi : I -> J together with
// one G-morphism (X_i)_{i in phi^{-1} j} -> Y_j per target letter.  Distinct
// index maps give distinct morphisms.

template <Ground G>
using Word = std::vector<typename G::Obj>;

template <Ground G>
struct PropMorphism {
  Word<G> source;
  Word<G> target;
  OrdMap index;  // positions of source letters over target letters
  std::vector<typename G::Mor> components;  // one per target letter

  friend auto operator<=>(const PropMorphism&, const PropMorphism&) = default;
};

// Structural well-formedness: the index matches the words and each component
// has exactly the sources listed over its fiber.
template <Ground G>
void fv_validate(const G& g, const PropMorphism<G>& m) {
  if (m.index.source != static_cast<int>(m.source.size()) ||
      m.index.target != static_cast<int>(m.target.size()) ||
      m.components.size() != m.target.size())
    throw SignatureMismatch("prop morphism: index does not match the words");
  for (int j = 1; j <= m.index.target; ++j) {
    Word<G> expect;
    for (int i : fiber(m.index, j)) expect.push_back(m.source[i - 1]);
    if (g.source_of(m.components[j - 1]) != expect ||
        !(g.target_of(m.components[j - 1]) == m.target[j - 1]))
      throw SignatureMismatch("prop morphism: component signature mismatch");
  }
}

template <Ground G>
PropMorphism<G> fv_identity(const G& g, const Word<G>& w) {
  std::vector<typename G::Mor> comps;
  comps.reserve(w.size());
  for (const auto& x : w) comps.push_back(g.identity(x));
  return PropMorphism<G>{w, w, identity_map(static_cast<int>(w.size())),
                         std::move(comps)};
}

// Composition: indices compose; the component over k plugs the a-components
// sitting over the b-fiber of k into the b-component, along the restriction
// of a's index map.
template <Ground G>
PropMorphism<G> fv_compose(const G& g, const PropMorphism<G>& a,
                           const PropMorphism<G>& b) {
  if (a.target != b.source)
    throw SignatureMismatch("fv_compose: middle words do not match");
  std::vector<typename G::Mor> comps;
  comps.reserve(b.target.size());
  for (int k = 1; k <= b.index.target; ++k) {
    std::vector<typename G::Mor> block;
    for (int j : fiber(b.index, k)) block.push_back(a.components[j - 1]);
    comps.push_back(
        g.compose(fiber_restriction(a.index, b.index, k), block,
                  b.components[k - 1]));
  }
  return PropMorphism<G>{a.source, b.target, compose_map(a.index, b.index),
                         std::move(comps)};
}

// Tensor product: words concatenate, indices add up blockwise.
template <Ground G>
PropMorphism<G> fv_tensor(const G& g, const std::vector<PropMorphism<G>>& ms) {
  (void)g;
  PropMorphism<G> out;
  out.index = identity_map(0);
  for (const auto& m : ms) {
    out.source.insert(out.source.end(), m.source.begin(), m.source.end());
    out.target.insert(out.target.end(), m.target.begin(), m.target.end());
    out.index = disjoint_union(out.index, m.index);
    out.components.insert(out.components.end(), m.components.begin(),
                          m.components.end());
  }
  return out;
}

// The coherence morphism lambda^f for f : I -> J, where the word (X_k) is
// grouped into I blocks by the monotone map grouping : K -> I.  It reorders
// the word by the stable sort along grouping·f and has identity components.
template <Ground G>
PropMorphism<G> fv_lambda(const G& g, const OrdMap& f, const OrdMap& grouping,
                          const Word<G>& word) {
  if (!grouping.is_monotone())
    throw OrdError("fv_lambda: grouping must be monotone");
  if (grouping.source != static_cast<int>(word.size()) ||
      grouping.target != f.source)
    throw SignatureMismatch("fv_lambda: grouping does not match");
  const SigmaT st = sigma_t(compose_map(grouping, f));
  const OrdMap inv = inverse(st.sigma);
  Word<G> target;
  std::vector<typename G::Mor> comps;
  for (int p = 1; p <= st.sigma.target; ++p) {
    target.push_back(word[inv.values[p - 1] - 1]);
    comps.push_back(g.identity(target.back()));
  }
  return PropMorphism<G>{word, std::move(target), st.sigma, std::move(comps)};
}

// The symmetry (X)⊔(Y) -> (Y)⊔(X), indexed by the block swap with identity
// components listed in target order.
template <Ground G>
PropMorphism<G> fv_symmetry(const G& g, const Word<G>& x, const Word<G>& y) {
  Word<G> source = x, target = y;
  source.insert(source.end(), y.begin(), y.end());
  target.insert(target.end(), x.begin(), x.end());
  std::vector<typename G::Mor> comps;
  for (const auto& o : target) comps.push_back(g.identity(o));
  return PropMorphism<G>{std::move(source), std::move(target),
                         block_swap(static_cast<int>(x.size()),
                                    static_cast<int>(y.size())),
                         std::move(comps)};
}

template <EnumerableGround G>
unsigned long long fv_hom_size(const G& g, const Word<G>& x, const Word<G>& y) {
  unsigned long long total = 0;
  for (const OrdMap& phi : all_maps(static_cast<int>(x.size()),
                                    static_cast<int>(y.size()))) {
    unsigned long long prod = 1;
    for (int j = 1; j <= phi.target && prod; ++j) {
      Word<G> src;
      for (int i : fiber(phi, j)) src.push_back(x[i - 1]);
      prod = detail::sat_mul(prod, g.hom_size(src, y[j - 1]));
    }
    total += prod;  // saturation is fine for bounds checks
  }
  return total;
}

template <EnumerableGround G>
std::vector<PropMorphism<G>> fv_enumerate_hom(const G& g, const Word<G>& x,
                                              const Word<G>& y,
                                              long long cap = 100000) {
  if (fv_hom_size(g, x, y) > static_cast<unsigned long long>(cap))
    throw SizeBound("fv_enumerate_hom: hom set exceeds the cap");
  std::vector<PropMorphism<G>> out;
  for (const OrdMap& phi : all_maps(static_cast<int>(x.size()),
                                    static_cast<int>(y.size()))) {
    std::vector<std::vector<typename G::Mor>> pools;
    bool empty = false;
    for (int j = 1; j <= phi.target; ++j) {
      Word<G> src;
      for (int i : fiber(phi, j)) src.push_back(x[i - 1]);
      pools.push_back(g.enumerate_hom(src, y[j - 1]));
      empty = empty || pools.back().empty();
    }
    if (empty) continue;
    std::vector<size_t> idx(pools.size(), 0);
    while (true) {
      std::vector<typename G::Mor> comps;
      for (size_t j = 0; j < pools.size(); ++j) comps.push_back(pools[j][idx[j]]);
      out.push_back(PropMorphism<G>{x, y, phi, std::move(comps)});
      int p = static_cast<int>(pools.size()) - 1;
      while (p >= 0 && idx[p] + 1 == pools[p].size()) idx[p--] = 0;
      if (p < 0) break;
      ++idx[p];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The ground structure underlying a free prop: objects are single letters,
// a morphism (X_i)_I -> Y is a prop morphism from the word (X_i) to the
// one-letter word (Y), and substitution is  lambda^phi · (tensor of the
// arguments) · outer  computed inside the prop.

template <EnumerableGround G>
struct UPropGround {
  G ground;

  using Obj = typename G::Obj;
  using Mor = PropMorphism<G>;

  std::vector<Obj> source_of(const Mor& f) const { return f.source; }
  Obj target_of(const Mor& f) const {
    if (f.target.size() != 1)
      throw SignatureMismatch("underlying ground: target must be one letter");
    return f.target[0];
  }
  Mor identity(const Obj& x) const { return fv_identity(ground, Word<G>{x}); }

  Mor compose(const OrdMap& phi, const std::vector<Mor>& args,
              const Mor& outer) const {
    Word<G> src(static_cast<size_t>(phi.source));
    std::vector<int> used(static_cast<size_t>(phi.target), 0);
    for (int i = 0; i < phi.source; ++i) {
      const int j = phi.values[i];
      const auto& a = args[j - 1];
      if (used[j - 1] >= static_cast<int>(a.source.size()))
        throw SignatureMismatch("underlying ground: fiber arity mismatch");
      src[i] = a.source[used[j - 1]++];
    }
    for (int j = 0; j < phi.target; ++j)
      if (used[j] != static_cast<int>(args[j].source.size()))
        throw SignatureMismatch("underlying ground: fiber arity mismatch");
    const auto lam = fv_lambda(ground, phi, identity_map(phi.source), src);
    return fv_compose(ground, fv_compose(ground, lam, fv_tensor(ground, args)),
                      outer);
  }

  std::string show_obj(const Obj& x) const { return ground.show_obj(x); }
  std::string show_mor(const Mor& f) const {
    std::string out = "<" + show(f.index);
    for (const auto& c : f.components) out += " " + ground.show_mor(c);
    return out + ">";
  }

  unsigned long long hom_size(const std::vector<Obj>& xs, const Obj& y) const {
    return fv_hom_size(ground, xs, Word<G>{y});
  }
  std::vector<Mor> enumerate_hom(const std::vector<Obj>& xs,
                                 const Obj& y) const {
    return fv_enumerate_hom(ground, xs, Word<G>{y});
  }
};

// The right adjoint on a free prop: the underlying ground structure above.
template <EnumerableGround G>
UPropGround<G> u_functor(const G& ground) {
  return UPropGround<G>{ground};
}

// ---------------------------------------------------------------------------
// Functor data and the adjunction correspondence.

// A functor between ground structures, tabulated on finitely many objects and
// morphisms.
template <typename A, typename B>
struct GroundFunctor {
  std::map<typename A::Obj, typename B::Obj> obj;
  std::map<typename A::Mor, typename B::Mor> mor;

  friend auto operator<=>(const GroundFunctor&, const GroundFunctor&) = default;
};

// A strict symmetric monoidal functor between free props, determined by a
// color map together with values on single-target morphisms.
template <typename V, typename W>
struct PropFunctor {
  std::map<typename V::Obj, typename W::Obj> color;
  std::map<typename V::Mor, PropMorphism<W>> gen;

  friend auto operator<=>(const PropFunctor&, const PropFunctor&) = default;
};

// Apply the functor to a whole prop morphism: the image is
// lambda^{index} · (tensor of the generator values).
template <Ground V, Ground W>
PropMorphism<W> apply_prop_functor(const W& wg, const PropFunctor<V, W>& pf,
                                   const PropMorphism<V>& m) {
  Word<W> src;
  src.reserve(m.source.size());
  for (const auto& x : m.source) src.push_back(pf.color.at(x));
  const auto lam =
      fv_lambda(wg, m.index, identity_map(static_cast<int>(src.size())), src);
  std::vector<PropMorphism<W>> parts;
  parts.reserve(m.components.size());
  for (const auto& c : m.components) parts.push_back(pf.gen.at(c));
  return fv_compose(wg, lam, fv_tensor(wg, parts));
}

// The adjunction correspondence: a functor into the underlying ground of a
// free prop and the induced prop functor carry the same tabulated data; the
// two directions repackage it.
template <typename V, EnumerableGround W>
PropFunctor<V, W> theta(const GroundFunctor<V, UPropGround<W>>& f) {
  return PropFunctor<V, W>{f.obj, f.mor};
}

template <typename V, EnumerableGround W>
GroundFunctor<V, UPropGround<W>> theta_inverse(const PropFunctor<V, W>& g) {
  return GroundFunctor<V, UPropGround<W>>{g.color, g.gen};
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of functors (small cases only).

namespace detail {

// All morphisms between the given objects with arity at most max_arity.
template <EnumerableGround A>
std::vector<typename A::Mor> morphism_table(
    const A& a, const std::vector<typename A::Obj>& objs, int max_arity,
    long long cap) {
  std::vector<typename A::Mor> out;
  std::mt19937_64 rng(0);
  for (int n = 0; n <= max_arity; ++n)
    for_each_assignment(
        objs.size(), n + 1, cap, 0, rng, [&](const std::vector<int>& pick) {
          std::vector<typename A::Obj> xs;
          for (int i = 0; i < n; ++i) xs.push_back(objs[pick[i] - 1]);
          for (auto& f : a.enumerate_hom(xs, objs[pick[n] - 1]))
            out.push_back(std::move(f));
        });
  return out;
}

// All composition instances (phi, args, outer, result) whose data stay inside
// the table.
template <EnumerableGround A>
struct CompositionInstance {
  OrdMap phi;
  std::vector<size_t> args;  // indices into the table
  size_t outer = 0;
  typename A::Mor result;
};

template <EnumerableGround A>
std::vector<CompositionInstance<A>> composition_instances(
    const A& a, const std::vector<typename A::Mor>& table, int max_arity) {
  std::vector<CompositionInstance<A>> out;
  for (size_t o = 0; o < table.size(); ++o) {
    const auto osrc = a.source_of(table[o]);
    const int J = static_cast<int>(osrc.size());
    std::vector<std::vector<size_t>> choices(static_cast<size_t>(J));
    for (int j = 0; j < J; ++j)
      for (size_t t = 0; t < table.size(); ++t)
        if (a.target_of(table[t]) == osrc[j]) choices[j].push_back(t);
    bool any_empty = false;
    for (const auto& c : choices) any_empty = any_empty || c.empty();
    if (any_empty && J > 0) continue;
    std::vector<size_t> pick(static_cast<size_t>(J), 0);
    while (true) {
      std::vector<size_t> args(static_cast<size_t>(J));
      std::vector<int> arities(static_cast<size_t>(J));
      int I = 0;
      for (int j = 0; j < J; ++j) {
        args[j] = choices[j][pick[j]];
        arities[j] = static_cast<int>(a.source_of(table[args[j]]).size());
        I += arities[j];
      }
      if (I <= max_arity) {
        for (const OrdMap& phi : all_maps(I, J)) {
          std::vector<int> fiber_size(static_cast<size_t>(J), 0);
          bool fits = true;
          for (int v : phi.values) ++fiber_size[v - 1];
          for (int j = 0; j < J && fits; ++j) fits = fiber_size[j] == arities[j];
          if (!fits) continue;
          std::vector<typename A::Mor> arg_mors;
          for (size_t t : args) arg_mors.push_back(table[t]);
          out.push_back(CompositionInstance<A>{
              phi, args, o, a.compose(phi, arg_mors, table[o])});
        }
      }
      int j = J - 1;
      while (j >= 0 && pick[j] + 1 == choices[j].size()) pick[j--] = 0;
      if (j < 0) break;
      ++pick[j];
    }
  }
  return out;
}

}  // namespace detail

// Enumerate all structure-preserving functors A -> B tabulated on the
// morphisms of arity <= max_arity between the given objects: identities map
// to identities and every composition instance inside the table is preserved.
template <EnumerableGround A, EnumerableGround B>
std::vector<GroundFunctor<A, B>> enumerate_multifunctors(
    const A& a, const std::vector<typename A::Obj>& aobjs, const B& bg,
    const std::vector<typename B::Obj>& bobjs, int max_arity,
    long long candidate_cap = 10000) {
  const auto table = detail::morphism_table(a, aobjs, max_arity, 1 << 20);
  const auto instances = detail::composition_instances(a, table, max_arity);
  std::map<typename A::Mor, size_t> table_index;
  for (size_t t = 0; t < table.size(); ++t) table_index[table[t]] = t;

  std::vector<GroundFunctor<A, B>> out;
  std::mt19937_64 rng(0);
  detail::for_each_assignment(
      bobjs.size(), static_cast<int>(aobjs.size()), 1 << 20, 0, rng,
      [&](const std::vector<int>& pick) {
        std::map<typename A::Obj, typename B::Obj> obj_map;
        for (size_t i = 0; i < aobjs.size(); ++i)
          obj_map[aobjs[i]] = bobjs[pick[i] - 1];

        // candidate values per table entry; identities are forced
        std::vector<std::vector<typename B::Mor>> cands(table.size());
        long long combos = 1;
        for (size_t t = 0; t < table.size(); ++t) {
          bool is_id = false;
          for (const auto& x : aobjs)
            is_id = is_id || table[t] == a.identity(x);
          std::vector<typename B::Obj> src;
          for (const auto& x : a.source_of(table[t]))
            src.push_back(obj_map.at(x));
          const auto tgt = obj_map.at(a.target_of(table[t]));
          if (is_id) {
            cands[t] = {bg.identity(tgt)};
          } else {
            cands[t] = bg.enumerate_hom(src, tgt);
          }
          combos *= static_cast<long long>(cands[t].size());
          if (combos == 0) break;
          if (combos > candidate_cap)
            throw SizeBound("enumerate_multifunctors: too many candidates");
        }
        if (combos == 0) return;

        std::vector<size_t> pickv(table.size(), 0);
        while (true) {
          GroundFunctor<A, B> f;
          f.obj = obj_map;
          for (size_t t = 0; t < table.size(); ++t)
            f.mor[table[t]] = cands[t][pickv[t]];
          bool lawful = true;
          for (const auto& inst : instances) {
            std::vector<typename B::Mor> imgs;
            for (size_t t : inst.args) imgs.push_back(f.mor.at(table[t]));
            if (!(bg.compose(inst.phi, imgs, f.mor.at(table[inst.outer])) ==
                  f.mor.at(inst.result))) {
              lawful = false;
              break;
            }
          }
          if (lawful) out.push_back(std::move(f));
          int t = static_cast<int>(table.size()) - 1;
          while (t >= 0 && pickv[t] + 1 == cands[t].size()) pickv[t--] = 0;
          if (t < 0) break;
          ++pickv[t];
        }
      });
  return out;
}

// Enumerate all strict prop functors between free props, tabulated by color
// map and generator values, constrained by functoriality on all prop
// morphisms between words of length <= max_word_len: composition, tensor and
// coherence morphisms must be preserved.
template <EnumerableGround V, EnumerableGround W>
std::vector<PropFunctor<V, W>> enumerate_prop_functors(
    const V& vg, const std::vector<typename V::Obj>& vobjs, const W& wg,
    const std::vector<typename W::Obj>& wobjs, int max_arity,
    int max_word_len, long long candidate_cap = 10000) {
  const auto table = detail::morphism_table(vg, vobjs, max_arity, 1 << 20);
  std::map<typename V::Mor, size_t> table_index;
  for (size_t t = 0; t < table.size(); ++t) table_index[table[t]] = t;

  // all words over vobjs of length <= max_word_len
  std::vector<Word<V>> words;
  std::mt19937_64 rng(0);
  for (int len = 0; len <= max_word_len; ++len)
    detail::for_each_assignment(vobjs.size(), len, 1 << 20, 0, rng,
                                [&](const std::vector<int>& pick) {
                                  Word<V> w;
                                  for (int i = 0; i < len; ++i)
                                    w.push_back(vobjs[pick[i] - 1]);
                                  words.push_back(std::move(w));
                                });
  if (vobjs.empty()) words.push_back({});

  // all prop morphisms between window words, fixed across color maps
  std::vector<PropMorphism<V>> window;
  for (const auto& x : words)
    for (const auto& y : words)
      for (auto& m : fv_enumerate_hom(vg, x, y)) window.push_back(std::move(m));

  std::vector<PropFunctor<V, W>> out;
  detail::for_each_assignment(
      wobjs.size(), static_cast<int>(vobjs.size()), 1 << 20, 0, rng,
      [&](const std::vector<int>& pick) {
        PropFunctor<V, W> base;
        for (size_t i = 0; i < vobjs.size(); ++i)
          base.color[vobjs[i]] = wobjs[pick[i] - 1];

        std::vector<std::vector<PropMorphism<W>>> cands(table.size());
        long long combos = 1;
        for (size_t t = 0; t < table.size(); ++t) {
          bool is_id = false;
          for (const auto& x : vobjs)
            is_id = is_id || table[t] == vg.identity(x);
          Word<W> src;
          for (const auto& x : vg.source_of(table[t]))
            src.push_back(base.color.at(x));
          const Word<W> tgt{base.color.at(vg.target_of(table[t]))};
          if (is_id) {
            cands[t] = {fv_identity(wg, tgt)};
          } else {
            cands[t] = fv_enumerate_hom(wg, src, tgt);
          }
          combos *= static_cast<long long>(cands[t].size());
          if (combos == 0) break;
          if (combos > candidate_cap)
            throw SizeBound("enumerate_prop_functors: too many candidates");
        }
        if (combos == 0) return;

        std::vector<size_t> pickv(table.size(), 0);
        while (true) {
          PropFunctor<V, W> f = base;
          for (size_t t = 0; t < table.size(); ++t)
            f.gen[table[t]] = cands[t][pickv[t]];

          bool lawful = true;
          // composition preservation on the window
          for (size_t s = 0; s < window.size() && lawful; ++s)
            for (size_t u = 0; u < window.size() && lawful; ++u) {
              if (window[s].target != window[u].source) continue;
              const auto c = fv_compose(vg, window[s], window[u]);
              bool inside = true;
              for (const auto& comp : c.components)
                inside = inside && f.gen.count(comp);
              if (!inside) continue;
              lawful = apply_prop_functor(wg, f, c) ==
                       fv_compose(wg, apply_prop_functor(wg, f, window[s]),
                                  apply_prop_functor(wg, f, window[u]));
            }
          // tensor preservation on pairs
          for (size_t s = 0; s < window.size() && lawful; ++s)
            for (size_t u = 0; u < window.size() && lawful; ++u) {
              const auto tens = fv_tensor(vg, {window[s], window[u]});
              if (tens.source.size() >
                  static_cast<size_t>(max_word_len))
                continue;
              lawful = apply_prop_functor(wg, f, tens) ==
                       fv_tensor(wg, {apply_prop_functor(wg, f, window[s]),
                                      apply_prop_functor(wg, f, window[u])});
            }
          // coherence preservation: lambda^h goes to lambda^h
          for (const auto& w : words)
            for (int i = 0; i <= max_word_len && lawful; ++i)
              for (const OrdMap& grouping :
                   all_monotone(static_cast<int>(w.size()), i))
                for (int j = 0; j <= max_word_len && lawful; ++j)
                  for (const OrdMap& h : all_maps(i, j)) {
                    Word<W> mapped;
                    for (const auto& x : w) mapped.push_back(f.color.at(x));
                    lawful =
                        apply_prop_functor(wg, f,
                                           fv_lambda(vg, h, grouping, w)) ==
                        fv_lambda(wg, h, grouping, mapped);
                  }
          if (lawful) out.push_back(std::move(f));
          int t = static_cast<int>(table.size()) - 1;
          while (t >= 0 && pickv[t] + 1 == cands[t].size()) pickv[t--] = 0;
          if (t < 0) break;
          ++pickv[t];
        }
      });
  return out;
}

}  // namespace mcat
