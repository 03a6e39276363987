#pragma once

#include "mcat/multicat.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace mcat {

// A quiver enriched in a ground structure: named objects and, for every
// ordered pair of names, a hom object.
template <Ground G>
struct VQuiver {
  std::vector<std::string> objects;
  std::map<std::pair<std::string, std::string>, typename G::Obj> homobj;

  friend bool operator==(const VQuiver&, const VQuiver&) = default;
  friend std::weak_ordering operator<=>(const VQuiver&,
                                        const VQuiver&) = default;
};

template <Ground G>
const typename G::Obj& hom_of(const VQuiver<G>& q, const std::string& a,
                              const std::string& b) {
  const auto it = q.homobj.find({a, b});
  if (it == q.homobj.end())
    throw SignatureMismatch("hom_of: no hom object for (" + a + "," + b + ")");
  return it->second;
}

// A category enriched in the ground structure: a quiver together with binary
// composition elements and nullary identity elements.
template <Ground G>
struct VCategory {
  VQuiver<G> quiver;
  // kappa[(X,Y,Z)] : (C(X,Y), C(Y,Z)) -> C(X,Z), diagram order
  std::map<std::tuple<std::string, std::string, std::string>, typename G::Mor>
      kappa;
  // ident[X] : () -> C(X,X)
  std::map<std::string, typename G::Mor> ident;

  friend bool operator==(const VCategory&, const VCategory&) = default;
  friend std::weak_ordering operator<=>(const VCategory&,
                                        const VCategory&) = default;
};

template <Ground G>
const typename G::Mor& kappa_of(const VCategory<G>& c, const std::string& x,
                                const std::string& y, const std::string& z) {
  const auto it = c.kappa.find({x, y, z});
  if (it == c.kappa.end())
    throw SignatureMismatch("kappa_of: no composition for (" + x + "," + y +
                            "," + z + ")");
  return it->second;
}

template <Ground G>
const typename G::Mor& ident_of(const VCategory<G>& c, const std::string& x) {
  const auto it = c.ident.find(x);
  if (it == c.ident.end())
    throw SignatureMismatch("ident_of: no identity for " + x);
  return it->second;
}

// A morphism with several enriched categories as entries: an object map on
// tuples plus one ground morphism per pair of object tuples.  Whether it is a
// functor (compatible with composition and identities) is checked by
// check_functor, not assumed; bare values also serve as quiver morphisms.
template <Ground G>
struct MultiEntryFunctor {
  std::vector<VCategory<G>> sources;
  VCategory<G> target;
  std::map<std::vector<std::string>, std::string> obj_map;
  // components[((A_i),(D_i))] : (A_i(A_i,D_i))_i -> B(F(A), F(D))
  std::map<std::pair<std::vector<std::string>, std::vector<std::string>>,
           typename G::Mor>
      components;

  friend bool operator==(const MultiEntryFunctor&,
                         const MultiEntryFunctor&) = default;
  friend std::weak_ordering operator<=>(const MultiEntryFunctor&,
                                        const MultiEntryFunctor&) = default;
};

template <Ground G>
const std::string& object_image(const MultiEntryFunctor<G>& f,
                                const std::vector<std::string>& tuple) {
  const auto it = f.obj_map.find(tuple);
  if (it == f.obj_map.end())
    throw SignatureMismatch("object_image: tuple not in the object table");
  return it->second;
}

template <Ground G>
const typename G::Mor& component_of(const MultiEntryFunctor<G>& f,
                                    const std::vector<std::string>& a,
                                    const std::vector<std::string>& d) {
  const auto it = f.components.find({a, d});
  if (it == f.components.end())
    throw SignatureMismatch("component_of: pair not in the component table");
  return it->second;
}

// A family of nullary ground morphisms between the images of two parallel
// multi-entry morphisms, one per object tuple.
template <Ground G>
struct VNatTransformation {
  MultiEntryFunctor<G> source;
  MultiEntryFunctor<G> target;
  // components[(A_i)] : () -> C(F(A), G(A))
  std::map<std::vector<std::string>, typename G::Mor> components;

  friend bool operator==(const VNatTransformation&,
                         const VNatTransformation&) = default;
  friend std::weak_ordering operator<=>(const VNatTransformation&,
                                        const VNatTransformation&) = default;
};

template <Ground G>
const typename G::Mor& nat_component(const VNatTransformation<G>& t,
                                     const std::vector<std::string>& tuple) {
  const auto it = t.components.find(tuple);
  if (it == t.components.end())
    throw SignatureMismatch("nat_component: tuple not in the component table");
  return it->second;
}

inline std::string tuple_name(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out + ")";
}

// All object tuples of a family, odometer order with the last entry fastest.
// An empty family has exactly the empty tuple; a family containing an empty
// category has none.  Exceeding the cap raises SizeBound.
template <Ground G>
std::vector<std::vector<std::string>> object_tuples(
    const std::vector<VCategory<G>>& cats, long long cap = 10000) {
  unsigned long long count = 1;
  for (const auto& c : cats)
    count = detail::sat_mul(count, c.quiver.objects.size());
  if (count > static_cast<unsigned long long>(cap))
    throw SizeBound("object_tuples: " + std::to_string(count) +
                    " tuples exceed the bound " + std::to_string(cap));
  std::vector<std::vector<std::string>> out;
  if (count == 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> idx(cats.size(), 0);
  while (true) {
    std::vector<std::string> t;
    t.reserve(cats.size());
    for (std::size_t p = 0; p < cats.size(); ++p)
      t.push_back(cats[p].quiver.objects[idx[p]]);
    out.push_back(std::move(t));
    int p = static_cast<int>(cats.size()) - 1;
    while (p >= 0 && idx[p] + 1 == cats[p].quiver.objects.size()) idx[p--] = 0;
    if (p < 0) break;
    ++idx[p];
  }
  return out;
}

// The source list (A_i(A_i, D_i))_i of a component at a pair of tuples.
template <Ground G>
std::vector<typename G::Obj> hom_list(const std::vector<VCategory<G>>& cats,
                                      const std::vector<std::string>& as,
                                      const std::vector<std::string>& ds) {
  if (as.size() != cats.size() || ds.size() != cats.size())
    throw SignatureMismatch("hom_list: tuple length does not match the family");
  std::vector<typename G::Obj> out;
  out.reserve(cats.size());
  for (std::size_t i = 0; i < cats.size(); ++i)
    out.push_back(hom_of(cats[i].quiver, as[i], ds[i]));
  return out;
}

namespace detail {

// Record one law instance; structural exceptions raised while computing it
// (bad signatures, missing table entries) count as failures with a witness.
template <typename DetailFn, typename ComputeFn>
void record_law(CheckReport& rep, const std::string& law, DetailFn&& detail,
                ComputeFn&& compute) {
  try {
    rep.record(compute(), law, detail);
  } catch (const std::exception& e) {
    rep.record(false, law,
               [&] { return detail() + " raised: " + std::string(e.what()); });
  }
}

}  // namespace detail

// Verifies the signatures of the composition and identity tables, the
// associativity square on every object quadruple, and both unit laws on every
// object pair.  Mathematical failures land in the report.
template <Ground G>
CheckReport check_category(const G& g, const VCategory<G>& c) {
  CheckReport rep;
  const auto& obs = c.quiver.objects;

  for (const auto& x : obs)
    for (const auto& y : obs)
      rep.record(c.quiver.homobj.count({x, y}) > 0, "hom-total",
                 [&] { return "(" + x + "," + y + ")"; });

  for (const auto& x : obs)
    for (const auto& y : obs)
      for (const auto& z : obs)
        detail::record_law(
            rep, "kappa-signature",
            [&] { return "(" + x + "," + y + "," + z + ")"; },
            [&] {
              const auto& k = kappa_of(c, x, y, z);
              const std::vector<typename G::Obj> want{
                  hom_of(c.quiver, x, y), hom_of(c.quiver, y, z)};
              return std::vector<typename G::Obj>(g.source_of(k)) == want &&
                     g.target_of(k) == hom_of(c.quiver, x, z);
            });

  for (const auto& x : obs)
    detail::record_law(
        rep, "ident-signature", [&] { return x; },
        [&] {
          const auto& e = ident_of(c, x);
          return std::vector<typename G::Obj>(g.source_of(e)).empty() &&
                 g.target_of(e) == hom_of(c.quiver, x, x);
        });

  for (const auto& x : obs)
    for (const auto& y : obs) {
      detail::record_law(
          rep, "unit-left", [&] { return "(" + x + "," + y + ")"; },
          [&] {
            const auto one = g.identity(hom_of(c.quiver, x, y));
            return g.compose(inj2(1, 1), {ident_of(c, x), one},
                             kappa_of(c, x, x, y)) == one;
          });
      detail::record_law(
          rep, "unit-right", [&] { return "(" + x + "," + y + ")"; },
          [&] {
            const auto one = g.identity(hom_of(c.quiver, x, y));
            return g.compose(inj1(1, 1), {one, ident_of(c, y)},
                             kappa_of(c, x, y, y)) == one;
          });
    }

  for (const auto& w : obs)
    for (const auto& x : obs)
      for (const auto& y : obs)
        for (const auto& z : obs)
          detail::record_law(
              rep, "associativity",
              [&] { return "(" + w + "," + x + "," + y + "," + z + ")"; },
              [&] {
                const auto tr = g.compose(
                    ord_map(3, 2, {1, 2, 2}),
                    {g.identity(hom_of(c.quiver, w, x)), kappa_of(c, x, y, z)},
                    kappa_of(c, w, x, z));
                const auto lb = g.compose(
                    ord_map(3, 2, {1, 1, 2}),
                    {kappa_of(c, w, x, y), g.identity(hom_of(c.quiver, y, z))},
                    kappa_of(c, w, y, z));
                return tr == lb;
              });
  return rep;
}

// Verifies that a multi-entry morphism is a functor: component signatures,
// compatibility with composition on every triple of object tuples, and unit
// coherence on every object tuple.
template <Ground G>
CheckReport check_functor(const G& g, const MultiEntryFunctor<G>& f) {
  CheckReport rep;
  const int n = static_cast<int>(f.sources.size());
  const auto tuples = object_tuples(f.sources);

  for (const auto& a : tuples)
    for (const auto& d : tuples)
      detail::record_law(
          rep, "component-signature",
          [&] { return tuple_name(a) + "->" + tuple_name(d); },
          [&] {
            const auto& comp = component_of(f, a, d);
            return std::vector<typename G::Obj>(g.source_of(comp)) ==
                       hom_list(f.sources, a, d) &&
                   g.target_of(comp) ==
                       hom_of(f.target.quiver, object_image(f, a),
                              object_image(f, d));
          });

  for (const auto& a : tuples)
    for (const auto& d : tuples)
      for (const auto& e : tuples)
        detail::record_law(
            rep, "functor-compose",
            [&] {
              return tuple_name(a) + "->" + tuple_name(d) + "->" +
                     tuple_name(e);
            },
            [&] {
              std::vector<int> blocks(static_cast<std::size_t>(2 * n), 1);
              for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(n + i)] = 2;
              const auto lb = g.compose(
                  ord_map(2 * n, 2, blocks),
                  {component_of(f, a, d), component_of(f, d, e)},
                  kappa_of(f.target, object_image(f, a), object_image(f, d),
                           object_image(f, e)));
              std::vector<typename G::Mor> ks;
              ks.reserve(static_cast<std::size_t>(n));
              for (int i = 0; i < n; ++i)
                ks.push_back(kappa_of(f.sources[static_cast<std::size_t>(i)],
                                      a[static_cast<std::size_t>(i)],
                                      d[static_cast<std::size_t>(i)],
                                      e[static_cast<std::size_t>(i)]));
              const auto tr = g.compose(chi(n), ks, component_of(f, a, e));
              return lb == tr;
            });

  for (const auto& a : tuples)
    detail::record_law(
        rep, "functor-unit", [&] { return tuple_name(a); },
        [&] {
          std::vector<typename G::Mor> ids;
          ids.reserve(static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i)
            ids.push_back(ident_of(f.sources[static_cast<std::size_t>(i)],
                                   a[static_cast<std::size_t>(i)]));
          return g.compose(ord_map(0, n, {}), ids, component_of(f, a, a)) ==
                 ident_of(f.target, object_image(f, a));
        });
  return rep;
}

// Verifies the naturality square at every pair of object tuples: composing
// the source component with the transformation at the far tuple agrees with
// composing the transformation at the near tuple with the target component.
template <Ground G>
CheckReport check_naturality(const G& g, const VNatTransformation<G>& t) {
  if (t.source.sources != t.target.sources ||
      t.source.target != t.target.target)
    throw SignatureMismatch(
        "check_naturality: the two morphisms have different shapes");
  CheckReport rep;
  const int n = static_cast<int>(t.source.sources.size());
  const auto tuples = object_tuples(t.source.sources);
  const VCategory<G>& c = t.source.target;

  for (const auto& a : tuples)
    detail::record_law(
        rep, "component-signature", [&] { return tuple_name(a); },
        [&] {
          const auto& comp = nat_component(t, a);
          return std::vector<typename G::Obj>(g.source_of(comp)).empty() &&
                 g.target_of(comp) ==
                     hom_of(c.quiver, object_image(t.source, a),
                            object_image(t.target, a));
        });

  for (const auto& a : tuples)
    for (const auto& d : tuples)
      detail::record_law(
          rep, "naturality",
          [&] { return tuple_name(a) + "->" + tuple_name(d); },
          [&] {
            const auto& fa = object_image(t.source, a);
            const auto& fd = object_image(t.source, d);
            const auto& ga = object_image(t.target, a);
            const auto& gd = object_image(t.target, d);
            const auto bprime = g.compose(
                ord_map(n, 2, std::vector<int>(static_cast<std::size_t>(n), 1)),
                {component_of(t.source, a, d), nat_component(t, d)},
                kappa_of(c, fa, fd, gd));
            const auto gprime = g.compose(
                ord_map(n, 2, std::vector<int>(static_cast<std::size_t>(n), 2)),
                {nat_component(t, a), component_of(t.target, a, d)},
                kappa_of(c, fa, ga, gd));
            return bprime == gprime;
          });
  return rep;
}

template <Ground G>
MultiEntryFunctor<G> identity_functor(const G& g, const VCategory<G>& a) {
  MultiEntryFunctor<G> f;
  f.sources = {a};
  f.target = a;
  for (const auto& x : a.quiver.objects) {
    f.obj_map[{x}] = x;
    for (const auto& y : a.quiver.objects)
      f.components[{{x}, {y}}] = g.identity(hom_of(a.quiver, x, y));
  }
  return f;
}

// The transformation whose component at every tuple is the identity element
// of the target category at the image object.
template <Ground G>
VNatTransformation<G> identity_transformation(const G& g,
                                              const MultiEntryFunctor<G>& f) {
  (void)g;
  VNatTransformation<G> t{f, f, {}};
  for (const auto& [tuple, name] : f.obj_map)
    t.components[tuple] = ident_of(f.target, name);
  return t;
}

// Data-level composition of multi-entry morphisms along an index map: the
// object map is the composite and every component is the ground composition
// of the inner blocks into the outer component.  Works for bare quiver
// morphisms; on functor inputs the result again satisfies the functor laws.
template <Ground G>
MultiEntryFunctor<G> quiver_compose(const G& g, const OrdMap& phi,
                                    const std::vector<MultiEntryFunctor<G>>& fs,
                                    const MultiEntryFunctor<G>& outer) {
  const int I = phi.source;
  const int J = phi.target;
  if (static_cast<int>(fs.size()) != J)
    throw SignatureMismatch("quiver_compose: expected " + std::to_string(J) +
                            " inner morphisms, got " +
                            std::to_string(fs.size()));
  if (static_cast<int>(outer.sources.size()) != J)
    throw SignatureMismatch(
        "quiver_compose: outer arity does not match the index map");
  std::vector<std::vector<int>> fibers;
  fibers.reserve(static_cast<std::size_t>(J));
  for (int j = 1; j <= J; ++j) fibers.push_back(fiber(phi, j));
  for (int j = 0; j < J; ++j) {
    const auto& fj = fs[static_cast<std::size_t>(j)];
    if (fj.sources.size() != fibers[static_cast<std::size_t>(j)].size())
      throw SignatureMismatch(
          "quiver_compose: inner arity does not match its fiber");
    if (fj.target != outer.sources[static_cast<std::size_t>(j)])
      throw SignatureMismatch(
          "quiver_compose: inner target differs from the outer source");
  }

  MultiEntryFunctor<G> h;
  h.sources.resize(static_cast<std::size_t>(I));
  for (int j = 0; j < J; ++j)
    for (std::size_t r = 0; r < fibers[static_cast<std::size_t>(j)].size();
         ++r)
      h.sources[static_cast<std::size_t>(
          fibers[static_cast<std::size_t>(j)][r] - 1)] =
          fs[static_cast<std::size_t>(j)].sources[r];
  h.target = outer.target;

  const auto restrict_tuple = [&](const std::vector<std::string>& t, int j) {
    std::vector<std::string> s;
    s.reserve(fibers[static_cast<std::size_t>(j)].size());
    for (int i : fibers[static_cast<std::size_t>(j)])
      s.push_back(t[static_cast<std::size_t>(i - 1)]);
    return s;
  };
  const auto middle = [&](const std::vector<std::string>& t) {
    std::vector<std::string> b;
    b.reserve(static_cast<std::size_t>(J));
    for (int j = 0; j < J; ++j)
      b.push_back(object_image(fs[static_cast<std::size_t>(j)],
                               restrict_tuple(t, j)));
    return b;
  };

  const auto tuples = object_tuples(h.sources);
  for (const auto& a : tuples) h.obj_map[a] = object_image(outer, middle(a));
  for (const auto& a : tuples)
    for (const auto& e : tuples) {
      std::vector<typename G::Mor> blocks;
      blocks.reserve(static_cast<std::size_t>(J));
      for (int j = 0; j < J; ++j)
        blocks.push_back(component_of(fs[static_cast<std::size_t>(j)],
                                      restrict_tuple(a, j),
                                      restrict_tuple(e, j)));
      h.components[{a, e}] =
          g.compose(phi, blocks, component_of(outer, middle(a), middle(e)));
    }
  return h;
}

// Composition of multi-entry functors: the same underlying computation.
template <Ground G>
MultiEntryFunctor<G> compose_functors(
    const G& g, const OrdMap& phi, const std::vector<MultiEntryFunctor<G>>& fs,
    const MultiEntryFunctor<G>& outer) {
  return quiver_compose(g, phi, fs, outer);
}

// The functor with no entries selecting one object; its unique component is
// the identity element of that object.
template <Ground G>
MultiEntryFunctor<G> nullary_functor(const VCategory<G>& b,
                                     const std::string& obj) {
  MultiEntryFunctor<G> f;
  f.target = b;
  f.obj_map[{}] = obj;
  f.components[{{}, {}}] = ident_of(b, obj);
  return f;
}

template <Ground G>
const std::string& nullary_object(const MultiEntryFunctor<G>& f) {
  if (!f.sources.empty())
    throw SignatureMismatch("nullary_object: the functor has entries");
  return object_image(f, {});
}

// Exhaustive generate-and-check enumeration of all multi-entry functors from
// a family to a target: every object map, then every component table drawn
// from the ground hom enumerations, kept when the functor laws hold.  The
// candidate count is capped; enumeration order is canonical.
template <EnumerableGround G>
std::vector<MultiEntryFunctor<G>> enumerate_functors(
    const G& g, const std::vector<VCategory<G>>& sources,
    const VCategory<G>& target, long long max_candidates = 10000) {
  const auto tuples = object_tuples(sources);
  const auto& tobs = target.quiver.objects;
  std::vector<MultiEntryFunctor<G>> found;
  if (tuples.empty()) {
    // a family with an empty entry admits exactly the empty morphism
    MultiEntryFunctor<G> f;
    f.sources = sources;
    f.target = target;
    found.push_back(std::move(f));
    return found;
  }
  if (tobs.empty()) return found;  // no object maps at all

  unsigned long long total = 0;
  std::vector<std::size_t> pick(tuples.size(), 0);
  while (true) {
    MultiEntryFunctor<G> base;
    base.sources = sources;
    base.target = target;
    for (std::size_t t = 0; t < tuples.size(); ++t)
      base.obj_map[tuples[t]] = tobs[pick[t]];

    // component pools per pair of tuples, in pair order
    bool possible = true;
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
        keys;
    std::vector<std::vector<typename G::Mor>> pools;
    unsigned long long count = 1;
    for (const auto& a : tuples) {
      for (const auto& d : tuples) {
        auto pool = g.enumerate_hom(
            hom_list(sources, a, d),
            hom_of(target.quiver, base.obj_map.at(a), base.obj_map.at(d)));
        if (pool.empty()) {
          possible = false;
          break;
        }
        count = detail::sat_mul(count, pool.size());
        keys.push_back({a, d});
        pools.push_back(std::move(pool));
      }
      if (!possible) break;
    }
    if (possible) {
      total += count;
      if (total > static_cast<unsigned long long>(max_candidates))
        throw SizeBound("enumerate_functors: candidate count exceeds " +
                        std::to_string(max_candidates));
      std::vector<std::size_t> idx(pools.size(), 0);
      while (true) {
        MultiEntryFunctor<G> cand = base;
        for (std::size_t p = 0; p < pools.size(); ++p)
          cand.components[keys[p]] = pools[p][idx[p]];
        if (check_functor(g, cand).ok()) found.push_back(std::move(cand));
        int p = static_cast<int>(pools.size()) - 1;
        while (p >= 0 &&
               idx[static_cast<std::size_t>(p)] + 1 ==
                   pools[static_cast<std::size_t>(p)].size())
          idx[static_cast<std::size_t>(p--)] = 0;
        if (p < 0) break;
        ++idx[static_cast<std::size_t>(p)];
      }
    }
    int t = static_cast<int>(tuples.size()) - 1;
    while (t >= 0 && pick[static_cast<std::size_t>(t)] + 1 == tobs.size())
      pick[static_cast<std::size_t>(t--)] = 0;
    if (t < 0) break;
    ++pick[static_cast<std::size_t>(t)];
  }
  return found;
}

// ---------------------------------------------------------------------------
// Products and equalizers of enriched categories

template <typename G>
struct VCatProduct {
  VCategory<G> category;
  std::vector<MultiEntryFunctor<G>> projections;
};

// The product category: object tuples as names, ground products as homs,
// componentwise composition and identities, with projection functors.
template <CompleteGround G>
VCatProduct<G> vcat_product(const G& g, const std::vector<VCategory<G>>& cats) {
  const auto tuples = object_tuples(cats);
  const int n = static_cast<int>(cats.size());
  VCatProduct<G> out;
  VCategory<G>& p = out.category;

  for (const auto& t : tuples) p.quiver.objects.push_back(tuple_name(t));
  for (const auto& x : tuples)
    for (const auto& y : tuples)
      p.quiver.homobj[{tuple_name(x), tuple_name(y)}] =
          g.product(hom_list(cats, x, y));

  for (const auto& x : tuples) {
    std::vector<typename G::Mor> ids;
    ids.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      ids.push_back(ident_of(cats[static_cast<std::size_t>(i)],
                             x[static_cast<std::size_t>(i)]));
    p.ident[tuple_name(x)] = g.tuple_into_product({}, ids);
  }

  for (const auto& x : tuples)
    for (const auto& y : tuples)
      for (const auto& z : tuples) {
        const auto xy = hom_list(cats, x, y);
        const auto yz = hom_list(cats, y, z);
        const std::vector<typename G::Obj> pair_src{g.product(xy),
                                                    g.product(yz)};
        std::vector<typename G::Mor> legs;
        legs.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
          legs.push_back(g.compose(
              identity_map(2),
              {g.projection(xy, i + 1), g.projection(yz, i + 1)},
              kappa_of(cats[static_cast<std::size_t>(i)],
                       x[static_cast<std::size_t>(i)],
                       y[static_cast<std::size_t>(i)],
                       z[static_cast<std::size_t>(i)])));
        p.kappa[{tuple_name(x), tuple_name(y), tuple_name(z)}] =
            g.tuple_into_product(pair_src, legs);
      }

  for (int k = 1; k <= n; ++k) {
    MultiEntryFunctor<G> pr;
    pr.sources = {p};
    pr.target = cats[static_cast<std::size_t>(k - 1)];
    for (const auto& x : tuples)
      pr.obj_map[{tuple_name(x)}] = x[static_cast<std::size_t>(k - 1)];
    for (const auto& x : tuples)
      for (const auto& y : tuples)
        pr.components[{{tuple_name(x)}, {tuple_name(y)}}] =
            g.projection(hom_list(cats, x, y), k);
    out.projections.push_back(std::move(pr));
  }
  return out;
}

// Tupling into the product: the unique functor whose composites with the
// projections are the given family sharing one source list.
template <CompleteGround G>
MultiEntryFunctor<G> vcat_tuple(const G& g,
                                const std::vector<VCategory<G>>& sources,
                                const std::vector<MultiEntryFunctor<G>>& hs) {
  std::vector<VCategory<G>> targets;
  targets.reserve(hs.size());
  for (const auto& h : hs) {
    if (h.sources != sources)
      throw SignatureMismatch("vcat_tuple: mismatched source lists");
    targets.push_back(h.target);
  }
  const auto prod = vcat_product(g, targets);
  MultiEntryFunctor<G> f;
  f.sources = sources;
  f.target = prod.category;
  const auto tuples = object_tuples(sources);
  for (const auto& a : tuples) {
    std::vector<std::string> images;
    images.reserve(hs.size());
    for (const auto& h : hs) images.push_back(object_image(h, a));
    f.obj_map[a] = tuple_name(images);
  }
  for (const auto& a : tuples)
    for (const auto& d : tuples) {
      std::vector<typename G::Mor> comps;
      comps.reserve(hs.size());
      for (const auto& h : hs) comps.push_back(component_of(h, a, d));
      f.components[{a, d}] =
          g.tuple_into_product(hom_list(sources, a, d), comps);
    }
  return f;
}

template <typename G>
struct VCatEqualizer {
  VCategory<G> category;         // the subcategory on agreeing objects
  MultiEntryFunctor<G> include;  // unary inclusion into the common source
  std::map<std::pair<std::string, std::string>, EqualizerData<G>> eqs;
};

// The equalizer of a parallel pair of unary functors: objects where the two
// object maps agree, homs the ground equalizers of the component pairs,
// composition and identities the unique factorizations through them.
template <CompleteGround G>
VCatEqualizer<G> vcat_equalizer(const G& g, const MultiEntryFunctor<G>& f,
                                const MultiEntryFunctor<G>& h) {
  if (f.sources.size() != 1 || h.sources != f.sources ||
      h.target != f.target)
    throw SignatureMismatch("vcat_equalizer: expected parallel unary functors");
  const VCategory<G>& a = f.sources[0];
  VCatEqualizer<G> out;
  VCategory<G>& k = out.category;

  for (const auto& x : a.quiver.objects)
    if (object_image(f, {x}) == object_image(h, {x}))
      k.quiver.objects.push_back(x);

  for (const auto& x : k.quiver.objects)
    for (const auto& y : k.quiver.objects) {
      auto eq = g.equalizer(component_of(f, {x}, {y}),
                            component_of(h, {x}, {y}));
      k.quiver.homobj[{x, y}] = eq.obj;
      out.eqs[{x, y}] = std::move(eq);
    }

  for (const auto& x : k.quiver.objects)
    k.ident[x] = g.factor_through_equalizer(out.eqs.at({x, x}),
                                            ident_of(a, x));

  for (const auto& x : k.quiver.objects)
    for (const auto& y : k.quiver.objects)
      for (const auto& z : k.quiver.objects) {
        const auto body = g.compose(
            identity_map(2),
            {out.eqs.at({x, y}).include, out.eqs.at({y, z}).include},
            kappa_of(a, x, y, z));
        k.kappa[{x, y, z}] =
            g.factor_through_equalizer(out.eqs.at({x, z}), body);
      }

  out.include.sources = {k};
  out.include.target = a;
  for (const auto& x : k.quiver.objects) {
    out.include.obj_map[{x}] = x;
    for (const auto& y : k.quiver.objects)
      out.include.components[{{x}, {y}}] = out.eqs.at({x, y}).include;
  }
  return out;
}

// Unique factorization of a fork through the equalizer subcategory: j must
// land on agreeing objects and its components must equalize the pair.
template <CompleteGround G>
MultiEntryFunctor<G> factor_into_vcat_equalizer(const G& g,
                                                const VCatEqualizer<G>& ke,
                                                const MultiEntryFunctor<G>& j) {
  if (j.target != ke.include.target)
    throw SignatureMismatch(
        "factor_into_vcat_equalizer: the fork lands elsewhere");
  MultiEntryFunctor<G> q;
  q.sources = j.sources;
  q.target = ke.category;
  const auto tuples = object_tuples(j.sources);
  const auto& kobs = ke.category.quiver.objects;
  for (const auto& a : tuples) {
    const auto& img = object_image(j, a);
    if (std::find(kobs.begin(), kobs.end(), img) == kobs.end())
      throw SignatureMismatch("factor_into_vcat_equalizer: object image " +
                              img + " is not in the subcategory");
    q.obj_map[a] = img;
  }
  for (const auto& a : tuples)
    for (const auto& d : tuples)
      q.components[{a, d}] = g.factor_through_equalizer(
          ke.eqs.at({object_image(j, a), object_image(j, d)}),
          component_of(j, a, d));
  return q;
}

}  // namespace mcat
