#pragma once

#include "mcat/enriched.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mcat {

// The hom object of two parallel multi-entry functors: the subobject of the
// product of pointwise homs cut out by the naturality exchange, kept with its
// ambient data so projections stay compositional.
template <typename G>
struct EndHom {
  typename G::Obj obj;
  typename G::Obj ambient;  // product of the pointwise hom objects
  typename G::Mor include;  // obj -> ambient
  EqualizerData<G> eq;
  std::vector<std::vector<std::string>> tuples;  // factor order
  std::vector<typename G::Obj> factors;
};

// The exchange pair at one pair of object tuples: beta curries composing a
// source component into the far hom, gamma curries composing the near hom
// into a target component.  Both land in the same internal hom, so their
// equality at a point is exactly the naturality square there.
template <ClosedGround G>
std::pair<typename G::Mor, typename G::Mor> build_beta_gamma(
    const G& g, const MultiEntryFunctor<G>& f, const MultiEntryFunctor<G>& h,
    const std::vector<std::string>& a, const std::vector<std::string>& d) {
  if (f.sources != h.sources || f.target != h.target)
    throw SignatureMismatch("build_beta_gamma: the functors are not parallel");
  const int n = static_cast<int>(f.sources.size());
  const VCategory<G>& c = f.target;
  const auto& fa = object_image(f, a);
  const auto& fd = object_image(f, d);
  const auto& ga = object_image(h, a);
  const auto& gd = object_image(h, d);

  std::vector<int> to_first(static_cast<std::size_t>(n), 1);
  to_first.push_back(2);
  const auto beta_dag =
      g.compose(ord_map(n + 1, 2, to_first),
                {component_of(f, a, d), g.identity(hom_of(c.quiver, fd, gd))},
                kappa_of(c, fa, fd, gd));

  std::vector<int> to_second(static_cast<std::size_t>(n), 2);
  to_second.push_back(1);
  const auto gamma_dag =
      g.compose(ord_map(n + 1, 2, to_second),
                {g.identity(hom_of(c.quiver, fa, ga)), component_of(h, a, d)},
                kappa_of(c, fa, ga, gd));

  return {g.curry(beta_dag, n), g.curry(gamma_dag, n)};
}

// The end of a parallel pair of multi-entry functors: equalize, over all
// pairs of object tuples, the two exchange legs out of the product of
// pointwise homs.
template <typename G>
  requires ClosedGround<G> && CompleteGround<G>
EndHom<G> end_hom(const G& g, const MultiEntryFunctor<G>& f,
                  const MultiEntryFunctor<G>& h, long long tuple_cap = 10000) {
  if (f.sources != h.sources || f.target != h.target)
    throw SignatureMismatch("end_hom: the functors are not parallel");
  EndHom<G> out;
  out.tuples = object_tuples(f.sources, tuple_cap);
  out.factors.reserve(out.tuples.size());
  for (const auto& t : out.tuples)
    out.factors.push_back(hom_of(f.target.quiver, object_image(f, t),
                                 object_image(h, t)));
  out.ambient = g.product(out.factors);

  const std::vector<typename G::Obj> amb_src{out.ambient};
  std::vector<typename G::Mor> near_legs, far_legs;
  for (std::size_t s = 0; s < out.tuples.size(); ++s)
    for (std::size_t t = 0; t < out.tuples.size(); ++t) {
      const auto [beta, gamma] =
          build_beta_gamma(g, f, h, out.tuples[s], out.tuples[t]);
      far_legs.push_back(compose1(
          g, g.projection(out.factors, static_cast<int>(t) + 1), beta));
      near_legs.push_back(compose1(
          g, g.projection(out.factors, static_cast<int>(s) + 1), gamma));
    }
  const auto a = g.tuple_into_product(amb_src, far_legs);
  const auto b = g.tuple_into_product(amb_src, near_legs);
  out.eq = g.equalizer(a, b);
  out.obj = out.eq.obj;
  out.include = out.eq.include;
  return out;
}

// The projection of the end onto the pointwise hom at one object tuple.
template <CompleteGround G>
typename G::Mor end_projection(const G& g, const EndHom<G>& e,
                               const std::vector<std::string>& tuple) {
  for (std::size_t k = 0; k < e.tuples.size(); ++k)
    if (e.tuples[k] == tuple)
      return compose1(g, e.include,
                      g.projection(e.factors, static_cast<int>(k) + 1));
  throw SignatureMismatch("end_projection: unknown object tuple " +
                          tuple_name(tuple));
}

// A natural family of points determines a point of the end: tuple the
// components into the ambient product and factor through the equalizer.
template <CompleteGround G>
typename G::Mor transformation_to_point(const G& g, const EndHom<G>& e,
                                        const VNatTransformation<G>& t) {
  std::vector<typename G::Mor> comps;
  comps.reserve(e.tuples.size());
  for (const auto& tuple : e.tuples) comps.push_back(nat_component(t, tuple));
  return g.factor_through_equalizer(e.eq, g.tuple_into_product({}, comps));
}

// A point of the end determines a family by projecting at every tuple; the
// family is natural because the point equalizes the exchange legs.
template <CompleteGround G>
VNatTransformation<G> point_to_transformation(const G& g, const EndHom<G>& e,
                                              const MultiEntryFunctor<G>& f,
                                              const MultiEntryFunctor<G>& h,
                                              const typename G::Mor& pt) {
  VNatTransformation<G> t{f, h, {}};
  for (const auto& tuple : e.tuples)
    t.components[tuple] = compose1(g, pt, end_projection(g, e, tuple));
  return t;
}

// ---------------------------------------------------------------------------
// The hom category of multi-entry functors

template <typename G>
struct HomCategory {
  std::vector<VCategory<G>> sources;
  VCategory<G> target;
  VCategory<G> category;  // objects named "F0", "F1", ... in functor order
  std::vector<MultiEntryFunctor<G>> functors;
  std::map<std::pair<std::string, std::string>, EndHom<G>> ends;
};

inline std::string functor_name(std::size_t index) {
  return "F" + std::to_string(index);
}

template <typename G>
const MultiEntryFunctor<G>& functor_of(const HomCategory<G>& hc,
                                       const std::string& name) {
  for (std::size_t i = 0; i < hc.functors.size(); ++i)
    if (functor_name(i) == name) return hc.functors[i];
  throw SignatureMismatch("functor_of: no functor named " + name);
}

template <typename G>
std::string name_in(const HomCategory<G>& hc, const MultiEntryFunctor<G>& f) {
  for (std::size_t i = 0; i < hc.functors.size(); ++i)
    if (hc.functors[i] == f) return functor_name(i);
  throw SignatureMismatch("name_in: the functor is not in the hom category");
}

// Build the category of all multi-entry functors from a family to a target:
// objects are the enumerated functors, homs are their ends, identities are
// the points of identity transformations, and composition is the unique
// factorization of pointwise composition through the end.
template <typename G>
  requires EnumerableGround<G> && ClosedGround<G> && CompleteGround<G>
HomCategory<G> hom_category(const G& g,
                            const std::vector<VCategory<G>>& sources,
                            const VCategory<G>& target,
                            long long max_candidates = 10000,
                            long long tuple_cap = 10000) {
  HomCategory<G> hc;
  hc.sources = sources;
  hc.target = target;
  hc.functors = enumerate_functors(g, sources, target, max_candidates);

  for (std::size_t i = 0; i < hc.functors.size(); ++i)
    hc.category.quiver.objects.push_back(functor_name(i));

  for (std::size_t i = 0; i < hc.functors.size(); ++i)
    for (std::size_t j = 0; j < hc.functors.size(); ++j) {
      auto e = end_hom(g, hc.functors[i], hc.functors[j], tuple_cap);
      hc.category.quiver.homobj[{functor_name(i), functor_name(j)}] = e.obj;
      hc.ends[{functor_name(i), functor_name(j)}] = std::move(e);
    }

  for (std::size_t i = 0; i < hc.functors.size(); ++i)
    hc.category.ident[functor_name(i)] = transformation_to_point(
        g, hc.ends.at({functor_name(i), functor_name(i)}),
        identity_transformation(g, hc.functors[i]));

  for (std::size_t i = 0; i < hc.functors.size(); ++i)
    for (std::size_t j = 0; j < hc.functors.size(); ++j)
      for (std::size_t k = 0; k < hc.functors.size(); ++k) {
        const auto& efg = hc.ends.at({functor_name(i), functor_name(j)});
        const auto& egh = hc.ends.at({functor_name(j), functor_name(k)});
        const auto& efh = hc.ends.at({functor_name(i), functor_name(k)});
        const std::vector<typename G::Obj> pair_src{efg.obj, egh.obj};
        std::vector<typename G::Mor> legs;
        legs.reserve(efh.tuples.size());
        for (std::size_t t = 0; t < efh.tuples.size(); ++t) {
          const auto& tup = efh.tuples[t];
          const auto pfg = compose1(
              g, efg.include, g.projection(efg.factors, static_cast<int>(t) + 1));
          const auto pgh = compose1(
              g, egh.include, g.projection(egh.factors, static_cast<int>(t) + 1));
          legs.push_back(g.compose(
              identity_map(2), {pfg, pgh},
              kappa_of(target, object_image(hc.functors[i], tup),
                       object_image(hc.functors[j], tup),
                       object_image(hc.functors[k], tup))));
        }
        const auto m = g.tuple_into_product(pair_src, legs);
        hc.category.kappa[{functor_name(i), functor_name(j),
                           functor_name(k)}] =
            g.factor_through_equalizer(efh.eq, m);
      }
  return hc;
}

// Evaluation as a multi-entry functor with entries (sources..., hom
// category): on objects it applies the functor, on components it composes a
// source-functor component with the end projection at the far tuple.
template <typename G>
  requires EnumerableGround<G> && ClosedGround<G> && CompleteGround<G>
MultiEntryFunctor<G> ev_functor(const G& g, const HomCategory<G>& hc) {
  MultiEntryFunctor<G> ev;
  ev.sources = hc.sources;
  ev.sources.push_back(hc.category);
  ev.target = hc.target;
  const int n = static_cast<int>(hc.sources.size());
  const auto tuples = object_tuples(hc.sources);

  const auto full = [](const std::vector<std::string>& t,
                       const std::string& fname) {
    std::vector<std::string> out = t;
    out.push_back(fname);
    return out;
  };

  for (const auto& a : tuples)
    for (std::size_t i = 0; i < hc.functors.size(); ++i)
      ev.obj_map[full(a, functor_name(i))] =
          object_image(hc.functors[i], a);

  std::vector<int> to_first(static_cast<std::size_t>(n), 1);
  to_first.push_back(2);
  for (const auto& a : tuples)
    for (std::size_t i = 0; i < hc.functors.size(); ++i)
      for (const auto& d : tuples)
        for (std::size_t j = 0; j < hc.functors.size(); ++j) {
          const auto& f = hc.functors[i];
          const auto& h = hc.functors[j];
          const auto& e = hc.ends.at({functor_name(i), functor_name(j)});
          ev.components[{full(a, functor_name(i)),
                         full(d, functor_name(j))}] =
              g.compose(ord_map(n + 1, 2, to_first),
                        {component_of(f, a, d), end_projection(g, e, d)},
                        kappa_of(hc.target, object_image(f, a),
                                 object_image(f, d), object_image(h, d)));
        }
  return ev;
}

// The other presentation of an evaluation component: project the end at the
// near tuple, then apply a target-functor component.  Agrees with the tables
// ev_functor stores.
template <typename G>
  requires ClosedGround<G> && CompleteGround<G>
typename G::Mor ev_component_target_side(const G& g, const HomCategory<G>& hc,
                                         const std::vector<std::string>& a,
                                         const std::string& fname,
                                         const std::vector<std::string>& d,
                                         const std::string& hname) {
  const auto& f = functor_of(hc, fname);
  const auto& h = functor_of(hc, hname);
  const auto& e = hc.ends.at({fname, hname});
  const int n = static_cast<int>(hc.sources.size());
  std::vector<int> to_second(static_cast<std::size_t>(n), 2);
  to_second.push_back(1);
  return g.compose(ord_map(n + 1, 2, to_second),
                   {end_projection(g, e, a), component_of(h, a, d)},
                   kappa_of(hc.target, object_image(f, a),
                            object_image(h, a), object_image(h, d)));
}

// ---------------------------------------------------------------------------
// The adjunction between plugging in and partial application

// Forward direction: a functor landing in the hom category becomes a functor
// on the joined entries by feeding identities and itself into evaluation.
template <typename G>
  requires EnumerableGround<G> && ClosedGround<G> && CompleteGround<G>
MultiEntryFunctor<G> phi(const G& g, const HomCategory<G>& hc,
                                  const MultiEntryFunctor<G>& f) {
  if (f.target != hc.category)
    throw SignatureMismatch(
        "phi: the functor does not land in the hom category");
  const int entries = static_cast<int>(hc.sources.size());
  const int rest = static_cast<int>(f.sources.size());
  std::vector<MultiEntryFunctor<G>> inner;
  inner.reserve(static_cast<std::size_t>(entries) + 1);
  for (const auto& s : hc.sources) inner.push_back(identity_functor(g, s));
  inner.push_back(f);
  return compose_functors(g,
                          disjoint_union(identity_map(entries), nabla(rest)),
                          inner, ev_functor(g, hc));
}

// Backward direction: split off the hom category's entries by partial
// application.  Objects go to the functor obtained by freezing the remaining
// entries at nullary picks; components factor the frozen component family
// through the end.
template <typename G>
  requires EnumerableGround<G> && ClosedGround<G> && CompleteGround<G>
MultiEntryFunctor<G> psi(const G& g, const HomCategory<G>& hc,
                                   const MultiEntryFunctor<G>& f) {
  const int entries = static_cast<int>(hc.sources.size());
  const int total = static_cast<int>(f.sources.size());
  const int rest = total - entries;
  if (rest < 0)
    throw SignatureMismatch("psi: fewer entries than the hom"
                            " category expects");
  for (int i = 0; i < entries; ++i)
    if (f.sources[static_cast<std::size_t>(i)] !=
        hc.sources[static_cast<std::size_t>(i)])
      throw SignatureMismatch(
          "psi: leading entries differ from the hom category");
  if (f.target != hc.target)
    throw SignatureMismatch("psi: targets differ");

  MultiEntryFunctor<G> out;
  out.sources.assign(f.sources.begin() + entries, f.sources.end());
  out.target = hc.category;

  const auto rest_tuples = object_tuples(out.sources);
  const auto joined = [&](const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
    std::vector<std::string> o = a;
    o.insert(o.end(), b.begin(), b.end());
    return o;
  };

  for (const auto& b : rest_tuples) {
    std::vector<MultiEntryFunctor<G>> args;
    args.reserve(static_cast<std::size_t>(total));
    for (const auto& s : hc.sources) args.push_back(identity_functor(g, s));
    for (int j = 0; j < rest; ++j)
      args.push_back(nullary_functor(out.sources[static_cast<std::size_t>(j)],
                                     b[static_cast<std::size_t>(j)]));
    out.obj_map[b] =
        name_in(hc, compose_functors(g, inj1(entries, rest), args, f));
  }

  for (const auto& b : rest_tuples)
    for (const auto& e2 : rest_tuples) {
      const auto& fname = out.obj_map.at(b);
      const auto& hname = out.obj_map.at(e2);
      const auto& end = hc.ends.at({fname, hname});
      std::vector<typename G::Mor> family;
      family.reserve(end.tuples.size());
      for (const auto& a : end.tuples) {
        std::vector<typename G::Mor> args;
        args.reserve(static_cast<std::size_t>(total));
        for (int i = 0; i < entries; ++i)
          args.push_back(ident_of(hc.sources[static_cast<std::size_t>(i)],
                                  a[static_cast<std::size_t>(i)]));
        for (int j = 0; j < rest; ++j)
          args.push_back(g.identity(
              hom_of(out.sources[static_cast<std::size_t>(j)].quiver,
                     b[static_cast<std::size_t>(j)],
                     e2[static_cast<std::size_t>(j)])));
        family.push_back(g.compose(inj2(entries, rest), args,
                                   component_of(f, joined(a, b),
                                                joined(a, e2))));
      }
      const auto m =
          g.tuple_into_product(hom_list(out.sources, b, e2), family);
      out.components[{b, e2}] = g.factor_through_equalizer(end.eq, m);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Composition and whiskering between hom categories

// The composition functor between hom categories along an index map: the
// partial application of evaluating every inner slot and feeding the results
// to the outer evaluation.  On objects it composes functors.
template <typename G>
  requires EnumerableGround<G> && ClosedGround<G> && CompleteGround<G>
MultiEntryFunctor<G> mu_und(const G& g, const OrdMap& phi,
                            const std::vector<HomCategory<G>>& inner,
                            const HomCategory<G>& outer,
                            const HomCategory<G>& result) {
  const int entries = phi.source;
  const int mids = phi.target;
  if (static_cast<int>(inner.size()) != mids)
    throw SignatureMismatch("mu_und: expected " + std::to_string(mids) +
                            " inner hom categories");
  if (static_cast<int>(result.sources.size()) != entries)
    throw SignatureMismatch("mu_und: the result hom category has the wrong"
                            " number of entries");

  std::vector<int> vals;
  vals.reserve(static_cast<std::size_t>(entries + mids + 1));
  for (int v : phi.values) vals.push_back(v);
  for (int j = 1; j <= mids; ++j) vals.push_back(j);
  vals.push_back(mids + 1);
  const OrdMap xi = ord_map(entries + mids + 1, mids + 1, vals);

  std::vector<MultiEntryFunctor<G>> args;
  args.reserve(static_cast<std::size_t>(mids) + 1);
  for (const auto& ih : inner) args.push_back(ev_functor(g, ih));
  args.push_back(identity_functor(g, outer.category));

  const auto bridged = compose_functors(g, xi, args, ev_functor(g, outer));
  return psi(g, result, bridged);
}

// Precomposition with fixed functors: the unary functor between hom
// categories sending a functor to its composite with the given family.
template <typename G>
  requires EnumerableGround<G> && ClosedGround<G> && CompleteGround<G>
MultiEntryFunctor<G> left_whisker(const G& g, const OrdMap& phi,
                                  const std::vector<MultiEntryFunctor<G>>& fs,
                                  const HomCategory<G>& outer,
                                  const HomCategory<G>& result) {
  const int entries = phi.source;
  const int mids = phi.target;
  if (static_cast<int>(fs.size()) != mids)
    throw SignatureMismatch("left_whisker: expected " + std::to_string(mids) +
                            " fixed functors");
  std::vector<int> vals;
  vals.reserve(static_cast<std::size_t>(entries) + 1);
  for (int v : phi.values) vals.push_back(v);
  vals.push_back(mids + 1);
  const OrdMap xi = ord_map(entries + 1, mids + 1, vals);

  std::vector<MultiEntryFunctor<G>> args = fs;
  args.push_back(identity_functor(g, outer.category));
  const auto bridged = compose_functors(g, xi, args, ev_functor(g, outer));
  return psi(g, result, bridged);
}

// Postcomposition with a fixed functor: the functor out of the inner hom
// categories sending a tuple of functors to the composite under the fixed
// outer one.
template <typename G>
  requires EnumerableGround<G> && ClosedGround<G> && CompleteGround<G>
MultiEntryFunctor<G> right_whisker(const G& g, const OrdMap& phi,
                                   const MultiEntryFunctor<G>& h,
                                   const std::vector<HomCategory<G>>& inner,
                                   const HomCategory<G>& result) {
  const int entries = phi.source;
  const int mids = phi.target;
  if (static_cast<int>(inner.size()) != mids)
    throw SignatureMismatch("right_whisker: expected " +
                            std::to_string(mids) + " inner hom categories");
  std::vector<int> vals;
  vals.reserve(static_cast<std::size_t>(entries + mids));
  for (int v : phi.values) vals.push_back(v);
  for (int j = 1; j <= mids; ++j) vals.push_back(j);
  const OrdMap xi = ord_map(entries + mids, mids, vals);

  std::vector<MultiEntryFunctor<G>> args;
  args.reserve(static_cast<std::size_t>(mids));
  for (const auto& ih : inner) args.push_back(ev_functor(g, ih));
  const auto bridged = compose_functors(g, xi, args, h);
  return psi(g, result, bridged);
}

// ---------------------------------------------------------------------------
// Enriched categories as a ground structure of their own

// Categories enriched in G, with multi-entry functors as morphisms, form a
// ground structure again: composition is functor composition, the internal
// hom is the hom category, currying is partial application, and limits are
// the category-level product and equalizer.  This is the construction the
// whole module iterates.
template <typename G>
  requires EnumerableGround<G> && ClosedGround<G> && CompleteGround<G>
struct VCat {
  G ground{};
  long long functor_cap = 10000;
  long long tuple_cap = 10000;

  using Obj = VCategory<G>;
  using Mor = MultiEntryFunctor<G>;

  std::vector<Obj> source_of(const Mor& f) const { return f.sources; }
  Obj target_of(const Mor& f) const { return f.target; }
  Mor identity(const Obj& x) const { return identity_functor(ground, x); }
  Mor compose(const OrdMap& phi, const std::vector<Mor>& args,
              const Mor& outer) const {
    return compose_functors(ground, phi, args, outer);
  }
  std::string show_obj(const Obj& x) const {
    std::string out = "Cat(";
    for (std::size_t i = 0; i < x.quiver.objects.size(); ++i) {
      if (i) out += ",";
      out += x.quiver.objects[i];
    }
    return out + ")";
  }
  std::string show_mor(const Mor& f) const {
    std::string out = "Fun{";
    bool first = true;
    for (const auto& [t, v] : f.obj_map) {
      if (!first) out += ",";
      first = false;
      out += tuple_name(t) + "->" + v;
    }
    return out + "}";
  }

  unsigned long long hom_size(const std::vector<Obj>& xs,
                              const Obj& y) const {
    return enumerate_functors(ground, xs, y, functor_cap).size();
  }
  std::vector<Mor> enumerate_hom(const std::vector<Obj>& xs,
                                 const Obj& y) const {
    return enumerate_functors(ground, xs, y, functor_cap);
  }

  Obj underhom(const std::vector<Obj>& xs, const Obj& z) const {
    return hom_category(ground, xs, z, functor_cap, tuple_cap).category;
  }
  Mor ev(const std::vector<Obj>& xs, const Obj& z) const {
    return ev_functor(ground,
                      hom_category(ground, xs, z, functor_cap, tuple_cap));
  }
  Mor curry(const Mor& f, int n) const {
    if (n < 0 || n > static_cast<int>(f.sources.size()))
      throw SignatureMismatch("curry: entry count out of range");
    const std::vector<Obj> leading(f.sources.begin(), f.sources.begin() + n);
    return psi(
        ground, hom_category(ground, leading, f.target, functor_cap,
                             tuple_cap),
        f);
  }

  Obj product(const std::vector<Obj>& xs) const {
    return vcat_product(ground, xs).category;
  }
  Mor projection(const std::vector<Obj>& xs, int k) const {
    if (k < 1 || k > static_cast<int>(xs.size()))
      throw SignatureMismatch("projection: index out of range");
    return vcat_product(ground, xs)
        .projections[static_cast<std::size_t>(k - 1)];
  }
  Mor tuple_into_product(const std::vector<Obj>& sources,
                         const std::vector<Mor>& hs) const {
    return vcat_tuple(ground, sources, hs);
  }
  EqualizerData<VCat> equalizer(const Mor& f, const Mor& h) const {
    auto ke = vcat_equalizer(ground, f, h);
    return EqualizerData<VCat>{std::move(ke.category),
                               std::move(ke.include)};
  }
  Mor factor_through_equalizer(const EqualizerData<VCat>& eq,
                               const Mor& j) const {
    // per-hom equalizer data is recovered from the subcategory and the
    // inclusion functor's components
    const Obj& k = eq.obj;
    Mor q;
    q.sources = j.sources;
    q.target = k;
    const auto tuples = object_tuples(j.sources);
    const auto& kobs = k.quiver.objects;
    for (const auto& a : tuples) {
      const auto& img = object_image(j, a);
      if (std::find(kobs.begin(), kobs.end(), img) == kobs.end())
        throw SignatureMismatch("factor_through_equalizer: object image " +
                                img + " is not in the subcategory");
      q.obj_map[a] = img;
    }
    for (const auto& a : tuples)
      for (const auto& d : tuples) {
        const auto& ia = object_image(j, a);
        const auto& id = object_image(j, d);
        const EqualizerData<G> ge{hom_of(k.quiver, ia, id),
                                  component_of(eq.include, {ia}, {id})};
        q.components[{a, d}] =
            ground.factor_through_equalizer(ge, component_of(j, a, d));
      }
    return q;
  }
};

}  // namespace mcat
