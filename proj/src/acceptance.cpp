#include "mcat/acceptance.hpp"

#include "mcat/homobj.hpp"
#include "mcat/prop.hpp"
#include "mcat/short.hpp"
#include "mcat/table_mc.hpp"
#include "mcat/vfinset.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace mcat {
namespace {

using FS = FinSetInstance;
using VC = VCat<FS>;
using FsWord = Word<FS>;

const FS fs;

// --- bookkeeping -----------------------------------------------------------

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// Counts checks and keeps the first counterexample; witness text is built
// lazily so hot loops pay nothing on success.
struct Tally {
  long long checks = 0;
  bool ok = true;
  std::string first;

  void operator()(bool pass, const std::string& what) {
    ++checks;
    if (!pass && ok) {
      ok = false;
      first = what;
    }
  }
  template <typename F>
    requires std::invocable<F>
  void operator()(bool pass, F&& what) {
    ++checks;
    if (!pass && ok) {
      ok = false;
      first = what();
    }
  }
};

std::string format_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s;
  return os.str();
}

CriterionResult finish(int number, std::string name, double budget,
                       const Stopwatch& watch, const Tally& tally,
                       std::string on_pass) {
  CriterionResult r;
  r.number = number;
  r.name = std::move(name);
  r.seconds = watch.seconds();
  r.passed = tally.ok;
  r.detail = tally.ok ? std::move(on_pass) : tally.first;
  if (budget > 0 && r.seconds >= budget) {
    r.passed = false;
    r.detail += " [exceeded the " + format_seconds(budget) + "s budget]";
  }
  return r;
}

CriterionResult skipped(int number, std::string name, std::string why) {
  CriterionResult r;
  r.number = number;
  r.name = std::move(name);
  r.skipped = true;
  r.detail = "skipped: " + std::move(why);
  return r;
}

CriterionResult raised(int number, std::string name, const Stopwatch& watch,
                       const std::exception& e) {
  CriterionResult r;
  r.number = number;
  r.name = std::move(name);
  r.seconds = watch.seconds();
  r.detail = std::string("raised: ") + e.what();
  return r;
}

std::string describe(const CheckReport& rep) {
  std::ostringstream os;
  os << rep.total_passed() << " law instances";
  if (rep.skipped > 0) os << " (" << rep.skipped << " skipped for size)";
  if (!rep.ok())
    os << "; first failure " << rep.failures.front().law << ": "
       << rep.failures.front().detail;
  return os.str();
}

// --- small enriched fixtures (mirroring the unit-test batteries) ------------

VCategory<FS> make_category(
    std::vector<std::string> obs,
    const std::function<int(const std::string&, const std::string&)>& hsize,
    const std::function<int(const std::string&, const std::string&,
                            const std::string&, int, int)>& comp,
    const std::function<int(const std::string&)>& unit) {
  VCategory<FS> c;
  c.quiver.objects = std::move(obs);
  for (const auto& x : c.quiver.objects)
    for (const auto& y : c.quiver.objects)
      c.quiver.homobj[{x, y}] = FinSetObj{hsize(x, y)};
  for (const auto& x : c.quiver.objects)
    for (const auto& y : c.quiver.objects)
      for (const auto& z : c.quiver.objects) {
        const int nxy = hsize(x, y), nyz = hsize(y, z), nxz = hsize(x, z);
        std::vector<int> table;
        for (int f = 1; f <= nxy; ++f)
          for (int h = 1; h <= nyz; ++h) table.push_back(comp(x, y, z, f, h));
        c.kappa[{x, y, z}] = fs_map({nxy, nyz}, nxz, table);
      }
  for (const auto& x : c.quiver.objects)
    c.ident[x] = fs_map({}, hsize(x, x), {unit(x)});
  return c;
}

VCategory<FS> chain2() {
  return make_category(
      {"x", "y"},
      [](const std::string& a, const std::string& b) { return a <= b; },
      [](const std::string&, const std::string&, const std::string&, int,
         int) { return 1; },
      [](const std::string&) { return 1; });
}

VCategory<FS> parallel_pair() {
  return make_category(
      {"a", "b"},
      [](const std::string& x, const std::string& y) {
        return x == y ? 1 : (x < y ? 2 : 0);
      },
      [](const std::string& x, const std::string& y, const std::string&, int f,
         int h) { return x == y ? h : f; },
      [](const std::string&) { return 1; });
}

VCategory<FS> cyclic(int m) {
  return make_category(
      {"e"}, [m](const std::string&, const std::string&) { return m; },
      [m](const std::string&, const std::string&, const std::string&, int f,
          int h) { return (f - 1 + h - 1) % m + 1; },
      [](const std::string&) { return 1; });
}

int endo_val(int code, int x) {
  return x == 1 ? (code - 1) / 2 + 1 : (code - 1) % 2 + 1;
}

VCategory<FS> endo2() {
  return make_category(
      {"e"}, [](const std::string&, const std::string&) { return 4; },
      [](const std::string&, const std::string&, const std::string&, int f,
         int h) {
        const int c1 = endo_val(h, endo_val(f, 1));
        const int c2 = endo_val(h, endo_val(f, 2));
        return (c1 - 1) * 2 + c2;
      },
      [](const std::string&) { return 2; });
}

std::vector<VCategory<FS>> battery() {
  return {chain2(), parallel_pair(), cyclic(2)};
}

int pt(const MultiMap& m) { return fs_apply(m, {}); }

// The component values carried by a point of an end, in tuple order.
std::vector<int> family_of(const EndHom<FS>& e, const MultiMap& p) {
  std::vector<int> out;
  out.reserve(e.tuples.size());
  for (const auto& t : e.tuples)
    out.push_back(pt(compose1(fs, p, end_projection(fs, e, t))));
  return out;
}

// Brute force: every component family satisfying the elementwise naturality
// squares, chased directly through the composition tables.
std::set<std::vector<int>> natural_families(const MultiEntryFunctor<FS>& f,
                                            const MultiEntryFunctor<FS>& h) {
  const auto tuples = object_tuples(f.sources);
  const VCategory<FS>& c = f.target;
  std::vector<int> sizes;
  for (const auto& t : tuples)
    sizes.push_back(
        hom_of(c.quiver, object_image(f, t), object_image(h, t)).size);
  std::set<std::vector<int>> out;
  for (int s : sizes)
    if (s == 0) return out;
  std::vector<int> vals(sizes.size(), 1);
  while (true) {
    bool natural = true;
    for (std::size_t s = 0; natural && s < tuples.size(); ++s)
      for (std::size_t d = 0; natural && d < tuples.size(); ++d) {
        const auto& fc = component_of(f, tuples[s], tuples[d]);
        const auto& hc = component_of(h, tuples[s], tuples[d]);
        const auto& k1 =
            kappa_of(c, object_image(f, tuples[s]), object_image(f, tuples[d]),
                     object_image(h, tuples[d]));
        const auto& k2 =
            kappa_of(c, object_image(f, tuples[s]), object_image(h, tuples[s]),
                     object_image(h, tuples[d]));
        bool nonempty = true;
        for (int sz : fc.src_sizes) nonempty = nonempty && sz > 0;
        if (!nonempty) continue;
        std::vector<int> x(fc.src_sizes.size(), 1);
        while (natural) {
          natural = fs_apply(k1, {fs_apply(fc, x), vals[d]}) ==
                    fs_apply(k2, {vals[s], fs_apply(hc, x)});
          int i = static_cast<int>(x.size()) - 1;
          while (i >= 0 && x[i] == fc.src_sizes[i]) x[i--] = 1;
          if (i < 0) break;
          ++x[i];
        }
      }
    if (natural) out.insert(vals);
    int i = static_cast<int>(vals.size()) - 1;
    while (i >= 0 && vals[i] == sizes[i]) vals[i--] = 1;
    if (i < 0) break;
    ++vals[i];
  }
  return out;
}

// A strict two-object 2-category whose only nontrivial hom category runs from
// u to v; the endpoint hom categories are points, so units act trivially.
VCategory<VC> two_category(const VCategory<FS>& huv) {
  const VCategory<FS> one =
      vcat_product(fs, std::vector<VCategory<FS>>{}).category;
  VCategory<VC> a;
  a.quiver.objects = {"u", "v"};
  a.quiver.homobj[{"u", "u"}] = one;
  a.quiver.homobj[{"u", "v"}] = huv;
  a.quiver.homobj[{"v", "u"}] = VCategory<FS>{};
  a.quiver.homobj[{"v", "v"}] = one;

  for (const auto& x : a.quiver.objects)
    for (const auto& y : a.quiver.objects)
      for (const auto& z : a.quiver.objects) {
        const auto& xy = hom_of(a.quiver, x, y);
        const auto& yz = hom_of(a.quiver, y, z);
        const auto& xz = hom_of(a.quiver, x, z);
        MultiEntryFunctor<FS> k;
        k.sources = {xy, yz};
        k.target = xz;
        for (const auto& t : object_tuples<FS>({xy, yz}))
          k.obj_map[t] = (x == y) ? t[1] : t[0];
        for (const auto& s : object_tuples<FS>({xy, yz}))
          for (const auto& t : object_tuples<FS>({xy, yz})) {
            const int s1 = hom_of(xy.quiver, s[0], t[0]).size;
            const int s2 = hom_of(yz.quiver, s[1], t[1]).size;
            const int tg =
                hom_of(xz.quiver, k.obj_map.at(s), k.obj_map.at(t)).size;
            std::vector<int> table;
            for (int c1 = 1; c1 <= s1; ++c1)
              for (int c2 = 1; c2 <= s2; ++c2)
                table.push_back(x == y ? c2 : c1);
            k.components[{s, t}] = fs_map({s1, s2}, tg, table);
          }
        a.kappa[{x, y, z}] = std::move(k);
      }
  a.ident["u"] = nullary_functor(one, "()");
  a.ident["v"] = nullary_functor(one, "()");
  return a;
}

// --- a table-level oracle for strict 2-categories ---------------------------
//
// Everything below chases raw composition tables; it never calls the machine
// (no hom_category, no ends), so agreement with it is meaningful evidence.

using ObjMap = std::map<std::string, std::string>;
using HomMap =
    std::map<std::pair<std::string, std::string>, MultiEntryFunctor<FS>>;
using TwoTable = std::pair<ObjMap, HomMap>;  // a strict 2-functor, tabulated

int unit_code(const VCategory<FS>& h, const std::string& o) {
  return pt(h.ident.at(o));
}

// image of a 2-cell under an entry of a TwoTable
int cell_image(const MultiEntryFunctor<FS>& f, const std::string& a,
               const std::string& b, int code) {
  return fs_apply(component_of(f, {a}, {b}), {code});
}

bool two_functor_laws(const VCategory<VC>& a, const TwoTable& cand) {
  const auto& [om, hm] = cand;
  for (const auto& x : a.quiver.objects) {
    const std::string ux = a.ident.at(x).obj_map.at({});
    if (object_image(hm.at({x, x}), {ux}) !=
        a.ident.at(om.at(x)).obj_map.at({}))
      return false;
  }
  for (const auto& x : a.quiver.objects)
    for (const auto& y : a.quiver.objects)
      for (const auto& z : a.quiver.objects) {
        const auto& k = a.kappa.at({x, y, z});
        const auto& k2 = a.kappa.at({om.at(x), om.at(y), om.at(z)});
        const auto& fxy = hm.at({x, y});
        const auto& fyz = hm.at({y, z});
        const auto& fxz = hm.at({x, z});
        for (const auto& fo : hom_of(a.quiver, x, y).quiver.objects)
          for (const auto& go : hom_of(a.quiver, y, z).quiver.objects) {
            const std::string lhs =
                object_image(fxz, {object_image(k, {fo, go})});
            const std::string rhs = object_image(
                k2, {object_image(fxy, {fo}), object_image(fyz, {go})});
            if (lhs != rhs) return false;
            for (const auto& fo2 : hom_of(a.quiver, x, y).quiver.objects)
              for (const auto& go2 : hom_of(a.quiver, y, z).quiver.objects) {
                const auto& kc = component_of(k, {fo, go}, {fo2, go2});
                const auto& kc2 = component_of(
                    k2, {object_image(fxy, {fo}), object_image(fyz, {go})},
                    {object_image(fxy, {fo2}), object_image(fyz, {go2})});
                for (int s = 1; s <= kc.src_sizes[0]; ++s)
                  for (int t = 1; t <= kc.src_sizes[1]; ++t) {
                    const int left =
                        cell_image(fxz, object_image(k, {fo, go}),
                                   object_image(k, {fo2, go2}),
                                   fs_apply(kc, {s, t}));
                    const int right =
                        fs_apply(kc2, {cell_image(fxy, fo, fo2, s),
                                       cell_image(fyz, go, go2, t)});
                    if (left != right) return false;
                  }
              }
          }
      }
  return true;
}

std::set<TwoTable> oracle_two_functors(const VCategory<VC>& a,
                                       long long candidate_cap) {
  const auto& obs = a.quiver.objects;
  std::vector<ObjMap> omaps{{}};
  for (const auto& x : obs) {
    std::vector<ObjMap> next;
    for (const auto& m : omaps)
      for (const auto& y : obs) {
        ObjMap m2 = m;
        m2[x] = y;
        next.push_back(std::move(m2));
      }
    omaps = std::move(next);
  }

  std::set<TwoTable> out;
  for (const auto& om : omaps) {
    std::vector<std::pair<std::string, std::string>> keys;
    std::vector<std::vector<MultiEntryFunctor<FS>>> pools;
    bool feasible = true;
    for (const auto& x : obs)
      for (const auto& y : obs) {
        auto pool =
            enumerate_functors(fs, {hom_of(a.quiver, x, y)},
                               hom_of(a.quiver, om.at(x), om.at(y)),
                               candidate_cap);
        if (pool.empty()) {
          feasible = false;
          break;
        }
        keys.emplace_back(x, y);
        pools.push_back(std::move(pool));
      }
    if (!feasible) continue;
    std::vector<std::size_t> pick(pools.size(), 0);
    while (true) {
      TwoTable cand{om, {}};
      for (std::size_t i = 0; i < keys.size(); ++i)
        cand.second[keys[i]] = pools[i][pick[i]];
      if (two_functor_laws(a, cand)) out.insert(std::move(cand));
      int i = static_cast<int>(pick.size()) - 1;
      while (i >= 0 && pick[i] + 1 == pools[i].size()) pick[i--] = 0;
      if (i < 0) break;
      ++pick[i];
    }
  }
  return out;
}

// component families of strict transformations between tabulated 2-functors
std::vector<ObjMap> oracle_two_nats(const VCategory<VC>& a, const TwoTable& f,
                                    const TwoTable& g) {
  const auto& obs = a.quiver.objects;
  std::vector<std::vector<std::string>> choices;
  for (const auto& x : obs) {
    const auto& hx = hom_of(a.quiver, f.first.at(x), g.first.at(x));
    if (hx.quiver.objects.empty()) return {};
    choices.push_back(hx.quiver.objects);
  }

  const auto natural = [&](const ObjMap& alpha) {
    for (const auto& x : obs)
      for (const auto& y : obs) {
        const auto& hxy = hom_of(a.quiver, x, y);
        const auto& kafter =
            a.kappa.at({f.first.at(x), f.first.at(y), g.first.at(y)});
        const auto& kbefore =
            a.kappa.at({f.first.at(x), g.first.at(x), g.first.at(y)});
        const auto& fh = f.second.at({x, y});
        const auto& gh = g.second.at({x, y});
        for (const auto& c1 : hxy.quiver.objects) {
          const std::string lo =
              object_image(kafter, {object_image(fh, {c1}), alpha.at(y)});
          const std::string ro =
              object_image(kbefore, {alpha.at(x), object_image(gh, {c1})});
          if (lo != ro) return false;
          for (const auto& c2 : hxy.quiver.objects) {
            const auto& hcells = hom_of(hxy.quiver, c1, c2);
            const auto& homx =
                hom_of(a.quiver, f.first.at(x), g.first.at(x));
            const auto& homy =
                hom_of(a.quiver, f.first.at(y), g.first.at(y));
            for (int s = 1; s <= hcells.size; ++s) {
              const int left = fs_apply(
                  component_of(kafter,
                               {object_image(fh, {c1}), alpha.at(y)},
                               {object_image(fh, {c2}), alpha.at(y)}),
                  {cell_image(fh, c1, c2, s), unit_code(homy, alpha.at(y))});
              const int right = fs_apply(
                  component_of(kbefore,
                               {alpha.at(x), object_image(gh, {c1})},
                               {alpha.at(x), object_image(gh, {c2})}),
                  {unit_code(homx, alpha.at(x)), cell_image(gh, c1, c2, s)});
              if (left != right) return false;
            }
          }
        }
      }
    return true;
  };

  std::vector<ObjMap> out;
  std::vector<std::size_t> pick(obs.size(), 0);
  while (true) {
    ObjMap alpha;
    for (std::size_t i = 0; i < obs.size(); ++i)
      alpha[obs[i]] = choices[i][pick[i]];
    if (natural(alpha)) out.push_back(std::move(alpha));
    int i = static_cast<int>(pick.size()) - 1;
    while (i >= 0 && pick[i] + 1 == choices[i].size()) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

// count of cell families between two transformations commuting with every
// whiskered 1-cell
long long oracle_modification_count(const VCategory<VC>& a, const TwoTable& f,
                                    const TwoTable& g, const ObjMap& alpha,
                                    const ObjMap& beta) {
  const auto& obs = a.quiver.objects;
  std::vector<int> sizes;
  for (const auto& x : obs) {
    const auto& hx = hom_of(a.quiver, f.first.at(x), g.first.at(x));
    sizes.push_back(hom_of(hx.quiver, alpha.at(x), beta.at(x)).size);
  }
  for (int s : sizes)
    if (s == 0) return 0;

  const auto compatible = [&](const std::vector<int>& m) {
    for (std::size_t xi = 0; xi < obs.size(); ++xi)
      for (std::size_t yi = 0; yi < obs.size(); ++yi) {
        const auto& x = obs[xi];
        const auto& y = obs[yi];
        const auto& kafter =
            a.kappa.at({f.first.at(x), f.first.at(y), g.first.at(y)});
        const auto& kbefore =
            a.kappa.at({f.first.at(x), g.first.at(x), g.first.at(y)});
        const auto& fh = f.second.at({x, y});
        const auto& gh = g.second.at({x, y});
        const auto& homfxy = hom_of(a.quiver, f.first.at(x), f.first.at(y));
        const auto& homgxy = hom_of(a.quiver, g.first.at(x), g.first.at(y));
        for (const auto& c : hom_of(a.quiver, x, y).quiver.objects) {
          const std::string fc = object_image(fh, {c});
          const std::string gc = object_image(gh, {c});
          const int left =
              fs_apply(component_of(kafter, {fc, alpha.at(y)},
                                    {fc, beta.at(y)}),
                       {unit_code(homfxy, fc), m[yi]});
          const int right =
              fs_apply(component_of(kbefore, {alpha.at(x), gc},
                                    {beta.at(x), gc}),
                       {m[xi], unit_code(homgxy, gc)});
          if (left != right) return false;
        }
      }
    return true;
  };

  long long count = 0;
  std::vector<int> m(sizes.size(), 1);
  while (true) {
    if (compatible(m)) ++count;
    int i = static_cast<int>(m.size()) - 1;
    while (i >= 0 && m[i] == sizes[i]) m[i--] = 1;
    if (i < 0) break;
    ++m[i];
  }
  return count;
}

// --- free-prop helpers -------------------------------------------------------

using FsProp = PropMorphism<FS>;

bool lambda_coherence_holds(const OrdMap& f, const OrdMap& g,
                            const FsWord& w) {
  const OrdMap fg = compose_map(f, g);
  std::vector<FsProp> factors;
  for (int k = 1; k <= g.target; ++k) {
    FsWord wk;
    for (int i : fiber(fg, k)) wk.push_back(w[static_cast<size_t>(i - 1)]);
    factors.push_back(fv_lambda(fs, fiber_restriction(f, g, k),
                                identity_map(static_cast<int>(wk.size())),
                                wk));
  }
  const FsProp lhs = fv_compose(
      fs, fv_lambda(fs, fg, identity_map(f.source), w), fv_tensor(fs, factors));
  const FsProp first = fv_lambda(fs, f, identity_map(f.source), w);
  const FsProp rhs =
      fv_compose(fs, first, fv_lambda(fs, g, sigma_t(f).t, first.target));
  return lhs == rhs;
}

// --- short-space helpers -----------------------------------------------------

Rat rq(long long n, long long d = 1) { return Rat(n) / Rat(d); }

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-8, 8), den(1, 8);
  return Rat(num(rng)) / Rat(den(rng));
}

std::vector<Rat> random_vec(std::mt19937_64& rng, int dim) {
  std::vector<Rat> v(static_cast<size_t>(dim));
  for (auto& x : v) x = random_rat(rng);
  return v;
}

ShortSpace line() { return trivial_space(poly_full(1, mat(1, 1, {rq(1)}))); }

// max over tuples of source ball vertices of the level-l target seminorm
ExtRat vertex_max(const ShortMultiMap& f, long long l) {
  std::vector<std::vector<std::vector<Rat>>> verts;
  for (const auto& s : f.sources)
    verts.push_back(ball_vertices(s.at_level(l)));
  ExtRat best{false, 0};
  std::vector<std::size_t> pick(verts.size(), 0);
  while (true) {
    std::vector<std::vector<Rat>> tuple;
    for (std::size_t i = 0; i < verts.size(); ++i)
      tuple.push_back(verts[i][pick[i]]);
    const ExtRat v = seminorm_eval(f.target, short_apply(f, tuple), l);
    if (best < v) best = v;
    int i = static_cast<int>(pick.size()) - 1;
    while (i >= 0 && pick[i] + 1 == verts[i].size()) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return best;
}

}  // namespace

// === 1: ground axioms over finite sets ======================================
//
// Composition totality, unit laws and two-stage associativity on the finite
// sets of size at most 3 with indexing maps of arity at most 3.  Large
// morphism shells are sampled (seeded), small ones exhausted; the bounds are
// pinned here and the run must finish inside 30 seconds.

CriterionResult criterion_ground_axioms(const AcceptanceOptions& opt) {
  const std::string name = "ground axioms over finite sets";
  constexpr double kBudget = 30.0;
  constexpr long long kShellCap = 2048, kTupleCap = 2048, kEnumCap = 4096;
  if (opt.tuple_cap < kTupleCap || opt.candidate_cap < kEnumCap)
    return skipped(1, name,
                   "needs tuple room 2048 and candidate room 4096, given " +
                       std::to_string(opt.tuple_cap) + "/" +
                       std::to_string(opt.candidate_cap));
  Stopwatch watch;
  try {
    std::vector<FinSetObj> objs;
    for (int n = 0; n <= 3; ++n) objs.push_back(FinSetObj{n});
    AxiomBounds b;
    b.max_arity = 3;
    b.shell_cap = kShellCap;
    b.shell_samples = 16;
    b.tuple_cap = kTupleCap;
    b.tuple_samples = 4;
    b.enumerate_cap = kEnumCap;
    b.seed = opt.seed;
    const CheckReport rep = check_axioms(fs, objs, b);
    Tally t;
    t(rep.ok(), describe(rep));
    return finish(1, name, kBudget, watch, t, describe(rep));
  } catch (const std::exception& e) {
    return raised(1, name, watch, e);
  }
}

// === 2: the symmetric reindexing action =====================================
//
// Identity and composition laws of the permutation action on all bijection
// pairs up to arity 4 over sampled morphisms, the decomposition of
// composition along map-then-bijection, and equivariance on commuting
// squares; pinned to 30 seconds.

CriterionResult criterion_symmetric_action(const AcceptanceOptions& opt) {
  const std::string name = "symmetric reindexing action";
  constexpr double kBudget = 30.0;
  constexpr long long kShellCap = 2048, kTupleCap = 2048, kEnumCap = 4096;
  if (opt.tuple_cap < kTupleCap || opt.candidate_cap < kEnumCap)
    return skipped(2, name,
                   "needs tuple room 2048 and candidate room 4096, given " +
                       std::to_string(opt.tuple_cap) + "/" +
                       std::to_string(opt.candidate_cap));
  Stopwatch watch;
  try {
    std::vector<FinSetObj> objs;
    for (int n = 0; n <= 3; ++n) objs.push_back(FinSetObj{n});
    AxiomBounds b;
    b.max_arity = 4;
    b.shell_cap = kShellCap;
    b.shell_samples = 16;
    b.tuple_cap = kTupleCap;
    b.tuple_samples = 4;
    b.enumerate_cap = kEnumCap;
    b.seed = opt.seed;
    const CheckReport rep = check_symmetric_action(fs, objs, b);
    Tally t;
    t(rep.ok(), describe(rep));
    return finish(2, name, kBudget, watch, t, describe(rep));
  } catch (const std::exception& e) {
    return raised(2, name, watch, e);
  }
}

// === 3: free prop structure maps ============================================
//
// Exact bijection-then-monotone factorizations for every map between
// ordinals of size at most 5; the coherence square and the degeneration to
// identities on monotone maps for all triples of sizes at most 4; and the
// correspondence between plain multifunctors into the underlying ground and
// prop functors out of the free prop on the two-color table ground, both
// cardinalities and both round-trips.  Pinned to 30 seconds.

CriterionResult criterion_free_prop(const AcceptanceOptions& opt) {
  const std::string name = "free prop structure maps";
  constexpr double kBudget = 30.0;
  constexpr long long kEnumCap = 10000;
  if (opt.candidate_cap < kEnumCap)
    return skipped(3, name, "needs candidate room 10000, given " +
                                std::to_string(opt.candidate_cap));
  Stopwatch watch;
  Tally t;
  try {
    // exact factorizations
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m <= 5; ++m)
        for (const OrdMap& h : all_maps(n, m)) {
          const SigmaT st = sigma_t(h);
          std::vector<int> v = st.sigma.values;
          std::sort(v.begin(), v.end());
          bool bij = st.sigma.source == st.sigma.target;
          for (int i = 0; bij && i < st.sigma.source; ++i)
            bij = v[static_cast<size_t>(i)] == i + 1;
          t(bij && std::is_sorted(st.t.values.begin(), st.t.values.end()) &&
                compose_map(st.sigma, st.t) == h,
            [&] { return "factorization failed at " + show(h); });
        }

    // coherence squares and monotone degeneration, sizes at most 4
    for (int i = 0; i <= 4 && t.ok; ++i) {
      FsWord w;
      for (int p = 1; p <= i; ++p) w.push_back(FinSetObj{(p % 2) + 1});
      for (int j = 0; j <= 4 && t.ok; ++j) {
        for (const OrdMap& f : all_monotone(i, j))
          t(fv_lambda(fs, f, identity_map(i), w) == fv_identity(fs, w),
            [&] { return "monotone coherence not an identity at " + show(f); });
        for (const OrdMap& f : all_maps(i, j))
          for (int k = 0; k <= 4 && t.ok; ++k)
            for (const OrdMap& g : all_maps(j, k))
              t(lambda_coherence_holds(f, g, w), [&] {
                return "coherence square failed at f=" + show(f) +
                       " g=" + show(g);
              });
      }
    }

    // the adjunction correspondence on the two-color table ground
    const TableInstance v = make_torsor_v();
    const auto objs = v.objects();
    const auto u = u_functor(v);
    const auto fs_side = enumerate_multifunctors(v, objs, u, objs, 2, kEnumCap);
    const auto gs_side =
        enumerate_prop_functors(v, objs, v, objs, 2, 3, kEnumCap);
    t(fs_side.size() == 2 && gs_side.size() == 2,
      "expected 2 functors on each side of the correspondence, found " +
          std::to_string(fs_side.size()) + "/" +
          std::to_string(gs_side.size()));
    for (const auto& f : fs_side) {
      const auto g = theta(f);
      t(std::find(gs_side.begin(), gs_side.end(), g) != gs_side.end(),
        "image of a multifunctor is not a free-prop functor");
      t(theta_inverse(g) == f, "round-trip through the free prop moved a "
                               "multifunctor");
    }
    for (const auto& g : gs_side)
      t(theta(theta_inverse(g)) == g,
        "round-trip through the ground moved a prop functor");

    return finish(3, name, kBudget, watch, t,
                  std::to_string(t.checks) + " exact structure checks");
  } catch (const std::exception& e) {
    return raised(3, name, watch, e);
  }
}

// === 4: hom objects and closure over finite sets ============================
//
// Over a battery of categories with at most 2 objects and homs of size at
// most 2 (a chain, a parallel pair, a 2-element group): end objects agree
// with brute-forced natural families for every parallel functor pair and
// round-trip through points; currying and plugging-in are mutually inverse
// bijections for every unary functor pair; products and equalizers of
// enriched categories satisfy their universal properties with uniqueness
// checked by exhaustive sweep.  Pinned to 120 seconds.

CriterionResult criterion_hom_objects(const AcceptanceOptions& opt) {
  const std::string name = "hom objects and closure over finite sets";
  constexpr double kBudget = 120.0;
  constexpr long long kEnumCap = 100000, kTupleCap = 4096;
  if (opt.candidate_cap < kEnumCap || opt.tuple_cap < kTupleCap)
    return skipped(4, name,
                   "needs candidate room 100000 and tuple room 4096, given " +
                       std::to_string(opt.candidate_cap) + "/" +
                       std::to_string(opt.tuple_cap));
  Stopwatch watch;
  Tally t;
  try {
    const auto cats = battery();
    long long ends_checked = 0;

    // ends against brute-forced natural families
    for (const auto& a : cats)
      for (const auto& c : cats) {
        const auto fns = enumerate_functors(fs, {a}, c, kEnumCap);
        for (const auto& f : fns)
          for (const auto& h : fns) {
            const auto e = end_hom(fs, f, h, kTupleCap);
            const auto oracle = natural_families(f, h);
            const auto points = fs.enumerate_hom({}, e.obj);
            ++ends_checked;
            t(points.size() == oracle.size(), "end size disagrees with the "
                                              "brute-forced family count");
            std::set<std::vector<int>> got;
            for (const auto& p : points) {
              got.insert(family_of(e, p));
              const auto tr = point_to_transformation(fs, e, f, h, p);
              t(check_naturality(fs, tr).ok(),
                "a point of an end projected to a non-natural family");
              t(transformation_to_point(fs, e, tr) == p,
                "point -> transformation -> point is not the identity");
            }
            t(got == oracle, "end families disagree with brute force");
          }
      }

    // currying against plugging-in, one entry at a time
    for (const auto& a : cats)
      for (const auto& b : cats)
        for (const auto& c : cats) {
          const auto hc = hom_category(fs, {b}, c, kEnumCap, kTupleCap);
          const auto curried =
              enumerate_functors(fs, {a}, hc.category, kEnumCap);
          // plugging in rebuilds a functor with the hom entries leading
          const auto plain = enumerate_functors(fs, {b, a}, c, kEnumCap);
          t(curried.size() == plain.size(),
            "currying is not a bijection: " + std::to_string(curried.size()) +
                " curried vs " + std::to_string(plain.size()) + " plain");
          for (const auto& f : curried)
            t(psi(fs, hc, phi(fs, hc, f)) == f,
              "plug-in then curry moved a functor");
          for (const auto& g : plain)
            t(phi(fs, hc, psi(fs, hc, g)) == g,
              "curry then plug-in moved a functor");
        }

    // products: projections, the induced tuple, uniqueness by sweep
    const auto x = chain2();
    for (const auto& a : cats)
      for (const auto& b : cats) {
        const auto prod = vcat_product(fs, {a, b});
        t(check_category(fs, prod.category).ok(),
          "a product category fails the category laws");
        t(prod.category.quiver.objects.size() ==
              a.quiver.objects.size() * b.quiver.objects.size(),
          "product object count is not the product of object counts");
        for (const auto& p : prod.projections)
          t(check_functor(fs, p).ok(), "a projection is not a functor");
        const auto into_a = enumerate_functors(fs, {x}, a, kEnumCap);
        const auto into_b = enumerate_functors(fs, {x}, b, kEnumCap);
        const auto into_p =
            enumerate_functors(fs, {x}, prod.category, kEnumCap);
        for (const auto& f : into_a)
          for (const auto& g : into_b) {
            const auto tup = vcat_tuple(fs, {x}, {f, g});
            t(compose_functors(fs, identity_map(1), {tup},
                               prod.projections[0]) == f &&
                  compose_functors(fs, identity_map(1), {tup},
                                   prod.projections[1]) == g,
              "the induced map into a product misses its legs");
            long long solutions = 0;
            for (const auto& u : into_p)
              if (compose_functors(fs, identity_map(1), {u},
                                   prod.projections[0]) == f &&
                  compose_functors(fs, identity_map(1), {u},
                                   prod.projections[1]) == g)
                ++solutions;
            t(solutions == 1, "the map into a product is not unique");
          }
      }

    // equalizers: the fork, factorization, uniqueness by sweep
    for (const auto& a : cats)
      for (const auto& c : cats) {
        const auto fns = enumerate_functors(fs, {a}, c, kEnumCap);
        const auto into_a = enumerate_functors(fs, {x}, a, kEnumCap);
        for (const auto& f : fns)
          for (const auto& h : fns) {
            const auto eqz = vcat_equalizer(fs, f, h);
            t(check_category(fs, eqz.category).ok(),
              "an equalizer subcategory fails the category laws");
            t(compose_functors(fs, identity_map(1), {eqz.include}, f) ==
                  compose_functors(fs, identity_map(1), {eqz.include}, h),
              "the equalizer fork does not commute");
            const auto into_e =
                enumerate_functors(fs, {x}, eqz.category, kEnumCap);
            for (const auto& j : into_a) {
              if (compose_functors(fs, identity_map(1), {j}, f) !=
                  compose_functors(fs, identity_map(1), {j}, h))
                continue;
              const auto u = factor_into_vcat_equalizer(fs, eqz, j);
              t(compose_functors(fs, identity_map(1), {u}, eqz.include) == j,
                "factoring through an equalizer misses the fork");
              long long solutions = 0;
              for (const auto& w : into_e)
                if (compose_functors(fs, identity_map(1), {w}, eqz.include) ==
                    j)
                  ++solutions;
              t(solutions == 1, "the map into an equalizer is not unique");
            }
          }
      }

    return finish(4, name, kBudget, watch, t,
                  std::to_string(t.checks) + " checks over " +
                      std::to_string(ends_checked) + " ends and the " +
                      std::to_string(cats.size()) + "-category battery");
  } catch (const std::exception& e) {
    return raised(4, name, watch, e);
  }
}

// === 5: strict 2-categories from self-enrichment ============================
//
// The category enriched in categories built from a two-object fixture is
// compared, object by object and arrow by arrow, against a table-level
// oracle: strict 2-functors enumerated from raw composition tables, strict
// transformations filtered by both the 1-cell and whiskered 2-cell
// conditions, and modification counts as the arrow sizes of every
// transformation category.  Pinned to 60 seconds.

CriterionResult criterion_two_categories(const AcceptanceOptions& opt) {
  const std::string name = "strict 2-categories from self-enrichment";
  constexpr double kBudget = 60.0;
  constexpr long long kEnumCap = 10000, kTupleCap = 4096;
  if (opt.candidate_cap < kEnumCap || opt.tuple_cap < kTupleCap)
    return skipped(5, name,
                   "needs candidate room 10000 and tuple room 4096, given " +
                       std::to_string(opt.candidate_cap) + "/" +
                       std::to_string(opt.tuple_cap));
  Stopwatch watch;
  Tally t;
  try {
    const VC vc{fs, kEnumCap, kTupleCap};
    const auto a = two_category(chain2());
    t(check_category(vc, a).ok(), "the fixture fails the category laws over "
                                  "categories");

    const auto hc = hom_category(vc, {a}, a, kEnumCap, kTupleCap);
    const auto oracle_fs = oracle_two_functors(a, kEnumCap);

    std::set<TwoTable> machine_fs;
    std::vector<TwoTable> machine_tables;
    for (const auto& f : hc.functors) {
      TwoTable tab;
      for (const auto& o : a.quiver.objects) tab.first[o] = object_image(f, {o});
      for (const auto& o1 : a.quiver.objects)
        for (const auto& o2 : a.quiver.objects)
          tab.second[{o1, o2}] = component_of(f, {o1}, {o2});
      machine_tables.push_back(tab);
      machine_fs.insert(std::move(tab));
    }
    t(machine_fs == oracle_fs,
      "the 2-functor set disagrees with the table-level oracle: " +
          std::to_string(machine_fs.size()) + " vs " +
          std::to_string(oracle_fs.size()));

    long long nats_total = 0, mods_total = 0;
    for (std::size_t i = 0; i < hc.functors.size(); ++i)
      for (std::size_t j = 0; j < hc.functors.size(); ++j) {
        const auto& end =
            hc.ends.at({functor_name(i), functor_name(j)});
        const auto nats =
            oracle_two_nats(a, machine_tables[i], machine_tables[j]);
        nats_total += static_cast<long long>(nats.size());

        std::set<std::string> expected;
        for (const auto& alpha : nats) {
          std::vector<std::string> parts;
          for (const auto& o : a.quiver.objects) parts.push_back(alpha.at(o));
          expected.insert(tuple_name(parts));
        }
        const std::set<std::string> got(end.obj.quiver.objects.begin(),
                                        end.obj.quiver.objects.end());
        t(got == expected, [&] {
          return "transformation objects between " + functor_name(i) +
                 " and " + functor_name(j) + " disagree with the oracle";
        });

        for (const auto& alpha : nats)
          for (const auto& beta : nats) {
            std::vector<std::string> pa, pb;
            for (const auto& o : a.quiver.objects) {
              pa.push_back(alpha.at(o));
              pb.push_back(beta.at(o));
            }
            const long long mods = oracle_modification_count(
                a, machine_tables[i], machine_tables[j], alpha, beta);
            mods_total += mods;
            t(hom_of(end.obj.quiver, tuple_name(pa), tuple_name(pb)).size ==
                  mods,
              [&] {
                return "modification count between " + tuple_name(pa) +
                       " and " + tuple_name(pb) + " disagrees with the oracle";
              });
          }
      }

    t(check_category(vc, hc.category).ok(),
      "the functor category fails the category laws over categories");

    std::ostringstream os;
    os << hc.functors.size() << " 2-functors, " << nats_total
       << " transformations, " << mods_total << " modifications matched";
    return finish(5, name, kBudget, watch, t, os.str());
  } catch (const std::exception& e) {
    return raised(5, name, watch, e);
  }
}

// === 6: whiskering against classical composites =============================
//
// Whiskering with identities is the identity; whiskering a functor into the
// source reindexes every component family along the functor's object map;
// whiskering a functor out of the target applies its arrow map to every
// component.  All comparisons are exact, over every functor of the fixture.

CriterionResult criterion_whiskering(const AcceptanceOptions& opt) {
  const std::string name = "whiskering against classical composites";
  constexpr long long kEnumCap = 10000, kTupleCap = 4096;
  if (opt.candidate_cap < kEnumCap || opt.tuple_cap < kTupleCap)
    return skipped(6, name,
                   "needs candidate room 10000 and tuple room 4096, given " +
                       std::to_string(opt.candidate_cap) + "/" +
                       std::to_string(opt.tuple_cap));
  Stopwatch watch;
  Tally t;
  try {
    const auto z2 = cyclic(2);
    const auto c2 = chain2();
    const auto hz = hom_category(fs, {z2}, z2, kEnumCap, kTupleCap);
    t(left_whisker(fs, identity_map(1), {identity_functor(fs, z2)}, hz, hz) ==
          identity_functor(fs, hz.category),
      "left whiskering with the identity moved the hom category");
    t(right_whisker(fs, identity_map(1), identity_functor(fs, z2), {hz}, hz) ==
          identity_functor(fs, hz.category),
      "right whiskering with the identity moved the hom category");

    const auto hbz = hom_category(fs, {c2}, z2, kEnumCap, kTupleCap);
    const auto tuples = object_tuples<FS>({c2});
    const auto pos = [&](const std::string& o) {
      for (std::size_t k = 0; k < tuples.size(); ++k)
        if (tuples[k][0] == o) return k;
      return tuples.size();
    };

    // plugging a functor into the source reindexes families
    for (const auto& f : enumerate_functors(fs, {c2}, c2, kEnumCap)) {
      const auto lw = left_whisker(fs, identity_map(1), {f}, hbz, hbz);
      for (std::size_t i = 0; i < hbz.functors.size(); ++i)
        for (std::size_t j = 0; j < hbz.functors.size(); ++j) {
          const auto fi = functor_name(i), fj = functor_name(j);
          const auto& src_end = hbz.ends.at({fi, fj});
          const auto& img_end = hbz.ends.at(
              {object_image(lw, {fi}), object_image(lw, {fj})});
          for (const auto& p : fs.enumerate_hom({}, src_end.obj)) {
            const auto fam = family_of(src_end, p);
            const auto q = compose1(fs, p, component_of(lw, {fi}, {fj}));
            std::vector<int> expected;
            for (const auto& tup : tuples)
              expected.push_back(fam[pos(object_image(f, tup))]);
            t(family_of(img_end, q) == expected,
              "left whiskering disagrees with reindexing along the functor");
          }
        }
    }

    // composing with a functor out of the target maps every component
    for (const auto& h : enumerate_functors(fs, {z2}, z2, kEnumCap)) {
      const auto rw = right_whisker(fs, identity_map(1), h, {hbz}, hbz);
      const auto& hcomp = component_of(h, {"e"}, {"e"});
      for (std::size_t i = 0; i < hbz.functors.size(); ++i)
        for (std::size_t j = 0; j < hbz.functors.size(); ++j) {
          const auto fi = functor_name(i), fj = functor_name(j);
          const auto& src_end = hbz.ends.at({fi, fj});
          const auto& img_end = hbz.ends.at(
              {object_image(rw, {fi}), object_image(rw, {fj})});
          for (const auto& p : fs.enumerate_hom({}, src_end.obj)) {
            const auto fam = family_of(src_end, p);
            const auto q = compose1(fs, p, component_of(rw, {fi}, {fj}));
            std::vector<int> expected;
            for (int v : fam) expected.push_back(fs_apply(hcomp, {v}));
            t(family_of(img_end, q) == expected,
              "right whiskering disagrees with applying the functor to "
              "components");
          }
        }
    }

    return finish(6, name, 0.0, watch, t,
                  std::to_string(t.checks) + " exact family comparisons");
  } catch (const std::exception& e) {
    return raised(6, name, watch, e);
  }
}

// === 7: seminormed spaces and short maps ====================================
//
// Operator seminorms of the scalar fixtures (identity, doubling, bilinear
// multiplication) are exactly 1, 2, 1; a dense rational grid over the unit
// ball never beats the computed value and a vertex tuple attains it; kernels,
// products and a pullback limit satisfy their universal properties with
// shortness reflected and preserved on seeded random test maps; and the
// Minkowski functional of the unit-ball vertices recomputes each seminorm at
// 100 seeded random points per fixture.  Pinned to 60 seconds.

CriterionResult criterion_short_spaces(const AcceptanceOptions& opt) {
  const std::string name = "seminormed spaces and short maps";
  constexpr double kBudget = 60.0;
  Stopwatch watch;
  Tally t;
  try {
    std::mt19937_64 rng(opt.seed);
    const ShortInstance sh;
    const ShortSpace L = line();
    const auto ident = short_identity(L);
    const auto twice = short_scale(ident, 2);
    const auto mult = short_map({L, L}, L, {rq(1)});

    const ExtRat one{false, 1}, two{false, 2};
    t(hom_seminorm(ident, 0) == one, "identity seminorm is not 1");
    t(hom_seminorm(twice, 0) == two, "doubling seminorm is not 2");
    t(hom_seminorm(mult, 0) == one, "multiplication seminorm is not 1");

    // dense-grid oracle: ratios never beat the value, a vertex attains it
    for (const auto* f : {&ident, &twice, &mult}) {
      const ExtRat claimed = hom_seminorm(*f, 0);
      std::vector<std::vector<Rat>> grid;
      for (int i = -8; i <= 8; ++i) grid.push_back({rq(i, 8)});
      std::vector<std::size_t> pick(f->sources.size(), 0);
      while (true) {
        std::vector<std::vector<Rat>> args;
        for (std::size_t k = 0; k < pick.size(); ++k)
          args.push_back(grid[pick[k]]);
        t(seminorm_eval(f->target, short_apply(*f, args), 0) <= claimed,
          "a unit-ball grid point beats the computed operator seminorm");
        int i = static_cast<int>(pick.size()) - 1;
        while (i >= 0 && pick[i] + 1 == grid.size()) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
      }
      t(vertex_max(*f, 0) == claimed,
        "no vertex tuple attains the computed operator seminorm");
    }

    // kernel universal property on seeded random test maps
    const ShortSpace plane = short_product({L, L});
    const auto diff = short_map({plane}, L, {rq(1), rq(-1)});
    const ShortSubspace ker = short_kernel(diff);
    t(check_short(ker.include).is_short, "a kernel inclusion is not short");
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<Rat> coeff;
      for (int k = 0; k < ker.space.dim; ++k) coeff.push_back(random_rat(rng));
      const auto m = short_map({L}, ker.space, coeff);
      const auto j = compose1(sh, m, ker.include);
      const auto n = factor_through_subspace(ker, j);
      t(compose1(sh, n, ker.include) == j,
        "factoring through a kernel misses the composite");
      t(n == m, "the factorization through a kernel is not unique");
      t(check_short(n).is_short == check_short(j).is_short,
        "a map into a kernel is short but its composite is not, or vice "
        "versa");
    }

    // product universal property
    for (int rep = 0; rep < 20; ++rep) {
      const auto m1 = short_map({L}, L, {random_rat(rng)});
      const auto m2 = short_map({L}, L, {random_rat(rng)});
      const auto tup = short_tuple({L}, {m1, m2});
      t(short_compose(identity_map(1), {tup},
                      short_projection({L, L}, 1)) == m1 &&
            short_compose(identity_map(1), {tup},
                          short_projection({L, L}, 2)) == m2,
        "the induced map into a product misses its legs");
      t(check_short(tup).is_short ==
            (check_short(m1).is_short && check_short(m2).is_short),
        "shortness into a product is not componentwise");
    }

    // a pullback limit via the generic construction
    Diagram<ShortInstance> d;
    d.objects = {L, L, L};
    d.arrows.push_back({1, 3, short_identity(L)});
    d.arrows.push_back({2, 3, twice});
    const auto lim = limit(sh, d);
    for (const auto& leg : lim.legs)
      t(check_short(leg).is_short, "a limit leg is not short");
    for (int rep = 0; rep < 20; ++rep) {
      const Rat lambda = random_rat(rng);
      const auto c1 = short_map({L}, L, {lambda * 2});
      const auto c2 = short_map({L}, L, {lambda});
      const auto c3 = short_map({L}, L, {lambda * 2});
      const auto u = factor_into_limit(sh, lim, {L}, {c1, c2, c3});
      t(compose1(sh, u, lim.legs[0]) == c1 &&
            compose1(sh, u, lim.legs[1]) == c2 &&
            compose1(sh, u, lim.legs[2]) == c3,
        "factoring into a limit misses the cone");
      const bool cone_short = check_short(c1).is_short &&
                              check_short(c2).is_short &&
                              check_short(c3).is_short;
      t(check_short(u).is_short == cone_short,
        "a map into a limit is short but its cone is not, or vice versa");
    }

    // Minkowski functional of the unit-ball vertices
    const std::vector<PolySeminorm> norms{
        poly_full(1, mat(1, 1, {rq(1)})), poly_full(2, mat_identity(2)),
        poly_full(2, mat(2, 2, {rq(1), rq(1), rq(1), rq(-1)}))};
    for (const auto& s : norms) {
      const auto verts = ball_vertices(s);
      for (int rep = 0; rep < 100; ++rep) {
        const auto x = random_vec(rng, s.dim);
        t(minkowski(verts, x) == seminorm_value(s, x),
          "the Minkowski functional of the ball vertices disagrees with the "
          "seminorm");
      }
    }

    return finish(7, name, kBudget, watch, t,
                  std::to_string(t.checks) + " exact-arithmetic checks");
  } catch (const std::exception& e) {
    return raised(7, name, watch, e);
  }
}

// === 8: negative controls ===================================================
//
// Four deliberate defects must each be caught with a concrete witness: an
// associativity corruption in a composition table, a non-natural component
// family, a non-short map, and a corrupted table ground.

CriterionResult criterion_negative_controls(const AcceptanceOptions& opt) {
  const std::string name = "negative controls";
  Stopwatch watch;
  Tally t;
  std::ostringstream caught;
  try {
    // an associativity corruption in a composition table
    auto bad = cyclic(3);
    bad.kappa.at({"e", "e", "e"}).table[4] = 2;
    const auto rep1 = check_category(fs, bad);
    t(!rep1.ok() && !rep1.failures.empty(),
      "a corrupted composition table went undetected");
    if (!rep1.failures.empty())
      caught << "[" << rep1.failures.front().law << ": "
             << rep1.failures.front().detail << "] ";

    // a non-natural component family
    const auto e2 = endo2();
    VNatTransformation<FS> tr;
    tr.source = identity_functor(fs, e2);
    tr.target = identity_functor(fs, e2);
    tr.components[{"e"}] = fs_map({}, 4, {3});
    const auto rep2 = check_naturality(fs, tr);
    t(!rep2.ok() && !rep2.failures.empty(),
      "a non-natural family went undetected");
    if (!rep2.failures.empty())
      caught << "[" << rep2.failures.front().law << ": "
             << rep2.failures.front().detail << "] ";

    // a non-short map, witnessed by a vertex where the bound fails
    const auto twice = short_scale(short_identity(line()), 2);
    const auto chk = check_short(twice);
    t(!chk.is_short && chk.witness.has_value(),
      "a norm-doubling map passed the shortness check");
    if (chk.witness.has_value()) {
      t(chk.witness->value == ExtRat{false, 2} &&
            !chk.witness->vertices.empty(),
        "the shortness witness does not carry the offending vertex");
      caught << "[short: value 2 at a unit vertex] ";
    }

    // a corrupted table ground
    const TableInstance v = make_corrupted_torsor_v();
    AxiomBounds b;
    b.max_arity = 2;
    b.seed = opt.seed;
    const auto rep3 = check_axioms(v, v.objects(), b);
    t(!rep3.ok() && !rep3.failures.empty(),
      "a corrupted table ground went undetected");
    if (!rep3.failures.empty())
      caught << "[" << rep3.failures.front().law << ": "
             << rep3.failures.front().detail << "]";

    return finish(8, name, 0.0, watch, t,
                  "all four defects detected: " + caught.str());
  } catch (const std::exception& e) {
    return raised(8, name, watch, e);
  }
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  return {criterion_ground_axioms(opt),     criterion_symmetric_action(opt),
          criterion_free_prop(opt),         criterion_hom_objects(opt),
          criterion_two_categories(opt),    criterion_whiskering(opt),
          criterion_short_spaces(opt),      criterion_negative_controls(opt)};
}

}  // namespace mcat
