#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcat/enriched.hpp"
#include "mcat/vfinset.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace mcat;

namespace {

const FinSetInstance fs;
using FS = FinSetInstance;

// Assemble a FinSet-enriched category from hom sizes, a composition rule, and
// identity picks.  The rule receives 1-based codes; it is only consulted on
// nonempty homs.
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
        table.reserve(static_cast<size_t>(nxy) * static_cast<size_t>(nyz));
        for (int f = 1; f <= nxy; ++f)
          for (int h = 1; h <= nyz; ++h) table.push_back(comp(x, y, z, f, h));
        c.kappa[{x, y, z}] = fs_map({nxy, nyz}, nxz, table);
      }
  for (const auto& x : c.quiver.objects)
    c.ident[x] = fs_map({}, hsize(x, x), {unit(x)});
  return c;
}

// The thin two-object chain x <= y (no morphism back).
VCategory<FS> chain2() {
  return make_category(
      {"x", "y"},
      [](const std::string& a, const std::string& b) { return a <= b; },
      [](const std::string&, const std::string&, const std::string&, int,
         int) { return 1; },
      [](const std::string&) { return 1; });
}

// The thin three-object chain 0 <= 1 <= 2.
VCategory<FS> chain3() {
  return make_category(
      {"0", "1", "2"},
      [](const std::string& a, const std::string& b) { return a <= b; },
      [](const std::string&, const std::string&, const std::string&, int,
         int) { return 1; },
      [](const std::string&) { return 1; });
}

// One object whose endomorphisms form the cyclic group of order m; code k
// stands for the residue k-1.
VCategory<FS> cyclic(int m) {
  return make_category(
      {"e"}, [m](const std::string&, const std::string&) { return m; },
      [m](const std::string&, const std::string&, const std::string&, int f,
          int h) { return (f - 1 + h - 1) % m + 1; },
      [](const std::string&) { return 1; });
}

// One object whose endomorphisms are all maps {1,2} -> {1,2}; codes order the
// value tables with the value at 1 most significant, so code 2 is the
// identity.  Composition is diagram order: kappa(f,h) applies f first.
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

// Componentwise addition as a two-entry functor on the cyclic group of
// order two.
MultiEntryFunctor<FS> add_functor(const VCategory<FS>& z2) {
  MultiEntryFunctor<FS> f;
  f.sources = {z2, z2};
  f.target = z2;
  f.obj_map[{"e", "e"}] = "e";
  f.components[{{"e", "e"}, {"e", "e"}}] = fs_map({2, 2}, 2, {1, 2, 2, 1});
  return f;
}

// A unary functor on a cyclic group from a residue table (1-based codes).
MultiEntryFunctor<FS> cyclic_endo(const VCategory<FS>& z,
                                  const std::vector<int>& table) {
  MultiEntryFunctor<FS> f;
  f.sources = {z};
  f.target = z;
  f.obj_map[{"e"}] = "e";
  f.components[{{"e"}, {"e"}}] =
      fs_map({static_cast<int>(table.size())},
             static_cast<int>(table.size()), table);
  return f;
}

}  // namespace

TEST_CASE("category laws hold for the fixtures") {
  for (const auto& c :
       {chain2(), chain3(), cyclic(2), cyclic(3), endo2()}) {
    const CheckReport rep = check_category(fs, c);
    CHECK(rep.ok());
    CHECK(rep.failures.empty());
    CHECK(rep.pass_counts.at("associativity") > 0);
    CHECK(rep.pass_counts.at("unit-left") > 0);
  }

  SUBCASE("a corrupted composition table fails with a witness") {
    VCategory<FS> bad = cyclic(3);
    // overwrite 1+1: the table entry for the pair (2,2) becomes residue 1
    auto& table = bad.kappa.at({"e", "e", "e"}).table;
    REQUIRE(table[4] == 3);
    table[4] = 2;
    const CheckReport rep = check_category(fs, bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.fail_counts.count("associativity"));
    CHECK_FALSE(rep.fail_counts.count("unit-left"));
    CHECK_FALSE(rep.fail_counts.count("unit-right"));
    REQUIRE_FALSE(rep.failures.empty());
    CHECK(rep.failures.front().law == "associativity");
    CHECK(rep.failures.front().detail.find("(e,e,e,e)") != std::string::npos);
  }
  SUBCASE("a missing table entry is reported, not thrown") {
    VCategory<FS> bad = chain2();
    bad.kappa.erase({"x", "x", "x"});
    const CheckReport rep = check_category(fs, bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.fail_counts.at("kappa-signature") == 1);
  }
  SUBCASE("accessors reject unknown keys") {
    const auto c = chain2();
    CHECK_THROWS_AS(hom_of(c.quiver, "x", "zz"), SignatureMismatch);
    CHECK_THROWS_AS(kappa_of(c, "x", "zz", "y"), SignatureMismatch);
    CHECK_THROWS_AS(ident_of(c, "zz"), SignatureMismatch);
  }
}

TEST_CASE("object tuples enumerate the family") {
  const auto ts = object_tuples<FS>({chain2(), cyclic(2)});
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == std::vector<std::string>{"x", "e"});
  CHECK(ts[1] == std::vector<std::string>{"y", "e"});
  CHECK(object_tuples<FS>({}).size() == 1);
  CHECK(object_tuples<FS>({}).front().empty());
  CHECK_THROWS_AS(object_tuples<FS>({chain3(), chain3()}, 8), SizeBound);
}

TEST_CASE("functor checking and exhaustive enumeration") {
  CHECK(check_functor(fs, identity_functor(fs, chain3())).ok());
  CHECK(check_functor(fs, identity_functor(fs, endo2())).ok());
  CHECK(check_functor(fs, add_functor(cyclic(2))).ok());

  SUBCASE("unary counts match hand counts") {
    // monotone self-maps of the 2-chain; group endomorphisms of cyclic groups
    CHECK(enumerate_functors(fs, {chain2()}, chain2()).size() == 3);
    CHECK(enumerate_functors(fs, {cyclic(2)}, cyclic(2)).size() == 2);
    CHECK(enumerate_functors(fs, {cyclic(3)}, cyclic(2)).size() == 1);
    CHECK(enumerate_functors(fs, {}, chain3()).size() == 3);  // object picks
  }
  SUBCASE("monoid endomorphism oracle for the full transformation monoid") {
    const auto z = endo2();
    const auto& kap = z.kappa.at({"e", "e", "e"});
    const auto comp = [&](int f, int h) { return fs_apply(kap, {f, h}); };
    std::set<std::vector<int>> oracle;
    std::vector<int> m(4, 1);
    while (true) {
      bool good = m[1] == 2;  // preserves the identity (code 2)
      for (int f = 1; good && f <= 4; ++f)
        for (int h = 1; good && h <= 4; ++h)
          good = m[comp(f, h) - 1] == comp(m[f - 1], m[h - 1]);
      if (good) oracle.insert(m);
      int i = 3;
      while (i >= 0 && m[i] == 4) m[i--] = 1;
      if (i < 0) break;
      ++m[i];
    }
    std::set<std::vector<int>> got;
    for (const auto& f : enumerate_functors(fs, {z}, z))
      got.insert(component_of(f, {"e"}, {"e"}).table);
    CHECK(got == oracle);
    CHECK(got.size() == oracle.size());
    CHECK(got.count({1, 2, 3, 4}) == 1);  // the identity endomorphism
  }
  SUBCASE("two-entry functors match the commuting-square oracle") {
    // a two-entry functor from a pair of 2-chains assigns a residue to each
    // comparable pair of corners so that parallel paths agree
    const auto a = chain2();
    const auto z = cyclic(2);
    const auto leq = [](const std::string& p, const std::string& q) {
      return p <= q;
    };
    std::vector<std::pair<std::string, std::string>> corners;
    for (const auto& p : a.quiver.objects)
      for (const auto& q : a.quiver.objects) corners.push_back({p, q});
    std::vector<std::pair<int, int>> edges;  // comparable corner pairs
    for (int s = 0; s < 4; ++s)
      for (int t = 0; t < 4; ++t)
        if (leq(corners[s].first, corners[t].first) &&
            leq(corners[s].second, corners[t].second))
          edges.push_back({s, t});
    std::set<std::vector<int>> oracle;
    std::vector<int> r(edges.size(), 0);
    while (true) {
      bool good = true;
      for (size_t i = 0; good && i < edges.size(); ++i)
        for (size_t j = 0; good && j < edges.size(); ++j) {
          if (edges[i].second != edges[j].first) continue;
          for (size_t k = 0; k < edges.size(); ++k)
            if (edges[k] == std::make_pair(edges[i].first, edges[j].second))
              good = good && (r[i] + r[j]) % 2 == r[k];
        }
      for (size_t i = 0; good && i < edges.size(); ++i)
        if (edges[i].first == edges[i].second) good = r[i] == 0;
      if (good) oracle.insert(r);
      int i = static_cast<int>(r.size()) - 1;
      while (i >= 0 && r[i] == 1) r[i--] = 0;
      if (i < 0) break;
      ++r[i];
    }
    CHECK(oracle.size() == 8);

    const auto found = enumerate_functors(fs, {a, a}, z, 2000);
    REQUIRE(found.size() == oracle.size());
    std::set<std::vector<int>> got;
    for (const auto& f : found) {
      std::vector<int> vals;
      for (const auto& e : edges) {
        const auto& comp = component_of(
            f, {corners[e.first].first, corners[e.first].second},
            {corners[e.second].first, corners[e.second].second});
        vals.push_back(fs_apply(comp, {1, 1}) - 1);
      }
      got.insert(vals);
      CHECK(check_functor(fs, f).ok());
    }
    CHECK(got == oracle);
  }
  SUBCASE("the candidate cap aborts loudly") {
    CHECK_THROWS_AS(enumerate_functors(fs, {endo2()}, endo2(), 10),
                    SizeBound);
  }
  SUBCASE("a broken component table is rejected with a witness") {
    auto bad = identity_functor(fs, cyclic(3));
    bad.components.at({{"e"}, {"e"}}).table = {2, 3, 1};  // shifts residues
    const CheckReport rep = check_functor(fs, bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.fail_counts.count("functor-unit"));
  }
}

TEST_CASE("functor composition") {
  const auto z2 = cyclic(2);
  const auto idz = cyclic_endo(z2, {1, 2});
  const auto zero = cyclic_endo(z2, {1, 1});
  const auto add = add_functor(z2);
  REQUIRE(check_functor(fs, zero).ok());
  REQUIRE(check_functor(fs, add).ok());

  SUBCASE("identities are neutral") {
    for (const auto& f : enumerate_functors(fs, {chain2()}, chain3())) {
      CHECK(compose_functors(fs, identity_map(1),
                             {identity_functor(fs, chain2())}, f) == f);
      CHECK(compose_functors(fs, identity_map(1), {f},
                             identity_functor(fs, chain3())) == f);
    }
  }
  SUBCASE("unary composition agrees with pointwise table chasing") {
    const auto pool = enumerate_functors(fs, {endo2()}, endo2());
    for (const auto& f : pool)
      for (const auto& g : pool) {
        const auto fg = compose_functors(fs, identity_map(1), {f}, g);
        CHECK(object_image(fg, {"e"}) == "e");
        const auto& tf = component_of(f, {"e"}, {"e"});
        const auto& tg = component_of(g, {"e"}, {"e"});
        const auto& tfg = component_of(fg, {"e"}, {"e"});
        for (int c = 1; c <= 4; ++c)
          CHECK(fs_apply(tfg, {c}) == fs_apply(tg, {fs_apply(tf, {c})}));
        CHECK(check_functor(fs, fg).ok());
      }
  }
  SUBCASE("two-stage associativity across index maps") {
    // inner functors over phi, middle over psi, against the restricted form
    const OrdMap phi = ord_map(3, 2, {1, 2, 1});
    const OrdMap psi = nabla(2);
    const std::vector<MultiEntryFunctor<FS>> inners{add, idz};
    const auto lhs = compose_functors(
        fs, phi, inners, compose_functors(fs, psi, {add}, idz));
    const auto e1 =
        compose_functors(fs, fiber_restriction(phi, psi, 1), inners, add);
    const auto rhs =
        compose_functors(fs, compose_map(phi, psi), {e1}, idz);
    CHECK(lhs == rhs);
    CHECK(check_functor(fs, lhs).ok());
    CHECK(lhs.sources.size() == 3);
  }
  SUBCASE("quiver composition is associative on non-functor data") {
    // raw component tables need not satisfy any law for the data-level
    // two-stage identity to hold
    std::mt19937_64 rng(7);
    auto raw = [&](int entries) {
      MultiEntryFunctor<FS> m;
      m.sources.assign(entries, z2);
      m.target = z2;
      std::vector<std::string> t(entries, "e");
      m.obj_map[t] = "e";
      m.components[{t, t}] =
          *fs.random_mor(std::vector<FinSetObj>(entries, FinSetObj{2}),
                         FinSetObj{2}, rng);
      return m;
    };
    for (int trial = 0; trial < 10; ++trial) {
      const OrdMap phi = ord_map(3, 2, {1, 2, 2});
      const OrdMap psi = nabla(2);
      const auto a1 = raw(1), a2 = raw(2), c1 = raw(2), d = raw(1);
      const auto lhs = quiver_compose(
          fs, phi, {a1, a2}, quiver_compose(fs, psi, {c1}, d));
      const auto e1 =
          quiver_compose(fs, fiber_restriction(phi, psi, 1), {a1, a2}, c1);
      const auto rhs = quiver_compose(fs, compose_map(phi, psi), {e1}, d);
      CHECK(lhs == rhs);
    }
  }
  SUBCASE("shape mismatches are rejected") {
    CHECK_THROWS_AS(compose_functors(fs, identity_map(1), {add}, idz),
                    SignatureMismatch);
    CHECK_THROWS_AS(compose_functors(fs, nabla(2), {add, idz}, idz),
                    SignatureMismatch);
    const auto into_chain = enumerate_functors(fs, {cyclic(2)}, chain2());
    REQUIRE_FALSE(into_chain.empty());
    CHECK_THROWS_AS(
        compose_functors(fs, identity_map(1), {into_chain.front()}, idz),
        SignatureMismatch);
  }
}

TEST_CASE("nullary functors select objects") {
  const auto c = chain3();
  for (const auto& name : c.quiver.objects) {
    const auto f = nullary_functor(c, name);
    CHECK(check_functor(fs, f).ok());
    CHECK(nullary_object(f) == name);
  }
  CHECK(nullary_functor(c, "0") != nullary_functor(c, "1"));
  CHECK_THROWS_AS(nullary_functor(c, "missing"), SignatureMismatch);
  CHECK_THROWS_AS(nullary_object(identity_functor(fs, c)),
                  SignatureMismatch);

  SUBCASE("partial application of a two-entry functor") {
    const auto z2 = cyclic(2);
    const auto partial = compose_functors(
        fs, ord_map(1, 2, {1}),
        {identity_functor(fs, z2), nullary_functor(z2, "e")},
        add_functor(z2));
    // adding the unit residue is the identity
    CHECK(partial == identity_functor(fs, z2));
  }
}

TEST_CASE("naturality matches the classical square condition") {
  const auto a = chain2();
  const auto z = cyclic(2);
  const auto& kap = z.kappa.at({"e", "e", "e"});
  const auto functors = enumerate_functors(fs, {a}, z);
  REQUIRE(functors.size() == 2);

  // oracle: one square per comparable pair, chased through the tables
  const auto natural_oracle = [&](const MultiEntryFunctor<FS>& f,
                                  const MultiEntryFunctor<FS>& g, int tx,
                                  int ty) {
    const std::map<std::string, int> comp{{"x", tx}, {"y", ty}};
    for (const auto& p : a.quiver.objects)
      for (const auto& q : a.quiver.objects) {
        if (!(p <= q)) continue;
        const int ff = fs_apply(component_of(f, {p}, {q}), {1});
        const int gg = fs_apply(component_of(g, {p}, {q}), {1});
        if (fs_apply(kap, {ff, comp.at(q)}) !=
            fs_apply(kap, {comp.at(p), gg}))
          return false;
      }
    return true;
  };

  int naturals = 0, families = 0;
  for (const auto& f : functors)
    for (const auto& g : functors)
      for (int tx = 1; tx <= 2; ++tx)
        for (int ty = 1; ty <= 2; ++ty) {
          VNatTransformation<FS> t{f, g, {}};
          t.components[{"x"}] = fs_map({}, 2, {tx});
          t.components[{"y"}] = fs_map({}, 2, {ty});
          const bool machine = check_naturality(fs, t).ok();
          CHECK(machine == natural_oracle(f, g, tx, ty));
          ++families;
          naturals += machine;
        }
  CHECK(families == 16);
  CHECK(naturals == 8);  // half of each hom-set-to-be

  SUBCASE("identity transformations are natural") {
    for (const auto& f : functors)
      CHECK(check_naturality(fs, identity_transformation(fs, f)).ok());
  }
  SUBCASE("a non-natural family carries a witness") {
    VNatTransformation<FS> t{functors[0], functors[0], {}};
    t.components[{"x"}] = fs_map({}, 2, {1});
    t.components[{"y"}] = fs_map({}, 2, {2});
    const CheckReport rep = check_naturality(fs, t);
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.fail_counts.count("naturality"));
    CHECK(rep.failures.front().detail.find("->") != std::string::npos);
  }
  SUBCASE("two-entry naturality agrees with the square oracle") {
    const auto pool = enumerate_functors(fs, {a, a}, z, 2000);
    REQUIRE(pool.size() == 8);
    const auto& f = pool[1];
    const auto& g = pool[6];
    const auto tuples = object_tuples<FS>({a, a});
    REQUIRE(tuples.size() == 4);
    int agree = 0, naturals2 = 0;
    std::vector<int> pickv(4, 1);
    while (true) {
      VNatTransformation<FS> t{f, g, {}};
      for (size_t i = 0; i < 4; ++i)
        t.components[tuples[i]] = fs_map({}, 2, {pickv[i]});
      bool oracle = true;
      for (size_t s = 0; s < 4; ++s)
        for (size_t d = 0; d < 4; ++d) {
          if (!(tuples[s][0] <= tuples[d][0] && tuples[s][1] <= tuples[d][1]))
            continue;
          const int ff = fs_apply(component_of(f, tuples[s], tuples[d]),
                                  {1, 1});
          const int gg = fs_apply(component_of(g, tuples[s], tuples[d]),
                                  {1, 1});
          oracle = oracle && fs_apply(kap, {ff, pickv[d]}) ==
                                 fs_apply(kap, {pickv[s], gg});
        }
      const bool machine = check_naturality(fs, t).ok();
      CHECK(machine == oracle);
      agree++;
      naturals2 += machine;
      int i = 3;
      while (i >= 0 && pickv[i] == 2) pickv[i--] = 1;
      if (i < 0) break;
      ++pickv[i];
    }
    CHECK(agree == 16);
    CHECK(naturals2 > 0);
  }
  SUBCASE("mismatched shapes are rejected") {
    VNatTransformation<FS> t{functors[0], identity_functor(fs, a), {}};
    CHECK_THROWS_AS(check_naturality(fs, t), SignatureMismatch);
  }
}

TEST_CASE("products of enriched categories") {
  const auto a = chain2();
  const auto z = cyclic(2);
  const auto prod = vcat_product(fs, {a, z});
  const auto& p = prod.category;

  CHECK(p.quiver.objects ==
        std::vector<std::string>{"(x,e)", "(y,e)"});
  CHECK(hom_of(p.quiver, "(x,e)", "(y,e)") == FinSetObj{2});
  CHECK(hom_of(p.quiver, "(y,e)", "(x,e)") == FinSetObj{0});
  CHECK(check_category(fs, p).ok());
  REQUIRE(prod.projections.size() == 2);
  for (const auto& pr : prod.projections) CHECK(check_functor(fs, pr).ok());

  SUBCASE("composition is componentwise") {
    // decode pairs with the first factor most significant and compare against
    // factorwise composition
    const auto& kap = kappa_of(p, "(x,e)", "(x,e)", "(y,e)");
    const auto& kz = z.kappa.at({"e", "e", "e"});
    for (int f = 1; f <= 2; ++f)
      for (int h = 1; h <= 2; ++h) {
        // hom((x,e),(x,e)) = 1 x 2: code = residue part only
        const int got = fs_apply(kap, {f, h});
        CHECK(got == fs_apply(kz, {f, h}));
      }
  }
  SUBCASE("the empty product is the one-object point") {
    const auto term = vcat_product(fs, std::vector<VCategory<FS>>{});
    CHECK(term.category.quiver.objects == std::vector<std::string>{"()"});
    CHECK(hom_of(term.category.quiver, "()", "()") == FinSetObj{1});
    CHECK(check_category(fs, term.category).ok());
    CHECK(term.projections.empty());
  }
  SUBCASE("tupling satisfies and uniquely solves the universal property") {
    const auto z3 = cyclic(3);
    const auto into_a = enumerate_functors(fs, {z3}, a);
    const auto into_z = enumerate_functors(fs, {z3}, z);
    REQUIRE(into_a.size() == 2);
    REQUIRE(into_z.size() == 1);
    for (const auto& h1 : into_a)
      for (const auto& h2 : into_z) {
        const auto t = vcat_tuple(fs, {z3}, {h1, h2});
        CHECK(t.target == p);
        CHECK(check_functor(fs, t).ok());
        CHECK(compose_functors(fs, identity_map(1), {t},
                               prod.projections[0]) == h1);
        CHECK(compose_functors(fs, identity_map(1), {t},
                               prod.projections[1]) == h2);
        int solutions = 0;
        for (const auto& u : enumerate_functors(fs, {z3}, p)) {
          if (compose_functors(fs, identity_map(1), {u},
                               prod.projections[0]) == h1 &&
              compose_functors(fs, identity_map(1), {u},
                               prod.projections[1]) == h2) {
            ++solutions;
            CHECK(u == t);
          }
        }
        CHECK(solutions == 1);
      }
  }
  SUBCASE("mismatched source lists are rejected") {
    const auto z3 = cyclic(3);
    const auto h1 = enumerate_functors(fs, {z3}, a).front();
    const auto h2 = enumerate_functors(fs, {z}, z).front();
    CHECK_THROWS_AS(vcat_tuple(fs, {z3}, {h1, h2}), SignatureMismatch);
  }
}

TEST_CASE("equalizers of enriched categories") {
  const auto c = chain3();

  // the monotone collapse 0,1,2 -> 0,1,1 as a functor
  MultiEntryFunctor<FS> collapse;
  collapse.sources = {c};
  collapse.target = c;
  const auto img = [](const std::string& o) {
    return o == "2" ? std::string("1") : o;
  };
  for (const auto& o : c.quiver.objects) collapse.obj_map[{o}] = img(o);
  for (const auto& o : c.quiver.objects)
    for (const auto& q : c.quiver.objects) {
      const int s = o <= q ? 1 : 0;
      const int t = img(o) <= img(q) ? 1 : 0;
      collapse.components[{{o}, {q}}] =
          fs_map({s}, t, s ? std::vector<int>{1} : std::vector<int>{});
    }
  REQUIRE(check_functor(fs, collapse).ok());

  const auto idc = identity_functor(fs, c);
  const auto ke = vcat_equalizer(fs, idc, collapse);

  CHECK(ke.category.quiver.objects == std::vector<std::string>{"0", "1"});
  CHECK(check_category(fs, ke.category).ok());
  CHECK(check_functor(fs, ke.include).ok());
  CHECK(compose_functors(fs, identity_map(1), {ke.include}, idc) ==
        compose_functors(fs, identity_map(1), {ke.include}, collapse));

  SUBCASE("hom sizes match the brute-force subcategory") {
    for (const auto& x : ke.category.quiver.objects)
      for (const auto& y : ke.category.quiver.objects) {
        int agreeing = 0;
        const int n = hom_of(c.quiver, x, y).size;
        for (int code = 1; code <= n; ++code)
          if (fs_apply(component_of(idc, {x}, {y}), {code}) ==
              fs_apply(component_of(collapse, {x}, {y}), {code}))
            ++agreeing;
        CHECK(hom_of(ke.category.quiver, x, y).size == agreeing);
      }
  }
  SUBCASE("equalizing a functor with itself recovers everything") {
    const auto whole = vcat_equalizer(fs, collapse, collapse);
    CHECK(whole.category.quiver.objects == c.quiver.objects);
    for (const auto& x : c.quiver.objects)
      for (const auto& y : c.quiver.objects)
        CHECK(hom_of(whole.category.quiver, x, y).size ==
              hom_of(c.quiver, x, y).size);
  }
  SUBCASE("hom-level equalizers keep exactly the fixed arrows") {
    const auto z3 = cyclic(3);
    const auto negate = cyclic_endo(z3, {1, 3, 2});  // residue negation
    REQUIRE(check_functor(fs, negate).ok());
    const auto fixed =
        vcat_equalizer(fs, identity_functor(fs, z3), negate);
    CHECK(fixed.category.quiver.objects == std::vector<std::string>{"e"});
    CHECK(hom_of(fixed.category.quiver, "e", "e") == FinSetObj{1});
    CHECK(check_category(fs, fixed.category).ok());
  }
  SUBCASE("forks factor uniquely, non-forks are rejected") {
    const auto z3 = cyclic(3);
    MultiEntryFunctor<FS> j;  // constant functor at "1"
    j.sources = {z3};
    j.target = c;
    j.obj_map[{"e"}] = "1";
    j.components[{{"e"}, {"e"}}] = fs_map({3}, 1, {1, 1, 1});
    REQUIRE(check_functor(fs, j).ok());

    const auto q = factor_into_vcat_equalizer(fs, ke, j);
    CHECK(check_functor(fs, q).ok());
    CHECK(compose_functors(fs, identity_map(1), {q}, ke.include) == j);
    int solutions = 0;
    for (const auto& u : enumerate_functors(fs, {z3}, ke.category))
      if (compose_functors(fs, identity_map(1), {u}, ke.include) == j) {
        ++solutions;
        CHECK(u == q);
      }
    CHECK(solutions == 1);

    MultiEntryFunctor<FS> j2 = j;  // constant at "2": images disagree there
    j2.obj_map[{"e"}] = "2";
    CHECK_THROWS_AS(factor_into_vcat_equalizer(fs, ke, j2),
                    SignatureMismatch);
  }
  SUBCASE("non-parallel inputs are rejected") {
    CHECK_THROWS_AS(
        vcat_equalizer(fs, idc, identity_functor(fs, cyclic(2))),
        SignatureMismatch);
  }
}
