#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcat/multicat.hpp"
#include "mcat/vfinset.hpp"

using namespace mcat;

namespace {

const FinSetInstance fs;

// A deliberately broken variant: identities on two-element sets are collapsed
// to a constant. Unit laws must catch it.
struct BrokenIdentity : FinSetInstance {
  MultiMap identity(const FinSetObj& x) const {
    if (x.size == 2) return fs_map({2}, 2, {1, 1});
    return FinSetInstance::identity(x);
  }
};
static_assert(EnumerableGround<BrokenIdentity>);

// A deliberately broken variant: substitution along the fold map 2 -> 1
// swaps the first two table entries. Associativity must catch it.
struct BrokenCompose : FinSetInstance {
  MultiMap compose(const OrdMap& phi, const std::vector<MultiMap>& args,
                   const MultiMap& outer) const {
    MultiMap r = FinSetInstance::compose(phi, args, outer);
    if (phi.source == 2 && phi.target == 1 && r.table.size() >= 2)
      std::swap(r.table[0], r.table[1]);
    return r;
  }
};
static_assert(EnumerableGround<BrokenCompose>);

std::vector<FinSetObj> objs_upto(int n) {
  std::vector<FinSetObj> out;
  for (int s = 0; s <= n; ++s) out.push_back(FinSetObj{s});
  return out;
}

}  // namespace

TEST_CASE("input permutation is precomposition with the inverse arrangement") {
  // f(x1, x2) with table rows (1,1)->1 (1,2)->2 (2,1)->1 (2,2)->1;
  // swapping inputs transposes the table
  const MultiMap f = fs_map({2, 2}, 2, {1, 2, 1, 1});
  const MultiMap swapped = r_sigma(fs, ord_map(2, 2, {2, 1}), f);
  CHECK(swapped == fs_map({2, 2}, 2, {1, 1, 2, 1}));
  for (int x1 = 1; x1 <= 2; ++x1)
    for (int x2 = 1; x2 <= 2; ++x2)
      CHECK(fs_apply(swapped, {x1, x2}) == fs_apply(f, {x2, x1}));

  // a 3-cycle on an asymmetric ternary map, checked pointwise: input p of
  // the result feeds input sigma(p) of f, so rg(x) = g(x . sigma^{-1})
  const OrdMap sigma = ord_map(3, 3, {2, 3, 1});
  std::mt19937_64 rng(7);
  const MultiMap g =
      *fs.random_mor({FinSetObj{2}, FinSetObj{3}, FinSetObj{2}}, FinSetObj{3},
                     rng);
  const MultiMap rg = r_sigma(fs, sigma, g);
  const auto src = fs.source_of(rg);
  CHECK(src == std::vector<FinSetObj>{FinSetObj{3}, FinSetObj{2}, FinSetObj{2}});
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c)
        CHECK(fs_apply(rg, {a, b, c}) == fs_apply(g, {c, a, b}));

  CHECK_THROWS_AS(r_sigma(fs, nabla(2), f), OrdError);
  CHECK_THROWS_AS(r_sigma(fs, identity_map(3), f), SignatureMismatch);
}

TEST_CASE("axiom sweep passes on finite sets") {
  AxiomBounds b;
  b.max_arity = 2;
  b.shell_cap = 256;
  b.tuple_cap = 256;
  b.tuple_samples = 2;
  b.shell_samples = 4;
  const CheckReport rep = check_axioms(fs, objs_upto(2), b);
  CHECK(rep.ok());
  CHECK(rep.pass_counts.at("associativity") > 10000);
  CHECK(rep.pass_counts.at("unit-inner") > 50);
  CHECK(rep.pass_counts.at("unit-outer") > 50);
  CHECK(rep.skipped == 0);

  SUBCASE("determinism: same bounds, same counts") {
    const CheckReport rep2 = check_axioms(fs, objs_upto(2), b);
    CHECK(rep2.pass_counts == rep.pass_counts);
  }
}

TEST_CASE("axiom sweep pinpoints corruption") {
  AxiomBounds b;
  b.max_arity = 2;
  b.shell_cap = 64;
  b.tuple_cap = 64;
  SUBCASE("broken identities fail the unit laws") {
    const CheckReport rep = check_axioms(BrokenIdentity{}, objs_upto(2), b);
    CHECK_FALSE(rep.ok());
    CHECK(rep.fail_counts.count("unit-inner") +
              rep.fail_counts.count("unit-outer") >
          0);
    REQUIRE_FALSE(rep.failures.empty());
    CHECK_FALSE(rep.failures.front().detail.empty());
  }
  SUBCASE("broken substitution fails associativity") {
    const CheckReport rep = check_axioms(BrokenCompose{}, objs_upto(2), b);
    CHECK_FALSE(rep.ok());
    CHECK(rep.fail_counts.count("associativity") > 0);
  }
}

TEST_CASE("derived action laws hold on finite sets") {
  AxiomBounds b;
  b.max_arity = 3;
  b.shell_cap = 16;
  b.shell_samples = 2;
  const CheckReport rep = check_symmetric_action(fs, objs_upto(2), b);
  CHECK(rep.ok());
  CHECK(rep.pass_counts.at("action-identity") > 0);
  CHECK(rep.pass_counts.at("action-compose") > 0);
  CHECK(rep.pass_counts.at("action-decompose") > 0);
  CHECK(rep.pass_counts.at("action-equivariance") > 0);
}

TEST_CASE("limits built from products and equalizers") {
  // pullback of f : A -> C, g : B -> C with A=B=C=[2], f = id-like, g constant
  const FinSetObj two{2};
  Diagram<FinSetInstance> d;
  d.objects = {two, two, two};
  d.arrows.push_back({1, 3, fs_map({2}, 2, {1, 2})});
  d.arrows.push_back({2, 3, fs_map({2}, 2, {1, 1})});
  const auto lim = limit(fs, d);
  // solutions (a, b, c): c = a and c = 1, b free -> {(1,1,1),(1,2,1)}
  CHECK(lim.obj == FinSetObj{2});

  SUBCASE("legs commute with the diagram") {
    for (const auto& u : d.arrows)
      CHECK(compose1(fs, lim.legs[u.src - 1], u.mor) == lim.legs[u.tgt - 1]);
  }
  SUBCASE("cones factor uniquely through the limit") {
    // brute-force every cone from [2] and from [3]
    for (int n = 2; n <= 3; ++n) {
      const std::vector<FinSetObj> src{FinSetObj{n}};
      const auto pool = fs.enumerate_hom(src, two);
      for (const auto& j1 : pool)
        for (const auto& j2 : pool)
          for (const auto& j3 : pool) {
            if (compose1(fs, j1, d.arrows[0].mor) != j3) continue;
            if (compose1(fs, j2, d.arrows[1].mor) != j3) continue;
            const MultiMap u = factor_into_limit(fs, lim, src, {j1, j2, j3});
            CHECK(compose1(fs, u, lim.legs[0]) == j1);
            CHECK(compose1(fs, u, lim.legs[1]) == j2);
            CHECK(compose1(fs, u, lim.legs[2]) == j3);
            int solutions = 0;
            for (const auto& v : fs.enumerate_hom(src, lim.obj))
              if (compose1(fs, v, lim.legs[0]) == j1 &&
                  compose1(fs, v, lim.legs[1]) == j2 &&
                  compose1(fs, v, lim.legs[2]) == j3)
                ++solutions;
            CHECK(solutions == 1);
          }
    }
  }
  SUBCASE("discrete diagram reduces to the product") {
    Diagram<FinSetInstance> disc;
    disc.objects = {two, FinSetObj{3}};
    const auto plim = limit(fs, disc);
    CHECK(plim.obj == FinSetObj{6});
  }
  SUBCASE("parallel pair reduces to the equalizer") {
    Diagram<FinSetInstance> par;
    par.objects = {FinSetObj{3}, two};
    par.arrows.push_back({1, 2, fs_map({3}, 2, {1, 1, 2})});
    par.arrows.push_back({1, 2, fs_map({3}, 2, {1, 2, 2})});
    const auto elim = limit(fs, par);
    CHECK(elim.obj == FinSetObj{2});
    // legs select exactly the members 1 and 3
    CHECK(elim.legs[0] == fs_map({2}, 3, {1, 3}));
  }
}

TEST_CASE("report bookkeeping") {
  CheckReport rep;
  rep.record(true, "law-a", [] { return std::string("x"); });
  rep.record(false, "law-b", [] { return std::string("bad"); });
  rep.record(false, "law-b", [] { return std::string("bad2"); });
  CHECK_FALSE(rep.ok());
  CHECK(rep.total_passed() == 1);
  CHECK(rep.fail_counts.at("law-b") == 2);
  CHECK(rep.failures.size() == 2);

  CheckReport other;
  other.record(true, "law-a", [] { return std::string(); });
  other.skipped = 3;
  rep.merge(other);
  CHECK(rep.pass_counts.at("law-a") == 2);
  CHECK(rep.skipped == 3);
}

#include "mcat/table_mc.hpp"

TEST_CASE("table-presented ground: the two-color transposition torsor") {
  const TableInstance v = make_torsor_v();
  const auto objs = v.objects();
  REQUIRE(objs.size() == 2);
  const int A = objs[0], B = objs[1];
  CHECK(v.show_obj(A) == "A");
  CHECK(v.hom_size({A, A}, B) == 2);
  CHECK(v.hom_size({A}, A) == 1);
  CHECK(v.hom_size({B}, A) == 0);

  const auto mm = v.enumerate_hom({A, A}, B);
  REQUIRE(mm.size() == 2);
  const int m = mm[0], mp = mm[1];

  SUBCASE("the transposition swaps the two binary generators") {
    const OrdMap swap = ord_map(2, 2, {2, 1});
    CHECK(r_sigma(v, swap, m) == mp);
    CHECK(r_sigma(v, swap, mp) == m);
    CHECK(r_sigma(v, identity_map(2), m) == m);
  }
  SUBCASE("axiom sweep is exhaustive and clean") {
    AxiomBounds b;
    b.max_arity = 3;
    b.shell_cap = 4096;
    b.tuple_cap = 4096;
    const CheckReport rep = check_axioms(v, objs, b);
    CHECK(rep.ok());
    CHECK(rep.skipped == 0);
    CHECK(rep.pass_counts.at("associativity") > 0);
    const CheckReport act = check_symmetric_action(v, objs, b);
    CHECK(act.ok());
  }
  SUBCASE("corrupted action entry is caught with a witness") {
    const TableInstance bad = make_corrupted_torsor_v();
    AxiomBounds b;
    b.max_arity = 2;
    b.shell_cap = 4096;
    b.tuple_cap = 4096;
    const CheckReport rep = check_axioms(bad, bad.objects(), b);
    CHECK_FALSE(rep.ok());
    CHECK(rep.fail_counts.at("associativity") > 0);
    REQUIRE_FALSE(rep.failures.empty());
    CHECK(rep.failures.front().detail.find("phi=") != std::string::npos);
  }
  SUBCASE("builder rejects incomplete tables") {
    TableBuilder b;
    const int X = b.add_color("X");
    b.add_mor("n", {X, X}, X);
    CHECK_THROWS_AS(b.build(), TableError);
  }
}
