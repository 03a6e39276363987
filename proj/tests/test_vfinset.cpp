#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcat/vfinset.hpp"

#include <set>

using namespace mcat;

namespace {

const FinSetInstance fs;

// Independent oracle for composition: evaluate pointwise by distributing the
// global argument tuple along the fibers of phi.
int compose_oracle(const OrdMap& phi, const std::vector<MultiMap>& args,
                   const MultiMap& outer, const std::vector<int>& x) {
  std::vector<std::vector<int>> per_arg(args.size());
  std::vector<int> used(args.size(), 0);
  for (int i = 0; i < phi.source; ++i)
    per_arg[phi.values[i] - 1].push_back(x[i]);
  std::vector<int> mids;
  for (size_t j = 0; j < args.size(); ++j)
    mids.push_back(fs_apply(args[j], per_arg[j]));
  return fs_apply(outer, mids);
}

void check_compose_against_oracle(const OrdMap& phi,
                                  const std::vector<MultiMap>& args,
                                  const MultiMap& outer) {
  const MultiMap c = fs.compose(phi, args, outer);
  std::vector<int> x(c.src_sizes.size(), 1);
  bool nonempty = true;
  for (int s : c.src_sizes) nonempty = nonempty && s > 0;
  if (!nonempty) return;
  while (true) {
    CHECK(fs_apply(c, x) == compose_oracle(phi, args, outer, x));
    int i = static_cast<int>(x.size()) - 1;
    while (i >= 0 && x[i] == c.src_sizes[i]) x[i--] = 1;
    if (i < 0) break;
    ++x[i];
  }
}

const MultiMap AND = fs_map({2, 2}, 2, {1, 1, 1, 2});
const MultiMap NOT = fs_map({2}, 2, {2, 1});

}  // namespace

TEST_CASE("tables, application, validation") {
  CHECK(fs_apply(AND, {2, 2}) == 2);
  CHECK(fs_apply(AND, {2, 1}) == 1);
  CHECK(fs_apply(NOT, {1}) == 2);
  CHECK_THROWS_AS(fs_map({2, 2}, 2, {1, 1, 1}), SignatureMismatch);
  CHECK_THROWS_AS(fs_map({2}, 2, {3, 1}), SignatureMismatch);
  CHECK_THROWS_AS(fs_apply(AND, {1}), SignatureMismatch);
  CHECK_THROWS_AS(fs_apply(AND, {1, 3}), SignatureMismatch);

  const MultiMap nullary = fs_map({}, 3, {2});
  CHECK(fs_apply(nullary, {}) == 2);
  CHECK(fs.source_of(nullary).empty());
  CHECK(fs.target_of(nullary) == FinSetObj{3});
  CHECK(fs.identity(FinSetObj{3}) == fs_map({3}, 3, {1, 2, 3}));
}

TEST_CASE("composition substitutes along fibers") {
  // NAND realized by substitution: both inputs feed AND, the result feeds NOT
  const MultiMap nand = fs.compose(nabla(2), {AND}, NOT);
  CHECK(nand == fs_map({2, 2}, 2, {2, 2, 2, 1}));

  SUBCASE("interleaved fibers") {
    // phi = [1,2,1,2]: inputs 1,3 feed the first argument, 2,4 the second
    const OrdMap phi = ord_map(4, 2, {1, 2, 1, 2});
    const MultiMap g1 = fs_map({2, 2}, 2, {1, 2, 2, 1});  // xor-like
    const MultiMap g2 = AND;
    const MultiMap c = fs.compose(phi, {g1, g2}, AND);
    CHECK(c.src_sizes == std::vector<int>{2, 2, 2, 2});
    CHECK(fs_apply(c, {1, 2, 2, 2}) == fs_apply(AND, {fs_apply(g1, {1, 2}),
                                                      fs_apply(g2, {2, 2})}));
    check_compose_against_oracle(phi, {g1, g2}, AND);
  }
  SUBCASE("pointwise oracle across index shapes") {
    const MultiMap u = fs_map({2}, 3, {3, 1});
    const MultiMap w = fs_map({3, 2}, 2, {1, 2, 2, 1, 1, 1});
    const MultiMap n0 = fs_map({}, 2, {2});
    check_compose_against_oracle(ord_map(3, 2, {2, 1, 2}),
                                 {u, fs_map({2, 2}, 2, {2, 1, 1, 2})}, w);
    check_compose_against_oracle(ord_map(2, 2, {1, 1}),
                                 {fs_map({2, 2}, 3, {1, 3, 2, 2}), n0}, w);
    check_compose_against_oracle(ord_map(0, 1, {}), {n0}, NOT);
    check_compose_against_oracle(identity_map(2), {NOT, u},
                                 fs_map({2, 3}, 2, {1, 1, 2, 2, 1, 2}));
  }
  SUBCASE("signature mismatches are rejected") {
    CHECK_THROWS_AS(fs.compose(nabla(2), {AND, NOT}, NOT), SignatureMismatch);
    CHECK_THROWS_AS(fs.compose(identity_map(1), {AND}, NOT),
                    SignatureMismatch);
    CHECK_THROWS_AS(
        fs.compose(nabla(2), {AND}, fs_map({3}, 2, {1, 1, 2})),
        SignatureMismatch);
  }
}

TEST_CASE("hom enumeration") {
  const FinSetObj two{2}, three{3}, zero{0};
  CHECK(fs.hom_size({two, two}, two) == 16);
  CHECK(fs.hom_size({three}, two) == 8);
  CHECK(fs.hom_size({}, three) == 3);
  CHECK(fs.hom_size({zero}, three) == 1);
  CHECK(fs.hom_size({zero}, zero) == 1);
  CHECK(fs.hom_size({two}, zero) == 0);
  CHECK(fs.hom_size({FinSetObj{3}, FinSetObj{3}, FinSetObj{3}}, three) ==
        7625597484987ULL);  // 3^27

  const auto all = fs.enumerate_hom({two, two}, two);
  CHECK(all.size() == 16);
  CHECK(std::set<MultiMap>(all.begin(), all.end()).size() == 16);
  for (const auto& f : all) {
    CHECK(f.src_sizes == std::vector<int>{2, 2});
    CHECK(f.tgt_size == 2);
  }
  CHECK(fs.enumerate_hom({zero}, zero).size() == 1);
  CHECK(fs.enumerate_hom({two}, zero).empty());
  CHECK_THROWS_AS(
      fs.enumerate_hom({FinSetObj{3}, FinSetObj{3}, FinSetObj{3}}, three),
      SizeBound);

  SUBCASE("random morphisms are reproducible and well-formed") {
    std::mt19937_64 a(42), b(42);
    const auto f1 = fs.random_mor({two, three}, two, a);
    const auto f2 = fs.random_mor({two, three}, two, b);
    REQUIRE(f1.has_value());
    CHECK(*f1 == *f2);
    CHECK(f1->table.size() == 6);
    for (int v : f1->table) CHECK((1 <= v && v <= 2));
    CHECK_FALSE(fs.random_mor({two}, zero, a).has_value());
  }
}

TEST_CASE("closedness: underhom, ev, curry") {
  const FinSetObj two{2};
  CHECK(fs_underhom({two}, two) == FinSetObj{4});
  CHECK(fs_underhom({two, two}, two) == FinSetObj{16});
  CHECK(fs_underhom({}, two) == FinSetObj{2});
  CHECK(fs_underhom({FinSetObj{0}}, two) == FinSetObj{1});

  // functions [2] -> [2] are enumerated with the value at 1 most significant:
  // 1 -> (1,1), 2 -> (1,2), 3 -> (2,1), 4 -> (2,2)
  CHECK(fs_ev({two}, two) == fs_map({2, 4}, 2, {1, 1, 2, 2, 1, 2, 1, 2}));

  // currying AND at its first input: y=1 gives the constant-1 function (code
  // 1), y=2 gives the identity-like function x -> x (code 2)
  CHECK(fs.curry(AND, 1) == fs_map({2}, 4, {1, 2}));

  SUBCASE("curry/uncurry is a bijection on all binary maps of size 2") {
    std::set<MultiMap> images;
    for (const auto& f : fs.enumerate_hom({two, two}, two)) {
      const MultiMap c = fs.curry(f, 1);
      CHECK(fs.source_of(c) == std::vector<FinSetObj>{two});
      CHECK(fs.target_of(c) == FinSetObj{4});
      images.insert(c);
      CHECK(uncurry(fs, {two}, two, c) == f);
    }
    CHECK(images.size() == 16);  // injective onto hom([2]; underhom)
    CHECK(fs.hom_size({two}, FinSetObj{4}) == 16);
  }
  SUBCASE("nullary names evaluate back") {
    for (const auto& f : fs.enumerate_hom({two, two}, two)) {
      const MultiMap named = name_of(fs, f);
      CHECK(named.src_sizes.empty());
      CHECK(uncurry(fs, {two, two}, two, named) == f);
    }
  }
  SUBCASE("ev composed with a curried map recovers the map") {
    // feeding (1_X, curry(f)) into ev along id_1 ⊔ nabla_1 is exactly uncurry
    for (const auto& f : fs.enumerate_hom({two, two}, two))
      CHECK(fs.compose(disjoint_union(identity_map(1), nabla(1)),
                       {fs.identity(two), fs.curry(f, 1)},
                       fs_ev({two}, two)) == f);
  }
}

TEST_CASE("products and tupling") {
  const FinSetObj two{2}, three{3};
  CHECK(fs_product({two, three}) == FinSetObj{6});
  CHECK(fs_product({}) == FinSetObj{1});
  CHECK(fs_product({two, FinSetObj{0}}) == FinSetObj{0});

  // components of 6 = 2x3 decode with the first factor most significant
  CHECK(fs.projection({two, three}, 1) == fs_map({6}, 2, {1, 1, 1, 2, 2, 2}));
  CHECK(fs.projection({two, three}, 2) == fs_map({6}, 3, {1, 2, 3, 1, 2, 3}));

  SUBCASE("tupling satisfies and uniquely solves the universal property") {
    const std::vector<FinSetObj> sources{two, two};
    const auto pool = fs.enumerate_hom(sources, two);
    const auto pr1 = fs.projection({two, two}, 1);
    const auto pr2 = fs.projection({two, two}, 2);
    for (const auto& j1 : pool)
      for (const auto& j2 : pool) {
        const MultiMap t = fs.tuple_into_product(sources, {j1, j2});
        CHECK(compose1(fs, t, pr1) == j1);
        CHECK(compose1(fs, t, pr2) == j2);
        int solutions = 0;
        for (const auto& u : fs.enumerate_hom(sources, FinSetObj{4}))
          if (compose1(fs, u, pr1) == j1 && compose1(fs, u, pr2) == j2)
            ++solutions;
        CHECK(solutions == 1);
      }
  }
  SUBCASE("empty tuple is the unique map to the terminal object") {
    const MultiMap t = fs.tuple_into_product({two, three}, {});
    CHECK(fs.target_of(t) == FinSetObj{1});
    CHECK(t.table == std::vector<int>(6, 1));
  }
}

TEST_CASE("equalizers") {
  const MultiMap f = fs_map({3}, 2, {1, 1, 2});
  const MultiMap g = fs_map({3}, 2, {1, 2, 2});
  const auto eq = fs_equalizer(f, g);
  CHECK(eq.obj == FinSetObj{2});
  CHECK(eq.include == fs_map({2}, 3, {1, 3}));

  SUBCASE("factorization exists uniquely for every equalizing fork") {
    for (int n = 0; n <= 3; ++n)
      for (const auto& j : fs.enumerate_hom({FinSetObj{n}}, FinSetObj{3})) {
        if (compose1(fs, j, f) != compose1(fs, j, g)) continue;
        const MultiMap u = fs.factor_through_equalizer(eq, j);
        CHECK(compose1(fs, u, eq.include) == j);
        int solutions = 0;
        for (const auto& v : fs.enumerate_hom({FinSetObj{n}}, eq.obj))
          if (compose1(fs, v, eq.include) == j) ++solutions;
        CHECK(solutions == 1);
      }
  }
  SUBCASE("non-equalizing morphisms are rejected") {
    CHECK_THROWS_AS(
        fs.factor_through_equalizer(eq, fs_map({1}, 3, {2})),
        SignatureMismatch);
  }
  SUBCASE("multi-entry forks factor too") {
    const MultiMap j = fs_map({2, 2}, 3, {1, 3, 3, 1});
    const MultiMap u = fs.factor_through_equalizer(eq, j);
    CHECK(fs.compose(identity_map(2),
                     {fs.identity(FinSetObj{2}), fs.identity(FinSetObj{2})},
                     compose1(fs, u, eq.include)) == j);
  }
}

TEST_CASE("size caps surface as errors") {
  const FinSetObj big{100};
  CHECK_THROWS_AS(fs.underhom({big, big, big}, big), SizeBound);
  CHECK_THROWS_AS(fs.product(std::vector<FinSetObj>(4, FinSetObj{100})),
                  SizeBound);
}
