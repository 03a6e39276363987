#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcat/finord.hpp"

using namespace mcat;

TEST_CASE("construction and validation") {
  CHECK(ord_map(3, 2, {2, 1, 1}) == OrdMap{3, 2, {2, 1, 1}});
  CHECK_THROWS_AS(ord_map(3, 2, {2, 1}), OrdError);
  CHECK_THROWS_AS(ord_map(3, 2, {2, 1, 3}), OrdError);
  CHECK_THROWS_AS(ord_map(3, 2, {2, 1, 0}), OrdError);
  CHECK(ord_map(0, 5, {}).source == 0);

  CHECK(identity_map(3).is_identity());
  CHECK(identity_map(0).is_identity());
  CHECK(ord_map(2, 2, {2, 1}).is_bijection());
  CHECK_FALSE(ord_map(2, 2, {1, 1}).is_bijection());
  CHECK(ord_map(3, 2, {1, 1, 2}).is_monotone());
  CHECK_FALSE(ord_map(3, 2, {2, 1, 1}).is_monotone());
}

TEST_CASE("composition basics") {
  const OrdMap f = ord_map(3, 2, {2, 1, 2});
  const OrdMap g = ord_map(2, 4, {3, 1});
  CHECK(compose_map(f, g) == ord_map(3, 4, {1, 3, 1}));
  CHECK_THROWS_AS(compose_map(g, f), OrdError);

  const OrdMap s = ord_map(3, 3, {2, 3, 1});
  CHECK(compose_map(s, inverse(s)).is_identity());
  CHECK(compose_map(inverse(s), s).is_identity());
  CHECK_THROWS_AS(inverse(ord_map(2, 2, {1, 1})), OrdError);
}

TEST_CASE("fibers and preimage injections") {
  const OrdMap h = ord_map(3, 2, {1, 1, 2});
  CHECK(fiber(h, 1) == std::vector<int>{1, 2});
  CHECK(fiber(h, 2) == std::vector<int>{3});
  CHECK(preimage(h, 1) == ord_map(2, 3, {1, 2}));
  CHECK(preimage(h, 2) == ord_map(1, 3, {3}));
  CHECK_THROWS_AS(fiber(h, 3), OrdError);

  SUBCASE("fibers partition the source, preimage lands in the fiber") {
    for (int n = 0; n <= 4; ++n)
      for (int m = 1; m <= 4; ++m)
        for (const OrdMap& f : all_maps(n, m)) {
          int total = 0;
          for (int j = 1; j <= m; ++j) {
            const OrdMap inc = preimage(f, j);
            total += inc.source;
            CHECK(inc.is_monotone());
            for (int v : inc.values) CHECK(f.values[v - 1] == j);
          }
          CHECK(total == n);
        }
  }
}

TEST_CASE("fiber restriction lives over the right points") {
  // f : 4 -> 3, g : 3 -> 2; restriction over k sends the (f·g)-fiber into the
  // g-fiber by f, in fiber coordinates.
  const OrdMap f = ord_map(4, 3, {3, 1, 3, 2});
  const OrdMap g = ord_map(3, 2, {2, 1, 2});
  // f·g = [2, 2, 2, 1]; g-fiber over 2 is {1, 3}; f maps {1,2,3} to 3,1,3.
  CHECK(fiber_restriction(f, g, 2) == ord_map(3, 2, {2, 1, 2}));
  CHECK(fiber_restriction(f, g, 1) == ord_map(1, 1, {1}));

  SUBCASE("composite of restrictions matches restriction of composite") {
    for (const OrdMap& a : all_maps(3, 3))
      for (const OrdMap& b : all_maps(3, 2))
        for (int k = 1; k <= 2; ++k) {
          const OrdMap r = fiber_restriction(a, b, k);
          // embedding the fiber coordinates back must recover a on the fiber
          const OrdMap dom = preimage(compose_map(a, b), k);
          const OrdMap cod = preimage(b, k);
          CHECK(compose_map(r, cod) == compose_map(dom, a));
        }
  }
}

TEST_CASE("stable sorting factorization") {
  const SigmaT st = sigma_t(ord_map(3, 2, {2, 1, 1}));
  CHECK(st.sigma == ord_map(3, 3, {3, 1, 2}));
  CHECK(st.t == ord_map(3, 2, {1, 1, 2}));

  SUBCASE("h = sigma·t exhaustively, sigma bijective, t monotone") {
    for (int n = 0; n <= 5; ++n)
      for (int m = 1; m <= 5; ++m)
        for (const OrdMap& h : all_maps(n, m)) {
          const SigmaT f = sigma_t(h);
          CHECK(f.sigma.is_bijection());
          CHECK(f.t.is_monotone());
          CHECK(compose_map(f.sigma, f.t) == h);
        }
  }
  SUBCASE("monotone maps factor with sigma = id") {
    for (int n = 0; n <= 5; ++n)
      for (const OrdMap& h : all_monotone(n, 4)) {
        CHECK(sigma_t(h).sigma.is_identity());
        CHECK(sigma_t(h).t == h);
      }
  }
}

TEST_CASE("named structural maps") {
  CHECK(nabla(3) == ord_map(3, 1, {1, 1, 1}));
  CHECK(nabla(0) == ord_map(0, 1, {}));
  CHECK(inj1(2, 3) == ord_map(2, 5, {1, 2}));
  CHECK(inj2(2, 3) == ord_map(3, 5, {3, 4, 5}));
  CHECK(shuffle(2) == ord_map(4, 4, {1, 3, 2, 4}));
  CHECK(chi(2) == ord_map(4, 2, {1, 2, 1, 2}));
  CHECK(block_swap(1, 2) == ord_map(3, 3, {3, 1, 2}));
  CHECK(block_swap(2, 2) == ord_map(4, 4, {3, 4, 1, 2}));

  SUBCASE("chi fibers are {i, n+i}") {
    for (int n = 1; n <= 4; ++n)
      for (int i = 1; i <= n; ++i)
        CHECK(fiber(chi(n), i) == std::vector<int>{i, n + i});
  }
  SUBCASE("shuffle interleaves, block_swap is an involution") {
    for (int n = 1; n <= 4; ++n) CHECK(shuffle(n).is_bijection());
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m)
        CHECK(compose_map(block_swap(n, m), block_swap(m, n)).is_identity());
  }
  SUBCASE("dispatcher agrees with the named functions") {
    CHECK(canonical("identity", {4}) == identity_map(4));
    CHECK(canonical("nabla", {3}) == nabla(3));
    CHECK(canonical("inj1", {2, 3}) == inj1(2, 3));
    CHECK(canonical("inj2", {2, 3}) == inj2(2, 3));
    CHECK(canonical("shuffle", {2}) == shuffle(2));
    CHECK(canonical("chi", {2}) == chi(2));
    CHECK(canonical("block_swap", {1, 2}) == block_swap(1, 2));
    CHECK_THROWS_AS(canonical("nope", {1}), OrdError);
    CHECK_THROWS_AS(canonical("nabla", {1, 2}), OrdError);
  }
}

TEST_CASE("disjoint union") {
  CHECK(disjoint_union(nabla(2), identity_map(1)) == ord_map(3, 2, {1, 1, 2}));
  CHECK(disjoint_union(ord_map(0, 0, {}), nabla(2)) == nabla(2));
  SUBCASE("associative and compatible with composition") {
    const OrdMap a = ord_map(2, 2, {2, 1});
    const OrdMap b = ord_map(1, 2, {2});
    const OrdMap c = ord_map(2, 1, {1, 1});
    CHECK(disjoint_union(disjoint_union(a, b), c) ==
          disjoint_union(a, disjoint_union(b, c)));
    const OrdMap a2 = ord_map(2, 3, {3, 1});
    const OrdMap b2 = ord_map(2, 2, {1, 1});
    CHECK(compose_map(disjoint_union(a, b), disjoint_union(a2, b2)) ==
          disjoint_union(compose_map(a, a2), compose_map(b, b2)));
  }
}

TEST_CASE("permuting contiguous blocks") {
  // beta = (1 2) on blocks of sizes {2, 3} is exactly the block swap.
  CHECK(permute_blocks(ord_map(2, 2, {2, 1}), {2, 3}) == block_swap(2, 3));
  CHECK(permute_blocks(identity_map(3), {1, 2, 1}).is_identity());
  CHECK(permute_blocks(identity_map(0), {}) == identity_map(0));

  SUBCASE("block swap recovered for all small sizes") {
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m)
        CHECK(permute_blocks(ord_map(2, 2, {2, 1}), {n, m}) == block_swap(n, m));
  }
  SUBCASE("functorial in beta") {
    const std::vector<std::vector<int>> size_choices = {
        {1, 2, 3}, {2, 0, 1}, {1, 1, 1}, {0, 2, 0}};
    for (const auto& sizes : size_choices)
      for (const OrdMap& beta : all_bijections(3))
        for (const OrdMap& gamma : all_bijections(3)) {
          // after beta, the block landing at position p came from beta^{-1}(p)
          std::vector<int> moved(sizes.size());
          const OrdMap beta_inv = inverse(beta);
          for (size_t p = 0; p < sizes.size(); ++p)
            moved[p] = sizes[beta_inv.values[p] - 1];
          CHECK(compose_map(permute_blocks(beta, sizes),
                            permute_blocks(gamma, moved)) ==
                permute_blocks(compose_map(beta, gamma), sizes));
        }
  }
}

TEST_CASE("enumerations are complete and canonical") {
  CHECK(all_maps(2, 3).size() == 9);
  CHECK(all_maps(0, 3).size() == 1);
  CHECK(all_maps(2, 0).empty());
  CHECK(all_bijections(4).size() == 24);
  CHECK(all_bijections(0).size() == 1);
  CHECK(all_monotone(3, 3).size() == 10);  // C(5,3)
  CHECK(all_monotone(0, 2).size() == 1);

  for (const OrdMap& b : all_bijections(3)) CHECK(b.is_bijection());
  for (const OrdMap& t : all_monotone(3, 4)) CHECK(t.is_monotone());

  SUBCASE("composition is associative and unital on all maps of size <= 3") {
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int c = 0; c <= 3; ++c) {
          for (const OrdMap& f : all_maps(a, b)) {
            CHECK(compose_map(identity_map(a), f) == f);
            CHECK(compose_map(f, identity_map(b)) == f);
            for (const OrdMap& g : all_maps(b, c))
              for (int d = 0; d <= 3; ++d)
                for (const OrdMap& h : all_maps(c, d))
                  CHECK(compose_map(compose_map(f, g), h) ==
                        compose_map(f, compose_map(g, h)));
          }
        }
  }
}
