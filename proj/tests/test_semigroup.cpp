#include <doctest.h>

#include <mink/harness.hpp>
#include <mink/semigroup.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <vector>

using namespace mink;

namespace {

LatticePoint pt(std::initializer_list<int> cs) {
  LatticePoint p;
  for (int c : cs) p.emplace_back(c);
  return p;
}

LatticePolytope spiky_sum() { return minkowski_sum(unit_triangle_3d(), steep_segment_3d()); }

void check_parts(const std::vector<LatticePoint>& parts, const LatticePoint& alpha, int k,
                 const std::vector<LatticePoint>& ground_set) {
  REQUIRE(static_cast<int>(parts.size()) == k);
  LatticePoint total(alpha.size(), BigInt(0));
  for (const auto& part : parts) {
    CHECK(std::binary_search(ground_set.begin(), ground_set.end(), part, lex_less));
    total = add(total, part);
  }
  CHECK(total == alpha);
}

}  // namespace

TEST_SUITE("semigroup") {
  TEST_CASE("single-part decomposition is lattice membership") {
    LatticePolytope p = unit_triangle_3d();
    auto hit = decompose(pt({1, 0, 0}), 1, p);
    REQUIRE(hit.has_value());
    CHECK(*hit == std::vector<LatticePoint>{pt({1, 0, 0})});
    CHECK(!decompose(pt({1, 1, 0}), 1, p).has_value());
  }

  TEST_CASE("two-part decomposition over a segment") {
    LatticePolytope seg(1, {pt({0}), pt({1})});
    auto hit = decompose(pt({2}), 2, seg);
    REQUIRE(hit.has_value());
    CHECK(*hit == std::vector<LatticePoint>{pt({1}), pt({1})});
  }

  TEST_CASE("the doubled matching-simplex point has no two-part split") {
    LatticePolytope q = minkowski_sum(matching_simplex_a(), matching_simplex_b());
    LatticePoint alpha = pt({2, 2, 1, 1, 1, 1});
    CHECK(contains(dilate(q, 2), alpha));
    CHECK(!decompose(alpha, 2, q).has_value());
  }

  TEST_CASE("decomposition verdicts agree with naive product enumeration") {
    Rng rng(12001);
    int present = 0, absent = 0;
    for (int t = 0; t < 20; ++t) {
      const int n = rng.uniform(1, 3);
      LatticePolytope p = random_polytope(rng, n, 2, rng.uniform(2, 5));
      std::vector<LatticePoint> pts = lattice_points(p);
      if (pts.size() > 40) continue;
      for (int k = 1; k <= 3; ++k) {
        // guaranteed-decomposable targets, dilate lattice points, and noise
        std::vector<LatticePoint> targets = lattice_points(dilate(p, k));
        for (int s = 0; s < 3; ++s) {
          LatticePoint sum(static_cast<size_t>(n), BigInt(0));
          for (int i = 0; i < k; ++i)
            sum = add(sum, pts[static_cast<size_t>(rng.uniform(0, static_cast<int>(pts.size()) - 1))]);
          targets.push_back(sum);
          LatticePoint noise(static_cast<size_t>(n));
          for (auto& c : noise) c = rng.uniform(-1, 2 * k);
          targets.push_back(noise);
        }
        for (const auto& alpha : targets) {
          auto got = decompose(alpha, k, p);
          auto expect = oracles::naive_decompose(alpha, k, pts);
          CHECK(got.has_value() == expect.has_value());
          if (got.has_value()) {
            check_parts(*got, alpha, k, pts);
            ++present;
          } else {
            ++absent;
          }
        }
      }
    }
    CHECK(present > 50);
    CHECK(absent > 20);
  }

  TEST_CASE("low-dimensional polytopes always pass the decomposition check") {
    Rng rng(333);
    for (int t = 0; t < 8; ++t) {
      LatticePolytope p = random_polytope(rng, 2, 3, rng.uniform(2, 5));
      CheckReport rep = idp_check(p, 3);
      CHECK(rep.verdict == "HOLDS_UP_TO_K");
      CHECK(rep.verified_up_to_k == 3);
      CHECK(!rep.counterexample.has_value());
    }
  }

  TEST_CASE("the spiky sum fails with the known least counterexample") {
    LatticePolytope q = spiky_sum();
    CheckReport rep = idp_check(q, 3);
    CHECK(rep.property == "IDP");
    REQUIRE(rep.verdict == "FAILS");
    REQUIRE(rep.counterexample.has_value());
    CHECK(rep.counterexample->k == 2);
    CHECK(rep.counterexample->alpha == pt({1, 1, 1}));
    CHECK(rep.verified_up_to_k == 1);
    // the witness re-validates against the public primitives
    CHECK(contains(dilate(q, 2), rep.counterexample->alpha));
    CHECK(!decompose(rep.counterexample->alpha, 2, q).has_value());

    CheckReport norm = normal_check(q, 3);
    CHECK(norm.property == "NORMAL");
    REQUIRE(norm.verdict == "FAILS");
    CHECK(norm.counterexample->k == 2);
    CHECK(norm.counterexample->alpha == pt({1, 1, 1}));
  }

  TEST_CASE("a unimodular simplex is normal") {
    LatticePolytope simplex(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})});
    CheckReport rep = normal_check(simplex, 4);
    CHECK(rep.verdict == "HOLDS_UP_TO_K");
    CHECK(rep.verified_up_to_k == 4);
  }

  TEST_CASE("interior points of a doubled segment all split off an interior point") {
    LatticePolytope seg(1, {pt({0}), pt({2})});
    CheckReport rep = level_check({seg}, {BigInt(1)}, 2);
    CHECK(rep.property == "LEVEL");
    CHECK(rep.verdict == "HOLDS_UP_TO_K");
  }

  TEST_CASE("the spiky sum fails the interior splitting check") {
    // relint(2Q) contains (1,1,1); the only interior lattice point of Q is
    // (1,1,2), and (1,1,1) - (1,1,2) lies outside Q
    CheckReport rep = level_check({unit_triangle_3d(), steep_segment_3d()},
                                  {BigInt(1), BigInt(1)}, 2);
    REQUIRE(rep.verdict == "FAILS");
    REQUIRE(rep.counterexample.has_value());
    CHECK(rep.counterexample->k == 2);
    CHECK(rep.counterexample->alpha == pt({1, 1, 1}));

    LatticePolytope q = spiky_sum();
    CHECK(relint_lattice_points(q) == std::vector<LatticePoint>{pt({1, 1, 2})});
    CHECK(relint_contains(dilate(q, 2), pt({1, 1, 1})));
  }

  TEST_CASE("dilation point identities on hand-sized instances") {
    LatticePolytope tri(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})});
    LatticePolytope seg_a(1, {pt({0}), pt({1})});
    LatticePolytope seg_b(1, {pt({0}), pt({2})});
    LatticePolytope point(2, {pt({3, 5})});

    CHECK(verify_lemma25a({tri}, {BigInt(3)}));
    CHECK(verify_lemma25a({seg_a, seg_b}, {BigInt(2), BigInt(2)}));
    CHECK(verify_lemma25a({point}, {BigInt(4)}));

    LatticePolytope diag(2, {pt({0, 0}), pt({1, 1})});
    CHECK(verify_lemma25b({seg_a}, {BigInt(3)}));
    CHECK(verify_lemma25b({tri}, {BigInt(4)}));
    CHECK(verify_lemma25b({tri, diag}, {BigInt(4), BigInt(3)}));
  }

  TEST_CASE("sumsets are sorted, deduplicated pointwise sums") {
    std::vector<LatticePoint> a = {pt({0, 0}), pt({1, 0})};
    std::vector<LatticePoint> b = {pt({0, 0}), pt({1, 0}), pt({0, 1})};
    std::vector<LatticePoint> expect = {pt({0, 0}), pt({0, 1}), pt({1, 0}),
                                        pt({1, 1}), pt({2, 0})};
    CHECK(sumset(a, b) == expect);
  }

  TEST_CASE("reports are deterministic") {
    LatticePolytope q = spiky_sum();
    CheckReport r1 = idp_check(q, 3);
    CheckReport r2 = idp_check(q, 3);
    CHECK(r1.verdict == r2.verdict);
    REQUIRE(r1.counterexample.has_value());
    REQUIRE(r2.counterexample.has_value());
    CHECK(r1.counterexample->k == r2.counterexample->k);
    CHECK(r1.counterexample->alpha == r2.counterexample->alpha);
    CHECK(r1.counterexample->statement == r2.counterexample->statement);
  }
}
