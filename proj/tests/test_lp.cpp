#include <doctest.h>

#include <mink/harness.hpp>
#include <mink/lp.hpp>

#include "oracles.hpp"

#include <vector>

using namespace mink;

namespace {

// the same system handed to the Fourier-Motzkin oracle
bool fm_verdict(const RationalMatrix& a, const RationalVector& b, bool strict) {
  const int cols = static_cast<int>(a.front().size());
  std::vector<oracles::FmRow> rows;
  for (size_t r = 0; r < a.size(); ++r) {
    rows.push_back({a[r], b[r], false});
    oracles::FmRow ge;
    for (const auto& c : a[r]) ge.coef.push_back(-c);
    ge.rhs = -b[r];
    rows.push_back(std::move(ge));
  }
  for (int j = 0; j < cols; ++j) {
    oracles::FmRow row;
    row.coef.assign(static_cast<size_t>(cols), BigRational(0));
    row.coef[static_cast<size_t>(j)] = BigRational(-1);
    row.rhs = BigRational(0);
    row.strict = strict;
    rows.push_back(std::move(row));
  }
  return oracles::fm_feasible(std::move(rows), cols);
}

void check_witness(const RationalMatrix& a, const RationalVector& b, const RationalVector& x,
                   bool strict) {
  for (size_t r = 0; r < a.size(); ++r) {
    BigRational s(0);
    for (size_t c = 0; c < x.size(); ++c) s += a[r][c] * x[c];
    CHECK(s == b[r]);
  }
  for (const auto& v : x) {
    if (strict)
      CHECK(v > 0);
    else
      CHECK(v >= 0);
  }
}

BigRational rand_rat(Rng& rng) {
  return BigRational(rng.uniform(-3, 3), rng.uniform(1, 3));
}

}  // namespace

TEST_SUITE("lp") {
  TEST_CASE("a segment has vertex and interior solutions") {
    RationalMatrix a = {{BigRational(1), BigRational(1)}};
    RationalVector b = {BigRational(1)};

    auto relaxed = rational_feasible(a, b, false);
    REQUIRE(relaxed.has_value());
    check_witness(a, b, *relaxed, false);

    auto interior = rational_feasible(a, b, true);
    REQUIRE(interior.has_value());
    check_witness(a, b, *interior, true);
  }

  TEST_CASE("negativity obstruction is infeasible") {
    RationalMatrix a = {{BigRational(1), BigRational(0)}, {BigRational(0), BigRational(1)}};
    RationalVector b = {BigRational(1), BigRational(-1)};
    CHECK(!rational_feasible(a, b, false).has_value());
    CHECK(!rational_feasible(a, b, true).has_value());
  }

  TEST_CASE("all-zero row demands a zero right-hand side") {
    RationalMatrix a = {{BigRational(0)}};
    CHECK(rational_feasible(a, {BigRational(0)}, false).has_value());
    CHECK(rational_feasible(a, {BigRational(0)}, true).has_value());  // any positive value works
    CHECK(!rational_feasible(a, {BigRational(1)}, false).has_value());
  }

  TEST_CASE("feasibility verdicts agree with Fourier-Motzkin elimination") {
    Rng rng(501);
    int feasible_seen = 0;
    int infeasible_seen = 0;
    for (int t = 0; t < 80; ++t) {
      const int rows = rng.uniform(1, 3);
      const int cols = rng.uniform(1, 4);
      RationalMatrix a(static_cast<size_t>(rows), RationalVector(static_cast<size_t>(cols)));
      for (auto& row : a)
        for (auto& v : row) v = rand_rat(rng);
      RationalVector b(static_cast<size_t>(rows));
      for (auto& v : b) v = rand_rat(rng);
      const bool strict = rng.uniform(0, 1) == 1;

      auto got = rational_feasible(a, b, strict);
      const bool expect = fm_verdict(a, b, strict);
      CHECK(got.has_value() == expect);
      if (got.has_value()) {
        check_witness(a, b, *got, strict);
        ++feasible_seen;
      } else {
        ++infeasible_seen;
      }
    }
    // the sample must exercise both outcomes to mean anything
    CHECK(feasible_seen > 5);
    CHECK(infeasible_seen > 5);
  }

  TEST_CASE("strict feasibility is decided exactly on boundary-tight systems") {
    // x + y = 1, x - y = 1 forces y = 0: feasible, but never strictly
    RationalMatrix a = {{BigRational(1), BigRational(1)}, {BigRational(1), BigRational(-1)}};
    RationalVector b = {BigRational(1), BigRational(1)};
    auto relaxed = rational_feasible(a, b, false);
    REQUIRE(relaxed.has_value());
    check_witness(a, b, *relaxed, false);
    CHECK(!rational_feasible(a, b, true).has_value());
  }

  TEST_CASE("tiny feasible slack is still found") {
    // x + y = 1 and 100x - y = 0: unique solution x = 1/101 > 0
    RationalMatrix a = {{BigRational(1), BigRational(1)}, {BigRational(100), BigRational(-1)}};
    RationalVector b = {BigRational(1), BigRational(0)};
    auto interior = rational_feasible(a, b, true);
    REQUIRE(interior.has_value());
    CHECK((*interior)[0] == BigRational(1, 101));
    CHECK((*interior)[1] == BigRational(100, 101));
  }
}
