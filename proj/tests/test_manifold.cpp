#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zpcheck/error.hpp"
#include "zpcheck/manifold.hpp"

using namespace zpcheck;

namespace {

using RankMap = std::map<int, std::int64_t>;

const char* kM = "16*S5xS7 # 15*S6xS6";

std::vector<std::tuple<int, int, int>> as_tuples(const ConnectedSumSpec& spec) {
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& s : spec.summands()) {
    out.emplace_back(static_cast<int>(s.multiplicity), s.factor.lo, s.factor.hi);
  }
  return out;
}

}  // namespace

TEST_CASE("sphere products") {
  CHECK(SphereProduct(7, 5) == SphereProduct(5, 7));
  CHECK(SphereProduct(7, 5).to_string() == "S5xS7");
  CHECK_THROWS_AS(SphereProduct(1, 5), InputError);
  CHECK(product_homology(SphereProduct(5, 7)).ranks() == RankMap{{0, 1}, {5, 1}, {7, 1}, {12, 1}});
  CHECK(product_homology(SphereProduct(6, 6)).ranks() == RankMap{{0, 1}, {6, 2}, {12, 1}});
  CHECK(product_homology(SphereProduct(6, 6), true).ranks() == RankMap{{0, 1}, {6, 2}});
}

TEST_CASE("spec grammar") {
  const auto spec = ConnectedSumSpec::parse(kM);
  REQUIRE(spec.summands().size() == 2);
  CHECK(spec.summands()[0].multiplicity == 16);
  CHECK(spec.summands()[0].factor == SphereProduct(5, 7));
  CHECK(spec.to_string() == "16*S5xS7 # 15*S6xS6");
  CHECK(ConnectedSumSpec::parse("  16 * S5 x S7#15*s6XS6 ") == spec);
  CHECK(ConnectedSumSpec::parse("S5xS7").summands()[0].multiplicity == 1);
  CHECK(ConnectedSumSpec::parse("S7xS5").to_string() == "1*S5xS7");

  CHECK_THROWS_AS(ConnectedSumSpec::parse(""), InputError);
  CHECK_THROWS_AS(ConnectedSumSpec::parse("16*S5xS7 #"), InputError);
  CHECK_THROWS_AS(ConnectedSumSpec::parse("0*S5xS7"), InputError);
  CHECK_THROWS_AS(ConnectedSumSpec::parse("2*T5"), InputError);
  CHECK_THROWS_AS(ConnectedSumSpec::parse("S5xS7 # S3xS3"), DimensionMismatchError);
  CHECK_THROWS_AS(ConnectedSumSpec(std::vector<Summand>{}), InputError);
}

TEST_CASE("normalization") {
  const auto a = ConnectedSumSpec::parse("15*S6xS6 # 10*S7xS5 # 6*S5xS7");
  const auto n = a.normalized();
  CHECK(n.to_string() == "16*S5xS7 # 15*S6xS6");
  CHECK(n.normalized() == n);
  CHECK(connected_sum_homology(a) == connected_sum_homology(n));
}

TEST_CASE("connected sum homology") {
  SUBCASE("the 12-manifold M") {
    const auto g = connected_sum_homology(ConnectedSumSpec::parse(kM));
    CHECK(g.ranks() == RankMap{{0, 1}, {5, 16}, {6, 30}, {7, 16}, {12, 1}});
    CHECK(g.reduced_rank(0) == 0);
    CHECK(poincare_check(g));
    CHECK(euler_characteristic(g) == 0);
    // chi(A # B) = chi(A) + chi(B) - 2 in even dimension.
    const auto a = connected_sum_homology(ConnectedSumSpec::parse("16*S5xS7"));
    const auto b = connected_sum_homology(ConnectedSumSpec::parse("15*S6xS6"));
    CHECK(euler_characteristic(g) == euler_characteristic(a) + euler_characteristic(b) - 2);
  }
  SUBCASE("single summand") {
    CHECK(connected_sum_homology(ConnectedSumSpec::parse("S5xS7")) == product_homology(SphereProduct(5, 7)));
  }
  SUBCASE("two copies of S6xS6") {
    const RankMap expected{{0, 1}, {6, 4}, {12, 1}};
    CHECK(oracle::connected_sum_by_les({{2, 6, 6}}) == expected);
    CHECK(connected_sum_homology(ConnectedSumSpec::parse("2*S6xS6")).ranks() == expected);
  }
  SUBCASE("matches the LES iteration") {
    const auto spec = ConnectedSumSpec::parse(kM);
    CHECK(connected_sum_homology(spec).ranks() == oracle::connected_sum_by_les(as_tuples(spec)));
  }
}

TEST_CASE("connected sum properties on random specs") {
  std::mt19937 rng(11);
  const std::vector<std::vector<SphereProduct>> families = {
      {SphereProduct(5, 7), SphereProduct(6, 6), SphereProduct(3, 9), SphereProduct(2, 10), SphereProduct(4, 8)},
      {SphereProduct(2, 2)},
      {SphereProduct(2, 5), SphereProduct(3, 4)}};
  for (int trial = 0; trial < 300; ++trial) {
    const auto& fam = families[rng() % families.size()];
    std::vector<Summand> summands;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      summands.push_back(Summand{1 + static_cast<std::int64_t>(rng() % 5), fam[rng() % fam.size()]});
    }
    const ConnectedSumSpec spec(summands);
    const auto g = connected_sum_homology(spec);
    CHECK(poincare_check(g));
    CHECK(g.ranks() == oracle::connected_sum_by_les(as_tuples(spec)));
    int lowest = spec.dimension();
    for (const auto& s : spec.summands()) lowest = std::min(lowest, s.factor.lo);
    for (int k = 1; k < lowest; ++k) CHECK(g.rank(k) == 0);
    CHECK(rational_homotopy_rank(g, first_nonzero_degree(g)) == g.rank(first_nonzero_degree(g)));

    // Additivity against a second random spec of the same dimension.
    std::vector<Summand> other{Summand{1 + static_cast<std::int64_t>(rng() % 3), fam[rng() % fam.size()]}};
    std::vector<Summand> joined = summands;
    joined.insert(joined.end(), other.begin(), other.end());
    const auto gb = connected_sum_homology(ConnectedSumSpec(other));
    const auto gab = connected_sum_homology(ConnectedSumSpec(joined));
    for (int k = 1; k < spec.dimension(); ++k) CHECK(gab.rank(k) == g.rank(k) + gb.rank(k));
    const std::int64_t chi_sphere = spec.dimension() % 2 == 0 ? 2 : 0;
    CHECK(euler_characteristic(gab) == euler_characteristic(g) + euler_characteristic(gb) - chi_sphere);
  }
}

TEST_CASE("poincare and euler") {
  GradedRanks missing(12);
  missing.set(0, 1);
  missing.set(5, 1);
  missing.set(12, 1);
  CHECK_FALSE(poincare_check(missing));
  GradedRanks sphere(12);
  sphere.set(0, 1);
  sphere.set(12, 1);
  CHECK(poincare_check(sphere));
  CHECK(euler_characteristic(product_homology(SphereProduct(6, 6))) == 4);
  CHECK(euler_characteristic(product_homology(SphereProduct(5, 7))) == 0);
  CHECK_THROWS_AS(sphere.set(13, 1), RangeError);
}

TEST_CASE("rational homotopy ranks in the Hurewicz range") {
  const auto g = connected_sum_homology(ConnectedSumSpec::parse(kM));
  CHECK(first_nonzero_degree(g) == 5);
  CHECK(rational_homotopy_rank(g, 6) == 30);
  CHECK(rational_homotopy_rank(g, 5) == 16);
  CHECK(rational_homotopy_rank(g, 4) == 0);
  CHECK(rational_homotopy_rank(g, 8) == 0);
  CHECK_THROWS_AS(rational_homotopy_rank(g, 9), RangeError);
  CHECK_THROWS_AS(rational_homotopy_rank(g, 0), InputError);
  GradedRanks point(0);
  point.set(0, 1);
  CHECK_THROWS_AS(first_nonzero_degree(point), InputError);
}
