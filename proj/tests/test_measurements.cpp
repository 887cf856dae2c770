#include <doctest.h>

#include <numeric>

#include "hs_tables.hpp"
#include "sigdim/measurements.hpp"
#include "sigdim/models.hpp"

using namespace sigdim;

namespace {

Measurement table_row(std::size_t r) {
  Measurement p{RationalVector(24)};
  for (std::size_t j = 0; j < 24; ++j) p.weights[j] = Rational(kHsClasses[r][j], 240);
  for (auto& w : p.weights) w.canonicalize();
  return p;
}

std::vector<std::vector<std::size_t>> effect_perms(const GptSystem& s, const SymmetryGroup& g) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& u : g.elements()) out.push_back(s.effect_permutation(u));
  return out;
}

}  // namespace

TEST_SUITE("measurements") {
  TEST_CASE("squit measurements") {
    const auto s = squit();
    const auto ms = enumerate_extremal_measurements(s);
    REQUIRE(ms.size() == 2);
    const Rational h(1, 2);
    CHECK(ms[0].weights == RationalVector{0, h, 0, h});
    CHECK(ms[1].weights == RationalVector{h, 0, h, 0});
    CHECK(check_extremality(s, ms[1]));
    CHECK_FALSE(check_extremality(s, Measurement{RationalVector(4, Rational(1, 4))}));
    const auto orbits = reduce_to_orbits(ms, close_group(s.symmetry_generators(), kDefaultGroupBound, 3), s);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].size == 2);
    CHECK(support_size_bound_check(s, ms));
  }

  TEST_CASE("classical bit") {
    const auto bit = classical_simplex(2);
    const auto ms = enumerate_extremal_measurements(bit);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].weights == RationalVector{Rational(1, 2), Rational(1, 2)});
  }

  TEST_CASE("trivial group gives singleton orbits") {
    const auto hs = compose(named_model("HS"));
    auto ms = enumerate_extremal_measurements(hs);
    ms.resize(20);
    const auto orbits = reduce_to_orbits(ms, SymmetryGroup({RationalMatrix::identity(9)}), hs);
    CHECK(orbits.size() == 20);
    for (const auto& o : orbits) CHECK(o.size == 1);
  }

  TEST_CASE("HS enumeration, extremality criterion and orbits") {
    const auto hs = compose(named_model("HS"));
    const auto ms = enumerate_extremal_measurements(hs);
    REQUIRE(ms.size() == 408);
    for (const auto& p : ms) {
      CHECK(is_valid_measurement(hs, p));
      CHECK(check_extremality(hs, p));
    }
    CHECK(support_size_bound_check(hs, ms));

    const auto group = close_group(hs.symmetry_generators(), kDefaultGroupBound, 9);
    const auto orbits = reduce_to_orbits(ms, group, hs);
    REQUIRE(orbits.size() == 15);
    std::size_t total = 0;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      CHECK(orbits[i].class_id == i);
      total += orbits[i].size;
    }
    CHECK(total == 408);

    // each printed row lies in exactly one orbit, and the rows cover all orbits
    const auto perms = effect_perms(hs, group);
    std::set<std::size_t> hit;
    for (std::size_t r = 0; r < kHsClasses.size(); ++r) {
      const auto p = table_row(r);
      CHECK(is_valid_measurement(hs, p));
      CHECK(check_extremality(hs, p));
      CHECK(is_vertex(measurement_polytope(hs), p.weights));
      const auto canon = canonical_form(p, perms);
      std::size_t matches = 0;
      for (const auto& o : orbits)
        if (o.representative == canon) {
          ++matches;
          hit.insert(o.class_id);
        }
      CHECK(matches == 1);
    }
    CHECK(hit.size() == 15);
  }

  TEST_CASE("independent supports are vertices") {
    // Extremality criterion, converse direction, on hand-built squit and HS measurements.
    const auto s = squit();
    Measurement p{RationalVector{0, Rational(1, 2), 0, Rational(1, 2)}};
    CHECK(check_extremality(s, p));
    CHECK(is_vertex(measurement_polytope(s), p.weights));
    const auto hs = compose(named_model("HS"));
    Measurement q{RationalVector(24)};
    q.weights[16] = q.weights[18] = Rational(1, 2);
    CHECK(check_extremality(hs, q));
    CHECK(is_vertex(measurement_polytope(hs), q.weights));
  }

  TEST_CASE("support size bound rejects oversized measurement") {
    const auto hs = compose(named_model("HS"));
    Measurement big{RationalVector(24)};
    for (std::size_t j = 0; j < 10; ++j) big.weights[j] = Rational(1, 10);
    CHECK_FALSE(support_size_bound_check(hs, {big}));
  }
}
