#include <doctest.h>

#include <random>
#include <set>

#include "sigdim/measurements.hpp"
#include "sigdim/models.hpp"
#include "sigdim/polytope.hpp"
#include "sigdim/simplex.hpp"

using namespace sigdim;

namespace {

RationalVector vec(std::initializer_list<Rational> xs) { return RationalVector(xs); }

HPolytope unit_square() {
  HPolytope h;
  h.ineq = RationalMatrix::from_rows({vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})});
  h.ineq_rhs = vec({0, 0, -1, -1});
  return h;
}

// Facets of conv(points) by brute force: every hyperplane through dim
// affinely independent points that leaves all points on one side.
HPolytope brute_force_facets(const std::vector<RationalVector>& points, std::size_t dim) {
  HPolytope h;
  std::vector<RationalVector> rows;
  RationalVector rhs;
  const std::size_t k = points.size();
  std::vector<char> pick(k, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(dim, k)), 1);
  std::set<std::pair<RationalVector, Rational>> seen;
  do {
    // normal a and offset b with a.x = b on the chosen points: nullspace of [x | -1]
    std::vector<RationalVector> sys;
    for (std::size_t i = 0; i < k; ++i)
      if (pick[i]) {
        RationalVector r = points[i];
        r.push_back(-1);
        sys.push_back(r);
      }
    const auto ns = nullspace(RationalMatrix::from_rows(sys));
    if (ns.cols() != 1) continue;
    RationalVector a = ns.column(0);
    Rational b = a.back();
    a.pop_back();
    bool all_zero = true;
    for (const auto& q : a) all_zero = all_zero && sgn(q) == 0;
    if (all_zero) continue;
    int side = 0;
    bool ok = true;
    for (const auto& p : points) {
      const int s = sgn(dot(a, p) - b);
      if (s == 0) continue;
      if (side == 0) side = s;
      if (s != side) ok = false;
    }
    if (!ok || side == 0) continue;
    if (side < 0) {
      for (auto& q : a) q = -q;
      b = -b;
    }
    // normalize so duplicates collapse
    Rational lead;
    for (const auto& q : a)
      if (sgn(q) != 0) {
        lead = abs(q);
        break;
      }
    for (auto& q : a) q /= lead;
    b /= lead;
    if (seen.insert({a, b}).second) {
      rows.push_back(a);
      rhs.push_back(b);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  h.ineq = RationalMatrix::from_rows(rows);
  h.ineq_rhs = rhs;
  return h;
}

bool in_hull(const RationalVector& x, const std::vector<RationalVector>& pts) {
  RationalMatrix a(x.size() + 1, pts.size());
  RationalVector b(x.size() + 1);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t i = 0; i < x.size(); ++i) a(i, j) = pts[j][i];
    a(x.size(), j) = 1;
  }
  std::copy(x.begin(), x.end(), b.begin());
  b.back() = 1;
  return simplex::feasible_point(a, b).has_value();
}

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("unit square") {
    const auto v = dd_enumerate(unit_square());
    CHECK(v.vertices == std::vector<RationalVector>{vec({0, 0}), vec({0, 1}), vec({1, 0}), vec({1, 1})});
    CHECK(is_vertex(unit_square(), vec({1, 1})));
    CHECK_FALSE(is_vertex(unit_square(), vec({1, Rational(1, 2)})));
    CHECK_THROWS_AS(is_vertex(unit_square(), vec({2, 0})), InfeasiblePoint);
  }

  TEST_CASE("degenerate and unbounded inputs") {
    HPolytope empty = unit_square();
    empty.eq = RationalMatrix::from_rows({vec({1, 0})});
    empty.eq_rhs = vec({5});
    CHECK(dd_enumerate(empty).vertices.empty());

    HPolytope point = unit_square();
    point.eq = RationalMatrix::from_rows({vec({1, 0}), vec({0, 1})});
    point.eq_rhs = vec({Rational(1, 3), Rational(1, 2)});
    CHECK(dd_enumerate(point).vertices == std::vector<RationalVector>{vec({Rational(1, 3), Rational(1, 2)})});

    HPolytope quadrant;
    quadrant.ineq = RationalMatrix::from_rows({vec({1, 0}), vec({0, 1})});
    quadrant.ineq_rhs = vec({0, 0});
    CHECK_THROWS_AS(dd_enumerate(quadrant), UnboundedPolytope);
  }

  TEST_CASE("squit measurement polytope") {
    const auto v = dd_enumerate(measurement_polytope(squit()));
    const Rational h(1, 2);
    CHECK(v.vertices == std::vector<RationalVector>{vec({0, h, 0, h}), vec({h, 0, h, 0})});
  }

  TEST_CASE("HS measurement polytope has 408 vertices") {
    const auto hs = compose(named_model("HS"));
    const auto h = measurement_polytope(hs);
    const auto v = dd_enumerate(h);
    CHECK(v.vertices.size() == 408);
    for (const auto& x : v.vertices) {
      CHECK(h.contains(x));
      CHECK(is_vertex(h, x));
    }
  }

  TEST_CASE("round trip on random V-polytopes") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coord(-4, 4), dimd(2, 4), count(3, 6);
    int tested = 0;
    for (int t = 0; t < 40; ++t) {
      const std::size_t dim = static_cast<std::size_t>(dimd(rng));
      std::vector<RationalVector> pts;
      const int k = count(rng);
      for (int i = 0; i < k; ++i) {
        RationalVector p(dim);
        for (auto& q : p) q = coord(rng);
        pts.push_back(p);
      }
      // full-dimensional instances only
      std::vector<RationalVector> diffs;
      for (const auto& p : pts) {
        RationalVector d(dim);
        for (std::size_t i = 0; i < dim; ++i) d[i] = p[i] - pts[0][i];
        diffs.push_back(d);
      }
      if (rank(RationalMatrix::from_rows(diffs)) != dim) continue;
      ++tested;

      std::vector<RationalVector> true_vertices;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<RationalVector> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
          if (j != i && pts[j] != pts[i]) others.push_back(pts[j]);
        bool dup_earlier = false;
        for (std::size_t j = 0; j < i; ++j) dup_earlier = dup_earlier || pts[j] == pts[i];
        if (!dup_earlier && (others.empty() || !in_hull(pts[i], others))) true_vertices.push_back(pts[i]);
      }
      std::sort(true_vertices.begin(), true_vertices.end());

      const auto v = dd_enumerate(brute_force_facets(pts, dim));
      CHECK(v.vertices == true_vertices);
      // minimality: dropping any vertex shrinks the hull
      for (std::size_t i = 0; i < v.vertices.size(); ++i) {
        std::vector<RationalVector> rest = v.vertices;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        CHECK_FALSE(in_hull(v.vertices[i], rest));
      }
    }
    CHECK(tested >= 10);
  }
}
