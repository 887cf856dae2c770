#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "sigdim/classical.hpp"

using namespace sigdim;

namespace {

// Number of partitions of {0..m-1} into exactly k blocks, by restricted growth strings.
unsigned long partitions_brute(unsigned m, unsigned k) {
  unsigned long count = 0;
  std::vector<unsigned> a(m, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
    if (i == m) {
      if (blocks == k) ++count;
      return;
    }
    for (unsigned b = 0; b <= blocks && b < k; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (m == 0) return k == 0 ? 1 : 0;
  rec(0, 0);
  return count;
}

// Every map rows -> columns, in lexicographic order.
template <class F>
void all_maps(std::size_t m, std::size_t n, F&& f) {
  std::vector<Column> s(m, 0);
  for (;;) {
    f(s);
    std::size_t x = m;
    while (x > 0 && s[x - 1] + 1u == n) s[--x] = 0;
    if (x == 0) return;
    ++s[x - 1];
  }
}

std::size_t distinct(const std::vector<Column>& s) { return std::set<Column>(s.begin(), s.end()).size(); }

ConditionalDistribution random_distribution(std::mt19937& rng, std::size_t m, std::size_t n) {
  std::uniform_int_distribution<int> w(0, 3);
  RationalMatrix probs(m, n);
  for (std::size_t x = 0; x < m; ++x) {
    std::vector<int> row(n);
    int total = 0;
    while (total == 0) {
      total = 0;
      for (auto& v : row) total += v = w(rng);
    }
    for (std::size_t y = 0; y < n; ++y) {
      probs(x, y) = Rational(row[y], total);
      probs(x, y).canonicalize();
    }
  }
  return ConditionalDistribution(probs);
}

std::set<std::vector<Column>> as_set(const StrategyList& l) {
  std::set<std::vector<Column>> out;
  for (std::size_t i = 0; i < l.size(); ++i) out.insert(l.strategy(i).assignment);
  return out;
}

ConditionalDistribution rows(std::vector<RationalVector> r) {
  return ConditionalDistribution(RationalMatrix::from_rows(r));
}

}  // namespace

TEST_SUITE("classical") {
  TEST_CASE("distribution validation") {
    CHECK_THROWS_AS(rows({{Rational(1, 2), Rational(1, 3)}}), InvalidDistribution);
    CHECK_THROWS_AS(rows({{Rational(3, 2), Rational(-1, 2)}}), InvalidDistribution);
    CHECK_THROWS_AS(ConditionalDistribution(RationalMatrix(0, 0)), InvalidDistribution);
  }

  TEST_CASE("stirling numbers") {
    CHECK(stirling2(2, 2) == 1);
    CHECK(stirling2(16, 1) == 1);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 5) == 0);
    for (unsigned m = 0; m <= 9; ++m)
      for (unsigned k = 0; k <= 9; ++k) CHECK(stirling2(m, k) == partitions_brute(m, k));
  }

  TEST_CASE("count_vertices examples and brute force") {
    CHECK(count_vertices(1, 3, 2) == 3);
    CHECK(count_vertices(2, 2, 2) == 4);
    for (unsigned m = 1; m <= 4; ++m)
      for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 1; d <= 5; ++d) {
          unsigned long brute = 0;
          all_maps(m, n, [&](const std::vector<Column>& s) { brute += distinct(s) <= d; });
          CHECK(count_vertices(m, n, d) == brute);
        }
  }

  TEST_CASE("count_vertices saturates at min(m, n)") {
    for (unsigned m = 1; m <= 6; ++m)
      for (unsigned n = 1; n <= 6; ++n) {
        BigInt all_maps_count = 1;
        for (unsigned i = 0; i < m; ++i) all_maps_count *= n;
        for (unsigned d = std::min(m, n); d <= 8; ++d) {
          CHECK(count_vertices(m, n, d) == count_vertices(m, n, n));
          CHECK(count_vertices(m, n, d) == all_maps_count);
        }
      }
  }

  TEST_CASE("count_vertices(16, 9, 5)") {
    CHECK(count_vertices(16, 9, 5) == BigInt("17097522761601"));
  }

  TEST_CASE("strategy_to_distribution") {
    const auto a = strategy_to_distribution({{0, 0}}, 2, 2);
    CHECK(a.probs() == RationalMatrix::from_rows({{1, 0}, {1, 0}}));
    const auto b = strategy_to_distribution({{0, 1}}, 2, 2);
    CHECK(b.probs() == RationalMatrix::identity(2));
    CHECK_THROWS_AS(strategy_to_distribution({{0, 2}}, 2, 2), DimensionMismatch);
  }

  TEST_CASE("effective vertices of a full-support 2x2 distribution") {
    const Rational h(1, 2);
    const auto p = rows({{h, h}, {h, h}});
    CHECK(effective_vertices(p, 2).size() == 4);
    CHECK(effective_vertices(p, 1).size() == 2);
  }

  TEST_CASE("branch and bound equals the exhaustive filter") {
    std::mt19937 rng(17);
    for (std::size_t m = 1; m <= 8; ++m)
      for (std::size_t n = 1; n <= (m <= 6 ? 4u : 3u); ++n)
        for (int rep = 0; rep < 2; ++rep) {
          const auto p = random_distribution(rng, m, n);
          for (unsigned d = 1; d <= n; ++d) {
            std::set<std::vector<Column>> brute;
            all_maps(m, n, [&](const std::vector<Column>& s) {
              if (distinct(s) > d) return;
              for (std::size_t x = 0; x < m; ++x)
                if (sgn(p(x, s[x])) == 0) return;
              brute.insert(s);
            });
            const auto bnb = effective_vertices(p, d);
            CHECK(bnb.size() == brute.size());
            CHECK(as_set(bnb) == brute);
            for (std::size_t i = 0; i < bnb.size(); ++i) {
              const auto q = strategy_to_distribution(bnb.strategy(i), m, n);
              for (std::size_t x = 0; x < m; ++x)
                for (std::size_t y = 0; y < n; ++y)
                  if (sgn(q(x, y)) > 0) CHECK(sgn(p(x, y)) > 0);
            }
          }
        }
  }

  TEST_CASE("output order is independent of thread count") {
    std::mt19937 rng(99);
    const auto p = random_distribution(rng, 8, 4);
    const auto one = effective_vertices(p, 3, 1);
    const auto four = effective_vertices(p, 3, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one.strategy(i) == four.strategy(i));
    std::size_t streamed = 0;
    for_each_effective_vertex(p, 3, [&](std::span<const Column> s) {
      CHECK(std::equal(s.begin(), s.end(), one[streamed].begin()));
      ++streamed;
    });
    CHECK(streamed == one.size());
  }

  TEST_CASE("reduce_rows examples") {
    const Rational h(1, 2), q(1, 4);
    const auto dup = reduce_rows(rows({{1, 0}, {h, h}, {1, 0}}));
    CHECK(dup.kept_rows == std::vector<std::size_t>{0, 1});

    const auto mid = reduce_rows(rows({{1, 0, 0}, {0, h, h}, {h, q, q}}));
    CHECK(mid.kept_rows == std::vector<std::size_t>{0, 1});
    CHECK(mid.reduced.m() == 2);

    const auto same = reduce_rows(rows({{h, h}, {h, h}, {h, h}}));
    CHECK(same.kept_rows == std::vector<std::size_t>{0});
  }

  TEST_CASE("reduce_rows is idempotent") {
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
      auto base = random_distribution(rng, 4, 3);
      // append convex combinations of existing rows
      RationalMatrix probs(7, 3);
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 3; ++y) probs(x, y) = base(x, y);
      for (std::size_t y = 0; y < 3; ++y) {
        probs(4, y) = (base(0, y) + base(1, y)) / 2;
        probs(5, y) = base(2, y);
        probs(6, y) = (base(0, y) + base(1, y) * 2 + base(3, y)) / 4;
      }
      const auto once = reduce_rows(ConditionalDistribution(probs));
      CHECK(once.reduced.m() <= 4);
      const auto twice = reduce_rows(once.reduced);
      CHECK(twice.reduced == once.reduced);
    }
  }
}
