#include "sigdim/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace sigdim {

namespace {

class RowSet {
 public:
  explicit RowSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool subset_of(const RowSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  friend RowSet operator&(const RowSet& a, const RowSet& b) {
    RowSet r = a;
    for (std::size_t k = 0; k < r.words_.size(); ++k) r.words_[k] &= b.words_[k];
    return r;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RationalVector v;
  RowSet zeros;
};

// Scale to a primitive integer vector.
void make_primitive(RationalVector& v) {
  BigInt l = lcm_of_denominators(v);
  BigInt g = 0;
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Extreme rays of the pointed cone {u : M u >= 0}; M must have full column rank.
std::vector<Ray> cone_rays(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t dim = m.cols();

  std::vector<std::size_t> basis_rows;
  {
    std::vector<RationalVector> chosen;
    for (std::size_t i = 0; i < rows && basis_rows.size() < dim; ++i) {
      chosen.emplace_back(m.row(i).begin(), m.row(i).end());
      if (rank(RationalMatrix::from_rows(chosen)) == chosen.size())
        basis_rows.push_back(i);
      else
        chosen.pop_back();
    }
  }
  RationalMatrix k(dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t c = 0; c < dim; ++c) k(a, c) = m(basis_rows[a], c);
  const RationalMatrix kinv = *inverse(k);

  std::vector<bool> processed(rows, false);
  for (auto i : basis_rows) processed[i] = true;

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    Ray r{kinv.column(j), RowSet(rows)};
    make_primitive(r.v);
    for (std::size_t a = 0; a < dim; ++a)
      if (a != j) r.zeros.set(basis_rows[a]);
    rays.push_back(std::move(r));
  }

  std::size_t remaining = rows - basis_rows.size();
  std::vector<Rational> slack;
  while (remaining > 0) {
    // Next row: fewest satisfied rays, lowest index on ties.
    std::size_t next = rows;
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < rows; ++i) {
      if (processed[i]) continue;
      std::size_t satisfied = 0;
      for (const auto& r : rays)
        if (sgn(dot(m.row(i), r.v)) >= 0) ++satisfied;
      if (satisfied < best) {
        best = satisfied;
        next = i;
      }
    }
    processed[next] = true;
    --remaining;

    slack.resize(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      slack[j] = dot(m.row(next), rays[j].v);
      const int s = sgn(slack[j]);
      if (s > 0)
        pos.push_back(j);
      else if (s < 0)
        neg.push_back(j);
      else
        rays[j].zeros.set(next);
    }
    if (neg.empty()) continue;

    std::vector<Ray> updated;
    updated.reserve(rays.size());
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (sgn(slack[j]) >= 0) updated.push_back(rays[j]);

    for (auto p : pos) {
      for (auto n : neg) {
        RowSet common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != p && o != n && common.subset_of(rays[o].zeros)) adjacent = false;
        if (!adjacent) continue;
        Ray r{RationalVector(dim), common};
        for (std::size_t c = 0; c < dim; ++c)
          r.v[c] = slack[p] * rays[n].v[c] - slack[n] * rays[p].v[c];
        make_primitive(r.v);
        r.zeros.set(next);
        updated.push_back(std::move(r));
      }
    }
    rays = std::move(updated);
  }
  return rays;
}

}  // namespace

bool HPolytope::contains(std::span<const Rational> x) const {
  for (std::size_t i = 0; i < eq.rows(); ++i)
    if (dot(eq.row(i), x) != eq_rhs[i]) return false;
  for (std::size_t i = 0; i < ineq.rows(); ++i)
    if (dot(ineq.row(i), x) < ineq_rhs[i]) return false;
  return true;
}

VPolytope dd_enumerate(const HPolytope& h) {
  const std::size_t n = h.dimension();
  if (h.eq.rows() != h.eq_rhs.size() || h.ineq.rows() != h.ineq_rhs.size())
    throw DimensionMismatch("dd_enumerate: right-hand side length");
  if (h.eq.rows() > 0 && h.ineq.rows() > 0 && h.eq.cols() != h.ineq.cols())
    throw DimensionMismatch("dd_enumerate: equality and inequality column counts differ");

  // Affine hull x = x0 + N z.
  RationalVector x0(n);
  RationalMatrix null_basis = RationalMatrix::identity(n);
  if (h.eq.rows() > 0) {
    auto sol = solve_exact(h.eq, h.eq_rhs);
    if (!sol) return {};
    x0 = std::move(*sol);
    null_basis = nullspace(h.eq);
  }
  const std::size_t k = null_basis.cols();
  if (k == 0) {
    if (h.contains(x0)) return {{x0}};
    return {};
  }

  // Homogenized cone over w = (t, z): t >= 0 and t (Ain x0 - bin) + Ain N z >= 0.
  const std::size_t q = h.ineq.rows();
  RationalMatrix cone(q + 1, k + 1);
  cone(0, 0) = 1;
  for (std::size_t i = 0; i < q; ++i) {
    cone(i + 1, 0) = dot(h.ineq.row(i), x0) - h.ineq_rhs[i];
    for (std::size_t c = 0; c < k; ++c) {
      Rational s = 0;
      for (std::size_t a = 0; a < n; ++a)
        if (sgn(h.ineq(i, a)) != 0 && sgn(null_basis(a, c)) != 0) s += h.ineq(i, a) * null_basis(a, c);
      cone(i + 1, c + 1) = s;
    }
  }

  // Factor out any lineality space: cone = M R with R the rref row basis and
  // M the pivot columns, so {w : C w >= 0} projects onto {u : M u >= 0}.
  std::vector<std::size_t> pivots;
  rref(cone, pivots);
  const bool pointed = pivots.size() == k + 1;
  RationalMatrix m(cone.rows(), pivots.size());
  for (std::size_t i = 0; i < cone.rows(); ++i)
    for (std::size_t c = 0; c < pivots.size(); ++c) m(i, c) = cone(i, pivots[c]);

  const auto rays = cone_rays(m);
  bool has_point = false;
  bool has_direction = !pointed;
  for (const auto& r : rays) {
    if (sgn(dot(m.row(0), r.v)) > 0)
      has_point = true;
    else
      has_direction = true;
  }
  if (!has_point) return {};
  if (has_direction) throw UnboundedPolytope("dd_enumerate: polyhedron is unbounded");

  VPolytope out;
  for (const auto& r : rays) {
    const Rational& t = r.v[0];
    RationalVector x = x0;
    for (std::size_t c = 0; c < k; ++c) {
      if (sgn(r.v[c + 1]) == 0) continue;
      const Rational zc = r.v[c + 1] / t;
      for (std::size_t a = 0; a < n; ++a)
        if (sgn(null_basis(a, c)) != 0) x[a] += zc * null_basis(a, c);
    }
    out.vertices.push_back(std::move(x));
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const RationalVector& a, const RationalVector& b) { return lex_less(a, b); });
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  return out;
}

bool is_vertex(const HPolytope& h, std::span<const Rational> x) {
  if (x.size() != h.dimension()) throw DimensionMismatch("is_vertex: point has wrong length");
  if (!h.contains(x)) throw InfeasiblePoint("is_vertex: point violates a constraint");
  std::vector<RationalVector> active;
  for (std::size_t i = 0; i < h.eq.rows(); ++i) active.emplace_back(h.eq.row(i).begin(), h.eq.row(i).end());
  for (std::size_t i = 0; i < h.ineq.rows(); ++i)
    if (dot(h.ineq.row(i), x) == h.ineq_rhs[i])
      active.emplace_back(h.ineq.row(i).begin(), h.ineq.row(i).end());
  if (active.empty()) return x.empty();
  return rank(RationalMatrix::from_rows(active)) == x.size();
}

}  // namespace sigdim
