#pragma once

#include <stdexcept>
#include <vector>

#include "sigdim/rational.hpp"

namespace sigdim {

class UnboundedPolytope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasiblePoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Face description {x : Aeq x = beq, Ain x >= bin}.
struct HPolytope {
  RationalMatrix eq;
  RationalVector eq_rhs;
  RationalMatrix ineq;
  RationalVector ineq_rhs;

  std::size_t dimension() const { return eq.rows() > 0 ? eq.cols() : ineq.cols(); }
  bool contains(std::span<const Rational> x) const;
};

struct VPolytope {
  std::vector<RationalVector> vertices;
};

/// Vertex enumeration by the double description method.
///
/// Equalities are eliminated first (the affine hull is parametrized by an exact
/// nullspace basis), the remaining inequalities are homogenized and inserted
/// one at a time into a pointed cone. The next row inserted is the one
/// satisfied by the fewest current extreme rays, ties broken by row index.
/// Vertices are returned in lexicographic order. An empty polytope yields no
/// vertices; a recession direction throws UnboundedPolytope.
VPolytope dd_enumerate(const HPolytope& h);

/// True iff the constraints active at `x` span the ambient space.
/// Throws InfeasiblePoint if `x` violates a constraint.
bool is_vertex(const HPolytope& h, std::span<const Rational> x);

}  // namespace sigdim
