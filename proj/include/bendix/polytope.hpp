#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bendix/bending.hpp"
#include "bendix/linalg.hpp"

namespace bendix {

/// <normal, x> <= offset, with a primitive integer normal.
struct Halfspace {
  IntegerVector normal;
  Rational offset;
};

bool operator==(const Halfspace& a, const Halfspace& b);

/**
 * A bounded, full-dimensional polytope with rational vertices, kept in both
 * representations. Facets are irredundant and sorted; vertices are sorted
 * lexicographically. `labels` names the bending-set member behind each
 * coordinate when the polytope is a moment polytope.
 */
struct LatticePolytope {
  int dim = 0;
  std::vector<Halfspace> halfspaces;
  std::vector<RationalVector> vertices;
  std::vector<EdgeSubset> labels;
};

/**
 * Vertex enumeration by intersecting every dim-subset of halfspaces, then
 * pruning halfspaces that are not facets. Requires dim <= 3 and a bounded
 * intersection; throws InvalidInput when the result is empty or not
 * full-dimensional.
 */
LatticePolytope polytope_from_halfspaces(int dim, std::vector<Halfspace> halfspaces);

/// Convex hull of the given points (dim <= 3), which must span R^dim.
LatticePolytope polytope_from_vertices(int dim, const std::vector<RationalVector>& points);

bool contains(const LatticePolytope& polytope, const RationalVector& point);

/// Facet indices tight at each vertex.
std::vector<std::vector<std::size_t>> tight_facets(const LatticePolytope& polytope);

/// Neighbouring vertices along edges of the polytope.
std::vector<std::vector<std::size_t>> vertex_adjacency(const LatticePolytope& polytope);

/**
 * Moment polytope of a toric bending action. One coordinate per essential
 * non-singleton member (J and E-J identified, constant f_J dropped), in
 * canonical member order. Constraints are the triangle inequalities
 * |t' - t''| <= t <= t' + t'' at each split, plus closure among the
 * maximal blocks. Throws NotToric or DimensionTooLarge (dim > 3).
 */
LatticePolytope moment_polytope(const PolygonSpace& space, const BendingSet& set);

/// At each vertex the primitive edge directions form a basis of Z^dim.
bool is_delzant(const LatticePolytope& polytope);

/// Euclidean volume (length in dim 1, area in dim 2).
Rational volume(const LatticePolytope& polytope);

/// Lattice lengths of all edges, sorted.
std::vector<Rational> lattice_edge_lengths(const LatticePolytope& polytope);

/// Invariants of GL(Z^n) + translation equivalence.
struct LatticeInvariants {
  int dim = 0;
  std::size_t vertex_count = 0;
  Rational volume;
  std::vector<Rational> edge_lengths;
  std::vector<std::size_t> parallel_facet_classes;  // class sizes, sorted

  bool operator==(const LatticeInvariants&) const = default;
};

LatticeInvariants lattice_invariants(const LatticePolytope& polytope);

enum class Equivalence { Equivalent, NotEquivalent, Unknown };

struct LatticeEquivalence {
  Equivalence verdict = Equivalence::NotEquivalent;
  std::optional<IntegerMatrix> map;           // Q = map * P + translation
  std::optional<RationalVector> translation;
};

/**
 * Decides Q = psi(P) + v with psi in GL(Z^n). Complete for dim <= 2, by
 * trying every match of the edge directions at one vertex of P with those
 * at a vertex of Q. In dim 3 only invariants are compared: the verdict is
 * NotEquivalent or Unknown. Throws DimensionMismatch.
 */
LatticeEquivalence lattice_equivalent(const LatticePolytope& p, const LatticePolytope& q);

RationalVector apply_affine(const IntegerMatrix& map, const RationalVector& translation,
                            const RationalVector& point);

struct EquivalenceClass {
  LatticePolytope representative;
  std::vector<BendingSet> members;
};

struct EquivalenceClassReport {
  std::vector<EquivalenceClass> classes;
  bool complete = true;  // false when classes were only screened by invariants
};

/**
 * Groups the toric bending sets by lattice equivalence of their moment
 * polytopes. Representatives have the lexicographically least vertex list;
 * classes are ordered by representative.
 */
EquivalenceClassReport conjugacy_classes(const PolygonSpace& space, const Limits& limits = {});

/// Data for Pol(1, a, c, c, c) with c > a + 1 > 2.
struct NonbendingReport {
  Rational a;
  Rational c;
  std::size_t unit_edge = 0;
  std::size_t a_edge = 0;
  std::array<std::size_t, 3> c_edges{};
  Integer hamiltonian_classes;   // ceil(a)
  std::size_t bending_classes = 0;
  bool strong_hypothesis = false;       // a + 1 > 3
  bool nonbending_tori_exist = false;
  BendingSet rectangle_set;             // {{c,1},{c',a}}
  LatticePolytope rectangle;
  BendingSet trapezoid_set;             // {{a,1},{c,a,1}}
  LatticePolytope trapezoid;
  BendingSet printed_set;               // {{c,1},{c,a,1}}
  LatticePolytope printed;
  Equivalence trapezoid_vs_rectangle = Equivalence::Unknown;
  Equivalence printed_vs_rectangle = Equivalence::Unknown;
};

/**
 * Matches lambda against (1, a, c, c, c) up to edge order and, when
 * c > a + 1 > 2, reports the bending classes and their polytopes. The
 * count ceil(a) of Hamiltonian classes applies to the S^2 x S^2 model.
 */
std::optional<NonbendingReport> nonbending_report(const PolygonSpace& space, const Limits& limits = {});

}  // namespace bendix
