#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bendix/model.hpp"

namespace bendix {

/// A partition of E into nonempty, pairwise disjoint blocks.
using Partition = std::vector<EdgeSubset>;

/**
 * Presentation order for partitions: larger blocks first, then by lowest
 * edge index. Returns a sorted copy.
 */
Partition sorted_partition(Partition blocks);

/// True when the blocks are nonempty, pairwise disjoint, and cover `all`.
bool is_partition(std::span<const EdgeSubset> blocks, EdgeSubset all);

/**
 * A laminar family of lopsided subsets containing every singleton. Members
 * are kept in canonical order (see canonical_less). Obtain one through
 * validate_bending_set.
 */
class BendingSet {
 public:
  std::size_t edge_count() const { return edge_count_; }
  std::span<const EdgeSubset> members() const { return members_; }
  std::vector<EdgeSubset> non_singletons() const;
  bool contains(EdgeSubset s) const;

  bool operator==(const BendingSet&) const = default;

 private:
  friend BendingSet validate_bending_set(const LengthFunction&, std::span<const EdgeSubset>);
  BendingSet(std::size_t n, std::vector<EdgeSubset> members)
      : edge_count_(n), members_(std::move(members)) {}

  std::size_t edge_count_ = 0;
  std::vector<EdgeSubset> members_;
};

/**
 * Adds the missing singletons, then checks every member for lopsidedness and
 * every pair for the laminar condition. Throws NotLopsided or
 * LaminarViolation naming the offending member or pair.
 */
BendingSet validate_bending_set(const LengthFunction& lengths, std::span<const EdgeSubset> family);

/// The singletons-only bending set.
BendingSet trivial_bending_set(const LengthFunction& lengths);

/// Inclusion-maximal members; they partition E.
Partition maximal_elements(const BendingSet& set);

/// Every member J dominates exactly 2|J| - 1 members.
bool is_full(const BendingSet& set);
/// Every non-singleton member is the disjoint union of two members.
bool is_full_by_splitting(const BendingSet& set);

/// The two members whose disjoint union is `member`, if they exist.
std::optional<std::pair<EdgeSubset, EdgeSubset>> split_of(const BendingSet& set, EdgeSubset member);

/**
 * Completes a bending set to a full one with the same maximal elements. For
 * each non-full member, its maximal proper sub-members I1..Ir are chained
 * as I1, I1+I2, ..., I1+..+I(r-1), where I1 holds the member's dominant edge
 * and the rest follow canonical edge order.
 */
BendingSet fill(const LengthFunction& lengths, const BendingSet& set);

/**
 * Dimension of the bending torus: non-singleton members counted modulo
 * J ~ E-J, skipping members whose complement is a single edge (their
 * bending function is constant). Checked against |E| - max{3, |M|} when
 * the set is full.
 */
int torus_dimension(const PolygonSpace& space, const BendingSet& set);

/// Closed interval with exact endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
  bool is_point() const { return lo == hi; }
  bool operator==(const Interval&) const = default;
};

/**
 * Exact image of the bending function f_I: both reduced factors must be
 * nonempty, which gives [max(m(I), m(E-I)), min(s(I), s(E-I))] with
 * s = total length and m(A) = max(0, 2 max(A) - s(A)). Rejects I = {} or E.
 */
Interval moment_image(const PolygonSpace& space, EdgeSubset subset);

/**
 * Values of f_I on its critical set: the absolute signed sums over I and
 * over E-I that fall in the moment image. Sorted ascending. Requires I
 * lopsided.
 */
std::vector<Rational> critical_values(const PolygonSpace& space, EdgeSubset subset);

bool is_regular_value(const PolygonSpace& space, EdgeSubset subset, const Rational& t);

struct ReductionResult {
  LengthFunction left;   // A plus a virtual edge of length t
  LengthFunction right;  // E-A plus a virtual edge of length t
  bool left_generic;
  bool right_generic;
};

/**
 * Collapses A and E-A to virtual edges of length t. The virtual edges are
 * labelled "{...}" after the cluster they replace and are appended last.
 * Throws TOutOfImage when t is not in the image of f_A.
 */
ReductionResult reduce(const PolygonSpace& space, EdgeSubset cluster, const Rational& t,
                       const Limits& limits = {});

}  // namespace bendix
