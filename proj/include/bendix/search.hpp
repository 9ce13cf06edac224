#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bendix/bending.hpp"

namespace bendix {

/// A minimum partition into lopsided blocks and its size.
struct PartitionResult {
  std::size_t count = 0;
  Partition blocks;  // presentation order, see sorted_partition
};

/**
 * N(lambda): the fewest lopsided blocks partitioning E. Exact dynamic
 * programming over uncovered sets; each step removes a lopsided block
 * containing the lowest uncovered edge. Among optimal choices the first in
 * increasing bitmask order is kept, so the witness is deterministic.
 */
PartitionResult min_lopsided_partition(const PolygonSpace& space, const Limits& limits = {});

/**
 * N(lambda, I): the fewest lopsided blocks in a partition of E each of
 * whose blocks is a union of blocks of `partition`.
 */
PartitionResult min_coarser_partition(const PolygonSpace& space,
                                      std::span<const EdgeSubset> partition,
                                      const Limits& limits = {});

/// |E| - max{3, N(lambda)}.
int max_bending_dim(const PolygonSpace& space, const Limits& limits = {});

struct ContainingTorus {
  int dimension = 0;        // n(lambda, I)
  PartitionResult coarse;   // realizes N(lambda, I)
  BendingSet witness;       // full, contains I, has dimension n(lambda, I)
};

/// Largest bending torus containing T_I, with a witness: fill(coarse + I).
ContainingTorus max_containing_dim(const PolygonSpace& space, const BendingSet& set,
                                   const Limits& limits = {});

/// A point in every interval (the largest lower end), if one exists.
std::optional<Rational> common_point(std::span<const Interval> intervals);

struct Maximality {
  bool maximal = false;
  std::optional<Rational> common_value;
};

/**
 * Maximality of a full bending torus. Top-dimensional tori (|E| - 3) are
 * maximal outright; otherwise the images of f_J over the maximal blocks J
 * must share a point, which is returned. Throws NotFull.
 */
Maximality is_maximal_bending(const PolygonSpace& space, const BendingSet& set);

enum class TheoremB { MaximalHamiltonian, NotApplicable };

/// MaximalHamiltonian when the torus is maximal bending with dimension >= |E| - 5.
TheoremB theorem_b_status(const PolygonSpace& space, const BendingSet& set);

struct TorusReport {
  BendingSet bending_set;
  int dimension = 0;
  bool is_full = false;
  Partition maximal_blocks;
  bool is_maximal_bending = false;
  TheoremB theorem_b = TheoremB::NotApplicable;
  std::optional<Rational> common_value;
};

/// Report for any valid bending set; a non-full set is never maximal.
TorusReport torus_report(const PolygonSpace& space, const BendingSet& set);

/// Every partition of E into at most `max_blocks` lopsided blocks.
std::vector<Partition> lopsided_partitions(const LengthFunction& lengths,
                                           std::size_t max_blocks = kMaxEdges);

/// Number of full bending sets whose maximal elements are `blocks`.
Integer count_full_refinements(const LengthFunction& lengths, std::span<const EdgeSubset> blocks);

/**
 * Visits the full bending sets with the given maximal elements, in a fixed
 * order. The visitor returns false to stop early; so does this function.
 */
bool for_each_full_refinement(const LengthFunction& lengths, std::span<const EdgeSubset> blocks,
                              const std::function<bool(const BendingSet&)>& visit);

/// Full bending sets with at most `max_blocks` maximal elements.
std::vector<BendingSet> full_bending_sets(const PolygonSpace& space, std::size_t max_blocks,
                                          const Limits& limits = {});

struct MaximalTori {
  std::vector<TorusReport> reports;    // at most `limit`, deterministic order
  std::map<int, Integer> spectrum;     // dimension -> number of maximal tori
  bool truncated = false;
};

/**
 * All maximal bending tori, up to `limit` reports. The spectrum counts every
 * maximal torus whether or not it was listed.
 */
MaximalTori enumerate_maximal_tori(const PolygonSpace& space,
                                   std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                   const Limits& limits = {});

struct TwoLongEdgeProbe {
  /// Pairs (a, b) with lambda(a) + lambda(b) > sum of the other lengths.
  std::vector<std::pair<std::size_t, std::size_t>> long_pairs;
  /// E_a, E_b lopsided with a in E_a and b in E_b, from the first pair that admits one.
  std::optional<std::pair<EdgeSubset, EdgeSubset>> partition;
};

/// Exhaustive search for a lopsided 2-partition separating two long edges.
TwoLongEdgeProbe two_long_edge_partition(const PolygonSpace& space);

}  // namespace bendix
