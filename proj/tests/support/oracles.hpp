#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "bendix/bending.hpp"
#include "bendix/polytope.hpp"
#include "bendix/search.hpp"

namespace bendix::oracle {

// Independent reference implementations. They are deliberately naive:
// exhaustive enumeration over plain vectors, no bitmask tricks.

/// No subset has exactly half the perimeter.
bool brute_is_generic(const std::vector<Rational>& lengths);

/// All set partitions of {0..n-1}, as lists of blocks of indices.
std::vector<std::vector<std::vector<std::size_t>>> all_set_partitions(std::size_t n);

/// Fewest lopsided blocks over every set partition.
std::size_t brute_min_lopsided_blocks(const std::vector<Rational>& lengths);

/// A closed polygon with these side lengths exists (zero lengths allowed).
bool closes(const std::vector<Rational>& sides);

/**
 * t is a value of the bending function on `subset`: the two reduced factor
 * spaces, with sides (subset, t) and (rest, t), are both nonempty.
 */
bool in_image_by_reduction(const std::vector<Rational>& lengths, const std::vector<std::size_t>& subset,
                           const Rational& t);

/**
 * Membership of a coordinate vector in a toric moment polytope by checking
 * the polygon closing condition at every node of the member tree.
 */
bool in_moment_polytope(const LengthFunction& lengths, const BendingSet& set,
                        const std::vector<EdgeSubset>& labels, const std::vector<Rational>& point);

/// |E| - max(3, |M|), with the maximal members found by a direct scan.
int expected_torus_dimension(std::size_t edge_count, const BendingSet& set);

/**
 * A planar closed polygon with the given side lengths, found by sampling
 * directions for all but the last two sides and closing with a circle
 * intersection. Returns the edge vectors, or nothing after `tries`.
 */
std::optional<std::vector<std::pair<double, double>>> sample_planar_polygon(const std::vector<double>& sides,
                                                                           std::uint32_t seed, int tries);

/// Fixed-seed generators.
class Generator {
 public:
  explicit Generator(std::uint32_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi);
  Rational rational(int max_numerator, int max_denominator);

  /// A generic length function with nonempty space and `n` edges.
  LengthFunction generic_lengths(std::size_t n);
  /// A random bending set: random subsets kept when lopsided and laminar.
  BendingSet bending_set(const LengthFunction& lengths, std::size_t attempts);
  /// A random matrix in GL(2, Z) built from shears and swaps.
  IntegerMatrix unimodular2();

 private:
  std::mt19937 rng_;
};

}  // namespace bendix::oracle
