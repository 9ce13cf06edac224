#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bendix/rational.hpp"

namespace bendix {

/// Hard ceiling imposed by the 64-bit subset encoding.
inline constexpr std::size_t kMaxEdges = 64;

/**
 * A subset of the edges of one length function, encoded as a bitmask over
 * the canonical (input) edge order: bit i set means edge i is a member.
 */
class EdgeSubset {
 public:
  constexpr EdgeSubset() = default;
  constexpr explicit EdgeSubset(std::uint64_t bits) : bits_(bits) {}

  static constexpr EdgeSubset singleton(std::size_t i) { return EdgeSubset(std::uint64_t{1} << i); }
  static constexpr EdgeSubset all(std::size_t n) {
    return EdgeSubset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  /// Index of the lowest member; undefined on the empty set.
  constexpr std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr bool subset_of(EdgeSubset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(EdgeSubset other) const { return (bits_ & other.bits_) == 0; }
  /// Laminar pair: disjoint or nested.
  constexpr bool laminar_with(EdgeSubset other) const {
    return disjoint(other) || subset_of(other) || other.subset_of(*this);
  }

  constexpr EdgeSubset operator|(EdgeSubset o) const { return EdgeSubset(bits_ | o.bits_); }
  constexpr EdgeSubset operator&(EdgeSubset o) const { return EdgeSubset(bits_ & o.bits_); }
  constexpr EdgeSubset operator-(EdgeSubset o) const { return EdgeSubset(bits_ & ~o.bits_); }
  constexpr EdgeSubset& operator|=(EdgeSubset o) { bits_ |= o.bits_; return *this; }

  constexpr bool operator==(const EdgeSubset&) const = default;

  std::vector<std::size_t> indices() const;

 private:
  std::uint64_t bits_ = 0;
};

/**
 * Canonical member order used for bending sets: by lowest edge index, then
 * size, then lexicographically on the sorted index lists.
 */
bool canonical_less(EdgeSubset a, EdgeSubset b);

struct Edge {
  std::string id;
  Rational length;
};

/**
 * Edge labels with exact positive lengths, in canonical order. Construction
 * validates positivity and label uniqueness.
 */
class LengthFunction {
 public:
  explicit LengthFunction(std::vector<Edge> edges);

  /// Labels the edges "e1", "e2", ... in order.
  static LengthFunction from_lengths(const std::vector<Rational>& lengths);

  std::size_t size() const { return edges_.size(); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  const Rational& length(std::size_t i) const { return edges_[i].length; }
  const std::string& id(std::size_t i) const { return edges_[i].id; }
  const std::vector<Edge>& edges() const { return edges_; }
  EdgeSubset all() const { return EdgeSubset::all(edges_.size()); }

  /// Throws Error(UnknownEdge).
  std::size_t index_of(const std::string& id) const;
  EdgeSubset subset(const std::vector<std::string>& ids) const;

  Rational sum(EdgeSubset s) const;
  /// Longest member, first in canonical order on ties. Requires s nonempty.
  std::size_t longest(EdgeSubset s) const;

  /// "{e1,e3}" in canonical order; used in diagnostics.
  std::string describe(EdgeSubset s) const;

  /// Lengths scaled by the common denominator, so they become integers.
  std::vector<Integer> integer_weights() const;

 private:
  std::vector<Edge> edges_;
};

/**
 * Size guards for the exponential routines. BENDIX_MAX_EDGES, when set,
 * overrides both ceilings; `force` disables them.
 */
struct Limits {
  std::size_t max_generic_edges = 24;
  std::size_t max_enumeration_edges = 10;
  bool force = false;

  static Limits from_environment();
  void check_generic(std::size_t edges) const;
  void check_enumeration(std::size_t edges) const;
};

/// No signed sum of lengths vanishes.
bool is_generic(const LengthFunction& lengths, const Limits& limits = {});

/// The closing condition: the longest edge does not exceed the sum of the others.
bool is_nonempty(const LengthFunction& lengths);

/// 2(|E| - 3); rejects non-generic or empty inputs.
int pol_dimension(const LengthFunction& lengths, const Limits& limits = {});

bool is_lopsided(const LengthFunction& lengths, EdgeSubset subset);

/// The edge longer than all the others of `subset` together. Throws NotLopsided.
std::size_t dominant_edge(const LengthFunction& lengths, EdgeSubset subset);

/**
 * A length function already checked to be generic with nonempty polygon
 * space. Operations that need those assumptions take this type.
 */
class PolygonSpace {
 public:
  explicit PolygonSpace(LengthFunction lengths, const Limits& limits = {});

  const LengthFunction& lengths() const { return lengths_; }
  std::size_t edge_count() const { return lengths_.size(); }
  int dimension() const { return 2 * (static_cast<int>(lengths_.size()) - 3); }

 private:
  LengthFunction lengths_;
};

}  // namespace bendix
