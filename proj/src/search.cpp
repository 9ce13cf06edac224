#include "bendix/search.hpp"

#include <algorithm>
#include <unordered_map>

#include "bendix/error.hpp"

namespace bendix {

namespace {

constexpr std::uint8_t kUnreachable = 0xff;

/**
 * Lopsidedness of every union of atoms, indexed by atom bitmask. Weights are
 * the integer-scaled lengths; Int is std::int64_t when the perimeter fits.
 */
template <typename Int>
std::vector<bool> lopsided_unions(std::span<const Int> atom_sum, std::span<const Int> atom_max) {
  const std::size_t k = atom_sum.size();
  const std::size_t count = std::size_t{1} << k;
  std::vector<Int> sum(count);
  std::vector<Int> max(count);
  std::vector<bool> lop(count, false);
  sum[0] = 0;
  max[0] = 0;
  for (std::size_t mask = 1; mask < count; ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t prev = mask & (mask - 1);
    sum[mask] = sum[prev] + atom_sum[low];
    max[mask] = std::max(max[prev], atom_max[low]);
    lop[mask] = 2 * max[mask] > sum[mask];
  }
  return lop;
}

std::vector<bool> lopsided_unions(const LengthFunction& lengths, std::span<const EdgeSubset> atoms) {
  const auto w = lengths.integer_weights();
  std::vector<Integer> sums;
  std::vector<Integer> maxes;
  Integer total = 0;
  for (auto atom : atoms) {
    Integer s = 0;
    Integer m = 0;
    for (std::size_t i : atom.indices()) {
      s += w[i];
      m = std::max(m, w[i]);
    }
    total += s;
    sums.push_back(s);
    maxes.push_back(m);
  }
  if (total < Integer(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::int64_t> s64;
    std::vector<std::int64_t> m64;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      s64.push_back(sums[i].convert_to<std::int64_t>());
      m64.push_back(maxes[i].convert_to<std::int64_t>());
    }
    return lopsided_unions<std::int64_t>(s64, m64);
  }
  return lopsided_unions<Integer>(sums, maxes);
}

// Minimum number of lopsided unions of atoms covering all atoms.
PartitionResult min_partition_over_atoms(const LengthFunction& lengths,
                                         std::span<const EdgeSubset> atoms) {
  const std::size_t k = atoms.size();
  if (k == 0) return {};
  const auto lop = lopsided_unions(lengths, atoms);
  const std::size_t full = (std::size_t{1} << k) - 1;

  std::vector<std::uint8_t> best(full + 1, kUnreachable);
  best[0] = 0;
  for (std::size_t u = 1; u <= full; ++u) {
    if (lop[u]) {
      best[u] = 1;
      continue;
    }
    const std::size_t anchor = u & (~u + 1);
    const std::size_t rest = u ^ anchor;
    std::uint8_t b = kUnreachable;
    std::size_t sub = 0;
    do {
      const std::size_t block = sub | anchor;
      if (lop[block]) {
        const std::uint8_t r = best[u ^ block];
        if (r != kUnreachable && r + 1 < b) b = static_cast<std::uint8_t>(r + 1);
      }
      sub = (sub - rest) & rest;
    } while (sub != 0);
    best[u] = b;
  }

  PartitionResult result;
  result.count = best[full];
  std::size_t u = full;
  while (u != 0) {
    const std::size_t anchor = u & (~u + 1);
    const std::size_t rest = u ^ anchor;
    std::size_t sub = 0;
    do {
      const std::size_t block = sub | anchor;
      if (lop[block] && best[u ^ block] + 1 == best[u]) {
        EdgeSubset edges;
        for (std::size_t i = 0; i < k; ++i) {
          if ((block >> i) & 1U) edges |= atoms[i];
        }
        result.blocks.push_back(edges);
        u ^= block;
        break;
      }
      sub = (sub - rest) & rest;
    } while (sub != 0);
  }
  result.blocks = sorted_partition(std::move(result.blocks));
  return result;
}

}  // namespace

PartitionResult min_lopsided_partition(const PolygonSpace& space, const Limits& limits) {
  limits.check_generic(space.edge_count());
  std::vector<EdgeSubset> atoms;
  for (std::size_t i = 0; i < space.edge_count(); ++i) atoms.push_back(EdgeSubset::singleton(i));
  return min_partition_over_atoms(space.lengths(), atoms);
}

PartitionResult min_coarser_partition(const PolygonSpace& space, std::span<const EdgeSubset> partition,
                                      const Limits& limits) {
  const auto& lengths = space.lengths();
  if (!is_partition(partition, lengths.all())) {
    throw Error(ErrorCode::InvalidInput, "blocks do not partition the edge set");
  }
  for (auto b : partition) {
    if (!is_lopsided(lengths, b)) {
      throw Error(ErrorCode::NotLopsided, "partition block is not lopsided", lengths.describe(b));
    }
  }
  limits.check_generic(partition.size());
  std::vector<EdgeSubset> atoms(partition.begin(), partition.end());
  std::sort(atoms.begin(), atoms.end(), canonical_less);
  return min_partition_over_atoms(lengths, atoms);
}

int max_bending_dim(const PolygonSpace& space, const Limits& limits) {
  const auto n = static_cast<int>(space.edge_count());
  return n - std::max<int>(3, static_cast<int>(min_lopsided_partition(space, limits).count));
}

ContainingTorus max_containing_dim(const PolygonSpace& space, const BendingSet& set,
                                   const Limits& limits) {
  const auto& lengths = space.lengths();
  const auto blocks = maximal_elements(set);
  auto coarse = min_coarser_partition(space, blocks, limits);

  std::vector<EdgeSubset> family(set.members().begin(), set.members().end());
  family.insert(family.end(), coarse.blocks.begin(), coarse.blocks.end());
  auto witness = fill(lengths, validate_bending_set(lengths, family));

  const int n = static_cast<int>(space.edge_count());
  const int dimension = n - std::max<int>(3, static_cast<int>(coarse.count));
  if (torus_dimension(space, witness) != dimension) {
    throw Error(ErrorCode::Internal, "witness torus does not attain n(lambda, I)");
  }
  return ContainingTorus{dimension, std::move(coarse), std::move(witness)};
}

std::optional<Rational> common_point(std::span<const Interval> intervals) {
  if (intervals.empty()) {
    throw Error(ErrorCode::InvalidInput, "common_point needs at least one interval");
  }
  Rational lo = intervals.front().lo;
  Rational hi = intervals.front().hi;
  for (const auto& iv : intervals) {
    lo = std::max(lo, iv.lo);
    hi = std::min(hi, iv.hi);
  }
  if (lo <= hi) return lo;
  return std::nullopt;
}

namespace {

std::optional<Rational> blocks_common_point(const PolygonSpace& space, std::span<const EdgeSubset> blocks) {
  std::vector<Interval> images;
  images.reserve(blocks.size());
  for (auto b : blocks) images.push_back(moment_image(space, b));
  return common_point(images);
}

}  // namespace

Maximality is_maximal_bending(const PolygonSpace& space, const BendingSet& set) {
  if (!is_full(set)) {
    throw Error(ErrorCode::NotFull, "maximality is decided for full bending sets only (fill first)");
  }
  const int top = static_cast<int>(space.edge_count()) - 3;
  if (torus_dimension(space, set) == top) return Maximality{true, std::nullopt};
  const auto c = blocks_common_point(space, maximal_elements(set));
  return Maximality{c.has_value(), c};
}

TheoremB theorem_b_status(const PolygonSpace& space, const BendingSet& set) {
  if (!is_full(set)) return TheoremB::NotApplicable;
  const int n = static_cast<int>(space.edge_count());
  if (is_maximal_bending(space, set).maximal && torus_dimension(space, set) >= n - 5) {
    return TheoremB::MaximalHamiltonian;
  }
  return TheoremB::NotApplicable;
}

TorusReport torus_report(const PolygonSpace& space, const BendingSet& set) {
  TorusReport r{set, torus_dimension(space, set), is_full(set), maximal_elements(set), false,
                TheoremB::NotApplicable, std::nullopt};
  if (r.is_full) {
    const auto m = is_maximal_bending(space, set);
    r.is_maximal_bending = m.maximal;
    r.common_value = m.common_value;
    const int n = static_cast<int>(space.edge_count());
    if (m.maximal && r.dimension >= n - 5) r.theorem_b = TheoremB::MaximalHamiltonian;
  }
  return r;
}

namespace {

void collect_partitions(const LengthFunction& lengths, EdgeSubset uncovered, std::size_t max_blocks,
                        Partition& current, std::vector<Partition>& out) {
  if (uncovered.empty()) {
    out.push_back(current);
    return;
  }
  if (current.size() == max_blocks) return;
  const EdgeSubset anchor = EdgeSubset::singleton(uncovered.lowest());
  const std::uint64_t rest = (uncovered - anchor).bits();
  std::uint64_t sub = 0;
  do {
    const EdgeSubset block = EdgeSubset(sub) | anchor;
    if (is_lopsided(lengths, block)) {
      current.push_back(block);
      collect_partitions(lengths, uncovered - block, max_blocks, current, out);
      current.pop_back();
    }
    sub = (sub - rest) & rest;
  } while (sub != 0);
}

// Splits of `block` into two lopsided parts; the first part holds the lowest edge.
std::vector<std::pair<EdgeSubset, EdgeSubset>> lopsided_splits(const LengthFunction& lengths,
                                                               EdgeSubset block) {
  std::vector<std::pair<EdgeSubset, EdgeSubset>> out;
  const EdgeSubset anchor = EdgeSubset::singleton(block.lowest());
  const std::uint64_t rest = (block - anchor).bits();
  std::uint64_t sub = 0;
  do {
    const EdgeSubset left = EdgeSubset(sub) | anchor;
    const EdgeSubset right = block - left;
    if (!right.empty() && is_lopsided(lengths, left) && is_lopsided(lengths, right)) {
      out.emplace_back(left, right);
    }
    sub = (sub - rest) & rest;
  } while (sub != 0);
  return out;
}

Integer count_trees(const LengthFunction& lengths, EdgeSubset block,
                    std::unordered_map<std::uint64_t, Integer>& memo) {
  if (block.size() <= 1) return Integer(1);
  if (auto it = memo.find(block.bits()); it != memo.end()) return it->second;
  Integer total = 0;
  for (const auto& [l, r] : lopsided_splits(lengths, block)) {
    total += count_trees(lengths, l, memo) * count_trees(lengths, r, memo);
  }
  memo.emplace(block.bits(), total);
  return total;
}

using TreeVisitor = std::function<bool(std::vector<EdgeSubset>&)>;

// Enumerates binary hierarchies for the pending blocks, appending their
// non-singleton members to `members`.
bool visit_trees(const LengthFunction& lengths, std::vector<EdgeSubset>& pending,
                 std::vector<EdgeSubset>& members, const TreeVisitor& visit) {
  if (pending.empty()) return visit(members);
  const EdgeSubset block = pending.back();
  pending.pop_back();
  bool keep_going = true;
  if (block.size() <= 1) {
    keep_going = visit_trees(lengths, pending, members, visit);
  } else {
    members.push_back(block);
    for (const auto& [l, r] : lopsided_splits(lengths, block)) {
      pending.push_back(r);
      pending.push_back(l);
      keep_going = visit_trees(lengths, pending, members, visit);
      pending.pop_back();
      pending.pop_back();
      if (!keep_going) break;
    }
    members.pop_back();
  }
  pending.push_back(block);
  return keep_going;
}

}  // namespace

std::vector<Partition> lopsided_partitions(const LengthFunction& lengths, std::size_t max_blocks) {
  std::vector<Partition> out;
  Partition current;
  collect_partitions(lengths, lengths.all(), max_blocks, current, out);
  return out;
}

Integer count_full_refinements(const LengthFunction& lengths, std::span<const EdgeSubset> blocks) {
  std::unordered_map<std::uint64_t, Integer> memo;
  Integer total = 1;
  for (auto b : blocks) total *= count_trees(lengths, b, memo);
  return total;
}

bool for_each_full_refinement(const LengthFunction& lengths, std::span<const EdgeSubset> blocks,
                              const std::function<bool(const BendingSet&)>& visit) {
  // Reverse so the first block is expanded first.
  std::vector<EdgeSubset> pending(blocks.rbegin(), blocks.rend());
  std::vector<EdgeSubset> members;
  return visit_trees(lengths, pending, members, [&](std::vector<EdgeSubset>& family) {
    return visit(validate_bending_set(lengths, family));
  });
}

std::vector<BendingSet> full_bending_sets(const PolygonSpace& space, std::size_t max_blocks,
                                          const Limits& limits) {
  limits.check_enumeration(space.edge_count());
  std::vector<BendingSet> out;
  for (const auto& partition : lopsided_partitions(space.lengths(), max_blocks)) {
    for_each_full_refinement(space.lengths(), partition, [&](const BendingSet& s) {
      out.push_back(s);
      return true;
    });
  }
  return out;
}

MaximalTori enumerate_maximal_tori(const PolygonSpace& space, std::size_t limit, const Limits& limits) {
  limits.check_enumeration(space.edge_count());
  const auto& lengths = space.lengths();
  const int n = static_cast<int>(space.edge_count());

  MaximalTori result;
  for (const auto& partition : lopsided_partitions(lengths)) {
    const int dim = n - std::max<int>(3, static_cast<int>(partition.size()));
    if (dim < n - 3 && !blocks_common_point(space, partition)) continue;

    const Integer count = count_full_refinements(lengths, partition);
    result.spectrum[dim] += count;
    if (result.reports.size() + count > Integer(limit)) result.truncated = true;
    if (result.reports.size() >= limit) continue;
    for_each_full_refinement(lengths, partition, [&](const BendingSet& s) {
      result.reports.push_back(torus_report(space, s));
      return result.reports.size() < limit;
    });
  }
  return result;
}

TwoLongEdgeProbe two_long_edge_partition(const PolygonSpace& space) {
  const auto& lengths = space.lengths();
  const std::size_t n = space.edge_count();
  TwoLongEdgeProbe probe;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const EdgeSubset pair = EdgeSubset::singleton(a) | EdgeSubset::singleton(b);
      if (lengths.sum(pair) > lengths.sum(lengths.all() - pair)) probe.long_pairs.emplace_back(a, b);
    }
  }
  for (const auto& [a, b] : probe.long_pairs) {
    const EdgeSubset others = lengths.all() - EdgeSubset::singleton(a) - EdgeSubset::singleton(b);
    const std::uint64_t rest = others.bits();
    std::uint64_t sub = 0;
    do {
      const EdgeSubset side_a = EdgeSubset(sub) | EdgeSubset::singleton(a);
      const EdgeSubset side_b = lengths.all() - side_a;
      if (is_lopsided(lengths, side_a) && is_lopsided(lengths, side_b)) {
        probe.partition = std::pair{side_a, side_b};
        return probe;
      }
      sub = (sub - rest) & rest;
    } while (sub != 0);
  }
  return probe;
}

}  // namespace bendix
