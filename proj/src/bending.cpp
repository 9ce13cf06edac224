#include "bendix/bending.hpp"

#include <algorithm>
#include <set>

#include "bendix/error.hpp"

namespace bendix {

Partition sorted_partition(Partition blocks) {
  std::sort(blocks.begin(), blocks.end(), [](EdgeSubset a, EdgeSubset b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.lowest() < b.lowest();
  });
  return blocks;
}

bool is_partition(std::span<const EdgeSubset> blocks, EdgeSubset all) {
  EdgeSubset covered;
  for (auto b : blocks) {
    if (b.empty() || !b.disjoint(covered) || !b.subset_of(all)) return false;
    covered |= b;
  }
  return covered == all;
}

std::vector<EdgeSubset> BendingSet::non_singletons() const {
  std::vector<EdgeSubset> out;
  for (auto m : members_) {
    if (m.size() > 1) out.push_back(m);
  }
  return out;
}

bool BendingSet::contains(EdgeSubset s) const {
  return std::find(members_.begin(), members_.end(), s) != members_.end();
}

BendingSet validate_bending_set(const LengthFunction& lengths, std::span<const EdgeSubset> family) {
  const std::size_t n = lengths.size();
  const EdgeSubset all = lengths.all();
  std::vector<EdgeSubset> members(family.begin(), family.end());
  for (std::size_t i = 0; i < n; ++i) members.push_back(EdgeSubset::singleton(i));
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());

  for (auto m : members) {
    if (m.empty() || !m.subset_of(all)) {
      throw Error(ErrorCode::InvalidInput, "bending set member is empty or not a subset of E",
                  lengths.describe(m & all));
    }
    if (!is_lopsided(lengths, m)) {
      throw Error(ErrorCode::NotLopsided, "bending set member is not lopsided", lengths.describe(m));
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!members[i].laminar_with(members[j])) {
        throw Error(ErrorCode::LaminarViolation,
                    "members overlap without containment",
                    lengths.describe(members[i]) + " " + lengths.describe(members[j]));
      }
    }
  }
  return BendingSet(n, std::move(members));
}

BendingSet trivial_bending_set(const LengthFunction& lengths) {
  return validate_bending_set(lengths, {});
}

Partition maximal_elements(const BendingSet& set) {
  Partition out;
  const auto members = set.members();
  for (auto m : members) {
    const bool dominated = std::any_of(members.begin(), members.end(), [m](EdgeSubset other) {
      return other != m && m.subset_of(other);
    });
    if (!dominated) out.push_back(m);
  }
  return sorted_partition(std::move(out));
}

bool is_full(const BendingSet& set) {
  const auto members = set.members();
  for (auto m : members) {
    const auto below = std::count_if(members.begin(), members.end(),
                                     [m](EdgeSubset other) { return other.subset_of(m); });
    if (static_cast<std::size_t>(below) != 2 * m.size() - 1) return false;
  }
  return true;
}

std::optional<std::pair<EdgeSubset, EdgeSubset>> split_of(const BendingSet& set, EdgeSubset member) {
  for (auto part : set.members()) {
    if (part == member || !part.subset_of(member)) continue;
    const EdgeSubset rest = member - part;
    if (set.contains(rest)) {
      return canonical_less(part, rest) ? std::pair{part, rest} : std::pair{rest, part};
    }
  }
  return std::nullopt;
}

bool is_full_by_splitting(const BendingSet& set) {
  for (auto m : set.members()) {
    if (m.size() > 1 && !split_of(set, m)) return false;
  }
  return true;
}

namespace {

// Members strictly inside `member` that are not inside another such member.
std::vector<EdgeSubset> maximal_proper_submembers(std::span<const EdgeSubset> members,
                                                  EdgeSubset member) {
  std::vector<EdgeSubset> inside;
  for (auto m : members) {
    if (m != member && m.subset_of(member)) inside.push_back(m);
  }
  std::vector<EdgeSubset> out;
  for (auto m : inside) {
    const bool dominated = std::any_of(inside.begin(), inside.end(), [m](EdgeSubset other) {
      return other != m && m.subset_of(other);
    });
    if (!dominated) out.push_back(m);
  }
  return out;
}

}  // namespace

BendingSet fill(const LengthFunction& lengths, const BendingSet& set) {
  BendingSet current = set;
  while (true) {
    // Minimal non-full member: smallest first, canonical order on ties.
    std::optional<EdgeSubset> target;
    for (auto m : current.members()) {
      if (m.size() < 2 || split_of(current, m)) continue;
      if (!target || m.size() < target->size()) target = m;
    }
    if (!target) return current;

    auto children = maximal_proper_submembers(current.members(), *target);
    const std::size_t dominant = dominant_edge(lengths, *target);
    std::sort(children.begin(), children.end(), [dominant](EdgeSubset a, EdgeSubset b) {
      if (a.contains(dominant) != b.contains(dominant)) return a.contains(dominant);
      return a.lowest() < b.lowest();
    });

    std::vector<EdgeSubset> family(current.members().begin(), current.members().end());
    EdgeSubset chain = children.front();
    for (std::size_t i = 1; i + 1 < children.size(); ++i) {
      chain |= children[i];
      family.push_back(chain);
    }
    current = validate_bending_set(lengths, family);
  }
}

int torus_dimension(const PolygonSpace& space, const BendingSet& set) {
  const EdgeSubset all = space.lengths().all();
  std::set<std::uint64_t> classes;
  for (auto m : set.non_singletons()) {
    const EdgeSubset complement = all - m;
    if (complement.size() <= 1) continue;
    classes.insert(std::min(m.bits(), complement.bits()));
  }
  const int dim = static_cast<int>(classes.size());
  if (is_full(set)) {
    const int n = static_cast<int>(space.edge_count());
    const int blocks = static_cast<int>(maximal_elements(set).size());
    const int expected = n - std::max(3, blocks);
    if (dim != expected) {
      throw Error(ErrorCode::Internal, "full bending set violates the dimension formula",
                  std::to_string(dim) + " != " + std::to_string(expected));
    }
  }
  return dim;
}

namespace {

Rational lower_bound_for(const LengthFunction& lengths, EdgeSubset s) {
  const Rational m = 2 * lengths.length(lengths.longest(s)) - lengths.sum(s);
  return m > 0 ? m : Rational(0);
}

void require_proper(const LengthFunction& lengths, EdgeSubset subset) {
  if (subset.empty() || subset == lengths.all() || !subset.subset_of(lengths.all())) {
    throw Error(ErrorCode::InvalidInput, "subset must be nonempty and proper",
                lengths.describe(subset & lengths.all()));
  }
}

std::set<Rational> absolute_signed_sums(const LengthFunction& lengths, EdgeSubset s) {
  std::set<Rational> sums{Rational(0)};
  for (std::size_t i : s.indices()) {
    std::set<Rational> next;
    for (const auto& x : sums) {
      next.insert(x + lengths.length(i));
      next.insert(x - lengths.length(i));
    }
    sums = std::move(next);
  }
  std::set<Rational> out;
  for (const auto& x : sums) out.insert(x < 0 ? Rational(-x) : x);
  return out;
}

}  // namespace

Interval moment_image(const PolygonSpace& space, EdgeSubset subset) {
  const auto& lengths = space.lengths();
  require_proper(lengths, subset);
  const EdgeSubset complement = lengths.all() - subset;
  return Interval{std::max(lower_bound_for(lengths, subset), lower_bound_for(lengths, complement)),
                  std::min(lengths.sum(subset), lengths.sum(complement))};
}

std::vector<Rational> critical_values(const PolygonSpace& space, EdgeSubset subset) {
  const auto& lengths = space.lengths();
  const Interval image = moment_image(space, subset);
  if (!is_lopsided(lengths, subset)) {
    throw Error(ErrorCode::NotLopsided, "bending function needs a lopsided subset",
                lengths.describe(subset));
  }
  auto values = absolute_signed_sums(lengths, subset);
  values.merge(absolute_signed_sums(lengths, lengths.all() - subset));
  std::vector<Rational> out;
  for (const auto& v : values) {
    if (image.contains(v)) out.push_back(v);
  }
  return out;
}

bool is_regular_value(const PolygonSpace& space, EdgeSubset subset, const Rational& t) {
  if (!moment_image(space, subset).contains(t)) {
    throw Error(ErrorCode::TOutOfImage, "value lies outside the moment image", to_string(t));
  }
  const auto crit = critical_values(space, subset);
  return !std::binary_search(crit.begin(), crit.end(), t);
}

namespace {

LengthFunction collapse(const LengthFunction& lengths, EdgeSubset keep, EdgeSubset cluster,
                        const Rational& t) {
  std::vector<Edge> edges;
  for (std::size_t i : keep.indices()) edges.push_back(lengths.edge(i));
  std::string label = lengths.describe(cluster);
  while (std::any_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.id == label; })) {
    label += "'";
  }
  edges.push_back({label, t});
  return LengthFunction(std::move(edges));
}

}  // namespace

ReductionResult reduce(const PolygonSpace& space, EdgeSubset cluster, const Rational& t,
                       const Limits& limits) {
  const auto& lengths = space.lengths();
  const Interval image = moment_image(space, cluster);
  if (!is_lopsided(lengths, cluster)) {
    throw Error(ErrorCode::NotLopsided, "reduction needs a lopsided cluster", lengths.describe(cluster));
  }
  if (!image.contains(t)) {
    throw Error(ErrorCode::TOutOfImage, "value lies outside the moment image",
                to_string(t) + " not in [" + to_string(image.lo) + "," + to_string(image.hi) + "]");
  }
  const EdgeSubset complement = lengths.all() - cluster;
  auto left = collapse(lengths, cluster, cluster, t);
  auto right = collapse(lengths, complement, complement, t);
  const bool left_generic = is_generic(left, limits);
  const bool right_generic = is_generic(right, limits);
  return ReductionResult{std::move(left), std::move(right), left_generic, right_generic};
}

}  // namespace bendix
