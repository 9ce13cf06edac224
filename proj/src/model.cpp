#include "bendix/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "bendix/error.hpp"

namespace bendix {

std::vector<std::size_t> EdgeSubset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

bool canonical_less(EdgeSubset a, EdgeSubset b) {
  if (a == b) return false;
  if (a.empty() || b.empty()) return a.empty();
  if (a.lowest() != b.lowest()) return a.lowest() < b.lowest();
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

LengthFunction::LengthFunction(std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (edges_.size() > kMaxEdges) {
    throw Error(ErrorCode::InvalidInput, "at most 64 edges are supported",
                std::to_string(edges_.size()));
  }
  std::set<std::string> seen;
  for (const auto& e : edges_) {
    if (e.id.empty()) throw Error(ErrorCode::InvalidInput, "empty edge id");
    if (!seen.insert(e.id).second) {
      throw Error(ErrorCode::InvalidInput, "duplicate edge id", e.id);
    }
    if (e.length <= 0) {
      throw Error(ErrorCode::InvalidInput, "edge length must be positive",
                  e.id + "=" + to_string(e.length));
    }
  }
}

LengthFunction LengthFunction::from_lengths(const std::vector<Rational>& lengths) {
  std::vector<Edge> edges;
  edges.reserve(lengths.size());
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    edges.push_back({"e" + std::to_string(i + 1), lengths[i]});
  }
  return LengthFunction(std::move(edges));
}

std::size_t LengthFunction::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id == id) return i;
  }
  throw Error(ErrorCode::UnknownEdge, "unknown edge id", id);
}

EdgeSubset LengthFunction::subset(const std::vector<std::string>& ids) const {
  EdgeSubset s;
  for (const auto& id : ids) s |= EdgeSubset::singleton(index_of(id));
  return s;
}

Rational LengthFunction::sum(EdgeSubset s) const {
  Rational total = 0;
  for (std::size_t i : s.indices()) total += edges_[i].length;
  return total;
}

std::size_t LengthFunction::longest(EdgeSubset s) const {
  std::size_t best = s.lowest();
  for (std::size_t i : s.indices()) {
    if (edges_[i].length > edges_[best].length) best = i;
  }
  return best;
}

std::string LengthFunction::describe(EdgeSubset s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.indices()) {
    if (!first) out += ",";
    out += i < edges_.size() ? edges_[i].id : "#" + std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::vector<Integer> LengthFunction::integer_weights() const {
  Integer common = 1;
  for (const auto& e : edges_) common = lcm(common, denominator(e.length));
  std::vector<Integer> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(numerator(e.length) * (common / denominator(e.length)));
  return out;
}

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("BENDIX_MAX_EDGES"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end == nullptr || *end != '\0' || value == 0) {
      throw Error(ErrorCode::InvalidInput, "BENDIX_MAX_EDGES must be a positive integer", env);
    }
    limits.max_generic_edges = value;
    limits.max_enumeration_edges = value;
  }
  return limits;
}

void Limits::check_generic(std::size_t edges) const {
  if (!force && edges > max_generic_edges) {
    throw Error(ErrorCode::GuardExceeded,
                "edge count exceeds the genericity guard (use --force or BENDIX_MAX_EDGES)",
                std::to_string(edges) + " > " + std::to_string(max_generic_edges));
  }
}

void Limits::check_enumeration(std::size_t edges) const {
  if (!force && edges > max_enumeration_edges) {
    throw Error(ErrorCode::GuardExceeded,
                "edge count exceeds the enumeration guard (use --force or BENDIX_MAX_EDGES)",
                std::to_string(edges) + " > " + std::to_string(max_enumeration_edges));
  }
}

namespace {

std::vector<Integer> subset_sums(const std::vector<Integer>& w, std::size_t begin, std::size_t end) {
  std::vector<Integer> sums{Integer(0)};
  for (std::size_t i = begin; i < end; ++i) {
    const std::size_t n = sums.size();
    sums.reserve(2 * n);
    for (std::size_t k = 0; k < n; ++k) sums.push_back(sums[k] + w[i]);
  }
  return sums;
}

}  // namespace

// A vanishing signed sum is a subset whose weight is half the perimeter;
// meet in the middle over the two halves of the edge list.
bool is_generic(const LengthFunction& lengths, const Limits& limits) {
  limits.check_generic(lengths.size());
  const auto w = lengths.integer_weights();
  Integer total = 0;
  for (const auto& x : w) total += x;
  if (total % 2 != 0) return true;
  const Integer half = total / 2;

  const std::size_t mid = w.size() / 2;
  auto left = subset_sums(w, 0, mid);
  const auto right = subset_sums(w, mid, w.size());
  std::sort(left.begin(), left.end());
  for (const auto& r : right) {
    if (r > half) continue;
    if (std::binary_search(left.begin(), left.end(), half - r)) return false;
  }
  return true;
}

bool is_nonempty(const LengthFunction& lengths) {
  if (lengths.size() == 0) return false;
  const auto all = lengths.all();
  return 2 * lengths.length(lengths.longest(all)) <= lengths.sum(all);
}

int pol_dimension(const LengthFunction& lengths, const Limits& limits) {
  return PolygonSpace(lengths, limits).dimension();
}

bool is_lopsided(const LengthFunction& lengths, EdgeSubset subset) {
  if (subset.empty()) return false;
  return 2 * lengths.length(lengths.longest(subset)) > lengths.sum(subset);
}

std::size_t dominant_edge(const LengthFunction& lengths, EdgeSubset subset) {
  if (!is_lopsided(lengths, subset)) {
    throw Error(ErrorCode::NotLopsided, "subset is not lopsided", lengths.describe(subset));
  }
  return lengths.longest(subset);
}

PolygonSpace::PolygonSpace(LengthFunction lengths, const Limits& limits)
    : lengths_(std::move(lengths)) {
  if (!is_nonempty(lengths_)) {
    throw Error(ErrorCode::EmptySpace,
                "polygon space is empty: the longest edge exceeds the sum of the others");
  }
  if (!is_generic(lengths_, limits)) {
    throw Error(ErrorCode::NonGeneric, "length function is not generic: a signed sum vanishes");
  }
}

}  // namespace bendix
