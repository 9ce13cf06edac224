#include "bendix/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "bendix/error.hpp"
#include "bendix/search.hpp"

namespace bendix {

bool operator==(const Halfspace& a, const Halfspace& b) {
  return a.normal.size() == b.normal.size() && a.normal == b.normal && a.offset == b.offset;
}

namespace {

constexpr int kMaxPolytopeDim = 3;

RationalVector to_rational(const IntegerVector& v) { return v.cast<Rational>(); }

Rational dot(const IntegerVector& n, const RationalVector& x) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < n.size(); ++i) s += Rational(n(i)) * x(i);
  return s;
}

bool lex_less_int(const IntegerVector& a, const IntegerVector& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
  if (a.normal != b.normal) return lex_less_int(a.normal, b.normal);
  return a.offset < b.offset;
}

// Divides out the content of the normal, so equal halfspaces compare equal.
Halfspace make_primitive(Halfspace h) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < h.normal.size(); ++i) g = gcd(g, h.normal(i));
  if (g > 1) {
    for (Eigen::Index i = 0; i < h.normal.size(); ++i) h.normal(i) /= g;
    h.offset /= Rational(g);
  }
  return h;
}

bool is_zero(const IntegerVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return false;
  }
  return true;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      visit(idx);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// Rank of the differences p_i - p_0.
Eigen::Index affine_rank(const std::vector<RationalVector>& points, int dim) {
  if (points.size() <= 1) return 0;
  RationalMatrix diffs(static_cast<Eigen::Index>(points.size() - 1), dim);
  for (std::size_t i = 1; i < points.size(); ++i) {
    diffs.row(static_cast<Eigen::Index>(i - 1)) = (points[i] - points[0]).transpose();
  }
  return exact_rank(diffs);
}

void check_dim(int dim) {
  if (dim < 0) throw Error(ErrorCode::InvalidInput, "negative dimension");
  if (dim > kMaxPolytopeDim) {
    throw Error(ErrorCode::DimensionTooLarge, "polytopes of dimension above 3 are not supported",
                std::to_string(dim));
  }
}

void sort_vertices(std::vector<RationalVector>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
}

// Visits the vertices of `subset` (indices into the polytope) in cyclic order
// along polytope edges. Every vertex of a polygon face has two neighbours in it.
std::vector<std::size_t> cyclic_order(const std::vector<std::size_t>& subset,
                                      const std::vector<std::vector<std::size_t>>& adjacency) {
  std::vector<std::size_t> order;
  if (subset.empty()) return order;
  auto in_subset = [&](std::size_t v) { return std::find(subset.begin(), subset.end(), v) != subset.end(); };
  std::size_t prev = subset.front();
  std::size_t cur = subset.front();
  order.push_back(cur);
  while (order.size() < subset.size()) {
    std::optional<std::size_t> next;
    for (std::size_t w : adjacency[cur]) {
      if (in_subset(w) && w != prev && std::find(order.begin(), order.end(), w) == order.end()) {
        next = w;
        break;
      }
    }
    if (!next) throw Error(ErrorCode::Internal, "face boundary is not a cycle");
    prev = cur;
    cur = *next;
    order.push_back(cur);
  }
  return order;
}

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace

LatticePolytope polytope_from_halfspaces(int dim, std::vector<Halfspace> halfspaces) {
  check_dim(dim);
  // Keep the tightest offset per primitive normal.
  std::map<std::vector<Integer>, Rational> tightest;
  std::vector<Halfspace> normals;
  for (auto h : halfspaces) {
    if (h.normal.size() != dim) {
      throw Error(ErrorCode::InvalidInput, "halfspace normal has the wrong dimension");
    }
    if (is_zero(h.normal)) {
      if (h.offset < 0) throw Error(ErrorCode::InvalidInput, "polytope is empty");
      continue;
    }
    h = make_primitive(std::move(h));
    std::vector<Integer> key(h.normal.data(), h.normal.data() + h.normal.size());
    auto [it, inserted] = tightest.emplace(key, h.offset);
    if (!inserted && h.offset < it->second) it->second = h.offset;
  }
  std::vector<Halfspace> hs;
  for (const auto& [key, offset] : tightest) {
    IntegerVector n(dim);
    for (int i = 0; i < dim; ++i) n(i) = key[static_cast<std::size_t>(i)];
    hs.push_back({n, offset});
  }

  LatticePolytope p;
  p.dim = dim;
  auto feasible = [&](const RationalVector& x) {
    return std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return dot(h.normal, x) <= h.offset; });
  };
  if (dim == 0) {
    p.vertices.push_back(RationalVector(0));
    return p;
  }
  for_each_combination(hs.size(), static_cast<std::size_t>(dim), [&](const std::vector<std::size_t>& idx) {
    RationalMatrix a(dim, dim);
    RationalVector b(dim);
    for (int r = 0; r < dim; ++r) {
      a.row(r) = to_rational(hs[idx[static_cast<std::size_t>(r)]].normal).transpose();
      b(r) = hs[idx[static_cast<std::size_t>(r)]].offset;
    }
    auto x = solve_unique(a, b);
    if (!x || !feasible(*x)) return;
    if (std::find(p.vertices.begin(), p.vertices.end(), *x) == p.vertices.end()) p.vertices.push_back(*x);
  });
  if (p.vertices.empty()) throw Error(ErrorCode::InvalidInput, "polytope is empty or unbounded");
  if (affine_rank(p.vertices, dim) != dim) {
    throw Error(ErrorCode::InvalidInput, "polytope is not full-dimensional");
  }
  for (const auto& h : hs) {
    std::vector<RationalVector> tight;
    for (const auto& v : p.vertices) {
      if (dot(h.normal, v) == h.offset) tight.push_back(v);
    }
    if (tight.size() >= static_cast<std::size_t>(dim) && affine_rank(tight, dim) == dim - 1) {
      p.halfspaces.push_back(h);
    }
  }
  std::sort(p.halfspaces.begin(), p.halfspaces.end(), halfspace_less);
  sort_vertices(p.vertices);
  return p;
}

LatticePolytope polytope_from_vertices(int dim, const std::vector<RationalVector>& points) {
  check_dim(dim);
  std::vector<RationalVector> pts;
  for (const auto& x : points) {
    if (x.size() != dim) throw Error(ErrorCode::InvalidInput, "point has the wrong dimension");
    if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
  }
  if (pts.empty()) throw Error(ErrorCode::InvalidInput, "no points");
  if (dim == 0) return polytope_from_halfspaces(0, {});
  if (affine_rank(pts, dim) != dim) {
    throw Error(ErrorCode::InvalidInput, "points do not span a full-dimensional polytope");
  }

  std::vector<Halfspace> candidates;
  for_each_combination(pts.size(), static_cast<std::size_t>(dim), [&](const std::vector<std::size_t>& idx) {
    const RationalVector& p0 = pts[idx[0]];
    RationalVector normal(dim);
    if (dim == 1) {
      normal(0) = 1;
    } else if (dim == 2) {
      const RationalVector d = pts[idx[1]] - p0;
      normal << -d(1), d(0);
    } else {
      const RationalVector d1 = pts[idx[1]] - p0;
      const RationalVector d2 = pts[idx[2]] - p0;
      normal << d1(1) * d2(2) - d1(2) * d2(1), d1(2) * d2(0) - d1(0) * d2(2), d1(0) * d2(1) - d1(1) * d2(0);
    }
    if (std::all_of(normal.begin(), normal.end(), [](const Rational& r) { return r == 0; })) return;
    const IntegerVector n = primitive(normal);
    const Rational offset = dot(n, p0);
    bool below = true;
    bool above = true;
    for (const auto& x : pts) {
      const Rational v = dot(n, x);
      below = below && v <= offset;
      above = above && v >= offset;
    }
    if (below) candidates.push_back({n, offset});
    if (above) candidates.push_back({IntegerVector(-n), Rational(-offset)});
  });
  return polytope_from_halfspaces(dim, std::move(candidates));
}

bool contains(const LatticePolytope& polytope, const RationalVector& point) {
  return std::all_of(polytope.halfspaces.begin(), polytope.halfspaces.end(),
                     [&](const Halfspace& h) { return dot(h.normal, point) <= h.offset; });
}

std::vector<std::vector<std::size_t>> tight_facets(const LatticePolytope& polytope) {
  std::vector<std::vector<std::size_t>> out(polytope.vertices.size());
  for (std::size_t v = 0; v < polytope.vertices.size(); ++v) {
    for (std::size_t f = 0; f < polytope.halfspaces.size(); ++f) {
      const auto& h = polytope.halfspaces[f];
      if (dot(h.normal, polytope.vertices[v]) == h.offset) out[v].push_back(f);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> vertex_adjacency(const LatticePolytope& polytope) {
  const auto tight = tight_facets(polytope);
  const std::size_t nv = polytope.vertices.size();
  std::vector<std::vector<std::size_t>> adj(nv);
  if (polytope.dim == 0) return adj;
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = i + 1; j < nv; ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(tight[i].begin(), tight[i].end(), tight[j].begin(), tight[j].end(),
                            std::back_inserter(common));
      Eigen::Index rank = 0;
      if (!common.empty()) {
        RationalMatrix normals(static_cast<Eigen::Index>(common.size()), polytope.dim);
        for (std::size_t k = 0; k < common.size(); ++k) {
          normals.row(static_cast<Eigen::Index>(k)) = to_rational(polytope.halfspaces[common[k]].normal).transpose();
        }
        rank = exact_rank(normals);
      }
      if (rank == polytope.dim - 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  return adj;
}

namespace {

IntegerVector edge_direction(const LatticePolytope& p, std::size_t from, std::size_t to) {
  return primitive(RationalVector(p.vertices[to] - p.vertices[from]));
}

}  // namespace

bool is_delzant(const LatticePolytope& polytope) {
  check_dim(polytope.dim);
  const auto adj = vertex_adjacency(polytope);
  const int d = polytope.dim;
  for (std::size_t v = 0; v < polytope.vertices.size(); ++v) {
    if (adj[v].size() != static_cast<std::size_t>(d)) return false;
    RationalMatrix m(d, d);
    for (int k = 0; k < d; ++k) {
      m.col(k) = to_rational(edge_direction(polytope, v, adj[v][static_cast<std::size_t>(k)]));
    }
    const Rational det = exact_determinant(m);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

Rational volume(const LatticePolytope& polytope) {
  check_dim(polytope.dim);
  const auto& vs = polytope.vertices;
  switch (polytope.dim) {
    case 0:
      return Rational(1);
    case 1:
      return vs.back()(0) - vs.front()(0);
    case 2: {
      std::vector<std::size_t> all(vs.size());
      std::iota(all.begin(), all.end(), 0);
      const auto order = cyclic_order(all, vertex_adjacency(polytope));
      Rational twice = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& a = vs[order[i]];
        const auto& b = vs[order[(i + 1) % order.size()]];
        twice += a(0) * b(1) - a(1) * b(0);
      }
      return abs(twice) / 2;
    }
    default: {
      const auto adj = vertex_adjacency(polytope);
      const auto tight = tight_facets(polytope);
      const RationalVector& apex = vs.front();
      Rational six = 0;
      for (std::size_t f = 0; f < polytope.halfspaces.size(); ++f) {
        std::vector<std::size_t> face;
        for (std::size_t v = 0; v < vs.size(); ++v) {
          if (std::binary_search(tight[v].begin(), tight[v].end(), f)) face.push_back(v);
        }
        const auto order = cyclic_order(face, adj);
        for (std::size_t i = 1; i + 1 < order.size(); ++i) {
          RationalMatrix m(3, 3);
          m.col(0) = vs[order[0]] - apex;
          m.col(1) = vs[order[i]] - apex;
          m.col(2) = vs[order[i + 1]] - apex;
          six += abs(exact_determinant(m));
        }
      }
      return six / 6;
    }
  }
}

std::vector<Rational> lattice_edge_lengths(const LatticePolytope& polytope) {
  const auto adj = vertex_adjacency(polytope);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (std::size_t j : adj[i]) {
      if (j < i) continue;
      const RationalVector d = polytope.vertices[j] - polytope.vertices[i];
      const IntegerVector p = primitive(d);
      for (Eigen::Index k = 0; k < d.size(); ++k) {
        if (p(k) != 0) {
          out.push_back(d(k) / Rational(p(k)));
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticeInvariants lattice_invariants(const LatticePolytope& polytope) {
  LatticeInvariants inv;
  inv.dim = polytope.dim;
  inv.vertex_count = polytope.vertices.size();
  inv.volume = volume(polytope);
  inv.edge_lengths = lattice_edge_lengths(polytope);
  std::map<std::vector<Integer>, std::size_t> classes;
  for (const auto& h : polytope.halfspaces) {
    IntegerVector n = h.normal;
    for (Eigen::Index i = 0; i < n.size(); ++i) {
      if (n(i) == 0) continue;
      if (n(i) < 0) n = -n;
      break;
    }
    ++classes[std::vector<Integer>(n.data(), n.data() + n.size())];
  }
  for (const auto& [key, count] : classes) inv.parallel_facet_classes.push_back(count);
  std::sort(inv.parallel_facet_classes.begin(), inv.parallel_facet_classes.end());
  return inv;
}

RationalVector apply_affine(const IntegerMatrix& map, const RationalVector& translation,
                            const RationalVector& point) {
  return RationalVector(map.cast<Rational>() * point + translation);
}

LatticeEquivalence lattice_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim != q.dim) {
    throw Error(ErrorCode::DimensionMismatch, "polytopes have different dimensions",
                std::to_string(p.dim) + " vs " + std::to_string(q.dim));
  }
  check_dim(p.dim);
  const int d = p.dim;
  if (lattice_invariants(p) != lattice_invariants(q)) return {};
  if (d == 0) {
    return {Equivalence::Equivalent, IntegerMatrix(0, 0), RationalVector(q.vertices[0] - p.vertices[0])};
  }
  if (d == 3) return {Equivalence::Unknown, std::nullopt, std::nullopt};

  const auto adj_p = vertex_adjacency(p);
  const auto adj_q = vertex_adjacency(q);
  RationalMatrix from(d, d);
  for (int k = 0; k < d; ++k) from.col(k) = to_rational(edge_direction(p, 0, adj_p[0][static_cast<std::size_t>(k)]));
  const auto from_inverse = exact_inverse(from);
  if (!from_inverse) throw Error(ErrorCode::Internal, "edge directions at a vertex are dependent");

  for (std::size_t qv = 0; qv < q.vertices.size(); ++qv) {
    if (adj_q[qv].size() != static_cast<std::size_t>(d)) continue;
    std::vector<std::size_t> perm(adj_q[qv]);
    std::sort(perm.begin(), perm.end());
    do {
      RationalMatrix to(d, d);
      for (int k = 0; k < d; ++k) to.col(k) = to_rational(edge_direction(q, qv, perm[static_cast<std::size_t>(k)]));
      const auto map = as_integer(RationalMatrix(to * *from_inverse));
      if (!map) continue;
      const Rational det = exact_determinant(map->cast<Rational>());
      if (det != 1 && det != -1) continue;
      const RationalVector translation = q.vertices[qv] - map->cast<Rational>() * p.vertices[0];
      std::vector<RationalVector> image;
      for (const auto& v : p.vertices) image.push_back(apply_affine(*map, translation, v));
      sort_vertices(image);
      if (image == q.vertices) return {Equivalence::Equivalent, *map, translation};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {};
}

namespace {

// Value of f_J on the moment polytope: a coordinate or a constant.
struct MemberValue {
  int coordinate = -1;
  Rational constant;
};

}  // namespace

LatticePolytope moment_polytope(const PolygonSpace& space, const BendingSet& set) {
  const auto& lengths = space.lengths();
  const int n = static_cast<int>(space.edge_count());
  const auto blocks = maximal_elements(set);
  if (!is_full(set) || blocks.size() > 3) {
    throw Error(ErrorCode::NotToric, "moment polytopes need a full bending set of dimension |E|-3");
  }
  const int dim = n - 3;
  check_dim(dim);

  const EdgeSubset all = lengths.all();
  std::vector<EdgeSubset> coordinates;
  for (auto m : set.non_singletons()) {
    const EdgeSubset complement = all - m;
    if (complement.size() <= 1) continue;
    const EdgeSubset representative =
        set.contains(complement) && canonical_less(complement, m) ? complement : m;
    if (representative == m) coordinates.push_back(m);
  }
  std::sort(coordinates.begin(), coordinates.end(), canonical_less);
  if (static_cast<int>(coordinates.size()) != dim) {
    throw Error(ErrorCode::Internal, "coordinate count differs from the torus dimension");
  }

  auto value_of = [&](EdgeSubset m) -> MemberValue {
    if (m.size() == 1) return {-1, lengths.length(m.lowest())};
    const EdgeSubset complement = all - m;
    if (complement.size() == 1) return {-1, lengths.length(complement.lowest())};
    for (std::size_t k = 0; k < coordinates.size(); ++k) {
      if (coordinates[k] == m || coordinates[k] == complement) return {static_cast<int>(k), 0};
    }
    throw Error(ErrorCode::Internal, "member has no coordinate", lengths.describe(m));
  };

  std::vector<Halfspace> halfspaces;
  // side <= other1 + other2
  auto add_inequality = [&](const MemberValue& side, const MemberValue& o1, const MemberValue& o2) {
    Halfspace h{IntegerVector::Zero(dim), o1.constant + o2.constant - side.constant};
    if (side.coordinate >= 0) h.normal(side.coordinate) += 1;
    if (o1.coordinate >= 0) h.normal(o1.coordinate) -= 1;
    if (o2.coordinate >= 0) h.normal(o2.coordinate) -= 1;
    halfspaces.push_back(std::move(h));
  };
  auto add_triangle = [&](const MemberValue& x, const MemberValue& y, const MemberValue& z) {
    add_inequality(x, y, z);
    add_inequality(y, x, z);
    add_inequality(z, x, y);
  };

  for (auto m : set.non_singletons()) {
    const auto parts = split_of(set, m);
    add_triangle(value_of(m), value_of(parts->first), value_of(parts->second));
  }
  if (blocks.size() == 3) add_triangle(value_of(blocks[0]), value_of(blocks[1]), value_of(blocks[2]));

  auto polytope = polytope_from_halfspaces(dim, std::move(halfspaces));
  polytope.labels = std::move(coordinates);
  return polytope;
}

EquivalenceClassReport conjugacy_classes(const PolygonSpace& space, const Limits& limits) {
  const int dim = static_cast<int>(space.edge_count()) - 3;
  check_dim(dim);
  EquivalenceClassReport report;
  report.complete = dim <= 2;

  struct Entry {
    LatticePolytope polytope;
    std::vector<BendingSet> members;
  };
  std::vector<Entry> groups;
  for (const auto& set : full_bending_sets(space, 3, limits)) {
    auto polytope = moment_polytope(space, set);
    bool placed = false;
    for (auto& g : groups) {
      const auto eq = lattice_equivalent(g.polytope, polytope);
      if (eq.verdict != Equivalence::NotEquivalent) {
        if (std::lexicographical_compare(polytope.vertices.begin(), polytope.vertices.end(),
                                         g.polytope.vertices.begin(), g.polytope.vertices.end(), lex_less)) {
          g.polytope = polytope;
        }
        g.members.push_back(set);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({std::move(polytope), {set}});
  }
  std::sort(groups.begin(), groups.end(), [](const Entry& a, const Entry& b) {
    return std::lexicographical_compare(a.polytope.vertices.begin(), a.polytope.vertices.end(),
                                        b.polytope.vertices.begin(), b.polytope.vertices.end(), lex_less);
  });
  for (auto& g : groups) report.classes.push_back({std::move(g.polytope), std::move(g.members)});
  return report;
}

std::optional<NonbendingReport> nonbending_report(const PolygonSpace& space, const Limits& limits) {
  const auto& lengths = space.lengths();
  if (space.edge_count() != 5) return std::nullopt;

  std::map<Rational, std::vector<std::size_t>> by_length;
  for (std::size_t i = 0; i < 5; ++i) by_length[lengths.length(i)].push_back(i);
  for (const auto& [c, edges] : by_length) {
    if (edges.size() < 3) continue;
    std::array<std::size_t, 3> c_edges{edges[0], edges[1], edges[2]};
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < 5; ++i) {
      if (std::find(c_edges.begin(), c_edges.end(), i) == c_edges.end()) rest.push_back(i);
    }
    std::size_t unit = rest[0];
    std::size_t a_edge = rest[1];
    if (lengths.length(unit) != 1) std::swap(unit, a_edge);
    if (lengths.length(unit) != 1) continue;
    const Rational a = lengths.length(a_edge);
    if (!(c > a + 1 && a + 1 > 2)) continue;

    auto single = [](std::size_t i) { return EdgeSubset::singleton(i); };
    const EdgeSubset c1 = single(c_edges[0]);
    const EdgeSubset c2 = single(c_edges[1]);
    const EdgeSubset one = single(unit);
    const EdgeSubset ae = single(a_edge);
    const std::vector<EdgeSubset> rect{c1 | one, c2 | ae};
    const std::vector<EdgeSubset> trap{ae | one, c1 | ae | one};
    const std::vector<EdgeSubset> printed{c1 | one, c1 | ae | one};
    auto rectangle_set = validate_bending_set(lengths, rect);
    auto trapezoid_set = validate_bending_set(lengths, trap);
    auto printed_set = validate_bending_set(lengths, printed);
    auto rectangle = moment_polytope(space, rectangle_set);
    auto trapezoid = moment_polytope(space, trapezoid_set);
    auto printed_polytope = moment_polytope(space, printed_set);

    const Integer ham = ceil(a);
    const std::size_t bending = conjugacy_classes(space, limits).classes.size();
    const bool strong = a + 1 > 3;
    return NonbendingReport{
        a,
        c,
        unit,
        a_edge,
        c_edges,
        ham,
        bending,
        strong,
        strong && ham > Integer(bending),
        std::move(rectangle_set),
        rectangle,
        std::move(trapezoid_set),
        trapezoid,
        std::move(printed_set),
        printed_polytope,
        lattice_equivalent(rectangle, trapezoid).verdict,
        lattice_equivalent(rectangle, printed_polytope).verdict,
    };
  }
  return std::nullopt;
}

}  // namespace bendix
