#include <gtest/gtest.h>

#include "bendix/bending.hpp"
#include "bendix/error.hpp"
#include "support/oracles.hpp"

using namespace bendix;

namespace {

LengthFunction lf(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(parse_rational(v));
  return LengthFunction::from_lengths(out);
}

BendingSet family(const LengthFunction& l, std::vector<std::vector<std::string>> members) {
  std::vector<EdgeSubset> subsets;
  for (const auto& ids : members) subsets.push_back(l.subset(ids));
  return validate_bending_set(l, subsets);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Internal;
}

Rational q(const char* text) { return parse_rational(text); }

const auto kPentagon = lf({"1", "1", "1", "1", "3/2"});
const auto kPab = lf({"1", "1", "1", "3/2", "3/4"});
const auto kHeptagon = lf({"1", "1", "2", "2", "3", "3", "3"});

}  // namespace

TEST(Validate, AddsSingletons) {
  const auto set = family(kPentagon, {{"e4", "e5"}});
  EXPECT_EQ(set.members().size(), 6U);
  EXPECT_EQ(set.non_singletons(), (std::vector<EdgeSubset>{kPentagon.subset({"e4", "e5"})}));
  EXPECT_TRUE(set.contains(EdgeSubset::singleton(0)));
}

TEST(Validate, Errors) {
  EXPECT_EQ(code_of([] { family(kPentagon, {{"e4", "e5"}, {"e3", "e5"}}); }), ErrorCode::LaminarViolation);
  EXPECT_EQ(code_of([] { family(kPentagon, {{"e1", "e2"}}); }), ErrorCode::NotLopsided);
  EXPECT_EQ(code_of([] { family(kPentagon, {{"e9"}}); }), ErrorCode::UnknownEdge);
  EXPECT_EQ(code_of([] { validate_bending_set(kPentagon, std::vector<EdgeSubset>{EdgeSubset()}); }),
            ErrorCode::InvalidInput);
  // Three of length 3 against two of length 2: not lopsided.
  EXPECT_EQ(code_of([] { family(kHeptagon, {{"e7", "e3", "e4"}}); }), ErrorCode::NotLopsided);
}

TEST(Validate, CanonicalMemberOrder) {
  const auto a = family(kHeptagon, {{"e6", "e4"}, {"e3", "e1"}});
  const auto b = family(kHeptagon, {{"e3", "e1"}, {"e6", "e4"}});
  EXPECT_EQ(a, b);
  const auto members = a.members();
  EXPECT_TRUE(std::is_sorted(members.begin(), members.end(), canonical_less));
}

TEST(MaximalElements, Examples) {
  const auto trivial = trivial_bending_set(kHeptagon);
  EXPECT_EQ(maximal_elements(trivial).size(), 7U);
  const auto three = family(kHeptagon, {{"e5", "e1", "e2"}, {"e6", "e3"}, {"e7", "e4"}});
  const auto blocks = maximal_elements(three);
  EXPECT_EQ(blocks.size(), 3U);
  EXPECT_TRUE(is_partition(blocks, kHeptagon.all()));
  const auto chain = family(kHeptagon, {{"e5", "e1"}, {"e5", "e1", "e2"}});
  EXPECT_EQ(maximal_elements(chain).size(), 5U);
}

TEST(Full, Examples) {
  EXPECT_TRUE(is_full(trivial_bending_set(kPentagon)));
  EXPECT_TRUE(is_full(family(kPentagon, {{"e4", "e5"}})));
  const auto triple = family(lf({"1", "1", "1", "1", "7/2"}), {{"e3", "e4", "e5"}});
  EXPECT_FALSE(is_full(triple));
  EXPECT_FALSE(is_full_by_splitting(triple));
  const auto nested = family(lf({"1", "2", "4", "4", "4"}), {{"e2", "e1"}, {"e3", "e2", "e1"}});
  EXPECT_TRUE(is_full(nested));
  EXPECT_TRUE(is_full_by_splitting(nested));
  const auto split = split_of(nested, EdgeSubset(0b111));
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->first | split->second, EdgeSubset(0b111));
}

TEST(Fill, TraceWithDominantEdgeFirst) {
  const auto l = lf({"1", "1", "1", "1", "7/2"});
  const auto filled = fill(l, family(l, {{"e3", "e4", "e5"}}));
  EXPECT_EQ(filled.non_singletons(), (std::vector<EdgeSubset>{l.subset({"e3", "e5"}), l.subset({"e3", "e4", "e5"})}));
  EXPECT_EQ(fill(l, filled), filled);
  EXPECT_EQ(fill(l, trivial_bending_set(l)), trivial_bending_set(l));
}

TEST(Fill, ChainsEverySubMember) {
  const auto l = lf({"1", "1", "1", "1", "1", "9"});
  const auto filled = fill(l, family(l, {{"e6", "e1", "e2", "e3", "e4"}}));
  EXPECT_TRUE(is_full(filled));
  EXPECT_TRUE(filled.contains(l.subset({"e6", "e1"})));
  EXPECT_TRUE(filled.contains(l.subset({"e6", "e1", "e2"})));
  EXPECT_TRUE(filled.contains(l.subset({"e6", "e1", "e2", "e3"})));
}

TEST(TorusDimension, Examples) {
  const PolygonSpace pentagon(kPentagon);
  EXPECT_EQ(torus_dimension(pentagon, trivial_bending_set(kPentagon)), 0);
  EXPECT_EQ(torus_dimension(pentagon, family(kPentagon, {{"e4", "e5"}})), 1);
  const PolygonSpace heptagon(kHeptagon);
  const std::vector<std::pair<BendingSet, int>> cases{
      {family(kHeptagon, {{"e3", "e1"}, {"e4", "e2"}}), 2},
      {family(kHeptagon, {{"e3", "e1"}, {"e5", "e2"}, {"e6", "e4"}}), 3},
      {fill(kHeptagon, family(kHeptagon, {{"e5", "e1", "e2"}, {"e6", "e4"}, {"e7", "e3"}})), 4},
  };
  for (const auto& [set, dim] : cases) {
    EXPECT_TRUE(is_full(set));
    EXPECT_EQ(torus_dimension(heptagon, set), dim);
  }
}

TEST(TorusDimension, ComplementPairsCountOnce) {
  // {e5,e1,e2} and its complement {e6,e3,e4} bend the same diagonal.
  const auto l = lf({"1", "1", "1", "1", "3", "5/2"});
  const PolygonSpace space(l);
  const auto set = family(l, {{"e5", "e1", "e2"}, {"e6", "e3", "e4"}});
  EXPECT_EQ(torus_dimension(space, set), 1);
  EXPECT_EQ(torus_dimension(space, fill(l, set)), 3);
}

TEST(MomentImage, Examples) {
  const PolygonSpace pentagon(kPentagon);
  EXPECT_EQ(moment_image(pentagon, kPentagon.subset({"e4", "e5"})), (Interval{q("1/2"), q("5/2")}));
  EXPECT_EQ(moment_image(pentagon, EdgeSubset::singleton(2)), (Interval{1, 1}));
  EXPECT_EQ(moment_image(PolygonSpace(kPab), kPab.subset({"e4", "e5"})), (Interval{q("3/4"), q("9/4")}));
  EXPECT_EQ(code_of([&] { moment_image(pentagon, EdgeSubset()); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] { moment_image(pentagon, kPentagon.all()); }), ErrorCode::InvalidInput);
}

TEST(CriticalValues, Examples) {
  const PolygonSpace pentagon(kPentagon);
  const auto circle = kPentagon.subset({"e4", "e5"});
  EXPECT_EQ(critical_values(pentagon, circle), (std::vector<Rational>{q("1/2"), 1, q("5/2")}));
  EXPECT_FALSE(is_regular_value(pentagon, circle, 1));
  EXPECT_TRUE(is_regular_value(pentagon, circle, 2));
  EXPECT_FALSE(is_regular_value(pentagon, circle, q("1/2")));
  EXPECT_EQ(code_of([&] { is_regular_value(pentagon, circle, 3); }), ErrorCode::TOutOfImage);
  EXPECT_EQ(critical_values(PolygonSpace(kPab), kPab.subset({"e4", "e5"})),
            (std::vector<Rational>{q("3/4"), 1, q("9/4")}));
  EXPECT_EQ(code_of([&] { critical_values(pentagon, kPentagon.subset({"e1", "e2"})); }), ErrorCode::NotLopsided);
}

TEST(Reduce, Bookkeeping) {
  const auto l = lf({"1", "2", "4", "4", "4"});
  const PolygonSpace space(l);
  const auto result = reduce(space, l.subset({"e3", "e1"}), 4);
  ASSERT_EQ(result.left.size(), 3U);
  ASSERT_EQ(result.right.size(), 4U);
  EXPECT_EQ(result.left.length(0), 1);
  EXPECT_EQ(result.left.length(1), 4);
  EXPECT_EQ(result.left.length(2), 4);
  EXPECT_EQ(result.left.id(2), "{e1,e3}");
  EXPECT_EQ(result.right.length(0), 2);
  EXPECT_EQ(result.right.length(3), 4);
  EXPECT_EQ(result.right.id(3), "{e2,e4,e5}");
  EXPECT_TRUE(is_nonempty(result.left));
  EXPECT_TRUE(is_nonempty(result.right));
  EXPECT_EQ(pol_dimension(result.left), 0);
  EXPECT_EQ(code_of([&] { reduce(space, l.subset({"e3", "e1"}), 6); }), ErrorCode::TOutOfImage);
}

TEST(Reduce, EndpointIsDegenerate) {
  const PolygonSpace pentagon(kPentagon);
  const auto result = reduce(pentagon, kPentagon.subset({"e4", "e5"}), q("1/2"));
  EXPECT_FALSE(result.left_generic && result.right_generic);
  const auto regular = reduce(pentagon, kPentagon.subset({"e4", "e5"}), 2);
  EXPECT_TRUE(regular.left_generic && regular.right_generic);
}

// Property suites over random generic length functions.

TEST(Properties, MomentImageMatchesReductionOracle) {
  oracle::Generator gen(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto l = gen.generic_lengths(gen.uniform(4, 7));
    const PolygonSpace space(l);
    const auto subset = EdgeSubset(gen.uniform(1, l.all().bits() - 1));
    const auto image = moment_image(space, subset);
    std::vector<Rational> values;
    for (const auto& e : l.edges()) values.push_back(e.length);
    const auto indices = subset.indices();
    // 64 probes spread over [0, s(E)] plus the endpoints and their neighbours.
    const Rational top = l.sum(l.all());
    const Rational eps = Rational(1, 1000);
    std::vector<Rational> probes{image.lo, image.hi, image.lo - eps, image.hi + eps};
    for (int k = 0; k < 60; ++k) probes.push_back(top * k / 59);
    for (const auto& t : probes) {
      EXPECT_EQ(image.contains(t), oracle::in_image_by_reduction(values, indices, t))
          << l.describe(subset) << " t=" << to_string(t);
    }
    EXPECT_EQ(image, moment_image(space, l.all() - subset));
    EXPECT_EQ(image.lo < image.hi, subset.size() >= 2 && (l.all() - subset).size() >= 2);
    if (is_lopsided(l, subset)) {
      const auto critical = critical_values(space, subset);
      EXPECT_TRUE(std::find(critical.begin(), critical.end(), image.lo) != critical.end());
      EXPECT_TRUE(std::find(critical.begin(), critical.end(), image.hi) != critical.end());
    }
  }
}

TEST(Properties, FillInvariants) {
  oracle::Generator gen(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto l = gen.generic_lengths(gen.uniform(3, 8));
    const auto set = gen.bending_set(l, 12);
    const auto filled = fill(l, set);
    for (auto m : set.members()) EXPECT_TRUE(filled.contains(m));
    EXPECT_TRUE(is_full(filled));
    EXPECT_TRUE(is_full_by_splitting(filled));
    EXPECT_EQ(sorted_partition(maximal_elements(filled)), sorted_partition(maximal_elements(set)));
    EXPECT_EQ(fill(l, filled), filled);
    EXPECT_EQ(is_full(set), is_full_by_splitting(set));
    EXPECT_EQ(filled.members().size(), 2 * l.size() - maximal_elements(filled).size());
    const PolygonSpace space(l);
    EXPECT_LE(torus_dimension(space, set), torus_dimension(space, filled));
    EXPECT_EQ(torus_dimension(space, filled), oracle::expected_torus_dimension(l.size(), filled));
  }
}
