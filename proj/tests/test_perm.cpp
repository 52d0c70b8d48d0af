#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qsym/errors.hpp"
#include "qsym/perm.hpp"

using namespace qsym;

namespace {

Permutation P(std::size_t n, const char* cycles) {
  return Permutation::from_cycles(n, cycles);
}

PermGroup group_of(std::size_t n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) gens.push_back(P(n, c));
  return generate(n, gens);
}

const PermGroup& s4() {
  static const PermGroup g = PermGroup::symmetric(4);
  return g;
}

PermGroup diagonal_klein() {
  return group_of(4, {"(12)(34)", "(13)(24)"});
}

PermGroup easy_klein(const char* a, const char* b) { return group_of(4, {a, b}); }

}  // namespace

TEST(Compose, RightFactorActsFirst) {
  Permutation r = compose(P(3, "(12)"), P(3, "(23)"));
  EXPECT_EQ(r(0), 1u);
  EXPECT_EQ(r(1), 2u);
  EXPECT_EQ(r(2), 0u);
  EXPECT_EQ(r.to_cycle_string(), "(123)");
}

TEST(Compose, IdentityAndInvolution) {
  Permutation s = P(4, "(1342)");
  EXPECT_EQ(Permutation::identity(4) * s, s);
  EXPECT_EQ(s * Permutation::identity(4), s);
  EXPECT_TRUE((P(3, "(12)") * P(3, "(12)")).is_identity());
}

TEST(Compose, DegreeMismatchThrows) {
  EXPECT_THROW(compose(P(3, "(12)"), P(4, "(12)")), DegreeMismatch);
}

TEST(Permutation, ParsingAndPrinting) {
  EXPECT_EQ(P(4, "id").to_cycle_string(), "id");
  EXPECT_EQ(P(4, "").to_cycle_string(), "id");
  EXPECT_EQ(P(4, "(12)(34)").to_cycle_string(), "(12)(34)");
  EXPECT_EQ(P(4, "(1 3)(2 4)"), P(4, "(13)(24)"));
  EXPECT_EQ(P(4, "(1,4,3)"), P(4, "(143)"));
  EXPECT_THROW(P(3, "(14)"), ParseError);
  EXPECT_THROW(P(3, "(121)"), ParseError);
  EXPECT_THROW(P(3, "(12"), ParseError);
  EXPECT_THROW(P(3, "(1 x)"), ParseError);
  EXPECT_THROW(P(3, "12"), ParseError);
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), InvalidArgument);
}

TEST(Permutation, SignOrderInverse) {
  EXPECT_EQ(P(4, "(12)").sign(), -1);
  EXPECT_EQ(P(4, "(123)").sign(), 1);
  EXPECT_EQ(P(4, "(1234)").sign(), -1);
  EXPECT_EQ(P(4, "(12)(34)").order(), 2u);
  EXPECT_EQ(P(5, "(12)(345)").order(), 6u);
  Permutation s = P(5, "(1352)");
  EXPECT_TRUE((s * s.inverse()).is_identity());
}

TEST(Generate, EmptyGeneratorsGiveTrivialGroup) {
  PermGroup g = generate(4, std::vector<Permutation>{});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.elements().front().is_identity());
}

TEST(Generate, TranspositionAndFourCycleGiveS4) {
  PermGroup g = group_of(4, {"(12)", "(1234)"});
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(g, s4());
  EXPECT_EQ(g.generators().size(), 2u);
}

TEST(Generate, DoubleTranspositionsGiveKlein) {
  PermGroup g = diagonal_klein();
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(isomorphism_type(g).tag, GroupType::Tag::Klein);
}

TEST(Generate, ClosedUnderCompositionAndInverse) {
  PermGroup g = group_of(5, {"(12)(345)", "(15)"});
  EXPECT_EQ(120u % g.order(), 0u);
  for (const auto& a : g.elements()) {
    EXPECT_TRUE(g.contains(a.inverse()));
    for (const auto& b : g.elements()) EXPECT_TRUE(g.contains(a * b));
  }
}

TEST(PermGroup, ValidatingConstructorRejectsNonGroups) {
  EXPECT_THROW(PermGroup(4, {Permutation::identity(4), P(4, "(123)")}),
               NotASubgroup);
  EXPECT_THROW(PermGroup(4, {P(4, "(12)")}), NotASubgroup);
  EXPECT_NO_THROW(PermGroup(4, {Permutation::identity(4), P(4, "(12)")}));
}

TEST(Subgroups, S4HasThirtySubgroups) {
  auto subs = all_subgroups(s4());
  EXPECT_EQ(subs.size(), 30u);
  for (const auto& h : subs) EXPECT_EQ(24u % h.order(), 0u);
  for (std::size_t i = 1; i < subs.size(); ++i) EXPECT_NE(subs[i - 1], subs[i]);
}

TEST(Subgroups, KleinSubgroupsOfS4) {
  auto kleins = subgroups_of_type(s4(), GroupType::of(GroupType::Tag::Klein));
  ASSERT_EQ(kleins.size(), 4u);
  EXPECT_NE(std::find(kleins.begin(), kleins.end(), diagonal_klein()),
            kleins.end());
  for (const char* k : {"(12)", "(13)", "(14)"}) {
    // {id, (1i), (kl), (1i)(kl)}
    Permutation a = P(4, k);
    Permutation b = a;
    std::vector<std::uint8_t> imgs = {0, 1, 2, 3};
    std::vector<std::uint8_t> rest;
    for (std::uint8_t p = 0; p < 4; ++p)
      if (a(p) == p) rest.push_back(p);
    std::swap(imgs[rest[0]], imgs[rest[1]]);
    b = Permutation::from_images(imgs);
    PermGroup easy = generate(4, std::vector<Permutation>{a, b});
    EXPECT_NE(std::find(kleins.begin(), kleins.end(), easy), kleins.end());
  }
}

TEST(Subgroups, D4SubgroupsOfS4) {
  auto d4s = subgroups_of_type(s4(), GroupType::of(GroupType::Tag::D4));
  ASSERT_EQ(d4s.size(), 3u);
  // Sylow count: odd and dividing 3.
  EXPECT_EQ(d4s.size() % 2, 1u);
  EXPECT_EQ(3u % d4s.size(), 0u);
  for (const auto& d : d4s) EXPECT_TRUE(diagonal_klein().is_subgroup_of(d));
  for (std::size_t i = 0; i < d4s.size(); ++i)
    for (std::size_t j = 0; j < d4s.size(); ++j)
      EXPECT_TRUE(are_conjugate(s4(), d4s[i], d4s[j]).has_value());
}

TEST(Subgroups, S3HasNoKlein) {
  EXPECT_TRUE(
      subgroups_of_type(PermGroup::symmetric(3), GroupType::of(GroupType::Tag::Klein))
          .empty());
}

TEST(Subgroups, BoundEnforced) {
  EXPECT_THROW(all_subgroups(PermGroup::symmetric(5)), BoundExceeded);
}

TEST(Characteristic, DiagonalKleinOnly) {
  EXPECT_TRUE(is_characteristic_under_inner(s4(), diagonal_klein()));
  EXPECT_FALSE(is_characteristic_under_inner(s4(), easy_klein("(12)", "(34)")));
  EXPECT_TRUE(is_characteristic_under_inner(s4(), s4()));
  auto kleins = subgroups_of_type(s4(), GroupType::of(GroupType::Tag::Klein));
  EXPECT_EQ(std::count_if(kleins.begin(), kleins.end(),
                          [](const PermGroup& h) {
                            return is_characteristic_under_inner(s4(), h);
                          }),
            1);
}

TEST(Characteristic, RejectsNonSubgroup) {
  EXPECT_THROW(is_characteristic_under_inner(PermGroup::symmetric(3),
                                             easy_klein("(12)", "(34)")),
               Error);
}

TEST(Conjugacy, EasyKleinsAreConjugate) {
  PermGroup h1 = easy_klein("(12)", "(34)");
  PermGroup h2 = easy_klein("(13)", "(24)");
  auto w = are_conjugate(s4(), h1, h2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(h1.conjugate_by(*w), h2);
}

TEST(Conjugacy, DiagonalNotConjugateToEasy) {
  EXPECT_FALSE(
      are_conjugate(s4(), diagonal_klein(), easy_klein("(12)", "(34)")).has_value());
}

TEST(Conjugacy, EqualSubgroupsGiveIdentityWitness) {
  auto w = are_conjugate(s4(), diagonal_klein(), diagonal_klein());
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->is_identity());
}

TEST(IsomorphismType, S4Profile) {
  GroupType t = isomorphism_type(s4());
  EXPECT_EQ(t.tag, GroupType::Tag::S4);
  std::map<std::size_t, std::size_t> want = {{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  EXPECT_EQ(t.profile, want);
  EXPECT_EQ(t.name(), "S4");
}

TEST(IsomorphismType, SignedTwoByTwoPermutationMatricesFormD4) {
  // The eight signed 2x2 permutation matrices, multiplied as matrices, acting
  // on themselves.
  struct M { int a, b, c, d; };
  std::vector<M> ms;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      ms.push_back({s1, 0, 0, s2});
      ms.push_back({0, s1, s2, 0});
    }
  auto mul = [](const M& x, const M& y) {
    return M{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
             x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  };
  auto index = [&](const M& m) {
    for (std::size_t i = 0; i < ms.size(); ++i)
      if (ms[i].a == m.a && ms[i].b == m.b && ms[i].c == m.c && ms[i].d == m.d)
        return i;
    return ms.size();
  };
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) table[i][j] = index(mul(ms[i], ms[j]));
  PermGroup g = regular_action(table);
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(isomorphism_type(g).tag, GroupType::Tag::D4);
}

TEST(IsomorphismType, DistinguishesOrderEightGroups) {
  EXPECT_EQ(isomorphism_type(group_of(8, {"(12345678)"})).tag, GroupType::Tag::Z8);
  EXPECT_EQ(isomorphism_type(group_of(6, {"(12)", "(34)", "(56)"})).tag,
            GroupType::Tag::Z2xZ2xZ2);
  EXPECT_EQ(isomorphism_type(group_of(6, {"(1234)", "(56)"})).tag,
            GroupType::Tag::Z2xZ4);
  // Quaternion group via its regular representation on 8 points.
  PermGroup q8 = group_of(8, {"(1234)(5876)", "(1537)(2648)"});
  EXPECT_EQ(q8.order(), 8u);
  EXPECT_EQ(isomorphism_type(q8).tag, GroupType::Tag::Q8);
  EXPECT_EQ(isomorphism_type(group_of(4, {"(123)", "(12)(34)"})).tag,
            GroupType::Tag::A4);
  EXPECT_EQ(isomorphism_type(group_of(3, {"(12)", "(123)"})).tag, GroupType::Tag::S3);
}

TEST(IsomorphismType, OtherCarriesInvariants) {
  GroupType t = isomorphism_type(group_of(5, {"(12345)"}));
  EXPECT_EQ(t.tag, GroupType::Tag::Other);
  EXPECT_EQ(t.order, 5u);
  EXPECT_TRUE(t.abelian);
  EXPECT_THROW(isomorphism_type(PermGroup::symmetric(5)), BoundExceeded);
}

TEST(IsomorphismType, InvariantUnderRelabeling) {
  std::mt19937 rng(20261014);
  std::vector<PermGroup> samples = {
      diagonal_klein(), easy_klein("(12)", "(34)"), group_of(4, {"(1234)", "(13)"}),
      group_of(4, {"(123)"}), group_of(4, {"(123)", "(12)(34)"}), s4()};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::uint8_t> imgs = {0, 1, 2, 3};
    std::shuffle(imgs.begin(), imgs.end(), rng);
    Permutation g = Permutation::from_images(imgs);
    for (const auto& h : samples)
      EXPECT_EQ(isomorphism_type(h.conjugate_by(g)), isomorphism_type(h));
  }
}
