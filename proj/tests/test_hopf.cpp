#include <gtest/gtest.h>

#include <algorithm>

#include "qsym/errors.hpp"
#include "qsym/hopf.hpp"

using namespace qsym;

namespace {

Permutation P(std::size_t n, const char* c) { return Permutation::from_cycles(n, c); }

PermGroup group_of(std::size_t n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) gens.push_back(P(n, c));
  return generate(n, gens);
}

PermGroup klein() { return group_of(4, {"(12)(34)", "(13)(24)"}); }
PermGroup easy_klein() { return group_of(4, {"(12)", "(34)"}); }
PermGroup s3() { return PermGroup::symmetric(3); }
PermGroup s4() { return PermGroup::symmetric(4); }
PermGroup trivial() { return generate(4, std::vector<Permutation>{}); }

// Dual numbers Q[x]/(x^2): commutative, not semisimple. Only the algebra
// part is meaningful.
FDHopf dual_numbers() {
  FDHopf h;
  h.dim = 2;
  h.labels = {"1", "x"};
  h.unit = unit_vector(0);
  h.mult = {unit_vector(0), unit_vector(1), unit_vector(1), {}};
  h.comult = {{{0, 0, Rational(1)}}, {{0, 1, Rational(1)}, {1, 0, Rational(1)}}};
  h.counit = {Rational(1), Rational(0)};
  h.antipode = {unit_vector(0), {{1, Rational(-1)}}};
  h.star = {unit_vector(0), unit_vector(1)};
  return h;
}

bool is_group_like(const FDHopf& h, const SparseVec& v) {
  // Delta(v) == v (x) v, compared as dense tensors.
  std::vector<Rational> lhs(h.dim * h.dim), rhs(h.dim * h.dim);
  for (const auto& [i, c] : v)
    for (const auto& t : h.comult[i]) lhs[t.left * h.dim + t.right] += c * t.coeff;
  for (const auto& [i, a] : v)
    for (const auto& [j, b] : v) rhs[i * h.dim + j] += a * b;
  return lhs == rhs;
}

}  // namespace

TEST(GroupAlgebra, KleinIsGroupLike) {
  FDHopf h = group_algebra(klein());
  EXPECT_EQ(h.dim, 4u);
  for (std::uint32_t i = 0; i < 4; ++i) EXPECT_TRUE(is_group_like(h, unit_vector(i)));
  EXPECT_TRUE(verify_hopf_axioms(h).all());
  EXPECT_TRUE(h.is_commutative());
  EXPECT_TRUE(h.is_cocommutative());
}

TEST(GroupAlgebra, Trivial) {
  FDHopf h = group_algebra(trivial());
  EXPECT_EQ(h.dim, 1u);
  EXPECT_TRUE(verify_hopf_axioms(h).all());
  EXPECT_EQ(characters(h).size(), 1u);
}

TEST(GroupAlgebra, S3NoncommutativeCocommutative) {
  FDHopf h = group_algebra(s3());
  EXPECT_EQ(h.dim, 6u);
  EXPECT_TRUE(verify_hopf_axioms(h).all());
  EXPECT_FALSE(h.is_commutative());
  EXPECT_TRUE(h.noncommuting_pair().has_value());
  EXPECT_TRUE(h.is_cocommutative());
}

TEST(FunctionAlgebra, KleinAndS4) {
  FDHopf k = function_algebra(klein());
  EXPECT_TRUE(k.is_commutative());
  EXPECT_TRUE(k.is_cocommutative());
  EXPECT_TRUE(verify_hopf_axioms(k).all());

  FDHopf h = function_algebra(s4());
  EXPECT_EQ(h.dim, 24u);
  EXPECT_TRUE(h.is_commutative());
  EXPECT_FALSE(h.is_cocommutative());
  HopfAxiomReport r = verify_hopf_axioms(h);
  EXPECT_TRUE(r.all());
  EXPECT_TRUE(r.failures.empty());
  EXPECT_EQ(function_algebra(trivial()).dim, 1u);
}

TEST(VerifyAxioms, CorruptedProductBreaksAssociativity) {
  FDHopf h = function_algebra(s4());
  h.mult[0 * h.dim + 1] = unit_vector(0);
  HopfAxiomReport r = verify_hopf_axioms(h);
  EXPECT_FALSE(r.associativity);
  EXPECT_FALSE(r.all());
  EXPECT_FALSE(r.failures.empty());
}

TEST(VerifyAxioms, EachSuiteDetectsItsFault) {
  {
    FDHopf h = function_algebra(s3());
    h.comult[1][0].coeff = 2;
    EXPECT_FALSE(verify_hopf_axioms(h).coassociativity);
  }
  {
    FDHopf h = group_algebra(s3());
    h.counit[2] = 0;
    auto r = verify_hopf_axioms(h);
    EXPECT_FALSE(r.counit);
  }
  {
    FDHopf h = group_algebra(s3());
    std::swap(h.antipode[1], h.antipode[2]);
    auto r = verify_hopf_axioms(h);
    EXPECT_FALSE(r.antipode);
  }
  {
    FDHopf h = group_algebra(s3());
    // g* = g instead of g^-1: not anti-multiplicative for a 3-cycle pair.
    for (std::uint32_t i = 0; i < h.dim; ++i) h.star[i] = unit_vector(i);
    EXPECT_FALSE(verify_hopf_axioms(h).star);
  }
  {
    FDHopf h = group_algebra(s3());
    // A primitive-style coproduct on a group element is not multiplicative.
    const std::uint32_t e = static_cast<std::uint32_t>(
        s3().index_of(Permutation::identity(3)));
    h.comult[1] = {{e, 1, Rational(1)}, {1, e, Rational(1)}};
    h.canonicalize();
    EXPECT_FALSE(verify_hopf_axioms(h).bialgebra);
  }
}

TEST(VerifyAxioms, MalformedShapeThrows) {
  FDHopf h = group_algebra(klein());
  h.counit.pop_back();
  EXPECT_THROW(verify_hopf_axioms(h), InvalidArgument);
}

TEST(Restriction, IdentityWhenEqual) {
  HopfMap f = restriction_surjection(s4(), s4());
  HopfMap id = identity_map(24);
  EXPECT_EQ(f.images, id.images);
}

TEST(Restriction, OntoEasyKleinIsHopfSurjection) {
  FDHopf g = function_algebra(s4());
  FDHopf v = function_algebra(easy_klein());
  HopfMap f = restriction_surjection(s4(), easy_klein());
  EXPECT_EQ(f.rank(), 4u);
  EXPECT_EQ(hopf_map_violation(g, v, f), "");
  EXPECT_NO_THROW(require_hopf_map(g, v, f));
}

TEST(Restriction, RejectsNonSubgroup) {
  EXPECT_THROW(restriction_surjection(s3(), klein()), NotASubgroup);
}

TEST(HopfMap, DetectsNonMaps) {
  FDHopf g = function_algebra(s4());
  FDHopf v = function_algebra(easy_klein());
  HopfMap f = restriction_surjection(s4(), easy_klein());
  std::swap(f.images[0], f.images[1]);
  EXPECT_FALSE(is_hopf_map(g, v, f));
  EXPECT_THROW(require_hopf_map(g, v, f), NotAHopfMap);
  EXPECT_THROW(compose(f, f), InvalidArgument);
}

TEST(Fourier, TrivialGroupIsIdentity) {
  FDHopf c = function_algebra(trivial());
  HopfMap f = fourier_iso(trivial());
  EXPECT_EQ(f.images, identity_map(1).images);
  EXPECT_TRUE(is_hopf_map(c, elementary_abelian_group_algebra(0), f));
}

TEST(Fourier, KleinIsoAndGroupLikes) {
  const PermGroup v = easy_klein();
  const std::vector<Permutation> basis = {P(4, "(12)"), P(4, "(34)")};
  FDHopf cv = function_algebra(v);
  FDHopf k = elementary_abelian_group_algebra(2);
  HopfMap f = fourier_iso(v, basis);
  HopfMap g = fourier_iso_inverse(v, basis);
  EXPECT_EQ(hopf_map_violation(cv, k, f), "");
  EXPECT_EQ(hopf_map_violation(k, cv, g), "");
  EXPECT_EQ(compose(g, f).images, identity_map(4).images);
  EXPECT_EQ(compose(f, g).images, identity_map(4).images);
  // The preimage of each t_m is group-like in C(V).
  for (const auto& col : g.images) EXPECT_TRUE(is_group_like(cv, col));
}

TEST(Fourier, DualGeneratorLabeling) {
  const PermGroup v = easy_klein();
  const std::vector<Permutation> basis = {P(4, "(12)"), P(4, "(34)")};
  EXPECT_EQ(dual_character_value(v, basis, 1, P(4, "(12)")), -1);
  EXPECT_EQ(dual_character_value(v, basis, 1, P(4, "(34)")), 1);
  EXPECT_EQ(dual_character_value(v, basis, 2, P(4, "(12)")), 1);
  EXPECT_EQ(dual_character_value(v, basis, 2, P(4, "(34)")), -1);
  EXPECT_EQ(dual_character_value(v, basis, 3, P(4, "(12)(34)")), 1);
}

TEST(Fourier, RejectsBadInput) {
  EXPECT_THROW(fourier_iso(s3()), InvalidArgument);
  EXPECT_THROW(fourier_iso(group_of(4, {"(1234)"})), InvalidArgument);
  EXPECT_THROW(fourier_iso(easy_klein(), {P(4, "(12)"), P(4, "(12)")}),
               InvalidArgument);
  EXPECT_THROW(fourier_iso(easy_klein(), {P(4, "(12)")}), InvalidArgument);
}

TEST(Characters, FunctionAlgebraGivesPointEvaluations) {
  for (const PermGroup& g : {trivial(), klein(), s3(), s4()}) {
    FDHopf h = function_algebra(g);
    auto chars = characters(h);
    ASSERT_EQ(chars.size(), g.order());
    for (const auto& chi : chars) {
      EXPECT_EQ(std::count(chi.begin(), chi.end(), Rational(1)), 1);
      EXPECT_EQ(std::count(chi.begin(), chi.end(), Rational(0)),
                static_cast<long>(g.order() - 1));
    }
  }
}

TEST(Characters, GroupAlgebraCountsAbelianization) {
  EXPECT_EQ(characters(group_algebra(klein())).size(), 4u);
  EXPECT_EQ(characters(group_algebra(s3())).size(), 2u);
  EXPECT_EQ(characters(group_algebra(s4())).size(), 2u);
  EXPECT_EQ(characters(group_algebra(group_of(4, {"(12)", "(34)"}))).size(), 4u);
}

TEST(Characters, KleinGroupAlgebraValuesAreSigns) {
  for (const auto& chi : characters(group_algebra(klein())))
    for (const auto& x : chi) EXPECT_TRUE(x == 1 || x == -1);
}

TEST(Characters, AreMultiplicative) {
  FDHopf h = group_algebra(s4());
  for (const auto& chi : characters(h))
    for (std::size_t i = 0; i < h.dim; ++i)
      for (std::size_t j = 0; j < h.dim; ++j) {
        Rational v = 0;
        for (const auto& [k, c] : h.product(i, j)) v += c * chi[k];
        EXPECT_EQ(v, chi[i] * chi[j]);
      }
}

TEST(Characters, CyclicThreeDoesNotSplit) {
  try {
    characters(group_algebra(group_of(3, {"(123)"})));
    FAIL() << "expected NonSplitQuotient";
  } catch (const NonSplitQuotient& e) {
    EXPECT_NE(std::string(e.what()).find("x^2 + x + 1"), std::string::npos)
        << e.what();
  }
}

TEST(Characters, DualNumbersNotSemisimple) {
  EXPECT_THROW(characters(dual_numbers()), NonSemisimpleQuotient);
}

TEST(Characters, InvariantUnderFourierIso) {
  const PermGroup v = klein();
  EXPECT_EQ(characters(function_algebra(v)).size(),
            characters(elementary_abelian_group_algebra(2)).size());
}

TEST(CharacterGroup, FunctionAlgebraOfS4) {
  CharacterGroup g = character_group(function_algebra(s4()));
  EXPECT_EQ(g.group.order(), 24u);
  ASSERT_TRUE(g.type.has_value());
  EXPECT_EQ(g.type->tag, GroupType::Tag::S4);
}

TEST(CharacterGroup, KleinIsSelfDual) {
  CharacterGroup g = character_group(group_algebra(klein()));
  ASSERT_TRUE(g.type.has_value());
  EXPECT_EQ(g.type->tag, GroupType::Tag::Klein);
}

TEST(CharacterGroup, IdentityAndInverses) {
  FDHopf h = function_algebra(s3());
  CharacterGroup g = character_group(h);
  EXPECT_EQ(g.elements[g.identity], h.counit);
  for (const auto& chi : g.elements) {
    Character inv(h.dim);
    for (std::size_t i = 0; i < h.dim; ++i)
      for (const auto& [k, c] : h.antipode[i]) inv[i] += c * chi[k];
    EXPECT_EQ(convolve(h, chi, inv), h.counit);
  }
}

TEST(CharacterGroup, MissingCharacterIsClosureFailure) {
  FDHopf h = function_algebra(klein());
  auto chars = characters(h);
  chars.pop_back();
  EXPECT_THROW(character_group(h, chars), ClosureFailure);
}

TEST(Dump, LineFormat) {
  std::string d = dump_structure(group_algebra(group_of(2, {"(12)"})));
  EXPECT_NE(d.find("dim 2\n"), std::string::npos);
  EXPECT_NE(d.find("m[1][1] -> 0 : 1/1\n"), std::string::npos);
  EXPECT_NE(d.find("d[1] -> 1,1 : 1/1\n"), std::string::npos);
  EXPECT_NE(d.find("S[1] -> 1 : 1/1\n"), std::string::npos);
}
