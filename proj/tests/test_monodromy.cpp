#include <gtest/gtest.h>

#include "quadmono/monodromy.hpp"
#include "quadmono/van_kampen.hpp"

using namespace quadmono;

namespace {

FreeWord a(Gen g) { return FreeWord::generator(g); }

Presentation on(unsigned k, const std::vector<FreeWord>& rels) {
  Presentation p = Presentation::numbered(k);
  for (const auto& r : rels) p.add_relator(r);
  return p;
}

}  // namespace

TEST(BuiltinTable, A2) {
  const MonodromyTable t = builtin_table("A2");
  EXPECT_EQ(t.points, 4u);
  ASSERT_EQ(t.factors.size(), 6u);
  const SingularFactor& f = t.factors[0];
  EXPECT_EQ(f.kind, FactorKind::halftwist);
  EXPECT_EQ(f.i, 3u);
  EXPECT_EQ(f.j, 4u);
  EXPECT_EQ(f.epsilon, 4);
  EXPECT_TRUE(f.conjugator.is_identity());
  EXPECT_EQ(factor_braid(f, 4), Braid::sigma(4, 3, 4));
  EXPECT_FALSE(t.reconstructed);
}

TEST(BuiltinTable, B2HasUniqueTangencyThenTwoBranchPointsOnTheLeft) {
  const MonodromyTable t = builtin_table("b2");
  ASSERT_EQ(t.factors.size(), 5u);
  EXPECT_EQ(t.factors[0].epsilon, 8);
  EXPECT_EQ(t.factors[3].epsilon, 1);
  EXPECT_EQ(t.factors[4].epsilon, 1);
}

TEST(BuiltinTable, C3Shape) {
  const MonodromyTable t = builtin_table("C3");
  ASSERT_EQ(t.factors.size(), 12u);
  int nodes = 0, branch_right = 0, tang = 0, branch_left = 0;
  for (std::size_t k = 0; k < 7; ++k) (t.factors[k].epsilon == 2 ? nodes : branch_right) += 1;
  for (std::size_t k = 7; k < 12; ++k) (t.factors[k].epsilon == 8 ? tang : branch_left) += 1;
  EXPECT_EQ(nodes, 4);
  EXPECT_EQ(branch_right, 3);
  EXPECT_EQ(tang, 2);
  EXPECT_EQ(branch_left, 3);
}

TEST(BuiltinTable, ReconstructedFlagAndUnknownCase) {
  EXPECT_TRUE(builtin_table("A3").reconstructed);
  EXPECT_TRUE(builtin_table("B3").reconstructed);
  EXPECT_THROW(builtin_table("Z9"), PreconditionError);
  for (const auto& id : builtin_cases()) EXPECT_NO_THROW(validate(builtin_table(id))) << id;
}

TEST(BraidTable, Availability) {
  EXPECT_TRUE(braid_table(Family::A, 5).has_value());
  EXPECT_TRUE(braid_table(Family::B, 1).has_value());
  EXPECT_TRUE(braid_table(Family::C, 3).has_value());
  EXPECT_FALSE(braid_table(Family::C, 4).has_value());
  EXPECT_FALSE(braid_table(Family::A, 0).has_value());
}

TEST(ParseTable, Smallest) {
  const MonodromyTable t = parse_table("points 4\nfactor skeleton 3 4 eps 4");
  EXPECT_EQ(t.points, 4u);
  ASSERT_EQ(t.factors.size(), 1u);
  EXPECT_EQ(t.factors[0].epsilon, 4);
}

TEST(ParseTable, RoundTripBuiltins) {
  for (const auto& id : builtin_cases()) {
    MonodromyTable t = builtin_table(id);
    t.reconstructed = false;  // not part of the text format
    EXPECT_EQ(parse_table(render_table(t)), t) << id;
  }
}

TEST(ParseTable, FeaturesAndComments) {
  const MonodromyTable t = parse_table(
      "# comment\n"
      "name demo\n"
      "points 5\n"
      "projective off\n"
      "factor skeleton 1 5 path:bab eps 2 conj s1^2 s4^-1  # trailing\n"
      "factor fulltwist 2 4 power 2\n"
      "factor skeleton 1 3 above eps 8\n");
  EXPECT_EQ(t.name, "demo");
  EXPECT_FALSE(t.include_projective);
  ASSERT_EQ(t.factors.size(), 3u);
  EXPECT_EQ(t.factors[0].path, (std::vector<Side>{Side::below, Side::above, Side::below}));
  EXPECT_EQ(to_string(t.factors[0].conjugator), "s1^2 s4^-1");
  EXPECT_EQ(t.factors[1].kind, FactorKind::fulltwist);
  EXPECT_EQ(factor_braid(t.factors[1], 5), fulltwist({5, 2, 4, 2}));
  EXPECT_EQ(t.factors[2].path, std::vector<Side>{Side::above});
}

TEST(ParseTable, Errors) {
  try {
    parse_table("points 4\nfactor skeleton 3 4 eps 4\nfactor skeleton 2 3 eps 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("epsilon must be 1,2,4,8"), std::string::npos);
  }
  EXPECT_THROW(parse_table("factor skeleton 1 2 eps 1"), ParseError);
  EXPECT_THROW(parse_table("points 3\nfactor skeleton 1 4 eps 1"), ParseError);
  EXPECT_THROW(parse_table("points 3\nfactor skeleton 2 2 eps 1"), ParseError);
  EXPECT_THROW(parse_table("points 3\nfactor skeleton 1 2"), ParseError);
  EXPECT_THROW(parse_table("points 3\nfactor skeleton 1 3 path:ab eps 1"), ParseError);
  EXPECT_THROW(parse_table("points 3\nfactor skeleton 1 2 eps 1 conj s3"), ParseError);
  EXPECT_THROW(parse_table("points 3\nfactor blob 1 2 eps 1"), ParseError);
  EXPECT_THROW(parse_table("points 3\nfrobnicate"), ParseError);
  EXPECT_THROW(parse_table(""), ParseError);
}

TEST(Tangency, PrintedExamples) {
  const auto r = tangency_relations({a(1), a(2)}, 2);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], (a(2) * a(1)).pow(2) * (a(1) * a(2)).pow(-2));
  EXPECT_TRUE(tangency_relations({a(1)}, 2).empty());
  EXPECT_TRUE(tangency_relations({a(1)}, 4).empty());
  EXPECT_THROW(tangency_relations({}, 2), PreconditionError);
  EXPECT_THROW(tangency_relations({a(1), a(2)}, 3), PreconditionError);

  const auto r3 = tangency_relations({a(1), a(2), a(3)}, 2);
  ASSERT_EQ(r3.size(), 2u);
  const FreeWord p0 = (a(3) * a(2) * a(1)).pow(2);
  const FreeWord p1 = (a(1) * a(3) * a(2)).pow(2);
  const FreeWord p2 = (a(2) * a(1) * a(3)).pow(2);
  // Consecutive rotations: a3 a2 a1, then a2 a1 a3, then a1 a3 a2.
  EXPECT_EQ(r3[0], p0 * p2.inverse());
  EXPECT_EQ(r3[1], p2 * p1.inverse());
}

// Multiplicity m matches the full twist raised to the power m.
TEST(Tangency, AgreesWithFullTwistRelators) {
  for (unsigned k = 2; k <= 4; ++k)
    for (unsigned m : {2u, 4u}) {
      std::vector<FreeWord> gens;
      for (unsigned i = 1; i <= k; ++i) gens.push_back(a(i));
      const Presentation tang = simplify(on(k, tangency_relations(gens, static_cast<int>(m))));
      const Presentation twist = simplify(on(k, relations_from_factor(fulltwist({k, 1, k, m}))));
      EXPECT_EQ(tang.relators, twist.relators) << "k=" << k << " m=" << m;
    }
}

TEST(Formula, A1IsZ2Shaped) {
  const Presentation p = formula_relations(Family::A, 1);
  EXPECT_EQ(p.generators.size(), 2u);
  const Presentation s = simplify(p);
  ASSERT_EQ(s.generators.size(), 1u);
  ASSERT_EQ(s.relators.size(), 1u);
  EXPECT_EQ(s.relators[0].length(), 2u);
}

TEST(Formula, BlocksAndLabels) {
  const auto ga = formula_relation_groups(Family::A, 3);
  ASSERT_EQ(ga.size(), 5u);
  EXPECT_EQ(ga[0].label, "an1");
  EXPECT_EQ(ga[4].label, "an9");
  EXPECT_EQ(ga[4].relators[0], a(6) * a(5) * a(4) * a(3) * a(2) * a(1));
  const auto gb = formula_relation_groups(Family::B, 2);
  EXPECT_EQ(gb[0].label, "bn1");
  EXPECT_EQ(gb.back().label, "bn8");
  EXPECT_THROW(formula_relation_groups(Family::C, 0), PreconditionError);
}

TEST(Formula, C4ListsPrintedRelations) {
  const auto groups = formula_relation_groups(Family::C, 4);
  std::vector<std::string> labels;
  for (const auto& g : groups) labels.push_back(g.label);
  for (const char* want : {"pa1", "pa2", "pa3", "pa4", "commutators"})
    EXPECT_NE(std::find(labels.begin(), labels.end(), want), labels.end()) << want;
  const Presentation p = formula_relations(Family::C, 4);
  const FreeWord pa4 = a(8) * a(6).pow(2) * a(4).pow(2) * a(2).pow(2) * a(1);
  EXPECT_NE(std::find(p.relators.begin(), p.relators.end(), canonical_relator(pa4)), p.relators.end());
}

// Printed and descending chains agree for n <= 2.
TEST(Formula, TangencyOrderAgreesForSmallN) {
  for (Family f : {Family::A, Family::B})
    for (unsigned n = 1; n <= 2; ++n) {
      const Presentation d = simplify(formula_relations(f, n, TangencyOrder::descending));
      const Presentation p = simplify(formula_relations(f, n, TangencyOrder::printed));
      EXPECT_EQ(d.relators, p.relators);
    }
  EXPECT_EQ(formula_relations(Family::A, 3, TangencyOrder::printed).meta.at("tangency_order"), "printed");
}

TEST(Target, Shapes) {
  const Presentation a3 = target_presentation(Family::A, 3);
  ASSERT_EQ(a3.relators.size(), 1u);
  EXPECT_EQ(a3.relators[0], (a(1) * a(2) * a(3)).pow(2));
  EXPECT_EQ(target_presentation(Family::B, 3).relators, a3.relators);
  // C4: three commutators, three tangency relations and the square.
  EXPECT_EQ(target_presentation(Family::C, 4).relators.size(), 7u);
  EXPECT_THROW(target_presentation(Family::A, 0), PreconditionError);
}
