#include <gtest/gtest.h>

#include "oracles/generators.hpp"
#include "shadow/errors.hpp"
#include "shadow/shadowing.hpp"
#include "shadow/transform.hpp"
#include "support.hpp"

using namespace shadow;
using testing_support::F;

TEST(Level, PropositionalAtomIsZero) { EXPECT_EQ(level(F("Rainy")), 0); }

TEST(Level, PredicateWithArgumentsIsOne) { EXPECT_EQ(level(F("(Sleepy jack)")), 1); }

TEST(Level, BeliefIsTwo) { EXPECT_EQ(level(F("(believes a t1 (Sleepy jack))")), 2); }

TEST(Level, ConnectivesOverPropositionsStayZero) { EXPECT_EQ(level(F("(not (or Rainy Windy))")), 0); }

TEST(Level, QuantifierIsAtLeastOne) {
  EXPECT_EQ(level(F("(forall (?x) P)")), 1);
  EXPECT_EQ(level(F("(forall (?x) (believes a t1 (P ?x)))")), 2);
}

TEST(Atomize, RepeatCallGivesSameId) {
  AtomTable table;
  auto a = table.atomize(F("(believes a t1 P)"));
  auto b = table.atomize(F("(believes a t1 P)"));
  EXPECT_EQ(a.id, b.id);
  EXPECT_EQ(table.size(), 1u);
}

TEST(Atomize, AlphaVariantsCollide) {
  AtomTable table;
  auto a = table.atomize(F("(forall (?x) (believes a t1 (P ?x)))"));
  auto b = table.atomize(F("(forall (?y) (believes a t1 (P ?y)))"));
  EXPECT_EQ(a.id, b.id);
}

TEST(Atomize, FreeVariableIsRejected) {
  AtomTable table;
  EXPECT_THROW(table.atomize(F("(believes a t1 (P ?x))")), FreeVariableError);
}

TEST(Atomize, LookupReturnsOriginal) {
  AtomTable table;
  Formula f = F("(goal-of a t2 (Rescue sam))");
  auto atom = table.atomize(f);
  ASSERT_TRUE(table.lookup(atom.id));
  EXPECT_EQ(*table.lookup(atom.id), f);
}

TEST(Shadow, ModalDisjunctIsReplaced) {
  AtomTable table;
  Formula out = shadow::shadow(F("(or (believes a t1 P) R)"), 1, table);
  ASSERT_EQ(out.kind(), Formula::Kind::kOr);
  EXPECT_TRUE(out.left().is_shadow_atom());
  EXPECT_EQ(out.left().shadowed(), F("(believes a t1 P)"));
  EXPECT_EQ(out.right(), F("R"));
  EXPECT_EQ(out.left().predicate(), table.atomize(F("(believes a t1 P)")).id);
}

TEST(Shadow, LevelOneFormulaIsFixed) {
  AtomTable table;
  EXPECT_EQ(shadow::shadow(F("(Sleepy jack)"), 1, table), F("(Sleepy jack)"));
}

TEST(Shadow, NestedBeliefBecomesOneAtom) {
  AtomTable table;
  Formula f = F("(believes a t1 (believes b t1 P))");
  Formula out = shadow::shadow(f, 1, table);
  ASSERT_TRUE(out.is_shadow_atom());
  EXPECT_EQ(out.shadowed(), f);
  EXPECT_EQ(table.size(), 1u);
}

TEST(Shadow, LevelTwoIsIdentity) {
  AtomTable table;
  Formula f = F("(or (believes a t1 P) (forall (?x) (Q ?x)))");
  EXPECT_EQ(shadow::shadow(f, 2, table), f);
}

TEST(Shadow, QuantifierIsReplacedAtLevelZero) {
  AtomTable table;
  Formula out = shadow::shadow(F("(and P (forall (?x) (Q ?x)))"), 0, table);
  EXPECT_EQ(level(out), 0);
  EXPECT_TRUE(out.right().is_shadow_atom());
}

TEST(ShadowSet, SharedInterning) {
  AtomTable table;
  std::vector<Formula> in{F("(believes a t1 P)"), F("(or (believes a t1 P) Q)")};
  auto out = shadow_set(in, 1, table);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], out[1].left());
}

TEST(ShadowSet, EmptySet) {
  AtomTable table;
  EXPECT_TRUE(shadow_set({}, 1, table).empty());
}

TEST(ShadowSet, DistinctBodiesGetDistinctAtoms) {
  AtomTable table;
  std::vector<Formula> in{F("(believes a t1 P)"), F("(believes a t1 Q)")};
  auto out = shadow_set(in, 1, table);
  EXPECT_NE(out[0].predicate(), out[1].predicate());
}

TEST(ShadowProperty, LevelBoundIdempotenceAndRoundTrip) {
  oracle::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    Formula f = oracle::random_closed(rng, 4);
    for (int l = 0; l <= 2; ++l) {
      AtomTable table;
      Formula s = shadow::shadow(f, l, table);
      EXPECT_LE(level(s), l) << render(f);
      EXPECT_EQ(shadow::shadow(s, l, table), s) << render(f);
      EXPECT_TRUE(alpha_equal(unshadow(s), f)) << render(f);
    }
  }
}

TEST(AtomizeProperty, InjectiveUpToAlpha) {
  oracle::Rng rng(12);
  AtomTable table;
  std::vector<Formula> seen;
  std::vector<std::string> ids;
  for (int i = 0; i < 300; ++i) {
    Formula f = oracle::random_closed(rng, 3);
    std::string id = table.atomize(f).id;
    for (std::size_t j = 0; j < seen.size(); ++j) {
      EXPECT_EQ(id == ids[j], alpha_equal(f, seen[j])) << render(f) << " vs " << render(seen[j]);
    }
    seen.push_back(f);
    ids.push_back(id);
  }
}

TEST(AtomizeProperty, RenamedBoundVariablesShareId) {
  oracle::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    Formula f = oracle::random_closed(rng, 3);
    Formula g = Formula::forall("renamed", f);
    Formula h = Formula::forall("other", f);
    AtomTable table;
    EXPECT_EQ(table.atomize(g).id, table.atomize(h).id);
  }
}

TEST(Normalize, RemovesSurfaceConnectives) {
  Formula n = normalize(F("(implies (and P Q) (exists (?x) (R ?x)))"));
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    EXPECT_NE(f.kind(), Formula::Kind::kAnd);
    EXPECT_NE(f.kind(), Formula::Kind::kImplies);
    EXPECT_NE(f.kind(), Formula::Kind::kExists);
    for (const Formula& c : f.children()) walk(c);
  };
  walk(n);
}

TEST(Normalize, StaysInsideModalBodies) {
  Formula n = normalize(F("(believes a t1 (implies P Q))"));
  EXPECT_EQ(n, F("(believes a t1 (or (not P) Q))"));
}

TEST(Closure, BoundVariablesAreQuantifiedInsideBeliefs) {
  EXPECT_EQ(universal_closure(F("(believes a t1 (P ?x))")), F("(believes a t1 (forall (?x) (P ?x)))"));
}
