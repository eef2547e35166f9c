#include <gtest/gtest.h>

#include <set>

#include "oracles/generators.hpp"
#include "oracles/truth_table.hpp"
#include "shadow/errors.hpp"
#include "shadow/fo/clause.hpp"
#include "shadow/fo/cnf.hpp"
#include "shadow/fo/prover.hpp"
#include "shadow/fo/unify.hpp"
#include "shadow/transform.hpp"
#include "support.hpp"

using namespace shadow;
using namespace shadow::fo;
using testing_support::C;
using testing_support::F;
using testing_support::T;

namespace {

std::string norm(const LiteralList& c) { return render(normalize_clause(c)); }

std::set<std::string> rendered(const std::vector<LiteralList>& clauses) {
  std::set<std::string> out;
  for (const auto& c : clauses) out.insert(norm(c));
  return out;
}

std::size_t resolution_steps(const Result& r) {
  std::set<std::size_t> seen;
  std::vector<std::size_t> stack{*r.refutation};
  std::size_t count = 0;
  while (!stack.empty()) {
    std::size_t id = stack.back();
    stack.pop_back();
    if (!seen.insert(id).second) continue;
    if (r.clauses[id].origin.rule == Origin::Rule::kResolve) ++count;
    for (std::size_t p : r.clauses[id].origin.parents) stack.push_back(p);
  }
  return count;
}

std::vector<Term> ground_terms() {
  std::vector<Term> base{Term::constant("c"), Term::constant("d")};
  std::vector<Term> out = base;
  for (const Term& t : base) out.push_back(Term::app("f", {t}));
  for (const Term& a : base) {
    for (const Term& b : base) out.push_back(Term::app("g", {a, b}));
  }
  for (const Term& t : std::vector<Term>(out.begin() + 2, out.end())) out.push_back(Term::app("f", {t}));
  return out;
}

}  // namespace

TEST(Unify, VariableAgainstConstant) {
  auto s = unify(T("?x"), T("c"));
  ASSERT_TRUE(s);
  EXPECT_EQ(shadow::apply(*s, T("?x")), T("c"));
}

TEST(Unify, PropagatesThroughFunctionTerms) {
  auto s = unify_atoms(F("(P ?x (f ?x))"), F("(P c ?y)"));
  ASSERT_TRUE(s);
  EXPECT_EQ(shadow::apply(*s, T("?x")), T("c"));
  EXPECT_EQ(shadow::apply(*s, T("?y")), T("(f c)"));
  EXPECT_EQ(s->size(), 2u);
}

TEST(Unify, OccursCheck) { EXPECT_FALSE(unify(T("?x"), T("(f ?x)"))); }

TEST(Unify, ClashingHeads) {
  EXPECT_FALSE(unify(T("(f ?x)"), T("(g ?x ?y)")));
  EXPECT_FALSE(unify_atoms(F("(P c)"), F("(Q c)")));
}

TEST(UnifyProperty, IdempotentResult) {
  oracle::Rng rng(31);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 500; ++i) {
    Term a = oracle::random_term(rng, 3, vars);
    Term b = oracle::random_term(rng, 3, vars);
    auto s = unify(a, b);
    if (!s) continue;
    EXPECT_EQ(shadow::apply(*s, a), shadow::apply(*s, b));
    for (const auto& [v, t] : *s) {
      EXPECT_EQ(shadow::apply(*s, t), t);
      EXPECT_FALSE(t.occurs(v));
    }
  }
}

TEST(UnifyProperty, EveryGroundUnifierFactorsThroughMgu) {
  oracle::Rng rng(32);
  const std::vector<std::string> vars{"x", "y", "z"};
  const std::vector<Term> pool = ground_terms();
  int unifiable = 0;
  for (int i = 0; i < 150; ++i) {
    Term a = oracle::random_term(rng, 2, vars);
    Term b = oracle::random_term(rng, 2, vars);
    auto mgu = unify(a, b);
    for (const Term& tx : pool) {
      for (const Term& ty : pool) {
        for (const Term& tz : pool) {
          Substitution sigma{{"x", tx}, {"y", ty}, {"z", tz}};
          if (shadow::apply(sigma, a) != shadow::apply(sigma, b)) continue;
          ASSERT_TRUE(mgu) << render(a) << " = " << render(b);
          Substitution lambda;
          for (const std::string& v : vars) {
            ASSERT_TRUE(match(shadow::apply(*mgu, Term::variable(v)), sigma.at(v), lambda))
                << render(a) << " = " << render(b);
          }
          ++unifiable;
        }
      }
    }
  }
  EXPECT_GT(unifiable, 0);
}

TEST(Cnf, ImplicationGivesTextbookClause) {
  SkolemTable sk;
  EXPECT_EQ(rendered(cnf(F("(forall (?x) (implies (H ?x) (M ?x)))"), sk)),
            std::set<std::string>{norm(C("(clause (not (H ?x)) (M ?x))"))});
}

TEST(Cnf, ExistentialBecomesSkolemConstant) {
  SkolemTable sk;
  auto clauses = cnf(F("(exists (?x) (P ?x))"), sk);
  ASSERT_EQ(clauses.size(), 1u);
  ASSERT_EQ(clauses[0].size(), 1u);
  const Term& arg = clauses[0][0].atom.args().at(0);
  EXPECT_TRUE(arg.is_ground());
  EXPECT_EQ(arg.name().rfind("$sk", 0), 0u);
}

TEST(Cnf, SkolemFunctionOverGoverningUniversal) {
  SkolemTable sk;
  auto clauses = cnf(F("(forall (?x) (exists (?y) (R ?x ?y)))"), sk);
  ASSERT_EQ(clauses.size(), 1u);
  const Term& y = clauses[0][0].atom.args().at(1);
  ASSERT_EQ(y.args().size(), 1u);
  EXPECT_TRUE(y.args()[0].is_variable());
}

TEST(Cnf, RejectsModalNodes) {
  SkolemTable sk;
  EXPECT_THROW(cnf(F("(believes a t1 P)"), sk), ModalNodeError);
}

TEST(CnfProperty, GroundClausesMatchTruthTable) {
  oracle::Rng rng(33);
  for (int i = 0; i < 400; ++i) {
    Formula f = oracle::random_ground(rng, 4, 4);
    SkolemTable sk;
    auto clauses = cnf(f, sk);
    std::vector<std::string> keys;
    oracle::collect_keys(f, keys);
    std::map<std::string, bool> v;
    for (std::uint32_t bits = 0; bits < (1u << keys.size()); ++bits) {
      for (std::size_t k = 0; k < keys.size(); ++k) v[keys[k]] = (bits >> k) & 1u;
      bool all = true;
      for (const auto& c : clauses) {
        bool any = false;
        for (const Literal& l : c) any = any || (v.at(render(l.atom)) == l.positive);
        all = all && any;
      }
      EXPECT_EQ(all, oracle::evaluate(f, v)) << render(f);
    }
  }
}

TEST(Resolve, UnitAgainstImplication) {
  auto rs = resolve(C("(clause (P c))"), C("(clause (not (P ?x)) (Q ?x))"));
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(norm(rs[0].clause), norm(C("(clause (Q c))")));
}

TEST(Resolve, EmptyClause) {
  auto rs = resolve(C("(clause (P ?x))"), C("(clause (not (P (f ?y))))"));
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_TRUE(rs[0].clause.empty());
}

TEST(Resolve, NothingWhenNoComplement) {
  EXPECT_TRUE(resolve(C("(clause (P c))"), C("(clause (P d))")).empty());
  EXPECT_TRUE(resolve(C("(clause (P c))"), C("(clause (not (P d)))")).empty());
}

TEST(Factor, MergesUnifiableLiterals) {
  auto fs = factors(C("(clause (P ?x) (P (f ?y)))"));
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(norm(fs[0].clause), norm(C("(clause (P (f ?y)))")));
  ASSERT_TRUE(fs[0].theta.count("x"));
  EXPECT_EQ(fs[0].theta.at("x").name(), "f");
}

TEST(Factor, ExhaustivePairEnumeration) {
  oracle::Rng rng(34);
  const std::vector<std::string> vars{"x", "y"};
  for (int i = 0; i < 200; ++i) {
    LiteralList c;
    for (int k = 0; k < 3; ++k) c.push_back(Literal{true, Formula::atom("R", {oracle::random_term(rng, 2, vars)})});
    std::set<std::string> expected;
    for (std::size_t p = 0; p < c.size(); ++p) {
      for (std::size_t q = p + 1; q < c.size(); ++q) {
        auto s = unify_atoms(c[p].atom, c[q].atom);
        if (!s) continue;
        LiteralList f = shadow::substitute(c, *s);
        f.erase(f.begin() + static_cast<long>(q));
        expected.insert(norm(f));
      }
    }
    std::set<std::string> got;
    for (const auto& f : factors(c)) got.insert(norm(f.clause));
    for (const auto& e : expected) EXPECT_TRUE(got.count(e)) << render(c) << " missing " << e;
  }
}

TEST(ProveFo, TwoResolutionSteps) {
  SkolemTable sk;
  std::vector<Formula> ax{F("(forall (?x) (or (not (H ?x)) (M ?x)))"), F("(H s)")};
  Result r = prove_fo(ax, F("(M s)"), {}, sk);
  ASSERT_EQ(r.verdict, Verdict::kProved);
  ASSERT_TRUE(r.refutation);
  EXPECT_TRUE(r.clauses[*r.refutation].literals.empty());
  EXPECT_EQ(resolution_steps(r), 2u);
}

TEST(ProveFo, SaturationFails) {
  SkolemTable sk;
  std::vector<Formula> ax{F("P")};
  EXPECT_EQ(prove_fo(ax, F("Q"), {}, sk).verdict, Verdict::kFailed);
}

TEST(ProveFo, TautologyFromNothing) {
  SkolemTable sk;
  EXPECT_EQ(prove_fo({}, F("(or P (not P))"), {}, sk).verdict, Verdict::kProved);
}

TEST(ProveFo, GeneratedLimit) {
  SkolemTable sk;
  std::vector<Formula> ax{F("(N z)"), F("(forall (?x) (implies (N ?x) (N (s ?x))))")};
  Limits limits;
  limits.max_generated = 50;
  Result r = prove_fo(ax, F("Q"), limits, sk);
  EXPECT_EQ(r.verdict, Verdict::kExhausted);
  EXPECT_EQ(r.limit, LimitKind::kGenerated);
}

TEST(ProveFo, ClauseSizeLimit) {
  SkolemTable sk;
  std::vector<Formula> ax{F("(forall (?x ?y) (implies (and (E ?x ?y) (V ?x)) (V ?y)))")};
  Limits limits;
  limits.max_literals = 4;
  Result r = prove_fo(ax, F("Q"), limits, sk);
  EXPECT_EQ(r.verdict, Verdict::kExhausted);
  EXPECT_EQ(r.limit, LimitKind::kClauseSize);
}

TEST(ProveFo, TimeLimit) {
  SkolemTable sk;
  std::vector<Formula> ax{F("(N z)"), F("(forall (?x) (implies (N ?x) (N (s ?x))))")};
  Limits limits;
  limits.timeout_ms = 0;
  limits.max_generated = 1000000000;
  Result r = prove_fo(ax, F("Q"), limits, sk);
  EXPECT_EQ(r.verdict, Verdict::kExhausted);
  EXPECT_EQ(r.limit, LimitKind::kTime);
}

TEST(ProveAnswer, TwoWitnesses) {
  SkolemTable sk;
  std::vector<Formula> ax{F("(H s)"), F("(H p)")};
  std::vector<std::string> q{"x"};
  Result r = prove_answer(ax, F("(H ?x)"), q, {}, 10, sk);
  ASSERT_EQ(r.verdict, Verdict::kProved);
  std::set<std::string> got;
  for (const Answer& a : r.answers) got.insert(render(a.values.at(0)));
  EXPECT_EQ(got, (std::set<std::string>{"s", "p"}));
}

TEST(ProveAnswer, NoWitness) {
  SkolemTable sk;
  std::vector<Formula> ax{F("(H s)")};
  std::vector<std::string> q{"x"};
  Result r = prove_answer(ax, F("(M ?x)"), q, {}, 10, sk);
  EXPECT_EQ(r.verdict, Verdict::kFailed);
  EXPECT_TRUE(r.answers.empty());
}

TEST(ProveAnswer, SchematicAnswer) {
  SkolemTable sk;
  std::vector<Formula> ax{F("(forall (?y) (P (f ?y)))")};
  std::vector<std::string> q{"x"};
  Result r = prove_answer(ax, F("(P ?x)"), q, {}, 10, sk);
  ASSERT_EQ(r.verdict, Verdict::kProved);
  ASSERT_EQ(r.answers.size(), 1u);
  const Term& v = r.answers[0].values.at(0);
  EXPECT_EQ(v.name(), "f");
  EXPECT_FALSE(v.is_ground());
}

TEST(ProveAnswer, MaxAnswers) {
  SkolemTable sk;
  std::vector<Formula> ax{F("(H s)"), F("(H p)"), F("(H q)")};
  std::vector<std::string> q{"x"};
  EXPECT_EQ(prove_answer(ax, F("(H ?x)"), q, {}, 1, sk).answers.size(), 1u);
}

TEST(GroundOracle, AgreesWithTruthTable) {
  oracle::Rng rng(35);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_ground_problem(rng);
    SkolemTable sk;
    Result r = prove_fo(p.premises, p.goal, {}, sk);
    ASSERT_NE(r.verdict, Verdict::kExhausted);
    EXPECT_EQ(r.verdict == Verdict::kProved, oracle::entails(p.premises, p.goal)) << render(p.goal);
  }
}

TEST(Subsumption, AncestorsOfRefutationSurvive) {
  SkolemTable sk;
  std::vector<Formula> ax{F("(forall (?x) (or (not (H ?x)) (M ?x)))"), F("(H s)"), F("(or (H s) Q)")};
  Result r = prove_fo(ax, F("(M s)"), {}, sk);
  ASSERT_TRUE(r.refutation);
  std::vector<std::size_t> stack{*r.refutation};
  while (!stack.empty()) {
    std::size_t id = stack.back();
    stack.pop_back();
    ASSERT_LT(id, r.clauses.size());
    for (std::size_t p : r.clauses[id].origin.parents) stack.push_back(p);
  }
}

TEST(ClauseFormula, ClosedLiteralsStayOutsideQuantifier) {
  Formula f = clause_to_formula(C("(clause (P ?x) Q)"));
  ASSERT_EQ(f.kind(), Formula::Kind::kOr);
  EXPECT_EQ(f.left().kind(), Formula::Kind::kForall);
  EXPECT_EQ(f.right(), F("Q"));
}
