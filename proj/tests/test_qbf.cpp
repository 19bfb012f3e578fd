#include "doctest.h"
#include "oracles.hpp"

#include "inqmc/error.hpp"
#include "inqmc/qbf.hpp"

using inqmc::BoolExpr;
using inqmc::BoolValuation;
using inqmc::PropFormula;
using inqmc::Qbf;
using inqmc::Quantifier;

TEST_CASE("parsing QBFs")
{
    const Qbf q = inqmc::parse_qbf("exists x0 : x0");
    CHECK(q.prefix == std::vector<inqmc::QuantifiedVar>{{Quantifier::Exists, 0}});
    CHECK(q.matrix == PropFormula::var(0));

    const Qbf q2 = inqmc::parse_qbf("forall x0 exists x1 : (x0 | x1) & (~x0 | ~x1)");
    CHECK(q2.num_vars() == 2);
    CHECK(q2.prefix[0].quantifier == Quantifier::ForAll);
    CHECK(q2.prefix[1].quantifier == Quantifier::Exists);
    CHECK(q2.matrix
          == PropFormula::conj(PropFormula::disj(PropFormula::var(0), PropFormula::var(1)),
                               PropFormula::disj(PropFormula::neg_var(0), PropFormula::neg_var(1))));

    // Negations are pushed to the variables on parse.
    CHECK(inqmc::parse_qbf("forall x0 forall x1 : ~(x0 & ~x1)").matrix
          == PropFormula::disj(PropFormula::neg_var(0), PropFormula::var(1)));
    // Precedence: ~ binds tighter than &, which binds tighter than |.
    CHECK(inqmc::parse_qbf("exists x0 exists x1 : x0 | x1 & ~x0").matrix
          == PropFormula::disj(PropFormula::var(0), PropFormula::conj(PropFormula::var(1), PropFormula::neg_var(0))));
    CHECK(inqmc::parse_qbf("# header comment\nforall x0\n  : x0 # body\n") == inqmc::parse_qbf("forall x0 : x0"));
}

TEST_CASE("QBF parse errors")
{
    CHECK_THROWS_AS(inqmc::parse_qbf("exists x0 : x1"), inqmc::ClosureError);
    CHECK_THROWS_AS(inqmc::parse_qbf("exists x1 : x1"), inqmc::ParseError);
    CHECK_THROWS_AS(inqmc::parse_qbf("exists x0 exists x0 : x0"), inqmc::ParseError);
    CHECK_THROWS_AS(inqmc::parse_qbf("exists x0 x0"), inqmc::ParseError);
    CHECK_THROWS_AS(inqmc::parse_qbf("exists x0 : (x0"), inqmc::ParseError);
    CHECK_THROWS_AS(inqmc::parse_qbf("exists x0 : x0 x0"), inqmc::ParseError);
    CHECK_THROWS_AS(inqmc::parse_qbf("exists y : y"), inqmc::ParseError);
    CHECK_THROWS_AS(inqmc::parse_qbf(": x0"), inqmc::ClosureError);
    try {
        inqmc::parse_qbf("exists x0 : x0 $");
        FAIL("accepted");
    } catch (const inqmc::ParseError& e) {
        CHECK(e.offset() == 15);
    }
}

TEST_CASE("renaming arbitrary variable names")
{
    const Qbf q = inqmc::parse_qbf("forall a exists b_2 : (a | b_2) & (~a | ~b_2)", true);
    CHECK(q == inqmc::parse_qbf("forall x0 exists x1 : (x0 | x1) & (~x0 | ~x1)"));
    CHECK(inqmc::parse_qbf("exists x1 forall x0 : x1 & x0", true) == inqmc::parse_qbf("exists x0 forall x1 : x0 & x1"));
    CHECK_THROWS_AS(inqmc::parse_qbf("exists a : b", true), inqmc::ClosureError);
    CHECK_THROWS_AS(inqmc::parse_qbf("exists a forall a : a", true), inqmc::ParseError);
}

TEST_CASE("render round trip")
{
    const Qbf q = inqmc::parse_qbf("forall x0 exists x1 : (x0 | x1) & (~x0 | ~x1)");
    CHECK(inqmc::render_qbf(q) == "forall x0 exists x1 : ((x0 | x1) & (~x0 | ~x1))");
    CHECK(inqmc::parse_qbf(inqmc::render_qbf(q)) == q);
}

TEST_CASE("evaluation")
{
    CHECK(inqmc::eval_qbf(inqmc::parse_qbf("exists x0 : x0")));
    CHECK_FALSE(inqmc::eval_qbf(inqmc::parse_qbf("forall x0 : x0")));
    CHECK(inqmc::eval_qbf(inqmc::parse_qbf("forall x0 exists x1 : (x0 | x1) & (~x0 | ~x1)")));
    CHECK_FALSE(inqmc::eval_qbf(inqmc::parse_qbf("exists x0 forall x1 : (x0 | x1) & (~x0 | ~x1)")));
    CHECK(oracle::qbf_by_table(inqmc::parse_qbf("forall x0 exists x1 : (x0 | x1) & (~x0 | ~x1)")));
}

TEST_CASE("propositional evaluation")
{
    CHECK(inqmc::eval_prop(PropFormula::var(0), BoolValuation{{true}}));
    CHECK_FALSE(inqmc::eval_prop(PropFormula::neg_var(0), BoolValuation{{true}}));
    const PropFormula z = PropFormula::conj(PropFormula::var(0), PropFormula::disj(PropFormula::neg_var(0), PropFormula::var(1)));
    CHECK_FALSE(inqmc::eval_prop(z, BoolValuation{{true, false}}));
    // Truth table of z: true only at x0 = x1 = 1.
    for (std::uint64_t code = 0; code < 4; ++code) {
        CHECK(inqmc::eval_prop(z, oracle::valuation_from_code(code, 2)) == (code == 3));
    }
    CHECK_THROWS_AS(inqmc::eval_prop(PropFormula::var(2), BoolValuation{{true}}), inqmc::ReductionError);
}

TEST_CASE("negation normal form")
{
    const BoolExpr x0 = BoolExpr::var(0), x1 = BoolExpr::var(1);
    CHECK(inqmc::to_nnf(BoolExpr::negation(BoolExpr::conj(x0, x1)))
          == PropFormula::disj(PropFormula::neg_var(0), PropFormula::neg_var(1)));
    CHECK(inqmc::to_nnf(BoolExpr::negation(BoolExpr::negation(x0))) == PropFormula::var(0));
    CHECK(inqmc::to_nnf(BoolExpr::negation(BoolExpr::disj(x0, BoolExpr::negation(BoolExpr::conj(x1, x0)))))
          == PropFormula::conj(PropFormula::neg_var(0), PropFormula::conj(PropFormula::var(1), PropFormula::var(0))));
}

TEST_CASE("property: NNF preserves truth tables and at most doubles the size")
{
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 500; ++i) {
        const std::size_t vars = 1 + rng() % 4;
        const BoolExpr f = gen::bool_expr(rng, 1 + rng() % 6, vars);
        const PropFormula g = inqmc::to_nnf(f);
        CHECK(inqmc::prop_node_count(g) <= 2 * inqmc::bool_expr_node_count(f));
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << vars); ++code) {
            const BoolValuation v = oracle::valuation_from_code(code, vars);
            CHECK(inqmc::eval_prop(g, v) == inqmc::eval_bool_expr(f, v));
        }
    }
}

TEST_CASE("random QBFs")
{
    CHECK(inqmc::random_qbf(9, 3, 10) == inqmc::random_qbf(9, 3, 10));
    const Qbf q = inqmc::random_qbf(9, 3, 10);
    CHECK(q.num_vars() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(q.prefix[i].var == i);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Qbf r = inqmc::random_qbf(seed, 3, 12);
        CHECK_NOTHROW(inqmc::validate_qbf(r));
        CHECK(inqmc::prop_node_count(r.matrix) <= 12);
        CHECK(inqmc::parse_qbf(inqmc::render_qbf(r)) == r);
    }
    CHECK(inqmc::prop_node_count(inqmc::random_qbf(1, 2, 1).matrix) == 1);
    CHECK_THROWS_AS(inqmc::random_qbf(1, 0, 4), inqmc::ReductionError);
    CHECK_THROWS_AS(inqmc::random_qbf(1, 2, 0), inqmc::ReductionError);
}

TEST_CASE("property: recursive evaluation agrees with the assignment-table fold")
{
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const Qbf q = inqmc::random_qbf(seed, 1 + seed % 6, 4 + seed % 14);
        CHECK(inqmc::eval_qbf(q) == oracle::qbf_by_table(q));
    }
}
