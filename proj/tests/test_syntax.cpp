#include "doctest.h"
#include "oracles.hpp"

#include "inqmc/error.hpp"
#include "inqmc/formula.hpp"

using inqmc::Formula;
using inqmc::parse_formula;
using inqmc::render_formula;

TEST_CASE("derived forms expand on parse")
{
    CHECK(parse_formula("p1 ior not p1")
          == Formula::ivee(Formula::atom(1), Formula::implies(Formula::atom(1), Formula::bottom())));
    CHECK(parse_formula("bot") == Formula::bottom());
    CHECK(parse_formula("? p0") == parse_formula("p0 ior (p0 -> bot)"));

    const Formula neg0 = Formula::implies(Formula::atom(0), Formula::bottom());
    const Formula neg1 = Formula::implies(Formula::atom(1), Formula::bottom());
    CHECK(parse_formula("p0 or p1") == Formula::implies(Formula::conj(neg0, neg1), Formula::bottom()));
}

TEST_CASE("unknown identifiers are rejected")
{
    try {
        parse_formula("wbox (q)");
        FAIL("expected a parse error");
    } catch (const inqmc::ParseError& e) {
        CHECK(e.offset() == 6);
        CHECK_FALSE(e.expected().empty());
    }
    CHECK_THROWS_AS(parse_formula("p"), inqmc::ParseError);
    CHECK_THROWS_AS(parse_formula("px1"), inqmc::ParseError);
}

TEST_CASE("malformed input reports the offset")
{
    auto offset_of = [](const char* text) {
        try {
            parse_formula(text);
        } catch (const inqmc::ParseError& e) {
            return e.offset();
        }
        return std::size_t{9999};
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("p0 &") == 4);
    CHECK(offset_of("(p0 ior p1") == 10);
    CHECK(offset_of("p0 p1") == 3);
    CHECK(offset_of("p0 $ p1") == 3);
    CHECK(offset_of("p99999999999999999999999") == 0);
}

TEST_CASE("ior and or do not mix without parentheses")
{
    CHECK_THROWS_AS(parse_formula("p0 ior p1 or p2"), inqmc::ParseError);
    CHECK_THROWS_AS(parse_formula("p0 or p1 ior p2"), inqmc::ParseError);
    CHECK_NOTHROW(parse_formula("(p0 ior p1) or p2"));
    CHECK_NOTHROW(parse_formula("p0 ior p1 ior p2"));
}

TEST_CASE("precedence and associativity")
{
    const Formula p0 = Formula::atom(0), p1 = Formula::atom(1), p2 = Formula::atom(2);
    CHECK(parse_formula("p0 -> p1 -> p2") == Formula::implies(p0, Formula::implies(p1, p2)));
    CHECK(parse_formula("p0 & p1 ior p2") == Formula::ivee(Formula::conj(p0, p1), p2));
    CHECK(parse_formula("p0 ior p1 & p2") == Formula::ivee(p0, Formula::conj(p1, p2)));
    CHECK(parse_formula("p0 ior p1 ior p2") == Formula::ivee(Formula::ivee(p0, p1), p2));
    CHECK(parse_formula("p0 ior p1 -> p2") == Formula::implies(Formula::ivee(p0, p1), p2));
    CHECK(parse_formula("box p0 & p1") == Formula::conj(Formula::box(p0), p1));
    CHECK(parse_formula("not box wbox p2") == Formula::negation(Formula::box(Formula::wbox(p2))));
}

TEST_CASE("whitespace and comments are ignored")
{
    CHECK(parse_formula("  p0\n&\tp1 # trailing comment\n") == parse_formula("p0&p1"));
    CHECK(parse_formula("# header\n( p3 )") == Formula::atom(3));
}

TEST_CASE("rendering")
{
    CHECK(render_formula(Formula::ivee(Formula::atom(0), Formula::atom(1))) == "(p0 ior p1)");
    CHECK(render_formula(Formula::bottom()) == "bot");
    CHECK(render_formula(Formula::wbox(Formula::atom(2))) == "wbox p2");
    CHECK(render_formula(parse_formula("not p0")) == "(p0 -> bot)");
}

TEST_CASE("size measure")
{
    CHECK(inqmc::formula_size(Formula::bottom()) == 1);
    CHECK(inqmc::formula_size(Formula::conj(Formula::atom(0), Formula::atom(0))) == 5);
    CHECK(inqmc::formula_size(Formula::implies(Formula::atom(7), Formula::bottom())) == 7);
    // ceil(log2(i + 2)) at the power-of-two boundaries
    CHECK(inqmc::formula_size(Formula::atom(2)) == 3);
    CHECK(inqmc::formula_size(Formula::atom(6)) == 4);
}

TEST_CASE("property: render then parse is the identity")
{
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 500; ++i) {
        const Formula f = gen::formula(rng, 1 + rng() % 8, 20, true);
        const std::string text = render_formula(f);
        INFO(text);
        CHECK(parse_formula(text) == f);
    }
}

TEST_CASE("property: size dominates node count and is monotone under subterms")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Formula f = gen::formula(rng, 1 + rng() % 6, 40, true);
        CHECK(inqmc::formula_size(f) >= inqmc::node_count(f));
        if (f.is_binary()) {
            CHECK(inqmc::formula_size(f) > inqmc::formula_size(f.lhs()));
            CHECK(inqmc::formula_size(f) > inqmc::formula_size(f.rhs()));
        } else if (f.is_modal()) {
            CHECK(inqmc::formula_size(f) > inqmc::formula_size(f.operand()));
        }
    }
}

TEST_CASE("shared subterms are measured per occurrence")
{
    Formula f = Formula::atom(0);
    for (int i = 0; i < 40; ++i) f = Formula::conj(f, f);  // 2^41 - 1 tree nodes, 41 distinct
    CHECK(inqmc::node_count(f) == (std::size_t{1} << 41) - 1);
    CHECK(inqmc::max_atom_index(f) == 0);
}
