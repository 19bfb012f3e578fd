#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "inqmc/error.hpp"
#include "inqmc/model.hpp"

using fixtures::st;
using inqmc::InfoState;
using inqmc::InformationModel;

TEST_CASE("state bitstrings read left to right from world 0")
{
    const InfoState s = st("101");
    CHECK(s.width() == 3);
    CHECK(s.contains(0));
    CHECK_FALSE(s.contains(1));
    CHECK(s.contains(2));
    CHECK(s.to_string() == "101");
    CHECK_THROWS_AS(InfoState::from_string("10a"), inqmc::CodecError);
    CHECK_THROWS_AS(InfoState::from_string(std::string(65, '0')), inqmc::CodecError);
}

TEST_CASE("validation")
{
    CHECK_NOTHROW(inqmc::validate_model(fixtures::three_world_model()));
    CHECK_NOTHROW(inqmc::validate_model(fixtures::three_world_model(true)));

    InformationModel empty;
    try {
        inqmc::validate_model(empty);
        FAIL("n = 0 accepted");
    } catch (const inqmc::ValidationError& e) {
        CHECK(std::string(e.what()).find("worlds") != std::string::npos);
    }

    InformationModel m = fixtures::three_world_model();
    (*m.sigma)[0].clear();
    try {
        inqmc::validate_model(m);
        FAIL("empty sigma accepted");
    } catch (const inqmc::ValidationError& e) {
        CHECK(std::string(e.what()).find("sigma") != std::string::npos);
        CHECK(std::string(e.what()).find("w0") != std::string::npos);
    }

    m = fixtures::three_world_model();
    (*m.sigma)[2].push_back(st("110"));
    CHECK_THROWS_AS(inqmc::validate_model(m), inqmc::ValidationError);

    m = fixtures::three_world_model();
    (*m.sigma)[1].push_back(st("010"));  // subset of {w1, w2}: redundant but allowed
    CHECK_NOTHROW(inqmc::validate_model(m));

    m = fixtures::three_world_model();
    m.valuation[1] = st("11");
    CHECK_THROWS_AS(inqmc::validate_model(m), inqmc::ValidationError);
}

TEST_CASE("encoding of the three-world model with an empty atom")
{
    const auto enc = inqmc::encode_model(fixtures::three_world_model(true));
    CHECK(enc.delta == "110010100");
    REQUIRE(enc.epsilons.size() == 3);
    CHECK(enc.epsilons[0] == "00011");
    CHECK(enc.epsilons[1] == "010000111");
    CHECK(enc.epsilons[2] == "011001011");
    CHECK(inqmc::decode_model(enc.delta, enc.epsilons, 3, 3) == fixtures::three_world_model(true));
}

TEST_CASE("encoding of a single-world InqB model")
{
    InformationModel m;
    m.worlds = 1;
    m.atoms = 1;
    m.valuation = {st("0")};
    const auto enc = inqmc::encode_model(m);
    CHECK(enc.delta == "0");
    CHECK(enc.epsilons.empty());
}

TEST_CASE("decode errors")
{
    CHECK_THROWS_AS(inqmc::decode_model("11", {}, 1, 1), inqmc::CodecError);
    try {
        inqmc::decode_model("0", {"0011"}, 1, 1);
        FAIL("bad epsilon accepted");
    } catch (const inqmc::CodecError& e) {
        CHECK(std::string(e.what()).find("terminator") != std::string::npos);
    }
    CHECK_THROWS_AS(inqmc::decode_model("0", {"010"}, 1, 1), inqmc::CodecError);    // no terminal 1
    CHECK_THROWS_AS(inqmc::decode_model("0", {"101"}, 1, 1), inqmc::CodecError);    // bad separator
    CHECK_THROWS_AS(inqmc::decode_model("0", {"1"}, 1, 1), inqmc::ValidationError);  // Σ(w0) empty
    CHECK_THROWS_AS(inqmc::decode_model("02", {}, 2, 1), inqmc::CodecError);
    CHECK_THROWS_AS(inqmc::decode_model("00", {"011"}, 2, 1), inqmc::CodecError);   // one epsilon for two worlds
}

TEST_CASE("sigma union and image")
{
    const InformationModel m = fixtures::three_world_model();
    CHECK(inqmc::sigma_union(m, 2) == st("111"));
    CHECK(inqmc::sigma_union(m, 0) == st("001"));
    CHECK(inqmc::sigma_image(m, st("100")) == std::vector<InfoState>{st("001")});
    CHECK(inqmc::sigma_image(m, st("000")).empty());
    CHECK(inqmc::sigma_image(m, st("011")) == std::vector<InfoState>{st("100"), st("011"), st("110"), st("101")});

    InformationModel single = m;
    (*single.sigma)[0] = {st("000")};
    CHECK(inqmc::sigma_union(single, 0) == st("000"));

    InformationModel inqb = m;
    inqb.sigma.reset();
    CHECK_THROWS_AS(inqmc::sigma_union(inqb, 0), inqmc::QueryError);
    CHECK_THROWS_AS(inqmc::sigma_image(inqb, st("111")), inqmc::QueryError);
}

TEST_CASE("sigma image removes duplicates across worlds")
{
    InformationModel m = fixtures::three_world_model();
    (*m.sigma)[0] = {st("100")};
    CHECK(inqmc::sigma_image(m, st("110")) == std::vector<InfoState>{st("100"), st("011")});
}

TEST_CASE("downward closure")
{
    CHECK(inqmc::downward_closure({st("110")}) == std::vector<InfoState>{st("000"), st("100"), st("010"), st("110")});
    CHECK(inqmc::downward_closure({}).empty());
    CHECK(inqmc::downward_closure({st("10"), st("01")}) == std::vector<InfoState>{st("00"), st("10"), st("01")});
}

TEST_CASE("model text format")
{
    const InformationModel m = fixtures::three_world_model(true);
    const std::string text = inqmc::render_model(m);
    CHECK(text == "inqmodel v1\natoms 3\nworlds 3\ndelta 110010100\nepsilon 0 00011\nepsilon 1 010000111\n"
                  "epsilon 2 011001011\n");
    CHECK(inqmc::parse_model(text) == m);
    CHECK(inqmc::parse_model("# comment\ninqmodel v1\n\natoms 1   # l\nworlds 2\ndelta 10\n").kind()
          == inqmc::ModelKind::InqB);

    CHECK_THROWS_AS(inqmc::parse_model("inqmodel v2\n"), inqmc::ParseError);
    CHECK_THROWS_AS(inqmc::parse_model("inqmodel v1\natoms 1\nworlds 1\n"), inqmc::ParseError);
    CHECK_THROWS_AS(inqmc::parse_model("inqmodel v1\natoms x\nworlds 1\ndelta 1\n"), inqmc::ParseError);
    CHECK_THROWS_AS(inqmc::parse_model("inqmodel v1\natoms 1\nworlds 2\ndelta 1\n"), inqmc::CodecError);
    CHECK_THROWS_AS(inqmc::parse_model("inqmodel v1\natoms 1\nworlds 2\ndelta 10\nepsilon 1 0101\nepsilon 0 0101\n"),
                    inqmc::ParseError);
    CHECK_THROWS_AS(inqmc::parse_model("inqmodel v1\natoms 1\nworlds 2\ndelta 10\nepsilon 0 0101\n"),
                    inqmc::ParseError);
    CHECK_THROWS_AS(inqmc::parse_model("inqmodel v1\natoms 1\nworlds 0\ndelta\n"), inqmc::ValidationError);
}

TEST_CASE("random models are deterministic and valid")
{
    CHECK(inqmc::render_model(inqmc::random_model(5, 3, 2, 2)) == inqmc::render_model(inqmc::random_model(5, 3, 2, 2)));
    CHECK(inqmc::random_model(5, 3, 2, 2).kind() == inqmc::ModelKind::InqM);
    CHECK(inqmc::random_model(5, 3, 2, 0).kind() == inqmc::ModelKind::InqB);
    CHECK_THROWS_AS(inqmc::random_model(1, 0, 1, 1), inqmc::ValidationError);
    // 2^1 = 2 distinct states exist over one world, so at most 2 generators.
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK((*inqmc::random_model(seed, 1, 1, 5).sigma)[0].size() <= 2);
}

TEST_CASE("property: codec round trip and string lengths")
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = 1 + rng() % 6;
        const std::size_t l = rng() % 5;
        const std::size_t k = rng() % 4;
        const InformationModel m = inqmc::random_model(rng(), n, l, k);
        const auto enc = inqmc::encode_model(m);
        CHECK(enc.delta.size() == n * l);
        if (m.sigma) {
            for (std::size_t w = 0; w < n; ++w) CHECK(enc.epsilons[w].size() == (n + 1) * (*m.sigma)[w].size() + 1);
        }
        CHECK(inqmc::decode_model(enc.delta, enc.epsilons, n, l) == m);
        CHECK(inqmc::parse_model(inqmc::render_model(m)) == m);
    }
}

TEST_CASE("property: closure never enlarges the sigma union")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const InformationModel m = inqmc::random_model(rng(), 1 + rng() % 5, 1, 3);
        const InformationModel closed = inqmc::close_sigma(m);
        for (std::size_t w = 0; w < m.worlds; ++w) CHECK(inqmc::sigma_union(m, w) == inqmc::sigma_union(closed, w));
    }
}
