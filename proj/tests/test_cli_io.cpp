#include "decklab/cli.hpp"
#include "decklab/errors.hpp"
#include "decklab/io.hpp"
#include "decklab/polynomial_parser.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace decklab;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "decklab");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args)
{
    args.push_back("--omit-timing");
    const auto r = run(std::move(args));
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("built-in structures")
{
    auto z2 = builtin_structure("z2");
    REQUIRE(z2.has_value());
    CHECK(z2->field.has_value());
    CHECK(z2->groupoid == cyclic_group(2));
    auto z4 = builtin_structure("z4");
    REQUIRE(z4.has_value());
    CHECK_FALSE(z4->field.has_value());
    REQUIRE(z4->semiring);
    CHECK(z4->semiring->mul(2, 3) == 2);
    CHECK(z4->groupoid == cyclic_group(4));
    auto gf4 = builtin_structure("gf4");
    REQUIRE(gf4.has_value());
    CHECK(gf4->field->q() == 4);
    CHECK(gf4->groupoid.profile().boolean_group);
    auto lat = builtin_structure("lattice2");
    REQUIRE(lat.has_value());
    CHECK(lat->groupoid == max_semilattice(2));
    CHECK_FALSE(lat->semiring->cancellative());
    CHECK_FALSE(builtin_structure("klein").has_value());
    CHECK_FALSE(builtin_structure("z").has_value());
    CHECK_THROWS_AS(builtin_structure("z0"), OutOfRange);
    CHECK_THROWS_AS(builtin_structure("gf6"), NotPrime);
}

TEST_CASE("structure files")
{
    auto s = parse_structure(R"({"order": 2, "add": [[0,1],[1,1]]})");
    CHECK(s.groupoid == max_semilattice(2));
    CHECK_FALSE(s.semiring);
    s = parse_structure(R"({"order": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]], "zero": 0, "one": 1})");
    REQUIRE(s.semiring);
    CHECK(s.semiring->cancellative());

    try {
        parse_structure("{\"order\": 2,\n \"add\": [[0,1],[1,0]\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 1);
    }
    CHECK_THROWS_AS(parse_structure(R"({"add": [[0]]})"), ParseError);
    CHECK_THROWS_AS(parse_structure(R"({"order": "two", "add": [[0]]})"), ParseError);
    CHECK_THROWS_AS(parse_structure(R"({"order": 3, "add": [[0,1],[1,0]]})"), NotSquare);
    CHECK_THROWS_AS(parse_structure(R"({"order": 2, "add": [[0,1],[0,0]]})"), NotCommutative);

    const auto path = temp_file("decklab_semilattice.json", R"({"order": 2, "add": [[0,1],[1,1]]})");
    CHECK(load_structure(path).groupoid == max_semilattice(2));
    CHECK_THROWS_AS(load_structure("/nonexistent/decklab.json"), Error);
}

TEST_CASE("field specifications")
{
    CHECK(parse_field("2_2").q() == 4);
    CHECK(parse_field("gf9").q() == 9);
    CHECK(parse_field("5").q() == 5);
    CHECK(parse_field("3_1").q() == 3);
    CHECK_THROWS_AS(parse_field("6"), NotPrime);
    CHECK_THROWS_AS(parse_field("4_1"), NotPrime);
    CHECK_THROWS_AS(parse_field("x"), ParseError);
    CHECK_THROWS_AS(parse_field("2_"), ParseError);
}

TEST_CASE("function files")
{
    const auto f = parse_function(R"({"a": 2, "b": 2, "n": 2, "table": [0,1,1,0]})");
    CHECK(f.arity() == 2);
    CHECK(to_json(f)["table"] == Json::array({0, 1, 1, 0}));
    CHECK_THROWS_AS(parse_function(R"({"a": 2, "b": 2, "n": 2, "table": [0,1,1]})"), OutOfRange);
    CHECK_THROWS_AS(parse_function(R"({"a": 2, "b": 2, "n": 2})"), ParseError);
}

TEST_CASE("polynomial expressions")
{
    const FiniteField f2 = make_gf(2, 1);
    const auto maj = compile_polynomial("x1*x2 + x1*x3 + x2*x3", f2);
    CHECK(maj.arity() == 3);
    CHECK(maj.table() == std::vector<int>{0, 0, 0, 1, 0, 1, 1, 1});
    CHECK(compile_polynomial("x1 + x2 + 1", f2).table() == std::vector<int>{1, 0, 0, 1});
    CHECK(compile_polynomial("x1", f2, 3) == FiniteFunction::projection(2, 3, 0));

    const FiniteField f3 = make_gf(3, 1);
    CHECK(compile_polynomial("x1^3", f3) == FiniteFunction::projection(3, 1, 0));
    CHECK(compile_polynomial("-x1", f3).table() == std::vector<int>{0, 2, 1});
    CHECK(compile_polynomial("2*(x1 + 1) - 5", f3).table() == std::vector<int>{0, 2, 1});
    CHECK(compile_polynomial("x1^0", f3).table() == std::vector<int>{1, 1, 1});

    const FiniteField f4 = make_gf(2, 2);
    // w is a root of the reduction polynomial x^2 + x + 1
    const auto root = compile_polynomial("w^2 + w + 1 + x1", f4);
    CHECK(root == FiniteFunction::projection(4, 1, 0));

    // random polynomials agree with direct evaluation
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3), c = static_cast<int>(rng() % 3);
        const std::string text = std::to_string(a) + "*x1*x2 + " + std::to_string(b) + "*x2^2 - " + std::to_string(c);
        const auto f = compile_polynomial(text, f3);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
                CHECK(f(std::vector<int>{x, y}) == ((a * x * y + b * y * y - c) % 3 + 3) % 3);
    }

    try {
        compile_polynomial("x1 + * x2", f2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 6);
    }
    CHECK_THROWS_AS(compile_polynomial("(x1", f2), ParseError);
    CHECK_THROWS_AS(compile_polynomial("x0", f2), ParseError);
    CHECK_THROWS_AS(compile_polynomial("x1 ^ x2", f2), ParseError);
    CHECK_THROWS_AS(compile_polynomial("x3", f2, 2), ParseError);
}

TEST_CASE("deck command")
{
    const auto j = run_json({"deck", "--groupoid", "z2", "--multiset", "<1,1,1,1>"});
    CHECK(j["tool"] == "decklab");
    CHECK(j["command"] == "deck");
    CHECK(j["seed"] == 1);
    CHECK_FALSE(j.contains("elapsed_ms"));
    REQUIRE(j["deck"]["cards"].size() == 1);
    CHECK(j["deck"]["cards"][0]["card"] == Json::array({0, 1, 1}));
    CHECK(j["deck"]["cards"][0]["mult"] == 6);

    const auto timed = run({"deck", "--groupoid", "z2", "--multiset", "<1,1,1,1>"});
    CHECK(Json::parse(timed.out).contains("elapsed_ms"));

    const auto fn = temp_file("decklab_parity.json", R"({"a": 2, "b": 2, "n": 3, "table": [0,1,1,0,1,0,0,1]})");
    const auto fd = run_json({"deck", "--function", fn});
    CHECK(fd["deck"]["n"] == 3);
    REQUIRE(fd["deck"]["cards"].size() == 1);
    CHECK(fd["deck"]["cards"][0]["class"] == Json::array({0, 0, 1, 1}));
    CHECK(fd["deck"]["cards"][0]["mult"] == 3);
}

TEST_CASE("check command")
{
    auto j = run_json({"check", "--groupoid", "z2", "--multiset", "<1,0,0>"});
    CHECK(j["reconstructible"] == false);
    REQUIRE(j["witnesses"].size() == 1);
    CHECK(j["witnesses"][0]["multiset"] == "<1,1,1>");
    CHECK(j["witnesses"][0]["patterns"][0]["pattern"] == "THM3_II");

    j = run_json({"check", "--field", "2", "--poly", "x1*x2+x1*x3+x2*x3"});
    CHECK(j["affine"] == false);
    CHECK(j["polynomial"]["expression"] == "x1*x2 + x1*x3 + x2*x3");

    j = run_json({"check", "--field", "3_1", "--poly", "x1 + 2*x2 + 1"});
    CHECK(j["affine"] == true);
}

TEST_CASE("other commands")
{
    auto j = run_json({"classify", "--groupoid", "z4", "--multiset", "<1,1,2>", "--multiset", "<2,3,3>"});
    CHECK(j.dump().find("THM3_III") != std::string::npos);

    j = run_json({"verify-theorem", "--n", "5", "--max-order", "3"});
    CHECK(j["pairs_checked"].get<std::uint64_t>() > 0);
    CHECK(j["violations"] == Json::array());
    CHECK(j["falsified"] == false);

    j = run_json({"verify-theorem", "--groupoid", "z2", "--n", "2"});
    CHECK(j["deck_equal_pairs"] == 1);

    j = run_json({"min-cards", "--groupoid", "z2", "--n", "4"});
    CHECK(j["min_cards"] == 6);

    j = run_json({"search", "--groupoid", "z3", "--tuple", "1,1,2"});
    CHECK(j["second"] == "<0,2,2>");
    CHECK(j["shared"] == true);

    j = run_json({"search", "--example1", "--max-order", "3"});
    CHECK(j.dump().find("\"found\":true") != std::string::npos);

    const auto stream = run({"search", "--max-order", "2", "--n", "3", "--omit-timing"});
    CHECK(stream.code == 0);
    CHECK(stream.out.find("THM3_II") != std::string::npos);

    j = run_json({"verify-affine", "--groupoid", "gf3", "--n", "4"});
    CHECK(j["falsified"] == false);
    j = run_json({"verify-affine", "--suite", "willard", "--field", "2", "--n", "4"});
    CHECK(j["confirmed"] == j["depending_on_all"]);

    j = run_json({"gf", "--field", "2_2"});
    CHECK(j["q"] == 4);
    CHECK(j["reduction_polynomial"] == Json::array({1, 1, 1}));

    const auto text = run({"deck", "--groupoid", "z2", "--multiset", "<1,1,1,1>", "--format", "text", "--omit-timing"});
    CHECK(text.code == 0);
    CHECK(text.out.find("tool: decklab") != std::string::npos);
}

TEST_CASE("input errors exit with status 1")
{
    CHECK(run({}).code == 1);
    CHECK(run({"deck"}).code == 1);
    CHECK(run({"deck", "--groupoid", "z2", "--multiset", "<1,1>"}).code == 0);
    CHECK(run({"deck", "--groupoid", "z2", "--multiset", "<1>"}).code == 1);
    CHECK(run({"deck", "--groupoid", "z2", "--multiset", "<0,x>"}).code == 1);
    CHECK(run({"deck", "--groupoid", "z2", "--multiset", "<0,2>"}).code == 1);
    CHECK(run({"deck", "--groupoid", "nope.json", "--multiset", "<0,1>"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"deck", "--groupoid", "z2", "--format", "xml", "--multiset", "<0,1>"}).code == 1);
    CHECK(run({"check", "--poly", "x1"}).code == 1);
    const auto bad = temp_file("decklab_bad.json", "{\"order\": 2,\n \"add\": [[0,1],[1,0]\n}");
    const auto r = run({"deck", "--groupoid", bad, "--multiset", "<0,1>"});
    CHECK(r.code == 1);
    CHECK(r.err.find("3") != std::string::npos);
    CHECK(run({"verify-affine", "--suite", "willard", "--field", "3", "--n", "3"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumeration caps")
{
    const auto capped = run({"check", "--groupoid", "z4", "--multiset", "<0,1,2,3,0>", "--cap", "10"});
    CHECK(capped.code == 1);
    CHECK(capped.err.find("--cap") != std::string::npos);

    ::setenv("DECKLAB_CAP", "10", 1);
    CHECK(run({"check", "--groupoid", "z4", "--multiset", "<0,1,2,3,0>"}).code == 1);
    CHECK(run({"check", "--groupoid", "z4", "--multiset", "<0,1,2,3,0>", "--cap", "1000"}).code == 0);
    ::setenv("DECKLAB_CAP", "zero", 1);
    CHECK(run({"check", "--groupoid", "z4", "--multiset", "<0,1,2,3,0>"}).code == 1);
    ::unsetenv("DECKLAB_CAP");
    CHECK(run({"check", "--groupoid", "z4", "--multiset", "<0,1,2,3,0>"}).code == 0);
}

TEST_CASE("reports do not depend on the worker count")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"verify-theorem", "--n", "3", "--max-order", "3"},
             {"verify-affine", "--suite", "recognizability", "--field", "3", "--n", "4", "--samples", "500"},
             {"verify-affine", "--suite", "bridge", "--samples", "100", "--seed", "4"},
             {"search", "--max-order", "5", "--n", "3", "--random", "--samples", "300", "--limit", "20"}}) {
        auto one = args;
        one.insert(one.end(), {"--workers", "1", "--omit-timing"});
        auto eight = args;
        eight.insert(eight.end(), {"--workers", "8", "--omit-timing"});
        const auto a = run(one);
        const auto b = run(eight);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
