#include <catch2/catch_amalgamated.hpp>

#include "a1mod/families.hpp"
#include "a1mod/io.hpp"

using namespace a1mod;

TEST_CASE("module file round trip") {
    for (const A1Module& m : {families::make_Z(), families::make_A(2, 1), joker_module(),
                              families::make_brown_gitler(false, 8)}) {
        std::string text = io::write_module(m);
        A1Module back = io::parse_module(text);
        CHECK(back.lo == m.lo);
        CHECK(back.dims == m.dims);
        for (std::size_t i = 0; i < m.sq1.size(); ++i) {
            CHECK(back.sq1[i] == m.sq1[i]);
            CHECK(back.sq2[i] == m.sq2[i]);
        }
    }
}

TEST_CASE("windows survive the round trip with profiles intact") {
    A1Module p0 = families::make_P0_trunc(12);
    A1Module back = io::parse_module(io::write_module(p0));
    REQUIRE(back.window);
    // the exact bottom edge is widened on write so the conservative loader
    // still trusts every originally-trusted degree
    CHECK(back.window->lo == -9);
    CHECK(back.window->hi == 12);
    CHECK(margolis(back) == margolis(p0));
}

TEST_CASE("empty description gives the zero module") {
    A1Module z = io::parse_module("# nothing here\n");
    CHECK(z.is_zero());
}

TEST_CASE("parse errors carry line information") {
    CHECK_THROWS_AS(io::parse_module("gen x 0\nsq1 x = y\n"), ParseError);
    try {
        io::parse_module("gen x 0\nsq1 x = y\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        CHECK(std::string(e.what()).find("'y'") != std::string::npos);
    }
    // degree mismatch: sq1 must raise degree by exactly 1
    CHECK_THROWS_AS(io::parse_module("gen x 0\ngen y 2\nsq2 x = y\nsq1 x = y\n"), ParseError);
    // relation violation is caught by validation on load
    CHECK_THROWS_AS(io::parse_module("gen x 0\ngen y 2\ngen z 4\nsq2 x = y\nsq2 y = z\n"),
                    ValidationError);
    // duplicate ids
    CHECK_THROWS_AS(io::parse_module("gen x 0\ngen x 1\n"), ParseError);
}

TEST_CASE("the Z example parses to the Z module") {
    A1Module z = io::parse_module("module Z\ngen x -1\ngen y 0\nsq1 x = y\n");
    CHECK(z.lo == -1);
    CHECK(z.dims == std::vector<int>{1, 1});
    CHECK(margolis(z).q1 == std::map<int, int>{{-1, 1}, {0, 1}});
}

TEST_CASE("chart serialization is deterministic and sorted") {
    ExtChart ch = ext_dims(families::make_Z(), 4, 0, 6);
    std::string tsv1 = io::chart_tsv(ch);
    std::string tsv2 = io::chart_tsv(ext_dims(families::make_Z(), 4, 0, 6));
    CHECK(tsv1 == tsv2);
    // sorted lexicographically by (s, t, eps)
    std::istringstream in(tsv1);
    std::string line;
    std::tuple<int, int, int> prev{-1000, -1000, -1000};
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int s, t, eps, d;
        ls >> s >> t >> eps >> d;
        CHECK(prev < std::make_tuple(s, t, eps));
        prev = {s, t, eps};
        CHECK(d > 0);
    }
    std::string svg1 = io::chart_svg(ch);
    std::string svg2 = io::chart_svg(ch);
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<svg") == 0);
}

TEST_CASE("ids must be declared before use in file order") {
    CHECK_THROWS_AS(io::parse_module("gen x -1\nsq1 x = y\ngen y 0\n"), ParseError);
    REQUIRE_NOTHROW(io::parse_module("gen x -1\ngen y 0\nsq1 x = y\n"));
}
