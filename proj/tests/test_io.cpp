#include "doctest.h"
#include "json.hpp"
#include "lslink/errors.hpp"
#include "lslink/io.hpp"
#include "lslink/surgery.hpp"

using namespace lslink;
using nlohmann::json;

TEST_CASE("family expansion") {
    ParsedInput wh = expand_family("whitehead");
    REQUIRE(wh.kind == ParsedInput::Kind::Link2);
    CHECK(wh.link->h(0, 0) == 1);

    ParsedInput un = expand_family("unlink2");
    CHECK(un.link->h(0, 0) == 0);

    ParsedInput tk = expand_family("torus 2 5");
    REQUIRE(tk.kind == ParsedInput::Kind::Knot);
    CHECK(tk.lspace_knot_family);
    CHECK(nu_plus(*tk.knot) == 2);

    CHECK(expand_family("unknot").knot->is_unknot());
    CHECK_THROWS_AS(expand_family("figure8"), ParseError);
    CHECK_THROWS_AS(expand_family("torus 2"), ParseError);
}

TEST_CASE("JSON knot inputs") {
    ParsedInput a = parse_input_json(R"({"type":"knot","alexander":"t - 1 + t^-1"})");
    REQUIRE(a.kind == ParsedInput::Kind::Knot);
    CHECK(a.knot->at(0) == 1);
    CHECK(a.knot_alexander.has_value());

    ParsedInput b = parse_input_json(R"({"type":"knot","alexander":[[1,2],[-1,0],[1,-2]]})");
    CHECK(*a.knot == *b.knot);

    ParsedInput c = parse_input_json(
        R"({"type":"knot","h_window":{"radius":1,"values":[1,0,0]}})");
    CHECK(c.knot->is_unknot());

    CHECK_THROWS_AS(parse_input_json(R"({"type":"knot"})"), ParseError);
    CHECK_THROWS_AS(parse_input_json(R"({"alexander":"t"})"), ParseError);
    CHECK_THROWS_AS(parse_input_json("not json at all"), ParseError);
    CHECK_THROWS_AS(
        parse_input_json(R"({"type":"knot","h_window":{"radius":1,"values":[5,0,0]}})"),
        NotLSpaceConsistent);
}

TEST_CASE("JSON link inputs in all three modes") {
    std::string delta =
        "-t1^(1/2)*t2^(1/2) + t1^(1/2)*t2^(-1/2) + t1^(-1/2)*t2^(1/2) - t1^(-1/2)*t2^(-1/2)";
    ParsedInput via_delta =
        parse_input_json(R"({"type":"link2","alexander":")" + delta + R"("})");
    ParsedInput via_tilde =
        parse_input_json(R"({"type":"link2","alexander_tilde":"-t1*t2 + t1 + t2 - 1"})");
    REQUIRE(via_delta.kind == ParsedInput::Kind::Link2);
    CHECK(*via_delta.link == *via_tilde.link);
    CHECK(via_delta.link->h(0, 0) == 1);

    // the known 5x5 Whitehead table, rows s2 = +2..-2
    std::string table = R"({"type":"link2","h_table":{"radius":2,"values":[
        [2,1,0,0,0],
        [2,1,0,0,0],
        [2,1,1,0,0],
        [3,2,1,1,1],
        [4,3,2,2,2]]}})";
    ParsedInput via_table = parse_input_json(table);
    CHECK(*via_table.link == *via_delta.link);

    // same input as reduced h-values
    std::string reduced = R"({"type":"link2","h_table":{"radius":2,"reduced":true,"values":[
        [0,0,0,0,0],
        [0,0,0,0,0],
        [0,0,1,0,0],
        [0,0,0,0,0],
        [0,0,0,0,0]]}})";
    CHECK(*parse_input_json(reduced).link == *via_delta.link);

    // split link with a knotted second component
    std::string split = R"({"type":"link2",
        "components": {"2": "torus 2 3"},
        "h_table": {"radius":2,"values":[
            [2,1,0,0,0],
            [2,1,0,0,0],
            [3,2,1,1,1],
            [3,2,1,1,1],
            [4,3,2,2,2]]}})";
    ParsedInput sp = parse_input_json(split);
    CHECK(sp.link->component(2).at(0) == 1);
    CHECK(nu_plus(blowdown_h(*sp.link, 2)) == 1);

    CHECK_THROWS_AS(parse_input_json(R"({"type":"link2"})"), ParseError);
    CHECK_THROWS_AS(parse_input_json(
                        R"({"type":"link2","alexander":"t1","alexander_tilde":"t1"})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_input_json(R"({"type":"link2","h_table":{"radius":2,"values":[[1,2],[3,4]]}})"),
        ParseError);
}

TEST_CASE("rendered tables and JSON reports") {
    ParsedInput wh = expand_family("whitehead");
    std::string text = table_text(*wh.link);
    CHECK(text.find("radius 3") != std::string::npos);
    CHECK(text.find("6 5 4 3 3 3 3") != std::string::npos);  // bottom row at s2=-3

    json h = json::parse(hfun_json(*wh.link));
    CHECK(h["valid"] == true);
    CHECK(h["radius"] == 3);
    CHECK(h["H"][3][3] == 1);                 // center of the 7x7 table
    CHECK(h["h_support"] == json::array({{0, 0, 1}}));

    json kd = json::parse(hfun_json(*expand_family("torus 2 3").knot));
    CHECK(kd["H"] == json::array({1, 1, 0}));

    std::vector<std::pair<SpincLabel2, Rational>> rows{{{0, 0}, Rational(-7, 4)}};
    json dj = json::parse(dinv_rows_json(2, 1, rows));
    CHECK(dj["rows"][0][2] == "-7/4");

    CHECK(json::parse(beta_json(-1))["beta"] == -1);
    CHECK(json::parse(casson_json(1, -1, -1, 1))["casson"]["+-"] == -1);
    CHECK(json::parse(nuplus_json(2))["nu_plus"] == 2);

    LSpaceRegion region;
    region.exact = true;
    json rj = json::parse(region_json(region));
    CHECK(rj["lspace_region"]["exact"] == true);

    GenusBoundReport rep;
    rep.cap = 3;
    rep.min_total = 1;
    rep.excluded = {{0, 0}};
    json gj = json::parse(genus_json(rep));
    CHECK(gj["genus_lower_bound"]["min_total"] == 1);
}
