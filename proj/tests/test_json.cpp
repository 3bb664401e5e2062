#include <doctest.h>

#include "helpers.hpp"
#include "stabkit/constructors.hpp"
#include "stabkit/error.hpp"
#include "stabkit/families.hpp"
#include "stabkit/json_io.hpp"

using namespace stabkit;

TEST_CASE("representation JSON round trips byte for byte") {
    auto f = fixture_reps();
    for (const auto& rep : {f.k33.rep, f.k44.rep, rep_F(3, FMode::RootsOnly), grid_rep(3, 4).rep}) {
        std::string a = dump_json(rep_to_json(rep));
        auto back = parse_rep(a);
        CHECK(dump_json(rep_to_json(back)) == a);
        CHECK(back.k() == rep.k());
        CHECK(back.size() == rep.size());
    }
    auto r = parse_rep(R"({"stabs": ["1/2"], "rects": {"a": ["0", "3/4", "-1", "2"]}})");
    CHECK(r.stabs[0] == rat(1, 2));
    CHECK(r.rects[0].x_hi == rat(3, 4));
}

TEST_CASE("malformed representation JSON") {
    for (const char* bad : {"", "[]", "{\"stabs\": []}", R"({"stabs": [1], "rects": {}})",
                            R"({"stabs": ["0"], "rects": {"a": ["0", "1", "0"]}})",
                            R"({"stabs": ["0"], "rects": {"a": ["0", "1", "0", "x"]}})",
                            R"({"stabs": ["1/0"], "rects": {}})", "{\"stabs\": [\"0\"], \"rects\": "})
        CHECK_THROWS_AS(parse_rep(bad), FormatError);
}

TEST_CASE("report and certificate JSON") {
    auto f = fixture_reps();
    auto rep = validate(f.k44.rep, f.k44.graph, Mode::ESRIG);
    auto j = report_to_json(rep);
    CHECK(j["valid"] == false);
    CHECK(!j["multi_stabbed"].empty());

    Graph g3 = gen_G(3).graph;
    auto cert = *recognize_block_2esrig(g3).cert;
    auto c = certificate_to_json(cert, g3);
    CHECK(c["class"] == "non-interval");
    CHECK(c["parts"].size() == 3);
    CHECK(c["paths"].size() == 6);

    auto s = stab_numbers_to_json(stab_numbers(th::cycle(4)));
    CHECK(s["stab"] == 2);
    StabNumbers none;
    none.k_max = 3;
    CHECK(stab_numbers_to_json(none)["stab"] == ">3");
}
