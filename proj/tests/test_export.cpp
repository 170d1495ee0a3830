#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "qc/export.hpp"

using namespace qc;

namespace {
GoldenRat gr(long n, long d = 1) { return GoldenRat(Rat(n, d)); }
}

TEST_CASE("csv and json round-trips are exact") {
    for (const char* name : {"fibonacci-palindromic", "penrose", "z6"}) {
        Scheme s = preset(name);
        auto pts = enumerate_points(s, gr(5));
        REQUIRE(!pts.empty());
        auto back_csv = points_from_csv(s, points_to_csv(s, pts));
        REQUIRE(back_csv.size() == pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) CHECK(back_csv[i].coords == pts[i].coords);
        auto back_json = points_from_json(s, points_to_json(s, pts));
        REQUIRE(back_json.size() == pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) CHECK(back_json[i].coords == pts[i].coords);
    }
    CHECK_THROWS(points_from_json(preset("fibonacci"), "{\"schema\":\"zzz\"}"));
}

TEST_CASE("coords text round-trip") {
    Coords c = {GoldenInt(2, -3), GoldenInt(0, 7)};
    CHECK(coords_from_text(coords_to_text(c)) == c);
    CHECK_THROWS(coords_from_text("nope"));
}

TEST_CASE("svg and obj renderings") {
    Scheme pen = preset("penrose");
    auto pts = enumerate_points(pen, gr(3));
    std::string svg = points_to_svg(pen, pts);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') >= static_cast<long>(pts.size()));

    Scheme z6 = preset("z6");
    auto zpts = enumerate_points(z6, gr(3, 2));
    std::string obj = points_to_obj(z6, zpts);
    long vcount = 0;
    std::stringstream ss(obj);
    std::string line;
    while (std::getline(ss, line))
        if (line.rfind("v ", 0) == 0) ++vcount;
    CHECK(vcount == static_cast<long>(zpts.size()));
    CHECK_THROWS(points_to_obj(pen, pts));
    CHECK_THROWS(points_to_svg(z6, zpts));
}

TEST_CASE("jordan table rendering over integral labels") {
    Scheme s = preset("fibonacci-palindromic");
    std::vector<Coords> rows, cols;
    for (long n = -4; n <= 4; ++n) rows.push_back({fibonacci_point(n)});
    for (long m = -2; m <= 2; ++m) cols.push_back({fibonacci_point(m)});
    JordanTable t = make_jordan_table(s, rows, cols);
    CHECK(t.row_labels.front() == "L-4");
    CHECK(t.col_labels.back() == "L2");
    std::string md = jordan_table_markdown(t);
    CHECK(md.find("| L-4 |") != std::string::npos);
    CHECK(md.find("1/2(L-7+L1)") != std::string::npos);  // L-4 o L-2
    CHECK(md.find("| L0 |") != std::string::npos);
    // diagonal idempotents render bare
    CHECK(md.find(" L-2 | 1/2(") != std::string::npos);
    std::string csv = jordan_table_csv(t);
    CHECK(csv.find("L-4,1/2(L-7+L1)") != std::string::npos);
    nlohmann::json j = nlohmann::json::parse(jordan_table_json(t));
    CHECK(j["schema"] == "qc.jordan-table/1");
    CHECK(j["cells"].size() == 9);
}

TEST_CASE("group table and roots exports") {
    auto table = build_icosian_group();
    nlohmann::json j = nlohmann::json::parse(group_table_to_json(table));
    CHECK(j["order"] == 120);
    CHECK(j["elements"].size() == 120);
    CHECK(j["product_index"].size() == 120);

    std::string csv = roots_to_csv(build_delta(3));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 32);  // banner + header + 30 roots
}
