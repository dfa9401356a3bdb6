#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zeta/graphlab.hpp"
#include "zeta/report.hpp"
#include "zeta/tables.hpp"
#include "zeta/verify.hpp"

using namespace zeta;

#ifndef ZETA_DATA_DIR
#define ZETA_DATA_DIR "data"
#endif

namespace {

std::string data_file(const char* name) {
    return std::string(ZETA_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("loaders parse the shipped reference tables") {
    auto t33 = tables::load_table33_file(data_file("table_3_3.csv"));
    REQUIRE(t33.size() == 22);
    CHECK(t33.front().k == 6);
    CHECK(t33.front().b == doctest::Approx(0.52));
    CHECK(t33.front().a == doctest::Approx(0.208));
    CHECK(t33.front().value == doctest::Approx(1.07429));
    CHECK(t33.front().decimals == 5);
    for (const auto& r : t33) {
        // two rows print only four decimals; the loader must notice
        if (r.k == 14 || r.k == 10001)
            CHECK(r.decimals == 4);
        else
            CHECK(r.decimals == 5);
    }

    auto t42 = tables::load_table42_file(data_file("table_4_2.csv"));
    REQUIRE(t42.size() == 27);
    CHECK(t42.front().k == 5);
    CHECK(t42.back().k == 100000);
    for (const auto& r : t42)
        CHECK(r.best == doctest::Approx(std::max(r.t6_value, r.t7_value))
                            .epsilon(1e-12));

    auto t66 = tables::load_table66_file(data_file("table_6_6.csv"));
    REQUIRE(t66.size() == 480);
    int small_r = 0, exact_one = 0;
    for (const auto& r : t66) {
        small_r += r.r <= 4 ? 1 : 0;
        exact_one += r.value == 1.0 ? 1 : 0;
    }
    CHECK(small_r == 64);
    CHECK(exact_one == 3);
}

TEST_CASE("loaders reject malformed tables") {
    std::istringstream wrong_header("a,b\n1,2\n");
    CHECK_THROWS_AS(tables::load_table33(wrong_header), std::runtime_error);
    std::istringstream short_row("k,b,a,value\n6,0.5,0.2\n");
    CHECK_THROWS_AS(tables::load_table33(short_row), std::runtime_error);
    std::istringstream bad_number("k,b,a,value\n6,0.5,zz,1.1\n");
    CHECK_THROWS_AS(tables::load_table33(bad_number), std::runtime_error);
    std::istringstream empty("# only comments\n");
    CHECK_THROWS_AS(tables::load_table33(empty), std::runtime_error);
    CHECK_THROWS_AS(tables::load_table33_file("data/does_not_exist.csv"),
                    std::runtime_error);
}

TEST_CASE("generators are worker-independent and ordered") {
    auto a = tables::generate_table42({5, 9, 12}, 1);
    auto b = tables::generate_table42({5, 9, 12}, 3);
    REQUIRE(a.size() == 3);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].k == b[i].k);
        CHECK(a[i].t6_value == b[i].t6_value);
        CHECK(a[i].t7_value == b[i].t7_value);
        CHECK(a[i].b_neg == b[i].b_neg);
        CHECK(a[i].b_pos == b[i].b_pos);
        CHECK(a[i].b0 == b[i].b0);
        CHECK(a[i].best == std::max(a[i].t6_value, a[i].t7_value));
    }
    CHECK(a[0].k == 5);
    CHECK(a[2].k == 12);

    auto c = tables::generate_table66({1}, {3, 4}, 3, 1);
    auto d = tables::generate_table66({1}, {3, 4}, 3, 2);
    REQUIRE(c.size() == 2);
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(c[i].value == d[i].value);
        CHECK(c[i].r == d[i].r);
        CHECK(c[i].value == 1.0);  // both cells are trivial
        CHECK(c[i].r == 0);
    }

    CHECK_THROWS_AS(tables::generate_table33({2}, 1), std::domain_error);
    CHECK_THROWS_AS(tables::generate_table42({4}, 1), std::domain_error);
    CHECK_THROWS_AS(tables::generate_table66({0}, {3}, 3, 1),
                    std::domain_error);
    CHECK_THROWS_AS(tables::generate_table66({1}, {3}, 11, 1),
                    std::domain_error);
}

TEST_CASE("diff 4.2 against the shipped reference is clean") {
    auto rep =
        tables::diff_table42(tables::load_table42_file(data_file("table_4_2.csv")), 4);
    CHECK(rep.pass);
    CHECK(rep.rows_checked == 27);
    CHECK(rep.rows_skipped == 0);
    CHECK(rep.max_dev < 1e-6);
    CHECK(rep.failures.empty());
}

TEST_CASE("diff 3.3 flags exactly the six inconsistent reference rows") {
    // Six rows of the shipped 3.3 table carry witness pairs that are either
    // infeasible or do not reproduce the row's value (the values themselves
    // are below the true optima, so they are sound as bounds).  The diff must
    // keep flagging precisely those rows.
    auto rep =
        tables::diff_table33(tables::load_table33_file(data_file("table_3_3.csv")), 4);
    CHECK_FALSE(rep.pass);
    CHECK(rep.rows_checked == 22);
    REQUIRE(rep.failures.size() == 6);
    const char* expected[] = {"k=25:", "k=30:", "k=35:",
                              "k=40:", "k=45:", "k=55:"};
    for (int i = 0; i < 6; ++i)
        CHECK(rep.failures[i].substr(0, std::strlen(expected[i])) ==
              expected[i]);
}

TEST_CASE("diff 6.6 on the m=1 block is clean") {
    auto all = tables::load_table66_file(data_file("table_6_6.csv"));
    std::vector<tables::Row66> m1;
    for (const auto& r : all)
        if (r.m == 1 && r.k <= 12) m1.push_back(r);
    REQUIRE(m1.size() == 10);
    auto rep = tables::diff_table66(m1, 4, 4);
    CHECK(rep.pass);
    CHECK(rep.rows_checked == 10);
    CHECK(rep.max_dev < 1e-3);
}

TEST_CASE("quick verification suites pass") {
    CHECK(verify::suite_sbar(1000).pass);
    CHECK(verify::suite_cscan(200).pass);
    CHECK(verify::suite_rw(100).pass);
    CHECK(verify::suite_cycles(50).pass);
    CHECK(verify::suite_cycle_tuple(20, 8, 3, 4).pass);
    CHECK(verify::suite_oddgirth().pass);
    CHECK(verify::suite_fprank(10, 5, 3, 10).pass);
}

TEST_CASE("graph-backed suites pass at reduced size") {
    auto tri = verify::suite_triangles(10, 2);
    CHECK(tri.pass);
    CHECK(tri.checks.size() == 7);  // one row per n in 4..10
    CHECK(verify::suite_johnson(8, 2).pass);
    CHECK(verify::suite_alpha_dimension(8, 2).pass);
    CHECK(verify::suite_deletion(8, 4, 1, 0.5, 0, 3, 2000, 0xde1e7eull, 2)
              .pass);
}

TEST_CASE("suite caps are validated and guards surface") {
    CHECK_THROWS_AS(verify::suite_triangles(25), std::domain_error);
    CHECK_THROWS_AS(verify::suite_triangles(1), std::domain_error);
    CHECK_THROWS_AS(verify::suite_johnson(15), std::domain_error);
    // n = 18 reaches constructions past the dense-adjacency guard
    CHECK_THROWS_AS(verify::suite_triangles(18, 4),
                    graphlab::SizeGuardError);
}

TEST_CASE("SuiteReport aggregates its checks") {
    verify::SuiteReport rep;
    rep.suite = "demo";
    rep.add("first", true, "ok");
    CHECK(rep.pass);
    rep.add("second", false, "broken");
    CHECK_FALSE(rep.pass);
    CHECK(rep.checks.size() == 2);
    CHECK(rep.checks[1].name == "second");
}

TEST_CASE("format parsing") {
    CHECK(report::parse_format("csv") == report::Format::csv);
    CHECK(report::parse_format("json") == report::Format::json);
    CHECK(report::parse_format("pretty") == report::Format::pretty);
    CHECK_THROWS_AS(report::parse_format("xml"), std::invalid_argument);
}

TEST_CASE("record rendering: csv escaping and json schema") {
    std::vector<report::Record> recs{
        {"T4", {{"k", 6.0}, {"b", 0.52}}, 1.07429, true, "plain"},
        {"T6", {{"k", 10.0}}, 1.078, false, "with, comma and \"quote\""}};
    auto csv = report::render_records(recs, report::Format::csv);
    CHECK(csv.find("method,params,value,valid,evidence\n") == 0);
    CHECK(csv.find("T4,k=6;b=0.52,1.07429,1,plain\n") != std::string::npos);
    CHECK(csv.find("\"with, comma and \"\"quote\"\"\"") != std::string::npos);

    auto parsed =
        nlohmann::json::parse(report::render_records(recs, report::Format::json));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["method"] == "T4");
    CHECK(parsed[0]["params"]["k"] == 6.0);
    CHECK(parsed[0]["value"] == doctest::Approx(1.07429));
    CHECK(parsed[0]["valid"] == true);
    CHECK(parsed[1]["valid"] == false);
}

TEST_CASE("table and suite rendering") {
    std::vector<tables::Row33> rows{{6, 0.52, 0.208, 1.07429, 5}};
    auto pretty = report::render_table33(rows, report::Format::pretty);
    CHECK(pretty.find("6, 0.52, 0.208, 1.07429") != std::string::npos);
    auto csv = report::render_table33(rows, report::Format::csv);
    CHECK(csv.find("T4,") != std::string::npos);

    std::vector<tables::Row42> r42{
        {11, 0.01, 0.2, 1.09, 0.21, 1.08, 1.09}};
    auto j42 = nlohmann::json::parse(
        report::render_table42(r42, report::Format::json));
    REQUIRE(j42.size() == 2);  // one record per theorem
    CHECK(j42[0]["method"] == "T7");
    CHECK(j42[0]["evidence"] == "best");  // t7 wins at k = 11
    CHECK(j42[1]["method"] == "T6");

    verify::SuiteReport rep;
    rep.suite = "demo";
    rep.add("alpha", true, "fine");
    rep.add("beta", false, "bad");
    auto sj = nlohmann::json::parse(
        report::render_suite(rep, {{"n", 12.0}}, report::Format::json));
    CHECK(sj["method"] == "verify.demo");
    CHECK(sj["valid"] == false);
    CHECK(sj["value"] == 1);
    REQUIRE(sj["evidence"].size() == 2);
    CHECK(sj["evidence"][1]["pass"] == false);

    tables::DiffReport dr;
    dr.rows_checked = 2;
    dr.max_dev = 1e-7;
    dr.pass = true;
    auto dj = nlohmann::json::parse(
        report::render_diff(dr, "4.2", report::Format::json));
    CHECK(dj["method"] == "diff.4.2");
    CHECK(dj["valid"] == true);
}
