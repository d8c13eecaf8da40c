#include <gtest/gtest.h>

#include <json.hpp>

#include <algorithm>
#include <set>

#include "cubic7/cli/harness.hpp"

using namespace cubic7;

TEST(Registry, NamesAndCitations) {
    std::set<std::string> names;
    for (const auto& s : suite_registry()) {
        EXPECT_TRUE(names.insert(s.name).second) << s.name;
        EXPECT_FALSE(s.citation.empty()) << s.name;
    }
    EXPECT_TRUE(names.count("git-c7"));
    EXPECT_TRUE(names.count("table2"));
    EXPECT_TRUE(names.count("invariant-ring"));
    EXPECT_THROW(find_suite("nosuch"), UnknownSuite);
    SuiteConfig c;
    EXPECT_THROW(run_suite("nosuch", c), UnknownSuite);
}

TEST(Config, Parse) {
    auto c = parse_config("# demo\nsuites = git-f21, lattices\nseed = 9\nbound = 50\nbound.lattices = 20\nworkers = 2\nstrict = true\n");
    EXPECT_EQ(c.suites, (std::vector<std::string>{"git-f21", "lattices"}));
    EXPECT_EQ(c.seed, 9u);
    EXPECT_EQ(c.bound("lattices", 200), 20);
    EXPECT_EQ(c.bound("singular", 50), 50);
    EXPECT_EQ(c.parallelism, 2u);
    EXPECT_TRUE(c.strict);
    EXPECT_EQ(parse_config("").bound("singular", 50), 50);
    EXPECT_THROW(parse_config("seed = -1\n"), ParseError);
    EXPECT_THROW(parse_config("colour = red\n"), ParseError);
    EXPECT_THROW(parse_config("suites = nosuch\n"), UnknownSuite);
    EXPECT_THROW(parse_config("format = xml\n"), ParseError);
    EXPECT_THROW(load_config("/nonexistent/config.txt"), ParseError);
}

TEST(Reports, FlaggedAndReproducible) {
    SuiteConfig c;
    c.suites = {"git-f21", "table2"};
    c.parallelism = 2;
    auto first = run_suites(c);
    ASSERT_EQ(first.size(), 2u);
    EXPECT_EQ(first[0].suite, "git-f21");
    EXPECT_TRUE(first[0].passed(true));
    EXPECT_EQ(first[1].count(Verdict::flagged), 1u);
    EXPECT_EQ(first[1].count(Verdict::fail), 0u);
    EXPECT_TRUE(first[1].passed(false));
    EXPECT_FALSE(first[1].passed(true));
    for (const auto& r : first)
        for (const auto& check : r.checks) {
            EXPECT_FALSE(check.citation.empty()) << check.id;
            if (check.verdict == Verdict::flagged) EXPECT_FALSE(check.explanation.empty()) << check.id;
        }
    c.parallelism = 1;
    auto second = run_suites(c);
    EXPECT_EQ(reports_json(first, false), reports_json(second, false));
    EXPECT_EQ(reports_csv(first), reports_csv(second));
    auto parsed = nlohmann::json::parse(reports_json(first, true));
    EXPECT_TRUE(parsed[0].contains("wall_time_ms"));
    EXPECT_FALSE(nlohmann::json::parse(reports_json(first, false))[0].contains("wall_time_ms"));
}

TEST(Plane, Labels) {
    EXPECT_EQ(plane_label(1, 1), "A2 orbit");
    EXPECT_EQ(plane_label(zeta(3), zeta(3)), "A2 orbit");
    EXPECT_EQ(plane_label(2, 3), "smooth");
    EXPECT_EQ(plane_label(Rational(3, 4), 0), "twist curve 0");
    EXPECT_EQ(f21_label({0, 0, 1, 1}), "boundary point [0,0,1,1]");
    EXPECT_EQ(f21_label({1, 0, 7, -1}), "boundary curve [1,0,t,-1]");
    EXPECT_EQ(f21_label({1, 1, 2, 3}), "smooth");
    EXPECT_THROW(f21_label({1, 1}), DimensionMismatch);
    auto grid = parse_grid("0,1,0,1,1/2");
    auto points = export_plane(grid);
    EXPECT_EQ(points.size(), 9u);
    EXPECT_EQ(plane_csv(points).substr(0, 10), "a,b,label\n");
    EXPECT_NE(plane_svg(grid, points).find("<svg"), std::string::npos);
    EXPECT_THROW(parse_grid("0,1,0,1"), ParseError);
    EXPECT_THROW(parse_grid("0,1,0,1,0"), ParseError);
    EXPECT_THROW(parse_grid("0,x,0,1,1"), ParseError);
}

TEST(Emitters, Shapes) {
    EXPECT_EQ(nlohmann::json::parse(git_sweep_json(true)).size(), 16u);
    auto csv = git_sweep_csv(false);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 257);
    auto lattice = nlohmann::json::parse(lattice_report_json(transcendental_rank4()));
    EXPECT_EQ(lattice["milgram"]["matches"], true);
    auto t2 = nlohmann::json::parse(table2_json());
    EXPECT_EQ(t2["rows"].size(), 8u);
    EXPECT_EQ(t2["flagged"].size(), 1u);
    auto q = nlohmann::json::parse(quat_embed_json(5));
    EXPECT_EQ(q["units"][0]["unit"], "(5,0,2,0)");
    auto h = nlohmann::json::parse(hilbert_roundtrip_json(5, 40, 2));
    EXPECT_EQ(h["all_round_trip"], true);
    auto s = nlohmann::json::parse(singular_sweep(4, 1, false));
    EXPECT_EQ(s.size(), 4u);
}
