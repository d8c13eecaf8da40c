#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cubic7/exactnum/algebraic.hpp"
#include "cubic7/lattices/lattice.hpp"

namespace cubic7 {

enum class Verdict { pass, fail, flagged };
std::string to_string(Verdict v);

struct Check {
    std::string id;
    std::string citation;  // the claim being verified
    Verdict verdict = Verdict::pass;
    std::string explanation;  // required for flagged checks
    std::vector<std::pair<std::string, std::string>> certificate;
};

struct SuiteConfig {
    std::vector<std::string> suites;
    std::map<std::string, long> search_bounds;  // per suite primary bound
    long bound_override = 0;                    // 0 keeps defaults
    std::string output_path;
    std::string format = "json";
    unsigned parallelism = 1;
    unsigned seed = 1;
    bool strict = false;
    bool timing = false;

    long bound(const std::string& suite, long fallback) const;
};

// Flat "key = value" lines mirroring the command line flags; '#' starts a comment.
SuiteConfig load_config(const std::string& path);
SuiteConfig parse_config(const std::string& text);

struct Report {
    std::string suite;
    unsigned seed = 1;
    std::vector<Check> checks;
    std::chrono::milliseconds wall_time{0};

    bool passed(bool strict) const;
    std::size_t count(Verdict v) const;
};

struct SuiteInfo {
    std::string name;
    std::string citation;
    long default_bound;
    std::function<std::vector<Check>(const SuiteConfig&)> run;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo& find_suite(const std::string& name);
Report run_suite(const std::string& name, const SuiteConfig& config);
// Runs config.suites on up to config.parallelism workers; order follows config.suites.
std::vector<Report> run_suites(const SuiteConfig& config);

std::string reports_json(const std::vector<Report>& reports, bool timing);
std::string reports_csv(const std::vector<Report>& reports);

// Moduli plane export.
std::string plane_label(const AlgebraicNumber& a, const AlgebraicNumber& b);
// Label of an F21 coefficient vector, including the two boundary patterns.
std::string f21_label(const std::vector<AlgebraicNumber>& coeffs);
struct PlaneGrid {
    Rational a0, a1, b0, b1, step;
};
PlaneGrid parse_grid(const std::string& text);  // "a0,a1,b0,b1,step"
struct PlanePoint {
    Rational a, b;
    std::string label;
};
std::vector<PlanePoint> export_plane(const PlaneGrid& grid);
std::string plane_csv(const std::vector<PlanePoint>& points);
std::string plane_svg(const PlaneGrid& grid, const std::vector<PlanePoint>& points);

// Emitters shared by the command line verbs.
std::string git_sweep_json(bool f21);
std::string git_sweep_csv(bool f21);
std::string singular_sweep(unsigned count, unsigned seed, bool csv);
std::string lattice_report_json(const Lattice& l);
std::string table2_json();
std::string table3_json();
std::string hilbert_roundtrip_json(unsigned count, long height, unsigned seed);
std::string quat_embed_json(long box);

}  // namespace cubic7
