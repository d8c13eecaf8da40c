#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cubic7/cli/harness.hpp"
#include "cubic7/groups/catalog.hpp"
#include "cubic7/groups/matrix_group.hpp"

using namespace cubic7;

namespace {

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

Lattice named_lattice(const std::string& name) {
    if (name == "t1") return transcendental_rank3();
    if (name == "t2") return transcendental_rank4();
    if (name == "u") return hyperbolic_plane();
    if (name == "a2") return a2_lattice();
    if (name == "e8") return e8_lattice();
    throw ParseError("unknown lattice " + name);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic7: exact verification of cubic fourfolds with order 7 symmetry"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list-suites", "List registered verification suites");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::vector<std::string> suites;
    std::string config_path, out_path, format = "json";
    unsigned seed = 1, workers = 1;
    long bound = 0;
    bool strict = false, timing = false;
    verify->add_option("suites", suites, "Suite names, or 'all'");
    verify->add_option("--config", config_path, "Flat key = value configuration file");
    verify->add_option("--seed", seed, "Seed for sampled checks");
    verify->add_option("--bound", bound, "Override the primary search bound of each suite")->check(CLI::PositiveNumber);
    verify->add_option("--out", out_path, "Write the report to a file");
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--workers", workers, "Suites run in parallel")->check(CLI::PositiveNumber);
    verify->add_flag("--strict", strict, "Treat flagged verdicts as failures");
    verify->add_flag("--timing", timing, "Include wall time in JSON reports");

    auto* plane = app.add_subcommand("export-plane", "Stratum labels on a rational grid of the (a,b)-plane");
    std::string grid, svg_path, plane_out, point;
    plane->add_option("--grid", grid, "a0,a1,b0,b1,step");
    plane->add_option("--svg", svg_path, "Also write an SVG plot");
    plane->add_option("--out", plane_out, "Write CSV to a file");
    plane->add_option("--f21", point, "Label a single F21 coefficient vector c0,c1,c2,c3 instead");

    auto* git = app.add_subcommand("git-sweep", "Classify every support pattern of a family");
    std::string family = "c7", emit_format = "json";
    git->add_option("--family", family)->check(CLI::IsMember({"c7", "f21"}));
    git->add_option("--emit", emit_format)->check(CLI::IsMember({"json", "csv"}));

    auto* sing = app.add_subcommand("singular-sweep", "Singular loci along a seeded sample of the (a,b)-plane");
    unsigned sweep_count = 50, sweep_seed = 1;
    std::string sweep_format = "json";
    sing->add_option("--count", sweep_count);
    sing->add_option("--seed", sweep_seed);
    sing->add_option("--emit", sweep_format)->check(CLI::IsMember({"json", "csv"}));

    auto* lat = app.add_subcommand("lattice", "Discriminant group report for a lattice");
    std::string lattice_name, gram_path;
    auto* named = lat->add_option("--named", lattice_name, "t1, t2, u, a2 or e8");
    auto* gram = lat->add_option("--gram-json", gram_path, "File holding {\"gram\": [[...]]}");
    named->excludes(gram);

    auto* gens = app.add_subcommand("generators", "Load generators from a config file and report the group they generate");
    std::string gens_path;
    gens->add_option("file", gens_path)->required();

    auto* arith = app.add_subcommand("arith", "Arithmetic group certificates");
    arith->require_subcommand(1);
    auto* t2 = arith->add_subcommand("verify-table2", "Rank 3 coset table");
    auto* t3 = arith->add_subcommand("verify-table3", "Rank 4 coset table");
    auto* hil = arith->add_subcommand("hilbert-roundtrip", "Hilbert group elements through the identity coset and back");
    unsigned hcount = 100, hseed = 1;
    long height = 40;
    hil->add_option("--count", hcount);
    hil->add_option("--height", height);
    hil->add_option("--seed", hseed);
    auto* quat = arith->add_subcommand("quat-embed", "Embed quaternion units");
    long box = 6;
    quat->add_option("--box", box)->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list) {
            for (const auto& s : suite_registry()) std::cout << s.name << "\t" << s.citation << "\n";
            return 0;
        }
        if (*verify) {
            SuiteConfig config = config_path.empty() ? SuiteConfig{} : load_config(config_path);
            if (!suites.empty()) config.suites = suites;
            if (config.suites.empty() || (config.suites.size() == 1 && config.suites[0] == "all")) {
                config.suites.clear();
                for (const auto& s : suite_registry()) config.suites.push_back(s.name);
            }
            if (verify->count("--seed")) config.seed = seed;
            if (verify->count("--bound")) config.bound_override = bound;
            if (verify->count("--out")) config.output_path = out_path;
            if (verify->count("--format")) config.format = format;
            if (verify->count("--workers")) config.parallelism = workers;
            config.strict = config.strict || strict;
            config.timing = config.timing || timing;
            auto reports = run_suites(config);
            emit(config.format == "csv" ? reports_csv(reports) : reports_json(reports, config.timing), config.output_path);
            bool ok = true;
            for (const auto& r : reports) {
                std::cerr << r.suite << ": " << r.count(Verdict::pass) << " pass, " << r.count(Verdict::flagged) << " flagged, "
                          << r.count(Verdict::fail) << " fail\n";
                if (!config.strict && r.count(Verdict::flagged) > 0)
                    std::cerr << "warning: " << r.suite << " has flagged checks\n";
                ok = ok && r.passed(config.strict);
            }
            return ok ? 0 : 1;
        }
        if (*plane) {
            if (!point.empty()) {
                std::vector<AlgebraicNumber> c;
                std::stringstream in(point);
                std::string part;
                while (std::getline(in, part, ',')) c.emplace_back(Rational(part));
                std::cout << f21_label(c) << "\n";
                return 0;
            }
            if (grid.empty()) throw ParseError("export-plane needs --grid or --f21");
            auto g = parse_grid(grid);
            auto points = export_plane(g);
            emit(plane_csv(points), plane_out);
            if (!svg_path.empty()) emit(plane_svg(g, points), svg_path);
            return 0;
        }
        if (*git) {
            bool f21 = family == "f21";
            std::cout << (emit_format == "csv" ? git_sweep_csv(f21) : git_sweep_json(f21));
            return 0;
        }
        if (*sing) {
            std::cout << singular_sweep(sweep_count, sweep_seed, sweep_format == "csv");
            return 0;
        }
        if (*lat) {
            Lattice l = !gram_path.empty() ? lattice_from_json(read_file(gram_path))
                                           : named_lattice(lattice_name.empty() ? "t1" : lattice_name);
            std::cout << lattice_report_json(l);
            return 0;
        }
        if (*gens) {
            auto g = load_generators_file(gens_path);
            std::cout << "generators: " << g.size() << "\n";
            if (!g.empty()) std::cout << "order: " << MatrixGroup::generate(g).order() << "\n";
            return 0;
        }
        if (*t2) std::cout << table2_json();
        if (*t3) std::cout << table3_json();
        if (*hil) std::cout << hilbert_roundtrip_json(hcount, height, hseed);
        if (*quat) std::cout << quat_embed_json(box);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
