#include <chrono>
#include <iomanip>
#include <iostream>

#include "cubic7/cli/harness.hpp"

using namespace cubic7;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> suites;
    double budget_seconds;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "invariant spaces of C7 and F21", {"invariant-spaces"}, 1},
        {2, "GIT oracle equals closed form on all supports", {"git-c7", "git-f21"}, 5},
        {3, "singular loci, A2 orbit and discriminant sweep", {"singular"}, 30},
        {4, "L2(7) machinery, pencil table and sextic", {"l27"}, 60},
        {5, "lattices, Milgram phases and local obstructions", {"lattices"}, 60},
        {6, "rank 3 arithmetic group and its coset table", {"table2"}, 120},
        {7, "rank 4 group, Hilbert round trip and quaternion units", {"table3", "hilbert", "quaternion"}, 300},
        {8, "automorphism groups along the families", {"stabilizers"}, 60},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        SuiteConfig config;
        config.suites = c.suites;
        auto start = std::chrono::steady_clock::now();
        auto reports = run_suites(config);
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = seconds <= c.budget_seconds;
        std::size_t checks = 0, flagged = 0;
        std::vector<std::string> failed;
        for (const auto& r : reports) {
            checks += r.checks.size();
            flagged += r.count(Verdict::flagged);
            for (const auto& check : r.checks)
                if (check.verdict == Verdict::fail) failed.push_back(r.suite + "/" + check.id);
        }
        ok = ok && failed.empty() && checks > 0;
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << checks << " checks, "
                  << flagged << " flagged, " << std::fixed << std::setprecision(2) << seconds << " s of "
                  << c.budget_seconds << " s)";
        for (const auto& f : failed) std::cout << " failed:" << f;
        std::cout << "\n";
    }
    return failures == 0 ? 0 : 1;
}
