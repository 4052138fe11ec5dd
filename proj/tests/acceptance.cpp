// Acceptance harness: one line per criterion, exact tolerances, nonzero exit
// on any failure. Case counts and seeds are pinned here.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "drz/suites.hpp"
#include "drz/worked_examples.hpp"

namespace {

constexpr std::uint64_t kSeed = 20250810;

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    bool all_pass = true;
    int number = 0;

    auto report = [&](const std::string& label, bool pass, double secs, double limit,
                      const std::vector<std::string>& notes) {
        ++number;
        bool timed_out = limit > 0 && secs > limit;
        bool ok = pass && !timed_out;
        all_pass = all_pass && ok;
        std::printf("[%d] %-68s %s (%.2fs%s)\n", number, label.c_str(),
                    ok ? "PASS" : "FAIL", secs,
                    timed_out ? ", over time limit" : "");
        for (const auto& n : notes) std::printf("      logged: %s\n", n.c_str());
    };

    auto run_suites = [&](const std::string& label,
                          const std::vector<std::pair<std::string, std::size_t>>& suites,
                          double limit) {
        auto start = clock::now();
        bool pass = true;
        std::vector<std::string> notes;
        for (auto& [name, cases] : suites) {
            drz::SuiteResult r = drz::run_suite(name, cases, kSeed);
            for (const auto& c : r.claims) {
                if (c.fail > 0) {
                    pass = false;
                    notes.push_back(name + "/" + c.name + ": " + std::to_string(c.fail) +
                                    " failures");
                }
                for (const auto& note : c.notes) notes.push_back(name + "/" + c.name + ": " + note);
            }
        }
        double secs = std::chrono::duration<double>(clock::now() - start).count();
        report(label, pass, secs, limit, notes);
    };

    // 1. worked examples, bit-exact, < 5 s
    {
        auto start = clock::now();
        auto results = drz::run_worked_examples();
        bool pass = true;
        std::vector<std::string> notes;
        for (const auto& r : results) {
            if (!r.pass) {
                pass = false;
                for (const auto& d : r.details) notes.push_back(r.name + ": " + d);
            }
        }
        double secs = std::chrono::duration<double>(clock::now() - start).count();
        report("worked examples reproduce bit-exactly (6 examples)", pass && results.size() == 6,
               secs, 5.0, notes);
    }

    // 2. Drazin-triple contract: 500 random matrices + special-sum route, < 60 s
    run_suites("Drazin triple + special-sum route agreement (500 matrices)",
               {{"drazin", 500}}, 60.0);

    // 3. special-sum theorems: 300 singular matrices x 3 {1}-inverses
    run_suites("special-sum index quadruple and minimal-polynomial identities (300 x 3)",
               {{"thm34", 300}, {"thm35", 300}, {"thm33", 100}}, 0);

    // 4. lemma suite, 200 cases each
    run_suites("lemma suite (products, Cline, additive splits, Y-matrix; 200 each)",
               {{"lemma21", 200},
                {"cline", 200},
                {"lemma23", 200},
                {"lemma24", 200},
                {"lemma25", 200},
                {"lemma26", 200},
                {"lemma27", 200},
                {"lemma28", 200},
                {"lemma29", 200},
                {"lemma210", 200},
                {"lemma211", 200},
                {"additive-oneside", 200}},
               0);

    // 5. anti-triangular branch suite, 200 per branch
    {
        auto start = clock::now();
        bool pass = true;
        std::vector<std::string> notes;
        for (auto& [name, cases] :
             std::vector<std::pair<std::string, std::size_t>>{{"thm42-group", 200},
                                                              {"thm42-index2", 200},
                                                              {"thm42-orth", 200},
                                                              {"thm42-oneside", 200},
                                                              {"gammaomega", 200}}) {
            drz::SuiteResult r = drz::run_suite(name, cases, kSeed);
            for (const auto& c : r.claims) {
                if (c.fail > 0) {
                    pass = false;
                    notes.push_back(name + "/" + c.name + ": " + std::to_string(c.fail) +
                                    " failures");
                }
                for (const auto& note : c.notes) notes.push_back(name + "/" + c.name + ": " + note);
            }
        }
        // tightness: the three embedded block examples attain i(M) - i(A) = 1, 0, 2
        auto examples = drz::run_worked_examples();
        bool tight = examples.size() == 6 && examples[3].pass && examples[4].pass &&
                     examples[5].pass;
        pass = pass && tight;
        notes.push_back(
            "tightness: embedded BC = 0 examples attain i(M) = i(A), i(A)+1 and i(A)+2" +
            std::string(tight ? "" : " -- FAILED"));
        double secs = std::chrono::duration<double>(clock::now() - start).count();
        report("anti-triangular branch criteria, closed forms and bounds (200 per branch)",
               pass, secs, 0, notes);
    }

    // 6. corollaries and end theorems, 200 each
    run_suites("corollary bounds and end-theorem formulas (200 each)",
               {{"cor43", 200},
                {"cor44", 200},
                {"cor45", 200},
                {"thm46", 200},
                {"thm47", 200},
                {"thm48", 200}},
               0);

    // 7. digraph layer, < 60 s
    run_suites("digraph layer: permutation invariance, stars, bipartite forms (100 each)",
               {{"digraph-perm", 100}, {"stars", 100}, {"bipartite", 100}}, 60.0);

    std::printf("%s\n", all_pass ? "acceptance: all criteria PASS"
                                 : "acceptance: FAILURES present");
    return all_pass ? 0 : 1;
}
