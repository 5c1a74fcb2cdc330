// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact; a criterion
// also fails when it exceeds its runtime budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gl2/engine_checks.hpp"
#include "gl2/monomial.hpp"

using namespace gl2;

namespace {

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<CheckReport()> run;
};

std::string strip_spaces(std::string s)
{
    std::erase(s, ' ');
    return s;
}

CheckReport suite(const std::string& name, int p, int f)
{
    return run_suite(name, p, f).report;
}

CheckReport example_ideals()
{
    CheckReport rep;
    const auto ring = RingSpec::full(2);
    const JSet jmax = JSet::full(2), jmin = JSet::empty(2);
    const JSet jmax_minus_j2 = JSet::from_indices(2, {0});
    const JSet jmin_plus_j2 = JSet::from_indices(2, {1});
    struct Expected {
        Family first;
        Family second;
        std::string ideal_first;
        std::string ideal_second;
        std::string sum;
        std::string ideal_of_intersection;  // empty for the unit ideal
    };
    const std::vector<Expected> printed{
        {{jmax}, {jmin}, "(X'_{j_1}, X'_{j_2})", "(Y'_{j_1},Y'_{j_2})",
         "(X'_{j_1},X'_{j_2},Y'_{j_1},Y'_{j_2})", ""},
        {{jmax, jmax_minus_j2}, {jmin_plus_j2, jmin}, "(X'_{j_1})", "(Y'_{j_1})",
         "(X'_{j_1},Y'_{j_1})", ""},
        {{jmax, jmax_minus_j2}, {jmax, jmin}, "(X'_{j_1})", "(X'_{j_1}Y'_{j_2},X'_{j_2}Y'_{j_1})",
         "(X'_{j_1},X'_{j_2}Y'_{j_1})", "(X'_{j_1},X'_{j_2})"},
    };
    const auto computed = uncapped_sum_examples(ring);
    rep.expect(computed.size() == printed.size(), "expected three computations");
    for (std::size_t i = 0; i < computed.size() && i < printed.size(); ++i) {
        const auto& c = computed[i];
        const auto& e = printed[i];
        const std::string at = "example " + std::to_string(i + 1);
        rep.expect(c.first == normalize_family(e.first), at + ": first family");
        rep.expect(c.second == normalize_family(e.second), at + ": second family");
        rep.expect(strip_spaces(primed_string(c.ideal_first)) == strip_spaces(e.ideal_first),
                   at + ": first ideal " + primed_string(c.ideal_first));
        rep.expect(strip_spaces(primed_string(c.ideal_second)) == strip_spaces(e.ideal_second),
                   at + ": second ideal " + primed_string(c.ideal_second));
        rep.expect(strip_spaces(primed_string(c.sum)) == strip_spaces(e.sum),
                   at + ": sum " + primed_string(c.sum));
        if (e.ideal_of_intersection.empty())
            rep.expect(c.ideal_of_intersection.is_unit(), at + ": intersection is not the unit ideal");
        else
            rep.expect(strip_spaces(primed_string(c.ideal_of_intersection)) ==
                           strip_spaces(e.ideal_of_intersection),
                       at + ": intersection " + primed_string(c.ideal_of_intersection));
        rep.expect(!(c.sum == c.ideal_of_intersection), at + ": sum equals the intersection ideal");
    }
    return rep;
}

CheckReport over(const std::vector<std::pair<int, int>>& pf, const std::string& name)
{
    CheckReport rep;
    for (auto [p, f] : pf)
        rep.absorb(suite(name, p, f));
    return rep;
}

}  // namespace

int main()
{
    const std::vector<std::pair<int, int>> small{{5, 1}, {5, 2}, {7, 1}, {7, 2}};
    const std::vector<std::pair<int, int>> upto3{{5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}, {7, 3}};
    const std::vector<Criterion> criteria{
        {1, "worked ideal computations reproduced as printed", 1.0, example_ideals},
        {2, "face and capped-ideal identities, |delta| = 1..3", 30.0,
         [] {
             CheckReport rep;
             for (int n = 1; n <= 3; ++n)
                 rep.absorb(verify_ideals(n));
             return rep;
         }},
        {3, "saturated chains, p in {5,7}, f <= 4", 300.0,
         [] {
             return over({{5, 1}, {5, 2}, {5, 3}, {5, 4}, {7, 1}, {7, 2}, {7, 3}, {7, 4}},
                         "chains");
         }},
        {4, "base change of JH factors, p in {5,7}, f <= 3", 120.0, [&] { return over(upto3, "bc"); }},
        {5, "cosocle filtrations of PS types, p in {5,7} f = 1 and p = 5 f = 2", 600.0,
         [] { return over({{5, 1}, {7, 1}, {5, 2}}, "filtration"); }},
        {6, "measured gauges equal the closed forms, p = 5, f <= 2", 600.0,
         [] { return over({{5, 1}, {5, 2}}, "gauge"); }},
        {7, "cokernel JH lists: combinatorial p in {5,7} f <= 3, engine p = 5 f <= 2", 600.0,
         [&] {
             auto rep = over(upto3, "cokernel-lists");
             rep.absorb(over({{5, 1}, {5, 2}}, "cokernel"));
             return rep;
         }},
        {8, "modular sets are intervals in P_tau, p in {5,7}, f <= 2", 600.0,
         [&] { return over(small, "intervals"); }},
        {9, "isolating, covering and pair type searches, p in {5,7}, f <= 2", 900.0,
         [&] { return over(small, "types"); }},
        {10, "predictor consistency, f <= 3, denominators <= 6", 300.0,
         [] { return over({{5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}}, "predictor"); }},
        {11, "genericity degeneracy at p = 3", 1.0, [] { return verify_p3_genericity(4); }},
        {12, "dual embedding exponent at most f, p = 5, f <= 2", 300.0,
         [] { return over({{5, 1}, {5, 2}}, "dual"); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        CheckReport rep;
        try {
            rep = c.run();
        } catch (const std::exception& e) {
            rep.fail(e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = secs < c.budget_seconds;
        const bool ok = rep.pass && in_budget;
        failures += ok ? 0 : 1;
        std::printf("%s [%2d] %s: cases=%lld time=%.3fs budget=%.0fs%s\n", ok ? "PASS" : "FAIL",
                    c.id, c.name.c_str(), static_cast<long long>(rep.cases), secs,
                    c.budget_seconds, in_budget ? "" : " (over budget)");
        for (std::size_t i = 0; i < rep.counterexamples.size() && i < 5; ++i)
            std::printf("     counterexample: %s\n", rep.counterexamples[i].c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
