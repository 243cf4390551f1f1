// Acceptance checklist: one line per criterion, exit code = number of
// failures.  All numeric comparisons are exact (big integers / rationals);
// each criterion also carries the wall-clock budget it must finish within.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "halltab/halltab.hpp"

using namespace halltab;

namespace {

struct criterion {
    std::string label;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool check(bool ok, std::string& note, const std::string& on_failure) {
    if (!ok && note.empty()) note = on_failure;
    return ok;
}

// ---- 1: exact average on the 18-cell staircase minus a corner ----

bool run_staircase_average(std::string& note) {
    const auto hf = hook_family(skew_shape({6, 5, 4, 3, 2, 1}, {2, 1}));
    bool ok = check(hf.family.ground_size() == 18, note, "expected 18 cells");

    bigint product = 1;
    for (const auto& member : hf.family.members())
        product *= static_cast<int>(member.size());
    ok = check(product == 52093125, note,
               "hook size product " + product.str() + " != 52093125") && ok;

    ok = check(m_range(hf.family) == std::pair{16, 18}, note, "m range != [16, 18]") && ok;

    const exact_rational expected(bigint("20074070016"), bigint(5));
    const exact_rational by_formula = average_formula(hf.family, 16);
    ok = check(by_formula == expected, note,
               "average_formula(16) = " + rational_num(by_formula).str() + "/" +
                   rational_den(by_formula).str()) && ok;

    const exact_rational by_closed_form = average_closed_form(hf.family, 16);
    ok = check(by_closed_form == expected, note,
               "average_closed_form(16) disagrees with the formula") && ok;
    return ok;
}

// ---- 2: constructive solve across every configuration and codomain ----

bool solve_covers_family(const set_family& fam, const transversal& t,
                         std::string& note, long long& cases) {
    const auto [lo, hi] = m_range(fam);
    for (int m = lo; m <= hi; ++m) {
        // Histogram over all surjective words: every configuration must
        // appear, i.e. have at least one satisfying surjection.
        const auto histogram = detail::configuration_histogram(fam, t, m);
        const bigint expected_configs = total_configuration_count(fam);
        if (!check(bigint(histogram.size()) == expected_configs, note,
                   detail::describe_family(fam) + " at m=" + std::to_string(m) +
                       ": only " + std::to_string(histogram.size()) + " of " +
                       expected_configs.str() + " configurations satisfiable"))
            return false;

        bool all_solved = true;
        for_each_configuration(fam, t, [&](const std::vector<int>& demands) {
            if (!all_solved) return;
            ++cases;
            const auto word = solve(fam, t, configuration(demands), m);
            if (!word || !satisfies(*word, fam, t, configuration(demands))) {
                all_solved = check(false, note,
                                   detail::describe_family(fam) + " at m=" +
                                       std::to_string(m) + ": solve failed");
            }
        });
        if (!all_solved) return false;
    }
    return true;
}

bool run_solve_coverage(std::string& note) {
    bool ok = true;
    long long cases = 0;
    gen::for_each_skew_shape(6, [&](const skew_shape& shape) {
        if (!ok) return;
        const auto hf = hook_family(shape);
        ok = solve_covers_family(hf.family, hf.rep, note, cases);
    });

    std::mt19937_64 rng(default_verify_seed);
    for (int trial = 0; ok && trial < 200; ++trial) {
        const int n = gen::uniform_int(rng, 1, 6);
        const set_family fam = gen::random_shellable_family(rng, n);
        const auto t = find_transversal(fam);
        ok = check(t.has_value(), note, "random shellable family lost its transversal") &&
             solve_covers_family(fam, *t, note, cases);
    }
    if (ok && cases < 1000) {
        ok = check(false, note, "suspiciously few cases: " + std::to_string(cases));
    }
    return ok;
}

// ---- 3: unsatisfiable configurations stay at zero ----

bool run_zero_counts(std::string& note) {
    const auto hf = hook_family(skew_shape({3, 2, 1}));
    const configuration all_maximal({5, 3, 1, 3, 1, 1});
    bool ok = true;
    for (int m = 1; m <= 5; ++m) {
        const bigint count = count_satisfying(hf.family, hf.rep, all_maximal, m);
        ok = check(count == 0, note,
                   "staircase all-maximal count at m=" + std::to_string(m) + " is " +
                       count.str() + ", expected 0") && ok;
    }
    const bigint at_six = count_satisfying(hf.family, hf.rep, all_maximal, 6);
    ok = check(at_six == 16, note,
               "staircase all-maximal count at m=6 is " + at_six.str()) && ok;

    const set_family doubled(2, {{1, 2}, {1, 2}});
    const transversal t({1, 2});
    for (int m = 1; m <= 2; ++m) {
        const bigint count = count_satisfying(doubled, t, configuration({2, 2}), m);
        ok = check(count == 0, note,
                   "doubled-pair (2,2) count at m=" + std::to_string(m) + " is " +
                       count.str()) && ok;
    }
    return ok;
}

// ---- 4: partition of the surjection count across configurations ----

bool run_partition_identity(std::string& note) {
    bool ok = true;
    for (int n = 1; n <= 5 && ok; ++n) {
        gen::for_each_shellable_family(n, [&](const set_family& fam, const transversal& t) {
            if (!ok) return;
            const auto [lo, hi] = m_range(fam);
            for (int m = lo; m <= hi && ok; ++m) {
                const auto histogram = detail::configuration_histogram(fam, t, m);
                bigint total = 0;
                for (const auto& [demands, count] : histogram) total += count;
                ok = check(total == surjection_count(n, m), note,
                           detail::describe_family(fam) + " at m=" + std::to_string(m) +
                               ": satisfying-word total " + total.str() +
                               " != " + surjection_count(n, m).str()) && ok;
                ok = check(bigint(histogram.size()) == total_configuration_count(fam), note,
                           detail::describe_family(fam) + " at m=" + std::to_string(m) +
                               ": some configuration has no satisfying word") && ok;
                if (ok)
                    ok = check(average_bruteforce(fam, t, m) == average_formula(fam, m),
                               note,
                               detail::describe_family(fam) + " at m=" + std::to_string(m) +
                                   ": enumerated average disagrees with the formula");
            }
        });
    }
    return ok;
}

// ---- 5: shellable iff exactly one transversal, randomized ----

bool run_chang_equivalence(std::string& note) {
    const suite_result r = run_verify_suite("chang-equivalence");
    bool ok = check(r.pass, note, r.detail);
    ok = check(r.cases >= 1000, note,
               "only " + std::to_string(r.cases) + " cases covered") && ok;
    return ok;
}

// ---- 6: tableau counts against the hook-length formula ----

bool run_tableaux_counts(std::string& note) {
    bool ok = check(count_standard(skew_shape({3, 2, 1})) == 16, note,
                    "standard count of the 6-cell staircase != 16");
    ok = check(count_standard(skew_shape({2, 2})) == 2, note,
               "standard count of the 2x2 square != 2") && ok;
    const suite_result r = run_verify_suite("tableaux-correspondence", 8);
    ok = check(r.pass, note, r.detail) && ok;
    return ok;
}

// ---- 7: Stirling table and surjection counts ----

bool run_stirling_table(std::string& note) {
    bool ok = true;
    for (int n = 1; n <= 25; ++n)
        for (int m = 1; m <= n; ++m) {
            if (stirling2(n, m) != stirling2_explicit(n, m)) {
                ok = check(false, note,
                           "S(" + std::to_string(n) + "," + std::to_string(m) +
                               "): recurrence and explicit sum disagree");
                break;
            }
        }
    ok = check(surjection_count(3, 2) == 6, note, "surjections(3,2) != 6") && ok;
    ok = check(surjection_count(4, 2) == 14, note, "surjections(4,2) != 14") && ok;
    return ok;
}

// ---- 8: minimal/maximal duality under value reversal ----

bool run_reversal_duality(std::string& note) {
    const suite_result r = run_verify_suite("duality", 5);
    return check(r.pass, note, r.detail);
}

// ---- 9: documented fillings pass their predicates ----

bool run_tableau_fixtures(std::string& note) {
    const skew_shape hooked({4, 3, 1}, {2});
    bool ok = check(is_standard(tableau(hooked, {2, 3, 1, 5, 6, 4})), note,
                    "row/column-increasing filling not recognized as standard");
    const tableau scrambled(hooked, {3, 5, 6, 1, 2, 4});
    ok = check(is_generalized_standard(scrambled), note,
               "bijective filling not recognized as generalized standard") && ok;
    ok = check(!is_standard(scrambled), note,
               "non-monotone filling accepted as standard") && ok;

    const tableau repeated(hooked, {2, 3, 3, 1, 2, 2});
    ok = check(!is_generalized_standard(repeated), note,
               "repeating filling accepted as generalized standard") && ok;
    ok = check(to_word(repeated).codomain_size() == 3, note,
               "repeating filling does not induce a word onto [3]") && ok;

    const skew_shape flat({4, 3, 2});
    const auto hf = hook_family(flat);
    const tableau semi(flat, {1, 2, 3, 3, 1, 2, 3, 3, 3});
    ok = check(satisfies(to_word(semi), hf.family, hf.rep,
                         configuration(std::vector<int>(9, 1))), note,
               "all-minimal-rank filling fails the all-ones demands") && ok;

    ok = check(is_balanced(tableau(flat, {4, 5, 8, 3, 6, 7, 9, 1, 2})), note,
               "documented balanced filling rejected") && ok;

    const skew_shape notched({5, 4, 3, 3}, {2, 2, 1});
    ok = check(hook_length(notched, {2, 3}) == 4, note, "hook length at (2,3) != 4") && ok;
    ok = check(hook_cells(notched, {2, 3}) ==
                   std::vector<cell>{{2, 3}, {2, 4}, {3, 3}, {4, 3}},
               note, "hook cells at (2,3) wrong") && ok;

    ok = check(inner_corners({4, 2, 2}) == std::vector<cell>{{1, 4}, {3, 2}}, note,
               "inner corners of (4,2,2) wrong") && ok;
    return ok;
}

} // namespace

int main() {
    const std::vector<criterion> criteria = {
        {"exact average 20074070016/5 on the 18-cell staircase minus a corner", 1.0,
         run_staircase_average},
        {"solve satisfies every configuration over the full codomain range "
         "(all skew shapes to 6 cells + 200 random shellable families)", 600.0,
         run_solve_coverage},
        {"unsatisfiable demand vectors count zero words exactly", 10.0, run_zero_counts},
        {"satisfying-word counts partition m!*S(n,m) over all shellable families to n=5",
         60.0, run_partition_identity},
        {"shellable iff a unique transversal on 1000+ seeded random families", 60.0,
         run_chang_equivalence},
        {"standard/balanced tableau counts match the hook-length formula to 8 cells",
         120.0, run_tableaux_counts},
        {"Stirling recurrence matches the explicit sum to n=25", 1.0, run_stirling_table},
        {"value reversal swaps all-ones and all-maximal demands (families to n=5)", 30.0,
         run_reversal_duality},
        {"documented fillings validate through their predicates", 1.0,
         run_tableau_fixtures},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string note;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = criteria[i].run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criteria[i].budget_seconds) {
            ok = false;
            std::ostringstream over;
            over << "exceeded " << criteria[i].budget_seconds << "s budget";
            note = note.empty() ? over.str() : note + "; " + over.str();
        }
        std::printf("[%s] %zu. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].label.c_str(), elapsed, note.empty() ? "" : " — ",
                    note.c_str());
        if (!ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
