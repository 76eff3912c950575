// Acceptance suite: runs every structural criterion at its full parameters
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.
#include <cstdio>

#include "orbcat/verify.hpp"

using namespace orbcat;

namespace {

bool emit(int number, const char* name, std::initializer_list<Report> reports) {
    int cases = 0, failures = 0;
    double ms = 0;
    for (const auto& r : reports) {
        cases += r.cases;
        failures += (int)r.failures.size();
        ms += r.wall_ms;
    }
    std::printf("CRITERION %d: %s  %s  (cases=%d failures=%d wall_ms=%lld)\n", number,
                failures == 0 ? "PASS" : "FAIL", name, cases, failures, (long long)ms);
    for (const auto& r : reports)
        for (const auto& f : r.failures)
            std::printf("    %s :: %s: %s\n", r.suite.c_str(), f.where.c_str(), f.detail.c_str());
    return failures == 0;
}

}  // namespace

int main() {
    SuiteParams p;  // defaults are the full acceptance parameters
    p.serre_n = 5;
    p.serre_window = 3;
    p.twocy_n = 4;
    p.finiteness_n = 5;
    p.dg_n = 3;
    p.cone_cases = 30;
    p.homotopy_cases = 50;
    p.counting_n = 4;
    p.braid_m = 6;
    p.quotient_m = 4;
    p.cofib_cases = 12;
    p.seed = 0;

    bool ok = true;
    ok &= emit(1, "Serre duality, A_1..A_5, shifts [-3,3]", {serre_suite(p)});
    ok &= emit(2, "2-Calabi-Yau symmetry, cluster A_1..A_4", {twocy_suite(p)});
    ok &= emit(3, "orbit hom finiteness (A_1..A_5) and dg compatibility (A_1..A_3)",
               {finiteness_suite(p), dg_compare_suite(p)});
    ok &= emit(4, "cone representability, 30 seeded cases plus corruption controls",
               {cone_suite(p)});
    ok &= emit(5, "homotopy category vs brute-force quotient, 50 seeded pairs",
               {homotopy_suite(p)});
    ok &= emit(6, "counting identities and the polygon bijection, A_1..A_4",
               {counting_suite(p)});
    ok &= emit(7, "braid relations (A_2..A_6), form preservation, trivial quotient action (A_1..A_4)",
               {braid_suite(p)});
    ok &= emit(8, "cofibration structure: quotient vs cone and triangle exactness",
               {cofibration_suite(p)});
    std::printf("%s\n", ok ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT");
    return ok ? 0 : 1;
}
