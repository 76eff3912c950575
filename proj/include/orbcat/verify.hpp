#pragma once

#include <string>

#include "orbcat/orbit.hpp"

namespace orbcat {

struct Failure {
    std::string where;
    std::string detail;  // inputs and both sides of the violated identity
};

struct Report {
    std::string suite;
    int cases = 0;
    std::vector<Failure> failures;
    double wall_ms = 0;
    bool ok() const { return failures.empty(); }
};

std::string report_to_json(const Report& r);
std::string report_to_table(const Report& r);

// Parameters default to the full verification ranges; the CLI can narrow
// them with --n.
struct SuiteParams {
    Field field = Field::rationals();
    uint64_t seed = 0;
    int serre_n = 5;
    int serre_window = 3;
    int twocy_n = 4;
    int finiteness_n = 5;
    int dg_n = 3;
    int cone_cases = 30;
    int homotopy_cases = 50;
    int counting_n = 4;
    int braid_m = 6;
    int quotient_m = 4;
    int cofib_cases = 12;
};

Report serre_suite(const SuiteParams& p);
Report twocy_suite(const SuiteParams& p);
Report finiteness_suite(const SuiteParams& p);
Report dg_compare_suite(const SuiteParams& p);
Report cone_suite(const SuiteParams& p);
Report homotopy_suite(const SuiteParams& p);
Report counting_suite(const SuiteParams& p);
Report braid_suite(const SuiteParams& p);
Report cofibration_suite(const SuiteParams& p);

std::vector<Report> run_all_suites(const SuiteParams& p);

// Independent oracle: chain maps modulo nullhomotopy, assembled directly
// from the defining equations (not through the hom-complex differential).
int brute_homotopy_dimension(const Complex& x, const Complex& y);

// Rank exactness of the homology sequence of X -> Y -> cone -> Sigma X,
// checked with the induced maps at every degree and vertex.
bool triangle_rank_exact(const ChainMap& f);

}  // namespace orbcat
