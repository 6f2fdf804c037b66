#ifndef PTC_SWEEP_HPP_
#define PTC_SWEEP_HPP_

#include "ptc/families.hpp"
#include "ptc/heights.hpp"
#include "ptc/json_io.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptc {

struct empty_sweep : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* A grid of specializations of one family.
 *
 * Rational parameter kinds walk lo, lo + step, ... <= hi.  For
 * ParamKind::triple, lo..hi bound the generator m of (m^2 - n^2, 2mn, m^2 + n^2) and every
 * admissible n < m is used.
 */
struct SweepSpec {
    FamilyId family = FamilyId::F1_a2c2;
    ParamKind kind = ParamKind::t;
    Rational lo, hi, step = 1;
    int digits = 50;
    std::string epsilon{default_epsilon};
    int jobs = 1;
};

struct SweepRecord {
    std::string param;  // "2", "7/29", "3,4,5"
    std::optional<FamilyInstance> instance;
    std::vector<std::string> point_names;
    std::optional<RegulatorReport> report;
    std::string error;
};

struct SweepResult {
    std::vector<SweepRecord> records;  // parameter order
    int skipped_degenerate = 0;
    int independent = 0;
    int not_independent = 0;
    int indeterminate = 0;
    int errors = 0;
};

/* Parameter values of the grid, degenerate ones included. */
std::vector<ParamBinding> sweep_parameters(SweepSpec const& spec);

/* Evaluates every grid point on `jobs` worker threads; records come back
 * in parameter order whatever the scheduling.  Throws empty_sweep if the
 * grid is empty after skipping degenerate values.
 */
SweepResult run_sweep(SweepSpec const& spec);

json to_json(SweepResult const& r, int digits);
std::string to_csv(SweepResult const& r, int digits);

}  // namespace ptc

#endif /* PTC_SWEEP_HPP_ */
