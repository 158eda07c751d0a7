#ifndef MOBIUS_CLI_HPP
#define MOBIUS_CLI_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mobius/physmodel.hpp"
#include "mobius/thermo.hpp"

namespace mobius::cli {

// Stable exit codes:
//   0 ok, 1 validation failure, 2 config error, 3 no bound state /
//   complex exponent, 4 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNoBoundState = 3;
inline constexpr int kExitUsage = 4;

enum class SweepVariable { Tau0, Zeta, Beta, NMax, M, N };

struct SweepSpec {
    SweepSpec(ModelParams m, thermo::ThermoInput in)
        : model(std::move(m)), input(in) {}

    SweepVariable variable = SweepVariable::Beta;
    double start = 0.0;
    double stop = 1.0;
    int steps = 200;          // integer variables swept on integer grids
    ModelParams model;
    thermo::ThermoInput input;
};

struct SweepPoint {
    double x = 0.0;
    thermo::ThermoProperties props;
};

std::vector<SweepPoint> run_sweep(const SweepSpec& spec);

struct ReproRow {
    int table = 1;
    int n = 0;
    double m = 0.0;
    double zeta = 0.0;
    double tau0 = 0.0;
    double computed = 0.0;
    double paper_value = 0.0;
    double abs_dev = 0.0;
    double rel_dev = 0.0;
    bool convention_confirmed = false; // |dev| <= 5e-4 under natural units
    bool sign_agreement = false;
};

struct StructuralCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReproReport {
    std::vector<ReproRow> rows;
    std::vector<StructuralCheck> checks;
    std::string convention_note;
};

/// Per-cell deviations against the bundled reference table (1 or 2), plus
/// structural degeneracy/monotonicity checks.
ReproReport reproduce_table(int table);

/// Figure sweep data: figures 1-8 use the linear flux, 9-16 the exponential
/// one; panels a-d sweep tau0, zeta, beta, n_max.
struct FigureData {
    int id = 1;
    char panel = 'a';
    std::string x_name;
    std::string y_name;
    std::vector<double> x;
    std::vector<double> y;
};

FigureData figure_data(int id, char panel);

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationSummary {
    std::vector<ValidationCheck> checks;
    bool all_pass = false;
};

enum class ValidateLevel { Fast, Full };

ValidationSummary run_validation(ValidateLevel level);

/// Entry point used by the binary and by in-process tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace mobius::cli

#endif
