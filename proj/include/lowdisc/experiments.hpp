#pragma once

#include <string>
#include <vector>

namespace lowdisc {

/// One named verification sweep. `csv` is the machine-readable table
/// (comment lines start with '#'); `summary` is human-oriented;
/// `violations` counts rows whose asserted bound failed.
struct ExperimentResult {
    std::string name;
    bool pass = false;
    long violations = 0;
    std::string csv;
    std::vector<std::string> summary;
};

/// Names accepted by run_experiment / the CLI `experiment` subcommand.
std::vector<std::string> experiment_names();

/// The fixed CSV column header an experiment emits.
std::string experiment_columns(const std::string& name);

ExperimentResult run_experiment(const std::string& name);

/// Re-checks the row-level verdicts of an emitted CSV from its numeric
/// columns alone (no recomputation of the underlying mathematics).
/// Returns the re-derived pass verdict.
bool revalidate_csv(const std::string& name, const std::string& csv);

} // namespace lowdisc
