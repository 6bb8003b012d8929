#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "netsel/harness.hpp"
#include "netsel/model.hpp"

namespace netsel {

/// Malformed input file; the message names the line and column at fault.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal text that parses back to the same double.
std::string format_number(double v);

/// Matrix CSV: header `rat,cb,s,dr,d,j,plr`, one candidate per line.
DecisionMatrix read_matrix_csv(std::istream& in);
DecisionMatrix read_matrix_csv_file(const std::string& path);
void write_matrix_csv(std::ostream& out, const DecisionMatrix& dm);

/// Weight CSV: header `name,cb,s,dr,d,j,plr`, one named vector per line.
struct NamedWeights {
    std::string name;
    WeightVector weights;
};
void write_weights_csv(std::ostream& out, const std::vector<NamedWeights>& rows);
void write_weights_json(std::ostream& out, const std::vector<NamedWeights>& rows);

/// Stats CSV: `method,weighting,class,removal,iterations,incidence,step_ratio`.
void write_stats_csv(std::ostream& out, const std::vector<RrpStats>& stats);
/// JSON with full counts, both reversal metrics and the run configuration.
void write_stats_json(std::ostream& out, const std::vector<RrpStats>& stats, const ExperimentConfig& cfg);

}  // namespace netsel
