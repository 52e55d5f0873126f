#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "locktrials/montecarlo.hpp"
#include "locktrials/pmf.hpp"

namespace locktrials {

/// One `# key value` metadata comment line.
struct CsvComment {
    std::string key;
    std::string value;
};

/// Writes `value,probability` rows, preceded by metadata comments and a
/// header row. Probabilities carry 17 significant digits, which
/// round-trips doubles exactly.
void write_pmf_csv(std::ostream& out, const Pmf& pmf,
                   const std::vector<CsvComment>& comments = {});

/// Writes `value,count` rows, preceded by metadata comments and a header
/// row.
void write_histogram_csv(std::ostream& out, const Histogram& h,
                         const std::vector<CsvComment>& comments = {});

/// Parses a histogram CSV as written by write_histogram_csv. Comment and
/// header lines are skipped. Throws std::invalid_argument on malformed
/// rows.
Histogram read_histogram_csv(std::istream& in);

/// Parses a PMF CSV as written by write_pmf_csv. The deficit is
/// recovered from the mass sum.
Pmf read_pmf_csv(std::istream& in);

/// Round-trip-exact decimal rendering of a double (17 significant
/// digits).
std::string format_double(double value);

} // namespace locktrials
