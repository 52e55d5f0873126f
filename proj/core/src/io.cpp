#include "locktrials/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace locktrials {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

void write_comments(std::ostream& out, const std::vector<CsvComment>& comments) {
    for (const auto& [key, value] : comments) {
        out << "# " << key << " " << value << "\n";
    }
}

// Splits "12,0.5" into its two fields; returns false for comment/header
// lines, throws on anything else.
bool parse_row(const std::string& line, std::int64_t& value, std::string& second) {
    if (line.empty() || line[0] == '#') return false;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("CSV row without a comma: " + line);
    const std::string first = line.substr(0, comma);
    second = line.substr(comma + 1);
    try {
        std::size_t used = 0;
        value = std::stoll(first, &used);
        if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
        // header row ("value,count") or garbage; headers are skipped
        if (first == "value") return false;
        throw std::invalid_argument("CSV row with non-integer value: " + line);
    }
    return true;
}

} // namespace

void write_pmf_csv(std::ostream& out, const Pmf& pmf, const std::vector<CsvComment>& comments) {
    write_comments(out, comments);
    out << "value,probability\n";
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        out << (pmf.offset() + static_cast<std::int64_t>(i)) << ","
            << format_double(pmf.mass()[i]) << "\n";
    }
}

void write_histogram_csv(std::ostream& out, const Histogram& h,
                         const std::vector<CsvComment>& comments) {
    write_comments(out, comments);
    out << "value,count\n";
    for (std::size_t i = 0; i < h.counts().size(); ++i) {
        out << (h.offset() + static_cast<std::int64_t>(i)) << "," << h.counts()[i] << "\n";
    }
}

Histogram read_histogram_csv(std::istream& in) {
    Histogram h;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::int64_t value = 0;
        std::string count_text;
        if (!parse_row(line, value, count_text)) continue;
        try {
            std::size_t used = 0;
            const std::uint64_t count = std::stoull(count_text, &used);
            if (used != count_text.size()) throw std::invalid_argument(count_text);
            h.add(value, count);
        } catch (const std::exception&) {
            throw std::invalid_argument("CSV row with non-integer count: " + line);
        }
    }
    if (h.empty()) throw std::invalid_argument("histogram CSV contains no data rows");
    return h;
}

Pmf read_pmf_csv(std::istream& in) {
    std::vector<std::pair<std::int64_t, double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::int64_t value = 0;
        std::string mass_text;
        if (!parse_row(line, value, mass_text)) continue;
        try {
            std::size_t used = 0;
            const double mass = std::stod(mass_text, &used);
            if (used != mass_text.size()) throw std::invalid_argument(mass_text);
            rows.emplace_back(value, mass);
        } catch (const std::exception&) {
            throw std::invalid_argument("CSV row with non-numeric probability: " + line);
        }
    }
    if (rows.empty()) throw std::invalid_argument("PMF CSV contains no data rows");

    std::int64_t lo = rows.front().first;
    std::int64_t hi = rows.front().first;
    for (const auto& [value, mass] : rows) {
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    }
    std::vector<double> mass(static_cast<std::size_t>(hi - lo + 1), 0.0);
    double sum = 0.0;
    for (const auto& [value, m] : rows) {
        mass[static_cast<std::size_t>(value - lo)] = m;
        sum += m;
    }
    const double deficit = std::max(0.0, 1.0 - sum);
    return Pmf(lo, std::move(mass), deficit);
}

} // namespace locktrials
