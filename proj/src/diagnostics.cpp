#include "bexsam/diagnostics.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bexsam {

double default_skew_threshold(std::size_t n) {
    return 2.0 * std::sqrt(0.25 / static_cast<double>(n));
}

SkewReport skewness_report(const Dataset& data, double threshold) {
    if (data.rows.empty()) throw std::invalid_argument("empty data set");
    if (threshold < 0.0) throw std::invalid_argument("threshold must be >= 0");

    SkewReport report;
    report.threshold = threshold;
    const double n = static_cast<double>(data.rows.size());
    for (int c = 0; c < data.width(); ++c) {
        SkewEntry entry;
        entry.label = data.labels[c];
        double ones = 0.0;
        for (const auto& row : data.rows) ones += row[c];
        entry.p_one = ones / n;
        entry.deviation = std::abs(entry.p_one - 0.5);
        entry.skew_confirmed = entry.deviation > threshold;
        entry.inconclusive = !entry.skew_confirmed;
        report.entries.push_back(entry);
    }
    return report;
}

std::string format_skew_report(const SkewReport& report) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4);
    os << "variable   P(x=1)  |P-0.5|  verdict\n";
    for (const SkewEntry& e : report.entries) {
        os << 'v' << std::left << std::setw(9) << e.label << ' '
           << std::right << std::setw(6) << e.p_one << "   "
           << std::setw(6) << e.deviation << "  "
           << (e.skew_confirmed ? "skew confirmed" : "inconclusive") << '\n';
    }
    os << "threshold " << report.threshold
       << "; a deviation below threshold does not disprove skewness\n";
    return os.str();
}

}  // namespace bexsam
