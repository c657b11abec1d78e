#pragma once

#include <string>
#include <vector>

#include "qpwalk/voter.hpp"
#include "qpwalk/walk_dp.hpp"

namespace qpwalk {

/// Shortest 17-significant-digit decimal form, '.' separator, locale-free.
std::string format_double(double v);

/// Writes header + rows as CSV to path ("-" = stdout). Returns bytes written.
std::size_t emit_csv(const std::string& path,
                     const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

/// Writes a string payload (e.g. serialized JSON) to path ("-" = stdout).
std::size_t emit_text(const std::string& path, const std::string& payload);

std::vector<std::vector<std::string>> table_rows(const AbsorptionTable& t);
std::vector<std::vector<std::string>> site_rows(const AbsorptionTable& t);
std::string mc_summary_json(const McSummary& s);

}  // namespace qpwalk
