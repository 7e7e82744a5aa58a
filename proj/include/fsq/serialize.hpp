#pragma once

#include <string>

#include "fsq/constructive.hpp"
#include "fsq/restricted.hpp"
#include "fsq/tables.hpp"

// Deterministic report serialization. Infinite k values are always the
// string "inf", never a sentinel number.

namespace fsq {

enum class ExportFormat { Json, Csv, Markdown };

// Throws std::invalid_argument for unknown names.
ExportFormat parse_format(const std::string& name);

// Certificate JSON schema:
//   {"n": int, "rho": int, "parts": [int...], "method": string, "minimal": bool}
std::string certificate_to_json(const Certificate& cert);
std::string certificate_to_csv(const Certificate& cert);
std::string certificate_to_markdown(const Certificate& cert);

// Sweep exports list the exceptional content (k >= 5 and infinite entries),
// sorted by n ascending; CSV columns are n,k.
std::string sweep_to_json(const SweepReport& report);
std::string sweep_to_csv(const SweepReport& report);
std::string sweep_to_markdown(const SweepReport& report);

std::string diff_to_json(const DiffReport& report);
std::string diff_to_csv(const DiffReport& report);
std::string diff_to_markdown(const DiffReport& report);

std::string export_certificate(const Certificate& cert, ExportFormat format);
std::string export_sweep(const SweepReport& report, ExportFormat format);
std::string export_diff(const DiffReport& report, ExportFormat format);

// Writes content to path; throws std::runtime_error on I/O failure.
void write_file(const std::string& path, const std::string& content);

// Parses a certificate back from the JSON schema above (used by the
// round-trip checks).
Certificate certificate_from_json(const std::string& text);

}  // namespace fsq
