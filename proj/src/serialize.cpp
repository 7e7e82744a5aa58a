#include "fsq/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fsq {

namespace {

using ordered_json = nlohmann::ordered_json;

Method method_from_tag(const std::string& tag) {
  for (Method m : {Method::Large2Mod4, Method::LargeOdd, Method::LargeScale,
                   Method::PrimeGt3, Method::PowTwo, Method::ThreePowTwo,
                   Method::DivNine, Method::SmallCaseDp}) {
    if (method_tag(m) == tag) return m;
  }
  throw std::invalid_argument("unknown method tag: " + tag);
}

// Sorted (n, k-string) rows of the exceptional sweep content.
std::vector<std::pair<uint64_t, std::string>> sweep_rows(const SweepReport& r) {
  std::vector<std::pair<uint64_t, std::string>> rows;
  for (uint64_t n : r.infinite) rows.emplace_back(n, "inf");
  for (const auto& [k, ns] : r.exceptional)
    for (uint64_t n : ns) rows.emplace_back(n, std::to_string(k));
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

ExportFormat parse_format(const std::string& name) {
  if (name == "json") return ExportFormat::Json;
  if (name == "csv") return ExportFormat::Csv;
  if (name == "markdown" || name == "md") return ExportFormat::Markdown;
  throw std::invalid_argument("unknown export format: " + name);
}

std::string certificate_to_json(const Certificate& cert) {
  ordered_json j;
  j["n"] = cert.n;
  j["rho"] = cert.rho;
  j["parts"] = cert.parts;
  j["method"] = std::string(method_tag(cert.method));
  j["minimal"] = cert.minimal;
  return j.dump() + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Certificate cert;
  cert.n = j.at("n").get<uint64_t>();
  cert.rho = j.at("rho").get<uint64_t>();
  cert.parts = j.at("parts").get<std::vector<uint64_t>>();
  cert.method = method_from_tag(j.at("method").get<std::string>());
  cert.minimal = j.at("minimal").get<bool>();
  return cert;
}

std::string certificate_to_csv(const Certificate& cert) {
  std::ostringstream out;
  out << "n,rho,method,minimal,parts\n";
  out << cert.n << ',' << cert.rho << ',' << method_tag(cert.method) << ','
      << (cert.minimal ? "true" : "false") << ',';
  for (size_t i = 0; i < cert.parts.size(); ++i)
    out << (i ? " " : "") << cert.parts[i];
  out << '\n';
  return out.str();
}

std::string certificate_to_markdown(const Certificate& cert) {
  std::ostringstream out;
  out << cert.n << " =";
  for (size_t i = 0; i < cert.parts.size(); ++i)
    out << (i ? " + " : " ") << cert.parts[i] << "^2";
  out << "  (avoiding " << cert.rho << ", method " << method_tag(cert.method)
      << (cert.minimal ? ", minimal" : "") << ")\n";
  return out.str();
}

std::string sweep_to_json(const SweepReport& report) {
  ordered_json j;
  j["rho"] = report.rho;
  j["bound"] = report.bound;
  j["max_finite_k"] = report.max_finite_k;
  ordered_json exc = ordered_json::object();
  for (const auto& [k, ns] : report.exceptional) exc[std::to_string(k)] = ns;
  j["exceptional"] = exc;
  j["infinite"] = report.infinite;
  j["infinite_list_complete"] = report.infinite_list_complete;
  return j.dump() + "\n";
}

std::string sweep_to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "n,k\n";
  for (const auto& [n, k] : sweep_rows(report)) out << n << ',' << k << '\n';
  return out.str();
}

std::string sweep_to_markdown(const SweepReport& report) {
  std::ostringstream out;
  out << "| k | n |\n|---|---|\n";
  if (!report.infinite.empty()) {
    out << "| inf |";
    for (size_t i = 0; i < report.infinite.size(); ++i)
      out << (i ? ", " : " ") << report.infinite[i];
    out << " |\n";
  }
  for (auto it = report.exceptional.rbegin(); it != report.exceptional.rend(); ++it) {
    out << "| " << it->first << " |";
    for (size_t i = 0; i < it->second.size(); ++i)
      out << (i ? ", " : " ") << it->second[i];
    out << " |\n";
  }
  out << "\nk <= 4 for every other n <= " << report.bound << ".\n";
  return out.str();
}

std::string diff_to_json(const DiffReport& report) {
  ordered_json j;
  j["table"] = report.table_id;
  j["pass"] = report.pass;
  ordered_json rows = ordered_json::array();
  for (const Mismatch& m : report.mismatches) {
    ordered_json row;
    row["n"] = m.n;
    row["expected"] = m.expected;
    row["computed"] = m.computed;
    rows.push_back(row);
  }
  j["mismatches"] = rows;
  return j.dump() + "\n";
}

std::string diff_to_csv(const DiffReport& report) {
  std::ostringstream out;
  out << "n,expected,computed\n";
  for (const Mismatch& m : report.mismatches)
    out << m.n << ',' << m.expected << ',' << m.computed << '\n';
  return out.str();
}

std::string diff_to_markdown(const DiffReport& report) {
  std::ostringstream out;
  if (report.pass) {
    out << "PASS (0 mismatches)\n";
    return out.str();
  }
  out << "FAIL (" << report.mismatches.size() << " mismatches)\n\n";
  out << "| n | expected | computed |\n|---|---|---|\n";
  for (const Mismatch& m : report.mismatches)
    out << "| " << m.n << " | " << m.expected << " | " << m.computed << " |\n";
  return out.str();
}

std::string export_certificate(const Certificate& cert, ExportFormat format) {
  switch (format) {
    case ExportFormat::Json: return certificate_to_json(cert);
    case ExportFormat::Csv: return certificate_to_csv(cert);
    case ExportFormat::Markdown: return certificate_to_markdown(cert);
  }
  throw std::logic_error("unreachable");
}

std::string export_sweep(const SweepReport& report, ExportFormat format) {
  switch (format) {
    case ExportFormat::Json: return sweep_to_json(report);
    case ExportFormat::Csv: return sweep_to_csv(report);
    case ExportFormat::Markdown: return sweep_to_markdown(report);
  }
  throw std::logic_error("unreachable");
}

std::string export_diff(const DiffReport& report, ExportFormat format) {
  switch (format) {
    case ExportFormat::Json: return diff_to_json(report);
    case ExportFormat::Csv: return diff_to_csv(report);
    case ExportFormat::Markdown: return diff_to_markdown(report);
  }
  throw std::logic_error("unreachable");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace fsq
