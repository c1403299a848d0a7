#include "btcprof/trace_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include "json.hpp"

namespace btcprof {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

TraceFileHeader parse_header(std::string_view line, std::size_t line_no) {
  std::optional<std::size_t> width;
  std::optional<Radix> radix;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto end = line.find_first_of(" \t", pos);
    const std::string_view tok = line.substr(pos, end - pos);
    pos = end == std::string_view::npos ? line.size() : end + 1;
    if (tok.empty()) continue;

    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("bad header token '" + std::string(tok) + "'", line_no);
    }
    const std::string_view key = tok.substr(0, eq);
    const std::string_view value = tok.substr(eq + 1);
    if (key == "width") {
      std::size_t w = 0;
      const auto [p, ec] =
          std::from_chars(value.data(), value.data() + value.size(), w);
      if (ec != std::errc{} || p != value.data() + value.size() || w == 0 ||
          w > kMaxWidth) {
        throw ParseError("bad width '" + std::string(value) + "'", line_no);
      }
      width = w;
    } else if (key == "radix") {
      radix = parse_radix_name(value);
      if (!radix) {
        throw ParseError("bad radix '" + std::string(value) +
                             "' (expected bin or hex)",
                         line_no);
      }
    } else {
      throw ParseError("unknown header key '" + std::string(key) + "'",
                       line_no);
    }
  }
  if (!width || !radix) {
    throw ParseError("header must be 'width=<n> radix=<bin|hex>'", line_no);
  }
  return {*width, *radix};
}

std::string format_double(double v) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

const json& require(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string("report is missing '") + key + "'", 0);
  }
  return *it;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      line_(line) {}

std::string_view radix_name(Radix radix) {
  return radix == Radix::kHex ? "hex" : "bin";
}

std::optional<Radix> parse_radix_name(std::string_view name) {
  if (name == "hex") return Radix::kHex;
  if (name == "bin") return Radix::kBinary;
  return std::nullopt;
}

Trace read_trace(std::istream& in) {
  std::optional<TraceFileHeader> header;
  std::optional<Trace> trace;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = strip_comment(raw);
    if (line.empty()) continue;
    if (!header) {
      header = parse_header(line, line_no);
      trace.emplace(header->width);
      continue;
    }
    try {
      trace->push_back(word_from_text(line, header->radix, header->width));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!header) throw ParseError("missing header", 0);
  if (trace->empty()) throw ParseError("empty trace", 0);
  return std::move(*trace);
}

Trace parse_trace(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_trace(in);
}

void write_trace(std::ostream& out, const Trace& trace, Radix radix) {
  out << "width=" << trace.width() << " radix=" << radix_name(radix) << '\n';
  for (const Word& w : trace) out << to_text(w, radix) << '\n';
}

std::string render_trace(const Trace& trace, Radix radix) {
  std::ostringstream out;
  write_trace(out, trace, radix);
  return out.str();
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "table") return ReportFormat::kTable;
  return std::nullopt;
}

std::string write_report(const ActivityReport& report, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::kJson: {
      json j = {
          {"width", report.width},
          {"transfers", report.transfers},
          {"total_transitions", report.total_transitions},
          {"tau", report.tau},
          {"tau_display", tau_display(report)},
          {"per_bit_toggles", report.per_bit_toggles},
      };
      if (report.per_cycle) j["per_cycle"] = *report.per_cycle;
      out << j.dump(2) << '\n';
      break;
    }
    case ReportFormat::kCsv: {
      // Per-line activity is toggles / transfers.
      out << "line,toggles,activity\n";
      for (std::size_t i = 0; i < report.per_bit_toggles.size(); ++i) {
        const std::uint64_t t = report.per_bit_toggles[i];
        out << i << ',' << t << ','
            << format_double(report.transfers == 0
                                 ? 0.0
                                 : static_cast<double>(t) /
                                       static_cast<double>(report.transfers))
            << '\n';
      }
      out << "total," << report.total_transitions << ','
          << format_double(report.tau) << '\n';
      break;
    }
    case ReportFormat::kTable: {
      out << "width               " << report.width << '\n'
          << "transfers           " << report.transfers << '\n'
          << "total transitions   " << report.total_transitions << '\n'
          << "switching activity  " << tau_display(report) << "  (tau = "
          << format_double(report.tau) << ")\n"
          << "\n  bit   toggles\n";
      for (std::size_t i = report.per_bit_toggles.size(); i-- > 0;) {
        char line[64];
        std::snprintf(line, sizeof line, "  %3zu  %8llu\n", i,
                      static_cast<unsigned long long>(report.per_bit_toggles[i]));
        out << line;
      }
      break;
    }
  }
  return out.str();
}

ActivityReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!j.is_object()) throw ParseError("report must be a JSON object", 0);
  try {
    std::optional<std::vector<std::uint64_t>> per_cycle;
    if (const auto it = j.find("per_cycle"); it != j.end()) {
      per_cycle = it->get<std::vector<std::uint64_t>>();
    }
    ActivityReport r{
        .width = require(j, "width").get<std::size_t>(),
        .transfers = require(j, "transfers").get<std::uint64_t>(),
        .total_transitions =
            require(j, "total_transitions").get<std::uint64_t>(),
        .tau = require(j, "tau").get<double>(),
        .per_bit_toggles =
            require(j, "per_bit_toggles").get<std::vector<std::uint64_t>>(),
        .per_cycle = std::move(per_cycle)};
    if (r.per_bit_toggles.size() != r.width) {
      throw ParseError("per_bit_toggles length differs from width", 0);
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad report field: ") + e.what(), 0);
  }
}

}  // namespace btcprof
