#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "btcprof/activity.hpp"
#include "btcprof/bits.hpp"
#include "btcprof/btc.hpp"
#include "btcprof/encoders.hpp"
#include "btcprof/generators.hpp"
#include "btcprof/power.hpp"
#include "btcprof/reference_tables.hpp"
#include "btcprof/trace_io.hpp"

namespace btcprof::cli {
namespace {

// File open/write failures; reported with exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeneratorFlags {
  std::string kind;
  std::size_t width = 16;
  std::string seed;
  std::string taps;
  std::string boundary = "null";
  std::optional<std::size_t> cycles;
};

void add_generator_flags(CLI::App& cmd, GeneratorFlags& f) {
  cmd.add_option("--kind", f.kind,
                 "lfsr_internal | lfsr_external | ca90 | ca150 | binary | gray");
  cmd.add_option("--width", f.width, "Bus width in bits")->capture_default_str();
  cmd.add_option("--seed", f.seed,
                 "Initial word, binary MSB first or 0x-prefixed hex "
                 "(default all zero)");
  cmd.add_option("--taps", f.taps,
                 "Comma-separated LFSR tap positions (default: maximal-length "
                 "set for the width)");
  cmd.add_option("--boundary", f.boundary, "CA boundary: null | cyclic")
      ->capture_default_str();
  cmd.add_option("--cycles", f.cycles, "Clock cycles after the seed");
}

std::vector<std::size_t> parse_taps(const std::string& text) {
  std::vector<std::size_t> taps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) {
      throw std::invalid_argument("bad tap position '" + item + "'");
    }
    taps.push_back(v);
  }
  if (taps.empty()) throw std::invalid_argument("empty --taps list");
  return taps;
}

CaBoundary parse_boundary(const std::string& text) {
  const auto b = parse_ca_boundary(text);
  if (!b) throw std::invalid_argument("unknown --boundary '" + text + "'");
  return *b;
}

Word parse_seed(const std::string& text, std::size_t width) {
  if (text.empty()) return Word(width);
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
    return word_from_text(std::string_view(text).substr(2), Radix::kHex, width);
  }
  return word_from_text(text, Radix::kBinary, width);
}

GeneratorConfig build_config(const GeneratorFlags& f) {
  const auto kind = parse_generator_kind(f.kind);
  if (!kind) throw std::invalid_argument("unknown --kind '" + f.kind + "'");
  check_width(f.width);

  GeneratorConfig config{.kind = *kind,
                         .seed = parse_seed(f.seed, f.width),
                         .taps = {},
                         .boundary = parse_boundary(f.boundary)};
  if (is_lfsr(*kind)) {
    config.taps = f.taps.empty() ? default_taps(f.width) : parse_taps(f.taps);
    if (config.taps.empty()) {
      throw std::invalid_argument("no default taps for width " +
                                  std::to_string(f.width) + "; pass --taps");
    }
  }
  validate(config);
  return config;
}

Trace read_trace_file(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return read_trace(stdin_stream);
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  try {
    return read_trace(file);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line());
  }
}

std::string fmt_g(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string bold(const std::string& s, bool color) {
  return color ? "\033[1m" + s + "\033[0m" : s;
}

// gen -----------------------------------------------------------------------

struct GenOptions {
  GeneratorFlags gen;
  std::string output = "-";
  std::string radix;
};

int cmd_gen(const GenOptions& o, const Streams& io) {
  if (o.gen.kind.empty()) throw std::invalid_argument("gen needs --kind");
  if (!o.gen.cycles) throw std::invalid_argument("gen needs --cycles");
  const GeneratorConfig config = build_config(o.gen);
  const Trace trace = generate(config, *o.gen.cycles);

  Radix radix = config.width() % 4 == 0 ? Radix::kHex : Radix::kBinary;
  if (!o.radix.empty()) {
    const auto r = parse_radix_name(o.radix);
    if (!r) throw std::invalid_argument("unknown --radix '" + o.radix + "'");
    radix = *r;
  }

  if (o.output == "-") {
    write_trace(io.out, trace, radix);
    io.err << "wrote " << trace.size() << " words\n";
  } else {
    std::ofstream file(o.output);
    if (!file) throw IoError("cannot write '" + o.output + "'");
    write_trace(file, trace, radix);
    if (!file.flush()) throw IoError("write to '" + o.output + "' failed");
    io.out << "wrote " << trace.size() << " words to " << o.output << '\n';
  }
  return kExitOk;
}

// analyze -------------------------------------------------------------------

struct AnalyzeOptions {
  GeneratorFlags gen;
  std::string trace_path;
  bool pipe = false;
  std::string encode = "none";
  std::string format = "table";
  bool per_cycle = false;
  bool show_cycles = false;
};

void print_cycle_table(const Trace& trace, const Streams& io) {
  const auto records = run_counter(trace, /*reset_on_first_cycle=*/true);
  const Radix radix = trace.width() % 4 == 0 ? Radix::kHex : Radix::kBinary;
  io.out << bold("cycle  reset  datain  dataout  one_transition  total_transition",
                 io.color)
         << '\n';
  for (const CycleRecord& r : records) {
    io.out << r.cycle << "  " << (r.reset ? 1 : 0) << "  "
           << to_text(r.datain, radix) << "  " << to_text(r.dataout, radix)
           << "  " << r.one_transition << "  " << r.total_transition << '\n';
  }
  io.out << '\n';
}

int cmd_analyze(const AnalyzeOptions& o, const Streams& io) {
  const int sources = (o.trace_path.empty() ? 0 : 1) + (o.pipe ? 1 : 0) +
                      (o.gen.kind.empty() ? 0 : 1);
  if (sources != 1) {
    throw std::invalid_argument(
        "analyze needs exactly one input: a trace path, --pipe, or --kind");
  }
  const auto encoding = parse_encoding(o.encode);
  if (!encoding) throw std::invalid_argument("unknown --encode '" + o.encode + "'");
  const auto format = parse_report_format(o.format);
  if (!format) throw std::invalid_argument("unknown --format '" + o.format + "'");

  Trace raw = [&] {
    if (!o.gen.kind.empty()) {
      if (!o.gen.cycles) throw std::invalid_argument("--kind needs --cycles");
      return generate(build_config(o.gen), *o.gen.cycles);
    }
    return read_trace_file(o.pipe ? "-" : o.trace_path, io.in);
  }();
  if (raw.size() < 2) {
    throw ParseError("trace needs at least two words to measure activity", 0);
  }

  const Trace trace = apply_encoding(raw, *encoding);
  const ActivityReport report = analyze_trace(trace, o.per_cycle);

  if (o.show_cycles && *format == ReportFormat::kTable) {
    print_cycle_table(trace, io);
  }
  std::string text = write_report(report, *format);
  if (*format == ReportFormat::kTable && io.color) {
    const std::string key = "switching activity";
    if (const auto pos = text.find(key); pos != std::string::npos) {
      const auto eol = text.find('\n', pos);
      text = text.substr(0, pos) + bold(text.substr(pos, eol - pos), true) +
             text.substr(eol);
    }
  }
  io.out << text;
  return kExitOk;
}

// power ---------------------------------------------------------------------

struct PowerOptions {
  std::optional<double> tau;
  std::string from_report;
  std::optional<double> cap;
  std::optional<double> vdd;
  std::optional<double> freq;
  int vdd_exponent = 1;
  std::optional<double> isat;
  double vdiode = 0.0;
  double temp = 300.0;
};

int cmd_power(const PowerOptions& o, const Streams& io) {
  if (o.tau.has_value() == !o.from_report.empty()) {
    throw std::invalid_argument("power needs exactly one of --tau or --from-report");
  }
  if (!o.cap || !o.vdd || !o.freq) {
    throw std::invalid_argument("power needs --cap, --vdd and --freq");
  }
  double tau = 0.0;
  if (o.tau) {
    tau = *o.tau;
  } else {
    std::ifstream file(o.from_report);
    if (!file) throw IoError("cannot open '" + o.from_report + "'");
    const std::string text{std::istreambuf_iterator<char>(file), {}};
    tau = report_from_json(text).tau;
  }

  const double dynamic = dynamic_power({.tau = tau,
                                        .load_capacitance = *o.cap,
                                        .supply_voltage = *o.vdd,
                                        .frequency = *o.freq,
                                        .voltage_exponent = o.vdd_exponent});
  io.out << "tau             " << fmt_g(tau) << '\n'
         << "dynamic power   " << fmt_g(dynamic) << " W ("
         << fmt_g(to_microwatts(dynamic)) << " uW)\n";
  if (o.isat) {
    const double leak = leakage_current(*o.isat, o.vdiode, o.temp);
    const double stat = static_power(leak, *o.vdd);
    io.out << "leakage current " << fmt_g(leak) << " A\n"
           << "static power    " << fmt_g(stat) << " W ("
           << fmt_g(to_microwatts(stat)) << " uW)\n"
           << "total power     " << fmt_g(dynamic + stat) << " W ("
           << fmt_g(to_microwatts(dynamic + stat)) << " uW)\n";
  }
  return kExitOk;
}

// tables --------------------------------------------------------------------

struct TablesOptions {
  std::string taps;
  std::string boundary = "null";
};

int cmd_tables(const TablesOptions& o, const Streams& io) {
  PatternTableOptions options;
  if (!o.taps.empty()) options.taps = parse_taps(o.taps);
  options.boundary = parse_boundary(o.boundary);
  validate(GeneratorConfig{
      .kind = GeneratorKind::kLfsrExternal,
      .seed = word_from_text(kPatternSeed, Radix::kBinary, kPatternWidth),
      .taps = options.taps});

  io.out << render_counter_table(reproduce_counter_table()) << '\n'
         << render_pattern_table(reproduce_pattern_table(options), options);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, const Streams& io) {
  CLI::App app{"Bit transition counter and switching-activity profiler",
               "btcprof"};
  app.require_subcommand(1);

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate a stimulus trace");
  add_generator_flags(*gen, gen_opts.gen);
  gen->add_option("-o,--output", gen_opts.output, "Trace file ('-' = stdout)")
      ->capture_default_str();
  gen->add_option("--radix", gen_opts.radix,
                  "bin | hex (default hex when width is a multiple of 4)");

  AnalyzeOptions an_opts;
  auto* analyze = app.add_subcommand(
      "analyze", "Measure switching activity of a trace or generator");
  analyze->add_option("trace", an_opts.trace_path, "Trace file ('-' = stdin)");
  analyze->add_flag("--pipe", an_opts.pipe, "Read the trace from stdin");
  add_generator_flags(*analyze, an_opts.gen);
  analyze->add_option("--encode", an_opts.encode, "none | gray | businvert")
      ->capture_default_str();
  analyze->add_option("--format", an_opts.format, "json | csv | table")
      ->capture_default_str();
  analyze->add_flag("--per-cycle", an_opts.per_cycle,
                    "Include per-transfer counts in the report");
  analyze->add_flag("--show-cycles", an_opts.show_cycles,
                    "Print the counter's cycle-by-cycle outputs (table format)");

  PowerOptions pw_opts;
  auto* power = app.add_subcommand("power", "Estimate dynamic and static power");
  power->add_option("--tau", pw_opts.tau, "Switching activity in [0, 1]");
  power->add_option("--from-report", pw_opts.from_report,
                    "Take tau from a JSON activity report");
  power->add_option("--cap", pw_opts.cap, "Load capacitance (F)");
  power->add_option("--vdd", pw_opts.vdd, "Supply voltage (V)");
  power->add_option("--freq", pw_opts.freq, "Clock frequency (Hz)");
  power->add_option("--vdd-exponent", pw_opts.vdd_exponent,
                    "Exponent on V_dd: 1 or 2")
      ->capture_default_str();
  power->add_option("--isat", pw_opts.isat,
                    "Reverse saturation current (A); enables static power");
  power->add_option("--vdiode", pw_opts.vdiode, "Diode voltage (V)")
      ->capture_default_str();
  power->add_option("--temp", pw_opts.temp, "Temperature (K)")
      ->capture_default_str();

  TablesOptions tb_opts;
  auto* tables = app.add_subcommand(
      "tables", "Recompute the counter and pattern-generator activity tables");
  tables->add_option("--taps", tb_opts.taps, "LFSR taps for the pattern table");
  tables->add_option("--boundary", tb_opts.boundary, "CA boundary: null | cyclic")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_opts, io);
    if (*analyze) return cmd_analyze(an_opts, io);
    if (*power) return cmd_power(pw_opts, io);
    if (*tables) return cmd_tables(tb_opts, io);
  } catch (const ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const IoError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range, domain_error
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace btcprof::cli
