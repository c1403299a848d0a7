// Acceptance runner. Prints one PASS/FAIL line per criterion and exits with
// the number of failures.
//
// Checks lean on small integer models (plain uint64_t arithmetic) instead of
// the library's own helpers wherever that is practical.

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "btcprof/activity.hpp"
#include "btcprof/bits.hpp"
#include "btcprof/btc.hpp"
#include "btcprof/generators.hpp"
#include "btcprof/power.hpp"
#include "btcprof/reference_tables.hpp"
#include "btcprof/trace_io.hpp"

using namespace btcprof;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] AC%d %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.empty() ? "" : " : ", detail.c_str());
  if (!ok) ++failures;
}

// Runs a check; an escaping exception counts as a failure.
void criterion(int id, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(" exception: ") + e.what();
  }
  report(id, name, ok, detail);
}

std::uint64_t mask(std::size_t w) {
  return w == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
}

double rel_err(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

// Half-up rounding of num/den to `decimals` places, done with integers.
std::string round_half_up(std::uint64_t num, std::uint64_t den, int decimals) {
  std::uint64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const std::uint64_t scaled = (num * scale * 2 + den) / (den * 2);
  std::string frac = std::to_string(scaled % scale);
  frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
  return std::to_string(scaled / scale) + "." + frac;
}

std::string truncated(std::uint64_t num, std::uint64_t den, int decimals) {
  std::uint64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const std::uint64_t scaled = num * scale / den;
  std::string frac = std::to_string(scaled % scale);
  frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
  return std::to_string(scaled / scale) + "." + frac;
}

Trace trace_of(std::size_t width, const std::vector<std::uint64_t>& values) {
  Trace t(width);
  for (std::uint64_t v : values) t.push_back(Word::from_uint(width, v));
  return t;
}

std::uint64_t counter_total(std::size_t width, bool gray) {
  std::uint64_t total = 0;
  std::uint64_t prev = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << width); ++i) {
    const std::uint64_t cur = gray ? (i ^ (i >> 1)) : i;
    total += static_cast<std::uint64_t>(std::popcount(prev ^ cur));
    prev = cur;
  }
  return total;
}

void ac1() {
  criterion(1, "counter table reproduction", [](std::string& d) {
    bool ok = true;
    const auto rows = reproduce_counter_table();
    for (const CounterRow& row : rows) {
      const auto& ref = row.reference;
      const bool gray = ref.kind == GeneratorKind::kGrayCounter;
      const std::uint64_t oracle = counter_total(ref.width, gray);
      const std::uint64_t den = ref.width * ((std::uint64_t{1} << ref.width) - 1);
      const std::string shown =
          round_half_up(row.report.total_transitions, den, ref.decimals);
      const bool row_ok = row.report.total_transitions == ref.transitions &&
                          oracle == ref.transitions && shown == ref.tau &&
                          row.tau_text == ref.tau;
      ok = ok && row_ok;
      d += std::string(ref.label) + "=" +
           std::to_string(row.report.total_transitions) + "/" + shown + " ";
    }
    return ok && rows.size() == 4;
  });
}

void ac2() {
  criterion(2, "cycle trace semantics", [](std::string& d) {
    BitTransitionCounter btc(16);
    const std::uint64_t in[] = {0x0000, 0x0303, 0x0F03};
    const std::uint64_t one[] = {0, 4, 2};
    const std::uint64_t total[] = {0, 4, 6};
    std::uint64_t prev_in = 0;
    bool ok = true;
    for (int c = 0; c < 3; ++c) {
      const CycleRecord r = btc.step(c == 0, Word::from_uint(16, in[c]));
      const std::uint64_t expected_out = c == 0 ? 0 : prev_in;
      ok = ok && r.one_transition == one[c] && r.total_transition == total[c] &&
           r.dataout.low_bits() == expected_out;
      d += to_hex(r.dataout) + ":" + std::to_string(r.one_transition) + "/" +
           std::to_string(r.total_transition) + " ";
      prev_in = in[c];
    }
    return ok;
  });
}

void ac3() {
  criterion(3, "switching activity 2/(8*1)", [](std::string& d) {
    const double tau = switching_activity(2, 8, 1);
    d = std::to_string(tau);
    return tau == 0.25;
  });
}

void ac4() {
  criterion(4, "hamming distance example", [](std::string& d) {
    const auto h = hamming_distance(word_from_text("00111100", Radix::kBinary, 8),
                                    word_from_text("11111101", Radix::kBinary, 8));
    d = std::to_string(h);
    return h == 3 && std::popcount(std::uint64_t{0b00111100 ^ 0b11111101}) == 3;
  });
}

void ac5() {
  criterion(5, "pattern table internal consistency", [](std::string& d) {
    int trunc_hits = 0;
    int half_up_hits = 0;
    int lib_hits = 0;
    for (const PatternReference& ref : kPatternReference) {
      for (std::size_t c = 0; c < 3; ++c) {
        const std::uint64_t den = kPatternWidth * kPatternCycles[c];
        trunc_hits += truncated(ref.transitions[c], den, 2) == ref.tau[c];
        half_up_hits += round_half_up(ref.transitions[c], den, 2) == ref.tau[c];
      }
    }
    for (const PatternRow& row : reproduce_pattern_table()) {
      for (const PatternCell& cell : row.cells) lib_hits += cell.reference_consistent;
    }
    d = "truncate " + std::to_string(trunc_hits) + "/12, half-up " +
        std::to_string(half_up_hits) + "/12, library " +
        std::to_string(lib_hits) + "/12";
    return trunc_hits >= 11 && lib_hits == trunc_hits &&
           kPatternRounding == Rounding::kTruncate;
  });
}

void ac6() {
  criterion(6, "pattern table reproduction regime", [](std::string& d) {
    bool ok = true;
    int exact = 0;
    int cells = 0;
    for (const PatternRow& row : reproduce_pattern_table()) {
      for (const PatternCell& cell : row.cells) {
        ++cells;
        ok = ok && cell.computed_tau >= 0.35 && cell.computed_tau <= 0.75;
        exact += cell.transitions_match;
        d += std::string(row.reference.label) + "@" + std::to_string(cell.cycles) +
             "=" + std::to_string(cell.computed_transitions) + " ";
      }
    }
    d += "| exact count matches " + std::to_string(exact) + "/12";
    return ok && cells == 12;
  });
}

void ac7() {
  criterion(7, "counter, analyzer and pairwise oracle agree", [](std::string& d) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
      const std::size_t width = std::uniform_int_distribution<std::size_t>(1, 64)(rng);
      const std::size_t len = std::uniform_int_distribution<std::size_t>(2, 200)(rng);
      std::vector<std::uint64_t> values(len);
      for (auto& v : values) v = rng() & mask(width);
      std::uint64_t oracle = 0;
      for (std::size_t k = 1; k < len; ++k) {
        oracle += static_cast<std::uint64_t>(std::popcount(values[k - 1] ^ values[k]));
      }
      const Trace t = trace_of(width, values);
      const std::uint64_t btc = run_counter(t).back().total_transition;
      const std::uint64_t an = analyze_trace(t).total_transitions;
      if (btc != oracle || an != oracle) {
        d = "trace " + std::to_string(i) + " width " + std::to_string(width) +
            ": btc " + std::to_string(btc) + " analyze " + std::to_string(an) +
            " oracle " + std::to_string(oracle);
        return false;
      }
    }
    d = "1000 traces";
    return true;
  });
}

// Reference 4-bit Fibonacci register with taps {4,3}: tap t reads bit 4 - t.
std::uint64_t fib4(std::uint64_t s) {
  const std::uint64_t fb = ((s >> 0) ^ (s >> 1)) & 1;
  return (s >> 1) | (fb << 3);
}

std::uint64_t galois4(std::uint64_t s) {
  const std::uint64_t out = s & 1;
  std::uint64_t n = (s >> 1) | (out << 3);
  if (out) n ^= std::uint64_t{1} << 2;  // tap 3
  return n;
}

std::uint64_t ca_oracle(std::uint64_t s, std::size_t w, int rule) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < w; ++i) {
    const std::uint64_t left = i + 1 < w ? (s >> (i + 1)) & 1 : 0;
    const std::uint64_t right = i > 0 ? (s >> (i - 1)) & 1 : 0;
    std::uint64_t v = left ^ right;
    if (rule == 150) v ^= (s >> i) & 1;
    n |= v << i;
  }
  return n;
}

void ac8() {
  criterion(8, "generator properties", [](std::string& d) {
    // Gray counter: one flip per step.
    for (std::size_t w = 1; w <= 16; ++w) {
      const std::uint64_t starts = w <= 10 ? (std::uint64_t{1} << w) : 64;
      for (std::uint64_t s = 0; s < starts; ++s) {
        const std::uint64_t start = w <= 10 ? s : (s * 2654435761u) & mask(w);
        const Word seed = Word::from_uint(w, start ^ (start >> 1));
        const Word next = gray_counter_step(seed);
        if (hamming_distance(seed, next) != 1) {
          d = "gray width " + std::to_string(w) + " state " + to_binary(seed);
          return false;
        }
      }
    }
    // Binary counter full-period total.
    for (std::size_t w = 2; w <= 10; ++w) {
      const Trace t = generate({.kind = GeneratorKind::kBinaryCounter,
                                .seed = Word(w),
                                .taps = {}},
                               (std::size_t{1} << w) - 1);
      const std::uint64_t expect = (std::uint64_t{1} << (w + 1)) - w - 2;
      if (analyze_trace(t).total_transitions != expect ||
          counter_total(w, false) != expect) {
        d = "binary width " + std::to_string(w);
        return false;
      }
    }
    // LFSR {4,3}: period 15 in both forms, matching the integer models.
    for (GeneratorKind kind : {GeneratorKind::kLfsrExternal, GeneratorKind::kLfsrInternal}) {
      for (std::uint64_t s = 1; s < 16; ++s) {
        Generator g({.kind = kind, .seed = Word::from_uint(4, s), .taps = {4, 3}});
        std::uint64_t ref = s;
        std::size_t period = 0;
        do {
          const Word w = g.advance();
          ref = kind == GeneratorKind::kLfsrExternal ? fib4(ref) : galois4(ref);
          if (w.low_bits() != ref) {
            d = std::string(to_string(kind)) + " diverges from model at seed " + std::to_string(s);
            return false;
          }
          ++period;
        } while (g.current().low_bits() != s && period < 100);
        if (period != 15) {
          d = std::string(to_string(kind)) + " period " + std::to_string(period);
          return false;
        }
      }
    }
    // CA linearity.
    std::mt19937_64 rng(8);
    for (int i = 0; i < 500; ++i) {
      const std::size_t w = std::uniform_int_distribution<std::size_t>(1, 64)(rng);
      const std::uint64_t a = rng() & mask(w);
      const std::uint64_t b = rng() & mask(w);
      for (CaRule rule : {CaRule::kRule90, CaRule::kRule150}) {
        const Word wa = Word::from_uint(w, a);
        const Word wb = Word::from_uint(w, b);
        const Word lhs = ca_step(wa ^ wb, rule, CaBoundary::kNull);
        const Word rhs = ca_step(wa, rule, CaBoundary::kNull) ^
                         ca_step(wb, rule, CaBoundary::kNull);
        if (lhs != rhs || lhs.low_bits() != ca_oracle(a ^ b, w, static_cast<int>(rule))) {
          d = "CA pair " + std::to_string(i);
          return false;
        }
      }
    }
    d = "gray, binary, lfsr {4,3}, CA linearity";
    return true;
  });
}

void ac9() {
  criterion(9, "power model", [](std::string& d) {
    const double c = 2.2e-12, v = 1.2, f = 125e6;
    const double full = dynamic_power(
        {.tau = 1.0, .load_capacitance = c, .supply_voltage = v, .frequency = f});
    bool ok = full == c * v * f;

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const DynamicPowerParams p{.tau = u(rng) * 0.5,
                                 .load_capacitance = u(rng) * 1e-11,
                                 .supply_voltage = u(rng) * 3,
                                 .frequency = u(rng) * 1e9};
      const double p0 = dynamic_power(p);
      const double k = 1.0 + u(rng);
      auto a = p;
      a.tau *= k;
      auto b = p;
      b.load_capacitance *= k;
      auto e = p;
      e.frequency *= k;
      worst = std::max({worst, rel_err(dynamic_power(a), k * p0),
                        rel_err(dynamic_power(b), k * p0),
                        rel_err(dynamic_power(e), k * p0)});
    }
    ok = ok && worst <= 1e-12;

    const double is = 3e-15;
    const double zero = leakage_current(is, 0.0, 300.0);
    const double vt = 1.380649e-23 * 300.0 / 1.602176634e-19;
    const double at_ln2 = leakage_current(is, vt * std::log(2.0), 300.0);
    const double err = rel_err(at_ln2, is);
    ok = ok && zero == 0.0 && err <= 1e-12;

    std::ostringstream os;
    os << "linearity worst " << worst << ", leak(0)=" << zero
       << ", leak(ln2) rel err " << err;
    d = os.str();
    return ok;
  });
}

void ac10() {
  criterion(10, "gray vs binary reduction", [](std::string& d) {
    auto counter = [](GeneratorKind kind, std::size_t w) {
      return analyze_trace(generate({.kind = kind, .seed = Word(w), .taps = {}},
                                    (std::size_t{1} << w) - 1));
    };
    const double r4 = 100.0 * compare_reports(counter(GeneratorKind::kBinaryCounter, 4),
                                              counter(GeneratorKind::kGrayCounter, 4))
                                  .relative;
    const double r8 = 100.0 * compare_reports(counter(GeneratorKind::kBinaryCounter, 8),
                                              counter(GeneratorKind::kGrayCounter, 8))
                                  .relative;
    // Integer model: (binary - gray) / binary on equal denominators.
    const double o4 = 100.0 * (26.0 - 15.0) / 26.0;
    const double o8 = 100.0 * (502.0 - 255.0) / 502.0;
    std::ostringstream os;
    os.precision(4);
    os << "4-bit " << r4 << "%, 8-bit " << r8 << "%";
    d = os.str();
    return std::abs(r4 - 42.0) <= 1.0 && std::abs(r8 - 49.0) <= 1.0 &&
           r4 >= 39.0 && r8 <= 51.0 && std::abs(r4 - o4) < 1e-9 &&
           std::abs(r8 - o8) < 1e-9;
  });
}

void ac11() {
  criterion(11, "trace file and report round-trips", [](std::string& d) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      const std::size_t width = std::uniform_int_distribution<std::size_t>(1, 300)(rng);
      const std::size_t len = std::uniform_int_distribution<std::size_t>(2, 60)(rng);
      Trace t(width);
      for (std::size_t k = 0; k < len; ++k) {
        Word w(width);
        for (std::size_t b = 0; b < width; ++b) {
          if (rng() & 1) w.set_bit(b, true);
        }
        t.push_back(w);
      }
      const Radix radix = i % 2 ? Radix::kHex : Radix::kBinary;
      std::ostringstream out;
      write_trace(out, t, radix);
      std::istringstream in(out.str());
      const Trace back = read_trace(in);
      const ActivityReport r = analyze_trace(t, i % 3 == 0);
      const ActivityReport rb = report_from_json(write_report(r, ReportFormat::kJson));
      if (!(back == t) || !(rb == r) || render_trace(back, radix) != out.str()) {
        d = "fixture " + std::to_string(i) + " width " + std::to_string(width);
        return false;
      }
    }
    d = "200 fixtures";
    return true;
  });
}

}  // namespace

int main() {
  ac1();
  ac2();
  ac3();
  ac4();
  ac5();
  ac6();
  ac7();
  ac8();
  ac9();
  ac10();
  ac11();
  std::printf("%d of 11 criteria failed\n", failures);
  return failures;
}
