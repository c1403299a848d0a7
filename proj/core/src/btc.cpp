#include "btcprof/btc.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace btcprof {

BitTransitionCounter::BitTransitionCounter(std::size_t width)
    : width_(width), prev_data_(width) {}

CycleRecord BitTransitionCounter::step(bool reset, const Word& datain) {
  if (datain.width() != width_) {
    throw std::invalid_argument("datain width " +
                                std::to_string(datain.width()) +
                                " differs from counter width " +
                                std::to_string(width_));
  }

  CycleRecord rec{.cycle = cycle_++,
                  .reset = reset,
                  .datain = datain,
                  .dataout = Word(width_)};
  if (reset) {
    total_ = 0;
  } else {
    const std::size_t one = hamming_distance(prev_data_, datain);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    total_ = total_ > kMax - one ? kMax : total_ + one;
    rec.one_transition = one;
    rec.dataout = prev_data_;
  }
  rec.total_transition = total_;
  prev_data_ = datain;
  return rec;
}

std::vector<CycleRecord> run_counter(const Trace& trace,
                                     bool reset_on_first_cycle) {
  if (trace.empty()) throw std::invalid_argument("empty trace");
  BitTransitionCounter btc(trace.width());
  std::vector<CycleRecord> records;
  records.reserve(trace.size());
  bool reset = reset_on_first_cycle;
  for (const Word& w : trace) {
    records.push_back(btc.step(reset, w));
    reset = false;
  }
  return records;
}

}  // namespace btcprof
