// Cycle-accurate model of a bit transition counter.
//
// The counter sits on a bus and passes `datain` through to `dataout` one
// clock later. Each cycle it reports the number of lines that toggled since
// the previous cycle (one_transition) and the running sum since the last
// reset (total_transition). Reset is synchronous and active-high.

#ifndef BTCPROF_BTC_HPP_
#define BTCPROF_BTC_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "btcprof/bits.hpp"

namespace btcprof {

struct CycleRecord {
  std::uint64_t cycle = 0;
  bool reset = false;
  Word datain;
  Word dataout;
  std::size_t one_transition = 0;
  std::uint64_t total_transition = 0;
};

class BitTransitionCounter {
 public:
  // Registers start at zero. Throws std::out_of_range for a bad width.
  explicit BitTransitionCounter(std::size_t width);

  // Clocks one cycle.
  //
  // With reset high the counts and dataout are zero and `datain` is latched
  // so the first counted cycle after reset compares against it. Otherwise
  // one_transition = hamming(previous datain, datain), the total saturates
  // at UINT64_MAX and dataout is the previous datain.
  //
  // Throws std::invalid_argument when datain has the wrong width.
  CycleRecord step(bool reset, const Word& datain);

  std::size_t width() const noexcept { return width_; }
  const Word& prev_data() const noexcept { return prev_data_; }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t cycle() const noexcept { return cycle_; }

 private:
  std::size_t width_;
  Word prev_data_;
  std::uint64_t total_ = 0;
  std::uint64_t cycle_ = 0;
};

// Feeds every word of `trace` through a fresh counter. Reset is asserted on
// cycle 0 only when `reset_on_first_cycle` is set. Throws
// std::invalid_argument for an empty trace.
std::vector<CycleRecord> run_counter(const Trace& trace,
                                     bool reset_on_first_cycle = true);

}  // namespace btcprof

#endif  // BTCPROF_BTC_HPP_
