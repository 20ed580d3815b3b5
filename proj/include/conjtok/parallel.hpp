#pragma once

#include <deque>
#include <functional>
#include <future>
#include <thread>
#include <vector>

namespace conjtok {

// Applies fn to blocks of items on `threads` workers and hands results to
// sink in input order. Memory stays bounded by the in-flight window, not
// the input size.
//
// next_block must return an empty vector at end of input; fn must be safe
// to call concurrently on distinct blocks.
template <typename In, typename Out>
void ordered_parallel_map(const std::function<std::vector<In>()>& next_block,
                          const std::function<std::vector<Out>(std::vector<In>&&)>& fn,
                          const std::function<void(std::vector<Out>&&)>& sink,
                          unsigned threads) {
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads <= 1) {
    while (true) {
      std::vector<In> block = next_block();
      if (block.empty()) return;
      sink(fn(std::move(block)));
    }
  }

  std::deque<std::future<std::vector<Out>>> in_flight;
  bool exhausted = false;
  while (!exhausted || !in_flight.empty()) {
    while (!exhausted && in_flight.size() < 2 * std::size_t(threads)) {
      std::vector<In> block = next_block();
      if (block.empty()) {
        exhausted = true;
        break;
      }
      in_flight.push_back(
          std::async(std::launch::async, fn, std::move(block)));
    }
    if (in_flight.empty()) break;
    sink(in_flight.front().get());
    in_flight.pop_front();
  }
}

}  // namespace conjtok
