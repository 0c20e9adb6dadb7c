#include "blochinterp/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace blochinterp {

namespace {

int read_thread_cap() {
  int cap = 0;
  if (const char* env = std::getenv("BLOCH_INTERP_THREADS")) {
    try {
      cap = std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(
          "BLOCH_INTERP_THREADS: expected an integer, got '" +
          std::string(env) + "'");
    }
    if (cap < 0) {
      throw std::invalid_argument("BLOCH_INTERP_THREADS: must be >= 0");
    }
  }
  if (cap == 0) {
    cap = static_cast<int>(std::thread::hardware_concurrency());
  }
  return std::max(cap, 1);
}

}  // namespace

int thread_cap() {
  static const int cap = read_thread_cap();
  return cap;
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(thread_cap()), n);
  if (workers <= 1) {
    body(0, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors((n + chunk - 1) / chunk);
  pool.reserve(errors.size());
  std::size_t slot = 0;
  for (std::size_t begin = 0; begin < n; begin += chunk, ++slot) {
    const std::size_t end = std::min(begin + chunk, n);
    pool.emplace_back([&body, &errors, slot, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[slot] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace blochinterp
