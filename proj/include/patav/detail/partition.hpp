#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace patav {

template <typename R>
std::vector<R> run_partitioned(const FamilySpec& spec, int jobs, const std::function<R(int)>& work) {
  const std::vector<int> firsts = first_entry_values(spec);
  std::vector<R> results(firsts.size());
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(firsts.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < firsts.size(); ++i) results[i] = work(firsts[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < firsts.size(); i = next++) {
        try {
          results[i] = work(firsts[i]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace patav
