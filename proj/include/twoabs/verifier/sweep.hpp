#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "twoabs/verifier/statements.hpp"

namespace twoabs::verify {

struct SweepOptions {
  Budget budget;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepReport {
  std::vector<StatementReport> statements;  // in the order requested
  std::size_t instances = 0;
  double seconds = 0;

  bool holds() const {
    return std::all_of(statements.begin(), statements.end(), [](const auto& s) { return s.holds(); });
  }
  std::size_t counterexamples() const {
    std::size_t n = 0;
    for (const auto& s : statements) n += s.counterexamples.size();
    return n;
  }
};

/// Runs every statement on every instance. Work items are spread over a
/// thread pool; results are merged in (statement, instance) order so the
/// report does not depend on scheduling.
inline SweepReport run_sweep(const std::vector<StatementId>& ids, const std::vector<InstanceSpec>& instances,
                             const SweepOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t tasks = ids.size() * instances.size();
  std::vector<StatementReport> results(tasks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::size_t error_task = tasks;
  std::mutex error_mutex;

  auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks) return;
      try {
        results[t] = verify_statement(ids[t / instances.size()], instances[t % instances.size()], options.budget);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (t < error_task) {
          error_task = t;
          error = std::current_exception();
        }
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.instances = instances.size();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    StatementReport merged;
    merged.id = ids[i];
    for (std::size_t k = 0; k < instances.size(); ++k) merged.merge(results[i * instances.size() + k]);
    report.statements.push_back(std::move(merged));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace twoabs::verify
