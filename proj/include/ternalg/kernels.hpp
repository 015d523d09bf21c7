#pragma once

// Sweeps over flattened basis-index tuples. Each law check supplies an
// evaluator that appends the violations found at one flat index; results are
// concatenated in flat-index order, so serial and parallel runs produce
// identical reports.

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ternalg/law_report.hpp"

namespace ternalg::kernels {

/// threads == 0 selects the serial path, threads < 0 the OpenMP runtime default.
struct ExecPolicy {
  int threads = -1;
};

// Reads TERNALG_THREADS; unset or unparsable means runtime default.
ExecPolicy policy_from_env();
ExecPolicy default_policy();
void set_default_policy(ExecPolicy policy);

/// Row-major decoding of a flat index into a tuple with the given extents.
class IndexSpace {
 public:
  explicit IndexSpace(std::vector<std::size_t> extents);
  std::size_t size() const { return size_; }
  std::size_t rank() const { return extents_.size(); }
  void decode(std::size_t flat, std::size_t* out) const;
  std::vector<std::size_t> decode(std::size_t flat) const;

 private:
  std::vector<std::size_t> extents_;
  std::size_t size_ = 1;
};

template <class Eval>
std::vector<Violation> sweep_serial(std::size_t count, Eval&& eval) {
  std::vector<Violation> out;
  for (std::size_t flat = 0; flat < count; ++flat) eval(flat, out);
  return out;
}

template <class Eval>
std::vector<Violation> sweep_parallel(std::size_t count, Eval&& eval, int threads) {
  std::vector<std::vector<Violation>> slots(count);
  std::exception_ptr failure;
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(team)
#endif
  for (std::ptrdiff_t flat = 0; flat < static_cast<std::ptrdiff_t>(count); ++flat) {
    try {
      eval(static_cast<std::size_t>(flat), slots[flat]);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(ternalg_sweep_failure)
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Violation> out;
  for (auto& slot : slots) {
    for (auto& v : slot) out.push_back(std::move(v));
  }
  return out;
}

template <class Eval>
std::vector<Violation> sweep(std::size_t count, Eval&& eval, ExecPolicy policy = default_policy()) {
  if (policy.threads == 0 || count < 2) return sweep_serial(count, eval);
  return sweep_parallel(count, eval, policy.threads);
}

}  // namespace ternalg::kernels
