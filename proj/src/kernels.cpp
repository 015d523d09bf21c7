#include "ternalg/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace ternalg::kernels {

namespace {

int read_env_threads() {
  const char* raw = std::getenv("TERNALG_THREADS");
  if (raw == nullptr || *raw == '\0') return -1;
  char* end = nullptr;
  const long n = std::strtol(raw, &end, 10);
  if (*end != '\0' || n < 0) return -1;
  return static_cast<int>(n);
}

std::atomic<int>& configured() {
  static std::atomic<int> threads{read_env_threads()};
  return threads;
}

}  // namespace

ExecPolicy policy_from_env() { return ExecPolicy{read_env_threads()}; }

ExecPolicy default_policy() { return ExecPolicy{configured().load()}; }

void set_default_policy(ExecPolicy policy) { configured().store(policy.threads); }

IndexSpace::IndexSpace(std::vector<std::size_t> extents) : extents_(std::move(extents)) {
  for (std::size_t e : extents_) size_ *= e;
}

void IndexSpace::decode(std::size_t flat, std::size_t* out) const {
  for (std::size_t axis = extents_.size(); axis-- > 0;) {
    out[axis] = flat % extents_[axis];
    flat /= extents_[axis];
  }
}

std::vector<std::size_t> IndexSpace::decode(std::size_t flat) const {
  std::vector<std::size_t> out(extents_.size());
  decode(flat, out.data());
  return out;
}

}  // namespace ternalg::kernels
