#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hyperboot/errors.hpp"

namespace hyperboot {

/// Pascal table of C(v, i) for 0 <= v <= max_n, 0 <= i <= max_k.
/// Entries that do not fit in 64 bits saturate; checked() refuses them.
class BinomialTable {
 public:
  static constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

  BinomialTable(unsigned max_n, unsigned max_k)
      : max_n_(max_n), max_k_(max_k), table_((max_n + 1) * std::size_t{max_k + 1}, 0) {
    for (unsigned v = 0; v <= max_n_; ++v) {
      at(v, 0) = 1;
      for (unsigned i = 1; i <= max_k_ && i <= v; ++i) {
        const std::uint64_t a = at(v - 1, i - 1);
        const std::uint64_t b = (i <= v - 1) ? at(v - 1, i) : 0;
        at(v, i) = (a == kSaturated || b == kSaturated || a > kSaturated - b) ? kSaturated : a + b;
      }
    }
  }

  unsigned max_n() const noexcept { return max_n_; }
  unsigned max_k() const noexcept { return max_k_; }

  /// C(v, i); zero when i > v. Requires v <= max_n, i <= max_k.
  std::uint64_t operator()(unsigned v, unsigned i) const noexcept {
    return table_[v * std::size_t{max_k_ + 1} + i];
  }

  std::uint64_t checked(unsigned v, unsigned i) const {
    if (v > max_n_ || i > max_k_) {
      throw ResourceError("binomial C(" + std::to_string(v) + "," + std::to_string(i) +
                          ") outside the precomputed table");
    }
    const std::uint64_t c = (*this)(v, i);
    if (c == kSaturated) {
      throw ResourceError("binomial C(" + std::to_string(v) + "," + std::to_string(i) +
                          ") overflows 64-bit keys");
    }
    return c;
  }

 private:
  std::uint64_t& at(unsigned v, unsigned i) { return table_[v * std::size_t{max_k_ + 1} + i]; }

  unsigned max_n_;
  unsigned max_k_;
  std::vector<std::uint64_t> table_;
};

}  // namespace hyperboot
