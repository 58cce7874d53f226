#pragma once

#include <cstdint>
#include <random>

#include "tropfan/rational.hpp"

namespace tropfan {

// Reproducible across standard libraries: draws are derived from raw
// mt19937_64 output only.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);  // inclusive
  // Uniform on {lo, lo + 1/den, ..., hi}.
  Rational uniform_rational(std::int64_t lo, std::int64_t hi, std::int64_t den);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tropfan
