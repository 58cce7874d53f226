#include "tropfan/random.hpp"

#include "tropfan/errors.hpp"

namespace tropfan {

std::int64_t SeededRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InputError("empty random range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

Rational SeededRng::uniform_rational(std::int64_t lo, std::int64_t hi, std::int64_t den) {
  Rational r(static_cast<long>(uniform_int(lo * den, hi * den)), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

}  // namespace tropfan
