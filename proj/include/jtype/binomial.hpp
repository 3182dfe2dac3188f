#ifndef JTYPE_BINOMIAL_HPP
#define JTYPE_BINOMIAL_HPP

#include <cstddef>

namespace jtype {

// C(n, k); zero outside 0 <= k <= n.
constexpr std::size_t binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t r = 1;
  for (long long i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace jtype

#endif
