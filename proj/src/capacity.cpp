#include "coverlab/capacity.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "coverlab/error.hpp"

namespace coverlab {

std::uint64_t max_products() {
  const char* env = std::getenv("COVERLAB_MAX_PRODUCTS");
  if (env == nullptr || *env == '\0') return kDefaultMaxProducts;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || value == 0)
    throw InputError("COVERLAB_MAX_PRODUCTS must be a positive integer, got '" + std::string(env) + "'");
  return value;
}

void check_products(std::uint64_t count, std::string_view what) {
  const std::uint64_t limit = max_products();
  if (count > limit)
    throw CapacityError(std::string(what) + ": " + std::to_string(count) +
                        " products exceed the capacity guard of " + std::to_string(limit));
}

void check_variables(std::size_t count, std::string_view what) {
  if (count > kMaxVariables)
    throw CapacityError(std::string(what) + ": " + std::to_string(count) +
                        " variables exceed the limit of " + std::to_string(kMaxVariables));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace coverlab
