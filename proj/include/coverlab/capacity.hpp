#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace coverlab {

inline constexpr std::size_t kMaxVariables = 64;
inline constexpr std::uint64_t kDefaultMaxProducts = 5'000'000;

/// Product-count guard. COVERLAB_MAX_PRODUCTS overrides the default.
std::uint64_t max_products();

/// Throws CapacityError when `count` exceeds max_products().
void check_products(std::uint64_t count, std::string_view what);

/// Throws CapacityError when a universe has more than kMaxVariables variables.
void check_variables(std::size_t count, std::string_view what);

/// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace coverlab
