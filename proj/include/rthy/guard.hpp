#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace rthy {

constexpr std::uint64_t kDefaultEnumGuard = std::uint64_t(1) << 20;
constexpr std::uint64_t kDefaultSearchGuard = std::uint64_t(1) << 24;

// RTHY_ENUM_GUARD, when set to an integer, replaces every default guard.
std::uint64_t enumeration_guard(std::uint64_t fallback = kDefaultEnumGuard);

// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

// Library-level parallelism; 1 (the default) means run inline.
void set_thread_count(unsigned n);
unsigned thread_count();

// Calls fn(i) for i in [0, n), possibly concurrently. fn must write only
// to its own slot of any shared output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rthy
