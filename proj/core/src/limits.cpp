#include "genmat/limits.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace genmat::limits {

namespace {

std::uint64_t from_env(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    try {
        return std::stoull(raw);
    } catch (...) {
        return fallback;
    }
}

std::atomic<std::uint64_t>& monomial_slot() {
    static std::atomic<std::uint64_t> slot{
        from_env("GENMAT_MONOMIAL_CEILING", 10'000'000ULL)};
    return slot;
}

std::atomic<std::uint64_t>& substitution_slot() {
    static std::atomic<std::uint64_t> slot{
        from_env("GENMAT_SUBSTITUTION_CEILING", 100'000'000ULL)};
    return slot;
}

}  // namespace

std::uint64_t monomial_ceiling() { return monomial_slot().load(); }
void set_monomial_ceiling(std::uint64_t value) { monomial_slot().store(value); }

std::uint64_t substitution_ceiling() { return substitution_slot().load(); }
void set_substitution_ceiling(std::uint64_t value) { substitution_slot().store(value); }

}  // namespace genmat::limits
