#pragma once

#include <cstdint>

namespace genmat::limits {

// Expansion aborts once a polynomial would exceed this many monomials.
// Initialized from GENMAT_MONOMIAL_CEILING, default 10^7.
std::uint64_t monomial_ceiling();
void set_monomial_ceiling(std::uint64_t value);

// Exhaustive identity checks abort beyond this many matrix-unit substitutions.
// Initialized from GENMAT_SUBSTITUTION_CEILING, default 10^8.
std::uint64_t substitution_ceiling();
void set_substitution_ceiling(std::uint64_t value);

}  // namespace genmat::limits
