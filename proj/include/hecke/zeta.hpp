#pragma once

// Dedekind zeta values at s=2 for Q(i) and Q(omega), by two independent
// methods: (a) ideal-norm partial sums with an integral tail estimate,
// (b) truncated Euler product over ring primes (via the splitting of
// rational primes).  The adopted value is method (a); construction fails
// if the methods disagree beyond their combined bounds.

#include <string>

#include "hecke/weights.hpp"   // Field

namespace hecke {

struct ZetaConstant {
    Field field = Field::gauss;
    double value = 0.0;         // adopted (ideal-sum) value
    double error_bound = 0.0;   // combined bound on |value - zeta_K(2)|
    double ideal_sum_value = 0.0;
    double euler_product_value = 0.0;
    std::string method = "ideal-sum";
};

// cached; thread-safe
const ZetaConstant& zeta2(Field f);

// uncached variant with explicit truncations (ideal-sum norm bound and
// Euler-product prime bound); used to probe truncation stability
ZetaConstant zeta2_with_truncation(Field f, std::int64_t ideal_T, std::int64_t prime_T);

} // namespace hecke
