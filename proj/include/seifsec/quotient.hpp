#pragma once

#include "seifsec/seifert.hpp"

namespace seifsec {

/**
 * Seifert invariants of M / Z_d, where Z_d < S^1 acts through the circle action.
 *
 * Each pair (a, b) becomes (a / gcd(a,d), d*b / gcd(a,d)); the base genus is
 * unchanged. The result is returned as a raw presentation, not normalised.
 * Euler numbers satisfy e(M / Z_d) = d * e(M). Throws std::invalid_argument
 * for d <= 0.
 */
SeifertData zd_quotient(const SeifertData& m, Int d);

}  // namespace seifsec
