#pragma once

namespace wglab {

// log Gamma(z) for z > 0. Stirling series with Bernoulli terms through
// B_12 for z >= 15; below that the argument is shifted up by the recurrence
// Gamma(z + 1) = z Gamma(z).
double log_gamma(double z);

// log Gamma(z) - [(z - 1/2) log z - z + log(2 pi) / 2], the Stirling remainder.
// Evaluated from the asymptotic series directly when z >= 15, so it stays
// accurate when log Gamma itself is huge.
double stirling_remainder(double z);

}  // namespace wglab
