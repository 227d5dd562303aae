#ifndef SIMULACRA_CONSTRUCTIONS_HPP
#define SIMULACRA_CONSTRUCTIONS_HPP

#include <optional>

#include "simulacra/cone.hpp"

namespace simulacra {

// Closed-form simulacra. Every function throws std::domain_error outside the
// parameter range where its witness is known to be a simulacrum.

/// L^(n+1) + R^((n^2-n-2)/2), a simulacrum of H_n(R) for n >= 3.
Cone simulacrum_real_psd(Int n);

/// 2*L^(n+1) + R^(n^2-5n+6) + L^4 + (n-4)*L^3, a simulacrum of H_n(C) for
/// n >= 4. H_3(C) has none.
Cone simulacrum_complex_psd(Int n);

/// L^(2n+2) + R^(2n^2-3n-2), a simulacrum of H_n(H) for n >= 3.
Cone simulacrum_quaternion_psd(Int n);

/// L^11 + L^5 + L^3 + R^8, a simulacrum of H_3(O).
Cone simulacrum_octonion_psd();

/// L^7 + L^3 + R^8, a simulacrum of H_3(C) + H_3(C).
Cone simulacrum_double_complex();

/// Replaces each non-Lorentz factor by the all-Lorentz witness above. Empty
/// when `c` has an H_3(C) factor, which has no all-Lorentz equivalent.
std::optional<Cone> lorentzify(const Cone& c);

/// Parameters of the closed-form simulacrum of L^n + L^n for n >= 100.
struct BigLnLnParams {
  Int n = 0;
  Int m = 0;      // n / 5
  Int k = 0;      // n % 5
  Int r = 0;      // (m - k^2 + 1) mod 3
  Int alpha = 0;  // number of L^4 factors
  Int gamma = 0;  // orthant dimension
};

/// Throws std::domain_error for n < 100, or if a quotient is not integral
/// or a count comes out negative.
BigLnLnParams big_lnln_params(Int n);

/// L^(7m+k) + L^(m+3k-4) + alpha*L^4 + r*L^3 + R^gamma.
Cone big_lnln_simulacrum(Int n);

struct BoundaryCounterexample {
  Int n = 0;
  Cone left;   // L^m + L^n
  Cone right;  // R^(m-1) + L^(n+1)
};

/// The family showing the first reduction hypothesis cannot be relaxed:
/// with K = L^m and n = 1 + rank(K) - dim(K), K + L^n ~ R^(m-1) + L^(n+1).
/// Requires m >= 5.
BoundaryCounterexample condition1_boundary_counterexample(Int m);

}  // namespace simulacra

#endif  // SIMULACRA_CONSTRUCTIONS_HPP
