#pragma once

#include <vector>

#include "oddzeta/rational.hpp"

namespace oddzeta::exact {

/// Exact c with zeta(2m) = c * pi^(2m), from Euler's even-zeta formula:
/// c = 2^(2m) (-1)^(m-1) B_(2m) / (2 (2m)!). Requires m >= 1.
Rational euler_zeta_coefficient(unsigned long m);

/// Coefficients of the bilinear Bernoulli form on the right-hand side of
/// Ramanujan's identity for zeta(2m+1):
///   coeffs[k] = 2^(2m) (-1)^(k-1) B_(2k) B_(2m-2k+2) / ((2k)! (2m-2k+2)!)
/// for k = 0..m+1; the RHS is then sum_k coeffs[k] * alpha^(m-k+1) * beta^k.
/// Requires m >= 1.
std::vector<Rational> ramanujan_bernoulli_coeffs(unsigned long m);

/// Same form in the coth-variant normalization,
///   coeffs[k] = -2^(2m+1) (-1)^k B_(2k) B_(2m+2-2k) / ((2k)! (2m+2-2k)!),
/// so the variant's RHS is sum_k coeffs[k] * alpha^(m+1-k) * beta^k.
/// Identically 2x the ramanujan coefficients; kept as an independent route.
std::vector<Rational> coth_variant_bernoulli_coeffs(unsigned long m);

/// Coefficients of the p-indexed assembly of the same RHS
/// (boundary p = 0 and p = m+1 terms plus the interior p = 1..m):
///   coeffs[p] = (-1)^m 2^(2m) (-1)^p B_(2m-2p+2) B_(2p) / ((2m-2p+2)! (2p)!)
/// multiplying alpha^p beta^(m-p+1). Equals the k-indexed coefficients under
/// p -> m-p+1. Requires m >= 1.
std::vector<Rational> ramanujan_p_form_coeffs(unsigned long m);

/// Exact r with sum_n coth(pi n) / n^(4m+3) = r * pi^(4m+3):
///   r = 2^(4m+2) sum_{k=0}^{2m+2} (-1)^(k+1) B_(2k) B_(4m+4-2k) / ((2k)! (4m+4-2k)!).
/// Requires m >= 0.
Rational lerch_rational_coefficient(unsigned long m);

/// Checks, in exact arithmetic, that folding the symmetric sum
///   S(m) = sum_{k=0}^{2m} (-1)^(k-1) B_(2k) B_(4m-2k) / ((2k)! (4m-2k)!)
/// along k -> 2m-k reproduces it:
///   S(m) = -2 B_(4m)/(4m)! + (-1)^(m-1) B_(2m)^2/((2m)!)^2
///          + 2 sum_{k=1}^{m-1} (-1)^(k-1) B_(2k) B_(4m-2k) / ((2k)! (4m-2k)!).
/// (The two k in {0, 2m} boundary terms contribute -B_(4m)/(4m)! each.)
bool fold_symmetry_check(unsigned long m);

/// Checks, at the level of exact pi^(4m) coefficients, that
///   zeta(4m) + (-1)^(m-1) zeta(2m)^2 + 2 sum_{k=1}^{m-1} (-1)^(k-1) zeta(4m-2k) zeta(2k)
/// equals 2^(4m-2) pi^(4m) S(m) with S(m) as in fold_symmetry_check.
bool zeta_convolution_rational_check(unsigned long m);

}  // namespace oddzeta::exact
