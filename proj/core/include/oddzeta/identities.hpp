#pragma once

#include <string>
#include <vector>

#include "oddzeta/rational.hpp"
#include "oddzeta/series.hpp"

namespace oddzeta::identities {

/// Parameters of one Ramanujan-identity instance. alpha = pi*t and
/// beta = pi/t, so alpha*beta = pi^2 holds exactly by construction; t must be
/// a positive rational.
struct IdentityParams {
    unsigned long m = 1;
    exact::Rational t = exact::Rational(1);
    long prec = 256;
};

enum class IdentityKind { ramanujan, coth_variant, lerch, convolution, telescoping };

const char* to_string(IdentityKind kind);

/// Machine-readable verification outcome. pass <=> abs_diff_log2 <=
/// tolerance_log2. A zero difference is clamped to abs_diff_log2 = -1e9 so
/// the field stays a finite JSON number.
struct IdentityReport {
    IdentityKind identity = IdentityKind::ramanujan;
    unsigned long m = 0;
    exact::Rational t = exact::Rational(1);
    long prec_bits = 0;
    series::Real lhs;
    series::Real rhs;
    double abs_diff_log2 = 0.0;
    double tolerance_log2 = 0.0;
    bool pass = false;
    std::vector<series::SeriesTruncation> truncations;
};

/// Deliberate corruption hooks for negative-control testing: flip the sign of
/// one RHS Bernoulli coefficient, and/or nudge beta by a factor 1 + 2^(-prec/2)
/// so alpha*beta != pi^2.
struct Perturbation {
    int flip_coeff_index = -1;  // -1 = none
    bool drift_alpha_beta = false;
};

struct EvalResult {
    series::Real value;
    std::vector<series::SeriesTruncation> truncations;
};

/// Left side of Ramanujan's identity for zeta(2m+1):
///   alpha^-m {zeta(2m+1)/2 + F(alpha)} - (-1)^m beta^-m {zeta(2m+1)/2 + F(beta)}
/// with F(a) = sum n^-(2m+1)/(e^(2an)-1); (-beta)^-m is read as (-1)^m beta^-m.
EvalResult ramanujan_lhs(const IdentityParams& p);

/// Right side: sum_k ramanujan_bernoulli_coeffs(m)[k] * alpha^(m-k+1) * beta^k.
series::Real ramanujan_rhs(const IdentityParams& p);

/// The same right side assembled from the p-indexed pieces (boundary p = 0,
/// interior p = 1..m, boundary p = m+1). Agrees with ramanujan_rhs to a few
/// ulp; kept as an internal cross-check route.
series::Real ramanujan_rhs_p_assembled(const IdentityParams& p);

/// Verifies Ramanujan's identity; default tolerance_log2 = -(prec - 2g).
IdentityReport verify_ramanujan(const IdentityParams& p);
IdentityReport verify_ramanujan(const IdentityParams& p, const Perturbation& pert);

/// Verifies the coth-form variant (both sides evaluated through
/// coth(an) = 1 + 2/(e^(2an)-1) and the independently signed coefficient sum).
IdentityReport verify_coth_variant(const IdentityParams& p);
IdentityReport verify_coth_variant(const IdentityParams& p, const Perturbation& pert);

/// Verifies the Lerch special case
///   sum coth(pi n)/n^(4m+3) = lerch_rational_coefficient(m) * pi^(4m+3).
IdentityReport verify_lerch(unsigned long m, long prec);

/// zeta(4m+3) computed through the Lerch rearrangement
///   zeta(4m+3) = r * pi^(4m+3) - 2 sum n^-(4m+3)/(e^(2 pi n)-1),
/// never touching the Euler-Maclaurin evaluator. Error <= 2^(g - prec).
series::Real fast_odd_zeta(unsigned long m, long prec);

struct FastZetaResult {
    series::Real value;
    series::SeriesTruncation truncation;
};
FastZetaResult fast_odd_zeta_traced(unsigned long m, long prec);

/// Checks the telescoping even-zeta convolution
///   S + S' = zeta(2)zeta(4m+2) - zeta(4)zeta(4m) + ... + zeta(4m+2)zeta(2)
/// with S, S' the two truncated double sums (equal by index symmetry, which is
/// asserted separately). Oracle-grade: the tolerance is self-calibrated as 4x
/// the measured N-vs-2N difference. Requires m >= 1, N >= 100.
IdentityReport verify_convolution_recursion(unsigned long m, unsigned long N, long prec);

/// One positive strictly increasing sequence x_k = coeff * k^2 (the only
/// supported kind).
struct SequenceSpec {
    enum class Kind { quadratic };
    Kind kind = Kind::quadratic;
    series::Real coeff;
};

/// The two abstract sequences and the depth n of the generic telescoping
/// identity.
struct QuasiZetaSequences {
    SequenceSpec x;
    SequenceSpec z;
    unsigned long depth = 1;
};

/// Checks the generic quasisymmetric telescoping identity
///   sum_{k,m} 1/(x_k^n (x_k+z_m)) = sum_{p=0}^{n-1} (-1)^p zeta_x(n-p) zeta_z(p+1)
///                                   + (-1)^n sum_{k,m} 1/(z_m^n (x_k+z_m))
/// on K-term truncations, at a tolerance self-calibrated from K vs 2K, and
/// additionally spot-checks the exact one-step identity on random rationals.
IdentityReport telescope_check(const QuasiZetaSequences& q, unsigned long K, long prec);

/// Exact single-stage telescoping identity
///   1/(x^n (x+z)) == 1/(x^n z) - 1/(x^(n-1) z (x+z))
/// on rationals (x, z, x+z all nonzero; n >= 1).
bool telescope_one_step_exact(const exact::Rational& x, const exact::Rational& z,
                              unsigned long n);

}  // namespace oddzeta::identities
