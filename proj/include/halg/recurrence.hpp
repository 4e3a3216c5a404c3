#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halg/errors.hpp"
#include "halg/octonion.hpp"
#include "halg/quaternion.hpp"
#include "halg/scalar.hpp"

namespace halg {

// X_n = a X_{n-1} + b X_{n-2} + c X_{n-3} with seeds X_0, X_1, X_2.
struct RecurrenceSpec {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t x0 = 0;
    std::int64_t x1 = 0;
    std::int64_t x2 = 0;

    friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

// X_0 .. X_{n_max}, exact.
std::vector<BigInt> recurrence_seq(const RecurrenceSpec& spec, std::size_t n_max);

// Roots of x^3 - a x^2 - b x - c. Either three distinct reals ordered
// sigma1 > sigma2 > sigma3 (zero imaginary parts), or a dominant real root
// sigma1 with sigma2/sigma3 a strictly subdominant conjugate pair.
struct CubicRoots {
    double sigma1 = 0;
    std::complex<double> sigma2;
    std::complex<double> sigma3;

    bool all_real() const { return sigma2.imag() == 0.0 && sigma3.imag() == 0.0; }
};

inline constexpr double kRootResidualTol = 1e-10;  // |p(sigma)| after polishing
inline constexpr double kRootSepTol = 1e-8;        // minimum root gap
inline constexpr double kSolveResidualTol = 1e-9;  // Vandermonde system, relative

// Throws NotThreeDistinctRealRoots when the roots are not distinct, when no
// real root exists that strictly dominates a complex pair in modulus, or the
// polished residual stays above tolerance; DominantRootNotGreaterThanOne when
// the roots are fine but sigma1 <= 1.
CubicRoots cubic_roots(const RecurrenceSpec& spec);

double cubic_eval(const RecurrenceSpec& spec, double x);
std::complex<double> cubic_eval(const RecurrenceSpec& spec, std::complex<double> x);

// B and C are complex conjugates whenever sigma2/sigma3 are; the evaluated
// closed form is always real.
struct BinetCoeffs {
    double A = 0;
    std::complex<double> B;
    std::complex<double> C;
};

BinetCoeffs binet_coeffs(const RecurrenceSpec& spec, const CubicRoots& roots);

// Re(A sigma1^n + B sigma2^n + C sigma3^n).
double binet_eval(const BinetCoeffs& coeffs, const CubicRoots& roots, std::size_t n);

// W_n = (X_n, X_{n+1}, X_{n+2}, X_{n+3}) over the basis (1, e1, e2, e3).
Quaternion<Rational> build_wn(const RecurrenceSpec& spec, const QuatParams<Rational>& params,
                              std::size_t n);

// Z_n = (X_n, ..., X_{n+7}) over the basis (1, e1, ..., e7).
Octonion<Rational> build_zn(const RecurrenceSpec& spec, const OctParams<Rational>& params,
                            std::size_t n);

// f(b1,b2) = A^2 (1 + b1 s^2 + b2 s^4 + b1 b2 s^6); its sign predicts the
// asymptotic sign of n(W_n) when nonzero.
double f_criterion(double binet_a, double beta1, double beta2, double sigma1);

// g(a,b,g) = A^2 (1 + a s^2 + b s^4 + ab s^6 + g s^8 + ag s^10 + bg s^12 + abg s^14).
double g_criterion(double binet_a, double alpha, double beta, double gamma, double sigma1);

inline constexpr double kCriterionZeroTol = 1e-9;  // |f| or |g| below => inconclusive

struct InvertibleReport {
    RecurrenceSpec spec;
    std::string algebra;              // "quaternion" | "octonion"
    std::vector<BigInt> params;       // (b1,b2) or (a,b,g), integers
    std::size_t bound = 0;
    std::vector<BigInt> norms;        // n = 0..bound, exact
    std::vector<std::size_t> zero_norm_indices;
    // Smallest n0 with every norm in [n0, bound] nonzero; nullopt = none within bound.
    std::optional<std::size_t> threshold_n0;
    std::optional<double> criterion_value;  // f or g; nullopt when roots unavailable
    std::string criterion_sign;             // "positive"|"negative"|"zero"|"unavailable"
    std::string criterion_note;             // reason when unavailable
};

// Exact norm scan for n = 0..bound; the scan is the certificate, the float
// criterion is advisory only. Params must be integer-valued.
InvertibleReport find_invertible_threshold(const RecurrenceSpec& spec,
                                           const QuatParams<Rational>& params,
                                           std::size_t bound);
InvertibleReport find_invertible_threshold(const RecurrenceSpec& spec,
                                           const OctParams<Rational>& params,
                                           std::size_t bound);

// Field-for-field JSON mirror; norms as decimal strings.
std::string invertible_report_to_json(const InvertibleReport& report);

// "n,norm" lines with a header row.
std::string invertible_report_to_csv(const InvertibleReport& report);

}  // namespace halg
