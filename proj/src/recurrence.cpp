#include "halg/recurrence.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace halg {

std::vector<BigInt> recurrence_seq(const RecurrenceSpec& spec, std::size_t n_max) {
    std::vector<BigInt> xs;
    xs.reserve(n_max + 1);
    xs.push_back(BigInt{spec.x0});
    if (n_max >= 1) xs.push_back(BigInt{spec.x1});
    if (n_max >= 2) xs.push_back(BigInt{spec.x2});
    for (std::size_t n = 3; n <= n_max; ++n)
        xs.push_back(spec.a * xs[n - 1] + spec.b * xs[n - 2] + spec.c * xs[n - 3]);
    xs.resize(n_max + 1);
    return xs;
}

double cubic_eval(const RecurrenceSpec& spec, double x) {
    const double a = static_cast<double>(spec.a);
    const double b = static_cast<double>(spec.b);
    const double c = static_cast<double>(spec.c);
    return ((x - a) * x - b) * x - c;
}

std::complex<double> cubic_eval(const RecurrenceSpec& spec, std::complex<double> x) {
    const double a = static_cast<double>(spec.a);
    const double b = static_cast<double>(spec.b);
    const double c = static_cast<double>(spec.c);
    return ((x - a) * x - b) * x - c;
}

namespace {

double cubic_deriv(const RecurrenceSpec& spec, double x) {
    const double a = static_cast<double>(spec.a);
    const double b = static_cast<double>(spec.b);
    return (3.0 * x - 2.0 * a) * x - b;
}

double newton_polish(const RecurrenceSpec& spec, double x) {
    for (int it = 0; it < 12; ++it) {
        const double f = cubic_eval(spec, x);
        const double df = cubic_deriv(spec, x);
        if (df == 0.0) break;
        const double next = x - f / df;
        if (next == x) break;
        x = next;
    }
    return x;
}

void check_residual(const RecurrenceSpec& spec, std::complex<double> root) {
    if (std::abs(cubic_eval(spec, root)) > kRootResidualTol)
        throw NotThreeDistinctRealRoots("polished root residual exceeds tolerance");
}

}  // namespace

CubicRoots cubic_roots(const RecurrenceSpec& spec) {
    const double a = static_cast<double>(spec.a);
    const double b = static_cast<double>(spec.b);
    const double c = static_cast<double>(spec.c);

    // Depressed form: x = t + a/3 gives t^3 + p t + q.
    const double p = -b - a * a / 3.0;
    const double q = -c - a * b / 3.0 - 2.0 * a * a * a / 27.0;
    const double disc = -4.0 * p * p * p - 27.0 * q * q;

    if (disc > 0.0) {
        // Three distinct real roots (p < 0 is forced); trigonometric form.
        const double u = std::sqrt(-p / 3.0);
        const double cos3t = std::clamp(-q / (2.0 * u * u * u), -1.0, 1.0);
        const double t0 = std::acos(cos3t) / 3.0;

        double roots[3];
        for (int k = 0; k < 3; ++k) {
            const double t = 2.0 * u * std::cos(t0 - 2.0 * std::numbers::pi * k / 3.0);
            roots[k] = newton_polish(spec, t + a / 3.0);
        }
        std::sort(roots, roots + 3, std::greater<double>());

        if (roots[0] - roots[1] < kRootSepTol || roots[1] - roots[2] < kRootSepTol)
            throw NotThreeDistinctRealRoots(
                "characteristic cubic roots are closer than the separation tolerance");
        for (double r : roots) check_residual(spec, r);
        if (!(roots[0] > 1.0 + kRootSepTol))
            throw DominantRootNotGreaterThanOne("dominant characteristic root is not > 1");
        return {roots[0], {roots[1], 0.0}, {roots[2], 0.0}};
    }

    // One real root and a conjugate pair; Cardano for the real root, then the
    // quadratic cofactor for the pair. The real root must strictly dominate
    // the pair in modulus for the closed form's asymptotics to make sense.
    const double radicand = q * q / 4.0 + p * p * p / 27.0;  // = -disc/108
    if (!(radicand > 0.0))
        throw NotThreeDistinctRealRoots(
            "characteristic cubic has a repeated root (discriminant = 0)");
    const double s = std::sqrt(radicand);
    const double t = std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s);
    const double real_root = newton_polish(spec, t + a / 3.0);

    // Synthetic division by (x - real_root).
    const double q1 = -a + real_root;
    const double q0 = -b + real_root * q1;
    const double quad_disc = q1 * q1 - 4.0 * q0;
    if (quad_disc >= 0.0)
        throw NotThreeDistinctRealRoots(
            "characteristic cubic roots are closer than the separation tolerance");
    const std::complex<double> pair{-q1 / 2.0, std::sqrt(-quad_disc) / 2.0};

    if (2.0 * pair.imag() < kRootSepTol)
        throw NotThreeDistinctRealRoots(
            "characteristic cubic roots are closer than the separation tolerance");
    if (!(std::fabs(real_root) > std::abs(pair) + kRootSepTol))
        throw NotThreeDistinctRealRoots(
            "real characteristic root does not strictly dominate the complex pair");
    check_residual(spec, real_root);
    check_residual(spec, pair);
    if (!(real_root > 1.0 + kRootSepTol))
        throw DominantRootNotGreaterThanOne("dominant characteristic root is not > 1");
    return {real_root, pair, std::conj(pair)};
}

BinetCoeffs binet_coeffs(const RecurrenceSpec& spec, const CubicRoots& roots) {
    using cd = std::complex<double>;
    const cd s1{roots.sigma1, 0.0};
    const cd s2 = roots.sigma2;
    const cd s3 = roots.sigma3;
    // Vandermonde system in (A,B,C):
    //   A + B + C = x0, A s1 + B s2 + C s3 = x1, A s1^2 + B s2^2 + C s3^2 = x2.
    cd m[3][4] = {
        {1.0, 1.0, 1.0, cd(static_cast<double>(spec.x0), 0.0)},
        {s1, s2, s3, cd(static_cast<double>(spec.x1), 0.0)},
        {s1 * s1, s2 * s2, s3 * s3, cd(static_cast<double>(spec.x2), 0.0)},
    };
    // Gaussian elimination with partial pivoting; distinct roots keep it nonsingular.
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        std::swap(m[col], m[pivot]);
        for (int r = col + 1; r < 3; ++r) {
            const cd factor = m[r][col] / m[col][col];
            for (int cc = col; cc < 4; ++cc) m[r][cc] -= factor * m[col][cc];
        }
    }
    cd sol[3];
    for (int r = 2; r >= 0; --r) {
        cd acc = m[r][3];
        for (int cc = r + 1; cc < 3; ++cc) acc -= m[r][cc] * sol[cc];
        sol[r] = acc / m[r][r];
    }
    return {sol[0].real(), sol[1], sol[2]};
}

double binet_eval(const BinetCoeffs& coeffs, const CubicRoots& roots, std::size_t n) {
    using cd = std::complex<double>;
    const double e = static_cast<double>(n);
    const cd acc = coeffs.A * std::pow(cd(roots.sigma1, 0.0), e) +
                   coeffs.B * std::pow(roots.sigma2, e) + coeffs.C * std::pow(roots.sigma3, e);
    return acc.real();
}

Quaternion<Rational> build_wn(const RecurrenceSpec& spec, const QuatParams<Rational>& params,
                              std::size_t n) {
    const auto xs = recurrence_seq(spec, n + 3);
    return Quaternion<Rational>({Rational(xs[n]), Rational(xs[n + 1]), Rational(xs[n + 2]),
                                 Rational(xs[n + 3])},
                                params);
}

Octonion<Rational> build_zn(const RecurrenceSpec& spec, const OctParams<Rational>& params,
                            std::size_t n) {
    const auto xs = recurrence_seq(spec, n + 7);
    std::array<Rational, 8> cs;
    for (std::size_t m = 0; m < 8; ++m) cs[m] = Rational(xs[n + m]);
    return Octonion<Rational>(cs, params);
}

double f_criterion(double binet_a, double beta1, double beta2, double sigma1) {
    const double s2 = sigma1 * sigma1;
    const double s4 = s2 * s2;
    const double s6 = s4 * s2;
    return binet_a * binet_a * (1.0 + beta1 * s2 + beta2 * s4 + beta1 * beta2 * s6);
}

double g_criterion(double binet_a, double alpha, double beta, double gamma, double sigma1) {
    const double s2 = sigma1 * sigma1;
    const double s4 = s2 * s2;
    const double s6 = s4 * s2;
    const double s8 = s4 * s4;
    const double s10 = s8 * s2;
    const double s12 = s8 * s4;
    const double s14 = s8 * s6;
    return binet_a * binet_a *
           (1.0 + alpha * s2 + beta * s4 + alpha * beta * s6 + gamma * s8 +
            alpha * gamma * s10 + beta * gamma * s12 + alpha * beta * gamma * s14);
}

namespace {

BigInt integer_param(const Rational& r, const char* name) {
    if (denominator(r) != 1)
        throw std::invalid_argument(std::string("find_invertible_threshold: parameter ") + name +
                                    " must be an integer");
    return numerator(r);
}

struct CriterionInfo {
    std::optional<double> value;
    std::string sign;
    std::string note;
};

// sign(f)/sign(g) with the inconclusive band around zero.
CriterionInfo describe_criterion(double value) {
    CriterionInfo info;
    info.value = value;
    if (value > kCriterionZeroTol) info.sign = "positive";
    else if (value < -kCriterionZeroTol) info.sign = "negative";
    else info.sign = "zero";
    if (info.sign == "zero") info.note = "criterion inconclusive";
    return info;
}

InvertibleReport scan_norms(const RecurrenceSpec& spec, std::string algebra,
                            std::vector<BigInt> params, std::vector<BigInt> weights,
                            std::size_t window, std::size_t bound, CriterionInfo criterion) {
    InvertibleReport report;
    report.spec = spec;
    report.algebra = std::move(algebra);
    report.params = std::move(params);
    report.bound = bound;
    report.criterion_value = criterion.value;
    report.criterion_sign = std::move(criterion.sign);
    report.criterion_note = std::move(criterion.note);

    const auto xs = recurrence_seq(spec, bound + window - 1);
    report.norms.reserve(bound + 1);
    for (std::size_t n = 0; n <= bound; ++n) {
        BigInt norm{0};
        for (std::size_t m = 0; m < window; ++m) norm += weights[m] * xs[n + m] * xs[n + m];
        if (norm == 0) report.zero_norm_indices.push_back(n);
        report.norms.push_back(std::move(norm));
    }

    if (report.zero_norm_indices.empty()) {
        report.threshold_n0 = 0;
    } else if (report.zero_norm_indices.back() < bound) {
        report.threshold_n0 = report.zero_norm_indices.back() + 1;
    }  // else: a zero norm at the bound itself; no threshold within bound.
    return report;
}

CriterionInfo quat_criterion(const RecurrenceSpec& spec, double beta1, double beta2) {
    try {
        const auto roots = cubic_roots(spec);
        const auto coeffs = binet_coeffs(spec, roots);
        return describe_criterion(f_criterion(coeffs.A, beta1, beta2, roots.sigma1));
    } catch (const std::runtime_error& e) {
        return {std::nullopt, "unavailable", e.what()};
    }
}

CriterionInfo oct_criterion(const RecurrenceSpec& spec, double alpha, double beta, double gamma) {
    try {
        const auto roots = cubic_roots(spec);
        const auto coeffs = binet_coeffs(spec, roots);
        return describe_criterion(g_criterion(coeffs.A, alpha, beta, gamma, roots.sigma1));
    } catch (const std::runtime_error& e) {
        return {std::nullopt, "unavailable", e.what()};
    }
}

}  // namespace

InvertibleReport find_invertible_threshold(const RecurrenceSpec& spec,
                                           const QuatParams<Rational>& params,
                                           std::size_t bound) {
    const BigInt b1 = integer_param(params.beta1, "beta1");
    const BigInt b2 = integer_param(params.beta2, "beta2");
    return scan_norms(spec, "quaternion", {b1, b2}, {BigInt{1}, b1, b2, b1 * b2}, 4, bound,
                      quat_criterion(spec, static_cast<double>(b1), static_cast<double>(b2)));
}

InvertibleReport find_invertible_threshold(const RecurrenceSpec& spec,
                                           const OctParams<Rational>& params,
                                           std::size_t bound) {
    const BigInt a = integer_param(params.alpha, "alpha");
    const BigInt b = integer_param(params.beta, "beta");
    const BigInt g = integer_param(params.gamma, "gamma");
    return scan_norms(
        spec, "octonion", {a, b, g},
        {BigInt{1}, a, b, a * b, g, a * g, b * g, a * b * g}, 8, bound,
        oct_criterion(spec, static_cast<double>(a), static_cast<double>(b),
                      static_cast<double>(g)));
}

std::string invertible_report_to_json(const InvertibleReport& report) {
    nlohmann::json j;
    j["recurrence"] = {{"a", report.spec.a}, {"b", report.spec.b}, {"c", report.spec.c},
                       {"x0", report.spec.x0}, {"x1", report.spec.x1}, {"x2", report.spec.x2}};
    j["algebra"] = report.algebra;
    nlohmann::json params = nlohmann::json::array();
    for (const BigInt& p : report.params) params.push_back(p.str());
    j["params"] = std::move(params);
    j["bound"] = report.bound;
    nlohmann::json norms = nlohmann::json::array();
    for (const BigInt& n : report.norms) norms.push_back(n.str());
    j["norms"] = std::move(norms);
    j["zero_norm_indices"] = report.zero_norm_indices;
    if (report.threshold_n0) {
        j["n0"] = *report.threshold_n0;
        j["n0_status"] = "found";
    } else {
        j["n0"] = nullptr;
        j["n0_status"] = "none within bound";
    }
    nlohmann::json criterion;
    criterion["kind"] = report.algebra == "quaternion" ? "f" : "g";
    if (report.criterion_value) criterion["value"] = *report.criterion_value;
    else criterion["value"] = nullptr;
    criterion["sign"] = report.criterion_sign;
    criterion["note"] = report.criterion_note;
    j["criterion"] = std::move(criterion);
    return j.dump();
}

std::string invertible_report_to_csv(const InvertibleReport& report) {
    std::ostringstream os;
    os << "n,norm\n";
    for (std::size_t n = 0; n < report.norms.size(); ++n)
        os << n << ',' << report.norms[n].str() << '\n';
    return os.str();
}

}  // namespace halg
