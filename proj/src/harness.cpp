#include "halg/harness.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "halg/complex_elems.hpp"
#include "halg/errors.hpp"
#include "halg/literals.hpp"
#include "halg/reps.hpp"

namespace halg {

namespace {

using json = nlohmann::json;
using Quat = Quaternion<Rational>;
using Oct = Octonion<Rational>;
using COct = ComplexOctonion<Rational>;
using Mat = RepMatrix<Rational>;
using Vec = VecRep<Rational>;
using Col = OctColumn<Rational>;
using Rng = std::mt19937_64;

// Coefficients uniform over the integers in [-9, 9]; draw order is fixed so
// a seed pins the whole sample.
Rational rand_coeff(Rng& rng) {
    return Rational(static_cast<long long>(rng() % 19) - 9);
}

Quat rand_quat(Rng& rng) {
    std::array<Rational, 4> c;
    for (auto& x : c) x = rand_coeff(rng);
    return {c, {}};
}

Oct rand_oct(Rng& rng) {
    std::array<Rational, 8> c;
    for (auto& x : c) x = rand_coeff(rng);
    return {c, {}};
}

std::string input_obj(std::initializer_list<std::pair<std::string, std::string>> kvs) {
    json j;
    for (const auto& [k, v] : kvs) j[k] = v;
    return j.dump();
}

std::string column_json(const Col& c) {
    json arr = json::array();
    for (const auto& entry : c.entries) arr.push_back(print_pretty(entry));
    return arr.dump();
}

std::optional<Counterexample> expect_eq(const Mat& lhs, const Mat& rhs, std::string input) {
    if (lhs == rhs) return std::nullopt;
    return Counterexample{std::move(input), matrix_json(lhs), matrix_json(rhs)};
}

std::optional<Counterexample> expect_eq(const Vec& lhs, const Vec& rhs, std::string input) {
    if (lhs == rhs) return std::nullopt;
    return Counterexample{std::move(input), vec_json(lhs), vec_json(rhs)};
}

std::optional<Counterexample> expect_eq(const Oct& lhs, const Oct& rhs, std::string input) {
    if (lhs == rhs) return std::nullopt;
    return Counterexample{std::move(input), print_pretty(lhs), print_pretty(rhs)};
}

std::optional<Counterexample> expect_eq(const Col& lhs, const Col& rhs, std::string input) {
    if (lhs == rhs) return std::nullopt;
    return Counterexample{std::move(input), column_json(lhs), column_json(rhs)};
}

struct Checker {
    std::string id;
    std::uint64_t basis_count = 0;  // cases served by basis_case in exhaustive mode
    std::uint64_t prefix = 0;       // leading basis cases also run in random mode
    std::function<std::optional<Counterexample>(std::uint64_t)> basis_case;
    std::function<std::optional<Counterexample>(Rng&)> random_case;
    std::vector<std::string> notes;
};

// --- single-quaternion identities ------------------------------------------

Checker make_23() {
    auto check = [](const Quat& q) -> std::optional<Counterexample> {
        const Mat sig = const_matrix<Rational>(ConstMat::Sigma);
        const std::string input = input_obj({{"q", print_pretty(q)}});
        if (auto ce = expect_eq(sig * quat_left_rep(q) * sig, quat_left_rep(star(q)), input))
            return ce;
        return expect_eq(sig * quat_right_rep(q) * sig, quat_right_rep(star(q)), input);
    };
    return {"2.3", 4, 0,
            [check](std::uint64_t i) { return check(Quat::unit(i, {})); },
            [check](Rng& rng) { return check(rand_quat(rng)); },
            {"checks sigma*lambda(q)*sigma = lambda(q*) and sigma*rho(q)*sigma = rho(q*)"}};
}

// --- Proposition 2.4: e1 acting through the octonion product ----------------

std::optional<Counterexample> check_24(int part, const Oct& x, const Oct& y) {
    const Oct e1 = Oct::unit(1, {});
    std::string input;
    Oct lhs = Oct::zero({});
    Oct rhs = Oct::zero({});
    switch (part) {
        case 1:
            input = input_obj({{"y", print_pretty(y)}});
            lhs = e1 * y;
            rhs = star(y) * e1;
            break;
        case 2:
            input = input_obj({{"x", print_pretty(x)}, {"y", print_pretty(y)}});
            lhs = (e1 * y) * x;
            rhs = e1 * star(star(y) * star(x));
            break;
        case 3:
            input = input_obj({{"x", print_pretty(x)}, {"y", print_pretty(y)}});
            lhs = x * (e1 * y);
            rhs = e1 * (star(x) * y);
            break;
        case 4:
            input = input_obj({{"x", print_pretty(x)}, {"y", print_pretty(y)}});
            lhs = (e1 * y) * (e1 * x);
            rhs = -star(y * star(x));
            break;
    }
    return expect_eq(lhs, rhs, std::move(input));
}

Checker make_24(int part) {
    const bool unary = part == 1;
    return {"2.4." + std::to_string(part),
            unary ? std::uint64_t{8} : std::uint64_t{64}, 0,
            [part, unary](std::uint64_t i) {
                const Oct x = unary ? Oct::zero({}) : Oct::unit(i / 8, {});
                const Oct y = Oct::unit(unary ? i : i % 8, {});
                return check_24(part, x, y);
            },
            [part, unary](Rng& rng) {
                const Oct first = rand_oct(rng);
                if (unary) return check_24(part, Oct::zero({}), first);
                const Oct second = rand_oct(rng);
                return check_24(part, first, second);
            },
            {}};
}

// --- Proposition 2.5: conjugation of the 8x8 representations ----------------

Checker make_25(char variant) {
    auto check = [variant](const Oct& a) -> std::optional<Counterexample> {
        const Mat eps = const_matrix<Rational>(ConstMat::Eps);
        const Mat tau = const_matrix<Rational>(ConstMat::Tau);
        const std::string input = input_obj({{"a", print_pretty(a)}});
        switch (variant) {
            case 'a': return expect_eq(eps * oct_left_rep(a) * eps, oct_left_rep(tilde(a)), input);
            case 'b': return expect_eq(eps * oct_right_rep(a) * eps, oct_right_rep(tilde(a)), input);
            case 'c': return expect_eq(tau * oct_left_rep(a) * tau, oct_left_rep(plus_sub(a)), input);
            default:  return expect_eq(tau * oct_right_rep(a) * tau, oct_right_rep(plus_sub(a)), input);
        }
    };
    return {std::string("2.5") + variant, 8, 0,
            [check](std::uint64_t i) { return check(Oct::unit(i, {})); },
            [check](Rng& rng) { return check(rand_oct(rng)); },
            {}};
}

// --- Propositions 2.6 / 2.9: adjudicated against both products --------------

COct coct_product(const std::string& convention, const COct& a, const COct& b) {
    return convention == "central" ? coct_mul_central(a, b) : coct_mul_paper(a, b);
}

std::string quad_input(const Oct& x, const Oct& y, const Oct& v, const Oct& w) {
    return input_obj({{"x", print_pretty(x)},
                      {"y", print_pretty(y)},
                      {"v", print_pretty(v)},
                      {"w", print_pretty(w)}});
}

// Case 0 is the fixed probe (x=0, y=e2, v=e2, w=0); cases 1..4096 walk the
// basis quadruples in lexicographic order.
void quad_case(std::uint64_t i, Oct& x, Oct& y, Oct& v, Oct& w) {
    if (i == 0) {
        x = Oct::zero({});
        y = Oct::unit(2, {});
        v = Oct::unit(2, {});
        w = Oct::zero({});
        return;
    }
    const std::uint64_t k = i - 1;
    x = Oct::unit(k / 512 % 8, {});
    y = Oct::unit(k / 64 % 8, {});
    v = Oct::unit(k / 8 % 8, {});
    w = Oct::unit(k % 8, {});
}

Checker make_26(const std::string& convention) {
    auto check = [convention](const Oct& x, const Oct& y, const Oct& v,
                              const Oct& w) -> std::optional<Counterexample> {
        const COct a{x, y};
        const COct b{v, w};
        const Vec lhs = vec(coct_product(convention, a, b));
        const Vec rhs = coct_left_rep(a) * vec(b);
        return expect_eq(lhs, rhs, quad_input(x, y, v, w));
    };
    return {"2.6", 4097, 1,
            [check](std::uint64_t i) {
                Oct x, y, v, w;
                quad_case(i, x, y, v, w);
                return check(x, y, v, w);
            },
            [check](Rng& rng) {
                const Oct x = rand_oct(rng);
                const Oct y = rand_oct(rng);
                const Oct v = rand_oct(rng);
                const Oct w = rand_oct(rng);
                return check(x, y, v, w);
            },
            {"adjudicated: vec(AX) = coct_left_rep(A)*vec(X); truth is reported, not asserted",
             "case 0 is the probe (x=0, y=e2, v=e2, w=0)"}};
}

Checker make_29(const std::string& convention) {
    auto check = [convention](const Oct& x, const Oct& y, const Oct& v,
                              const Oct& w) -> std::optional<Counterexample> {
        const COct a{x, y};
        const COct b{v, w};
        const Mat s16 = const_matrix<Rational>(ConstMat::S16);
        const Vec lhs = coct_right_rep(coct_plus_sup(a)) * vec(b);
        const Vec rhs = s16 * vec(coct_product(convention, a, coct_plus_sup(b)));
        return expect_eq(lhs, rhs, quad_input(x, y, v, w));
    };
    return {"2.9", 4097, 1,
            [check](std::uint64_t i) {
                Oct x, y, v, w;
                quad_case(i, x, y, v, w);
                return check(x, y, v, w);
            },
            [check](Rng& rng) {
                const Oct x = rand_oct(rng);
                const Oct y = rand_oct(rng);
                const Oct v = rand_oct(rng);
                const Oct w = rand_oct(rng);
                return check(x, y, v, w);
            },
            {"adjudicated: coct_right_rep(A+)*vec(X) = S*vec(A*(X+)); truth is reported, not asserted",
             "case 0 is the probe (x=0, y=e2, v=e2, w=0)"}};
}

// --- Proposition 2.7: octonion-entried columns ------------------------------

Checker make_27i() {
    auto check = [](const Oct& a) -> std::optional<Counterexample> {
        const Col m = octcolumn_m<Rational>();
        return expect_eq(mat_apply_octcolumn(oct_left_rep(a), m), octcolumn_scale_right(m, a),
                         input_obj({{"a", print_pretty(a)}}));
    };
    return {"2.7i", 8, 0,
            [check](std::uint64_t i) { return check(Oct::unit(i, {})); },
            [check](Rng& rng) { return check(rand_oct(rng)); },
            {}};
}

// Constant facts: theta = oct_left_rep(e1) entrywise, theta*M = M*e1, N^t M = 8.
Checker make_27ii() {
    auto check = [](std::uint64_t) -> std::optional<Counterexample> {
        const Mat theta = const_matrix<Rational>(ConstMat::Theta);
        if (auto ce = expect_eq(theta, oct_left_rep(Oct::unit(1, {})),
                                input_obj({{"fact", "theta = oct_left_rep(e1)"}})))
            return ce;
        const Col m = octcolumn_m<Rational>();
        if (auto ce = expect_eq(mat_apply_octcolumn(theta, m),
                                octcolumn_scale_right(m, Oct::unit(1, {})),
                                input_obj({{"fact", "theta*M = M*e1"}})))
            return ce;
        const Oct contracted = octcolumn_contract(octcolumn_n<Rational>(), m);
        return expect_eq(contracted, Oct::scalar(Rational{8}, {}),
                         input_obj({{"fact", "N^t M = 8"}}));
    };
    return {"2.7ii", 1, 1, check, nullptr,
            {"constant identities; also covers N^t M = 8 and the theta/oct_left_rep(e1) identification"}};
}

Checker make_27iii() {
    auto check = [](const Oct& a) -> std::optional<Counterexample> {
        const Col n = octcolumn_n<Rational>();
        return expect_eq(mat_apply_octcolumn(oct_left_rep(a), n), octcolumn_scale_left(conj(a), n),
                         input_obj({{"a", print_pretty(a)}}));
    };
    return {"2.7iii", 8, 0,
            [check](std::uint64_t i) { return check(Oct::unit(i, {})); },
            [check](Rng& rng) { return check(rand_oct(rng)); },
            {}};
}

// --- Proposition 2.8 ---------------------------------------------------------

Checker make_28i() {
    auto check = [](const Oct& a) -> std::optional<Counterexample> {
        const Mat t = const_matrix<Rational>(ConstMat::T);
        return expect_eq(t * oct_left_rep(a) * t, oct_right_rep(plus_sup(a)),
                         input_obj({{"a", print_pretty(a)}}));
    };
    return {"2.8i", 8, 0,
            [check](std::uint64_t i) { return check(Oct::unit(i, {})); },
            [check](Rng& rng) { return check(rand_oct(rng)); },
            {}};
}

Checker make_28ii() {
    auto check = [](const Oct& x, const Oct& y) -> std::optional<Counterexample> {
        const Mat s16 = const_matrix<Rational>(ConstMat::S16);
        const COct a{x, y};
        return expect_eq(s16 * coct_left_rep(a) * s16, coct_right_rep(coct_plus_sup(a)),
                         input_obj({{"x", print_pretty(x)}, {"y", print_pretty(y)}}));
    };
    return {"2.8ii", 64, 0,
            [check](std::uint64_t i) { return check(Oct::unit(i / 8, {}), Oct::unit(i % 8, {})); },
            [check](Rng& rng) {
                const Oct x = rand_oct(rng);
                const Oct y = rand_oct(rng);
                return check(x, y);
            },
            {}};
}

// --- Remark 2.2 and the vector-representation equations ----------------------

Checker make_r22(char variant) {
    auto check = [variant](const Oct& x) -> std::optional<Counterexample> {
        const std::string input = input_obj({{"x", print_pretty(x)}});
        if (variant == 'a') {
            const Mat eps = const_matrix<Rational>(ConstMat::Eps);
            return expect_eq(eps * vec(x), vec(tilde(x)), input);
        }
        const Mat tau = const_matrix<Rational>(ConstMat::Tau);
        return expect_eq(tau * vec(x), vec(plus_sub(x)), input);
    };
    std::vector<std::string> notes;
    if (variant == 'b')
        notes.push_back("tau*vec(x) = vec(plus_sub(x)); the computation defines the sign pattern");
    return {std::string("R2.2") + variant, 8, 0,
            [check](std::uint64_t i) { return check(Oct::unit(i, {})); },
            [check](Rng& rng) { return check(rand_oct(rng)); },
            std::move(notes)};
}

Checker make_e2020() {
    auto check = [](const Oct& x, const Oct& y) -> std::optional<Counterexample> {
        return expect_eq(vec(x * y), oct_left_rep(x) * vec(y),
                         input_obj({{"x", print_pretty(x)}, {"y", print_pretty(y)}}));
    };
    return {"E2.20", 64, 0,
            [check](std::uint64_t i) { return check(Oct::unit(i / 8, {}), Oct::unit(i % 8, {})); },
            [check](Rng& rng) {
                const Oct x = rand_oct(rng);
                const Oct y = rand_oct(rng);
                return check(x, y);
            },
            {}};
}

Checker make_e2021() {
    auto check = [](const Oct& x, const Oct& y) -> std::optional<Counterexample> {
        return expect_eq(vec(y * x), oct_right_rep(x) * vec(y),
                         input_obj({{"x", print_pretty(x)}, {"y", print_pretty(y)}}));
    };
    return {"E2.21", 64, 0,
            [check](std::uint64_t i) { return check(Oct::unit(i / 8, {}), Oct::unit(i % 8, {})); },
            [check](Rng& rng) {
                const Oct x = rand_oct(rng);
                const Oct y = rand_oct(rng);
                return check(x, y);
            },
            {}};
}

Checker make_e2022() {
    auto check = [](const Oct& a, const Oct& x) -> std::optional<Counterexample> {
        const std::string input = input_obj({{"a", print_pretty(a)}, {"x", print_pretty(x)}});
        if (auto ce = expect_eq(vec(a * x), oct_left_rep(a) * vec(x), input)) return ce;
        return expect_eq(vec(x * a), oct_right_rep(a) * vec(x), input);
    };
    return {"E2.22", 64, 0,
            [check](std::uint64_t i) { return check(Oct::unit(i / 8, {}), Oct::unit(i % 8, {})); },
            [check](Rng& rng) {
                const Oct a = rand_oct(rng);
                const Oct x = rand_oct(rng);
                return check(a, x);
            },
            {}};
}

// Case 0 records the fixed witness pair showing oct_left_rep is not
// multiplicative across distinct arguments.
Checker make_e2023() {
    auto witness = [](std::uint64_t) -> std::optional<Counterexample> {
        const Oct a = Oct::unit(1, {});
        const Oct b = Oct::unit(2, {});
        if (oct_left_rep(a * b) == oct_left_rep(a) * oct_left_rep(b))
            return Counterexample{input_obj({{"a", "e1"}, {"b", "e2"}}),
                                  "oct_left_rep(a*b) unexpectedly equals",
                                  "oct_left_rep(a)*oct_left_rep(b)"};
        return std::nullopt;
    };
    auto check = [witness](std::uint64_t i) -> std::optional<Counterexample> {
        if (i == 0) return witness(0);
        const Oct a = Oct::unit(i - 1, {});
        const std::string input = input_obj({{"a", print_pretty(a)}});
        if (auto ce = expect_eq(oct_left_rep(a * a), oct_left_rep(a) * oct_left_rep(a), input))
            return ce;
        return expect_eq(oct_right_rep(a * a), oct_right_rep(a) * oct_right_rep(a), input);
    };
    return {"E2.23", 9, 1, check,
            [](Rng& rng) -> std::optional<Counterexample> {
                const Oct a = rand_oct(rng);
                const std::string input = input_obj({{"a", print_pretty(a)}});
                if (auto ce = expect_eq(oct_left_rep(a * a), oct_left_rep(a) * oct_left_rep(a),
                                        input))
                    return ce;
                return expect_eq(oct_right_rep(a * a), oct_right_rep(a) * oct_right_rep(a), input);
            },
            {"case 0 is the witness (a,b) = (e1,e2) with oct_left_rep(ab) != "
             "oct_left_rep(a)*oct_left_rep(b)"}};
}

Checker make_e2024() {
    auto check = [](const Oct& a) -> std::optional<Counterexample> {
        return expect_eq(oct_left_rep(a) * oct_right_rep(a), oct_right_rep(a) * oct_left_rep(a),
                         input_obj({{"a", print_pretty(a)}}));
    };
    return {"E2.24", 8, 0,
            [check](std::uint64_t i) { return check(Oct::unit(i, {})); },
            [check](Rng& rng) { return check(rand_oct(rng)); },
            {}};
}

Checker make_checker(std::string_view id) {
    if (id == "2.3") return make_23();
    if (id == "2.4.1") return make_24(1);
    if (id == "2.4.2") return make_24(2);
    if (id == "2.4.3") return make_24(3);
    if (id == "2.4.4") return make_24(4);
    if (id == "2.5a") return make_25('a');
    if (id == "2.5b") return make_25('b');
    if (id == "2.5c") return make_25('c');
    if (id == "2.5d") return make_25('d');
    if (id == "2.7i") return make_27i();
    if (id == "2.7ii") return make_27ii();
    if (id == "2.7iii") return make_27iii();
    if (id == "2.8i") return make_28i();
    if (id == "2.8ii") return make_28ii();
    if (id == "R2.2a") return make_r22('a');
    if (id == "R2.2b") return make_r22('b');
    if (id == "E2.20") return make_e2020();
    if (id == "E2.21") return make_e2021();
    if (id == "E2.22") return make_e2022();
    if (id == "E2.23") return make_e2023();
    if (id == "E2.24") return make_e2024();
    throw UnknownProposition("unknown proposition id: " + std::string(id));
}

PropositionReport drive(const Checker& checker, const VerifyMode& mode, std::string convention) {
    PropositionReport report;
    report.id = checker.id;
    report.convention = std::move(convention);
    report.notes = checker.notes;

    auto record = [&](std::optional<Counterexample> ce) {
        ++report.cases_checked;
        if (ce) {
            report.holds = false;
            ++report.failure_count;
            if (report.counterexamples.size() < kMaxStoredCounterexamples)
                report.counterexamples.push_back(std::move(*ce));
        }
    };

    if (mode.exhaustive) {
        report.mode = "exhaustive-basis";
        report.seed = 0;
        for (std::uint64_t i = 0; i < checker.basis_count; ++i) record(checker.basis_case(i));
    } else {
        std::ostringstream ms;
        ms << "random(count=" << mode.count << ",seed=" << mode.seed << ")";
        report.mode = ms.str();
        report.seed = mode.seed;
        for (std::uint64_t i = 0; i < checker.prefix; ++i) record(checker.basis_case(i));
        if (checker.random_case) {
            Rng rng(mode.seed);
            for (std::uint64_t k = 0; k < mode.count; ++k) record(checker.random_case(rng));
        }
    }
    return report;
}

const std::vector<std::string> kCatalog = {
    "2.3",  "2.4.1", "2.4.2", "2.4.3", "2.4.4", "2.5a",  "2.5b",  "2.5c",
    "2.5d", "2.6",   "2.7i",  "2.7ii", "2.7iii", "2.8i", "2.8ii", "2.9",
    "R2.2a", "R2.2b", "E2.20", "E2.21", "E2.22", "E2.23", "E2.24"};

std::vector<std::string> expand_group(std::string_view id) {
    if (id == "2.4") return {"2.4.1", "2.4.2", "2.4.3", "2.4.4"};
    if (id == "2.5") return {"2.5a", "2.5b", "2.5c", "2.5d"};
    if (id == "2.7") return {"2.7i", "2.7ii", "2.7iii"};
    if (id == "2.8") return {"2.8i", "2.8ii"};
    if (id == "R2.2") return {"R2.2a", "R2.2b"};
    return {std::string(id)};
}

}  // namespace

const std::vector<std::string>& proposition_catalog() { return kCatalog; }

bool proposition_adjudicated(std::string_view id) { return id == "2.6" || id == "2.9"; }

std::vector<PropositionReport> verify_proposition(std::string_view id, const VerifyMode& mode) {
    std::vector<PropositionReport> reports;
    for (const std::string& member : expand_group(id)) {
        bool known = false;
        for (const std::string& entry : kCatalog) known = known || entry == member;
        if (!known) throw UnknownProposition("unknown proposition id: " + member);
        if (proposition_adjudicated(member)) {
            for (const std::string& convention : {std::string("paper"), std::string("central")}) {
                const Checker checker = member == "2.6" ? make_26(convention) : make_29(convention);
                reports.push_back(drive(checker, mode, convention));
            }
        } else {
            reports.push_back(drive(make_checker(member), mode, ""));
        }
    }
    return reports;
}

std::string report_to_json(const PropositionReport& report) {
    json j;
    j["id"] = report.id;
    if (!report.convention.empty()) j["convention"] = report.convention;
    j["mode"] = report.mode;
    j["seed"] = report.seed;
    j["cases_checked"] = report.cases_checked;
    j["verdict"] = report.holds ? "holds" : "fails";
    j["failure_count"] = report.failure_count;
    json ces = json::array();
    for (const auto& ce : report.counterexamples) {
        json c;
        c["input"] = json::parse(ce.input);
        c["lhs"] = ce.lhs;
        c["rhs"] = ce.rhs;
        ces.push_back(std::move(c));
    }
    j["counterexamples"] = std::move(ces);
    j["notes"] = report.notes;
    return j.dump();
}

}  // namespace halg
