// Command-line front end: element products, representation-matrix dumps,
// the proposition-verification harness and the invertible-sequence scanner.
//
// Exit codes: 0 success, 1 asserted-invariant failure, 2 usage/parse error,
// 3 domain/params error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "halg/complex_elems.hpp"
#include "halg/errors.hpp"
#include "halg/harness.hpp"
#include "halg/literals.hpp"
#include "halg/recurrence.hpp"
#include "halg/reps.hpp"
#include "halg/zorn.hpp"

namespace {

using halg::Rational;

constexpr int kExitOk = 0;
constexpr int kExitInvariantFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct MulOptions {
    std::string algebra;
    std::string params;
    std::string kind = "paper";
    std::string lhs;
    std::string rhs;
    bool pretty = false;
};

int run_mul(const MulOptions& opt) {
    if (opt.algebra == "quat") {
        const auto params = halg::parse_quat_params(opt.params.empty() ? "1,1" : opt.params);
        const auto product =
            halg::parse_quaternion(opt.lhs, params) * halg::parse_quaternion(opt.rhs, params);
        std::cout << (opt.pretty ? halg::print_pretty(product) : halg::print_json(product)) << '\n';
    } else if (opt.algebra == "oct") {
        const auto params = halg::parse_oct_params(opt.params.empty() ? "1,1,1" : opt.params);
        const auto product =
            halg::parse_octonion(opt.lhs, params) * halg::parse_octonion(opt.rhs, params);
        std::cout << (opt.pretty ? halg::print_pretty(product) : halg::print_json(product)) << '\n';
    } else if (opt.algebra == "coct") {
        if (!opt.params.empty() && !halg::parse_oct_params(opt.params).is_division_params())
            throw halg::DomainMismatch("complex octonions live over O(1,1,1)");
        const auto lhs = halg::parse_complex_octonion(opt.lhs);
        const auto rhs = halg::parse_complex_octonion(opt.rhs);
        if (opt.kind != "paper" && opt.kind != "central")
            throw halg::ParseError("--kind must be paper or central");
        const auto product = opt.kind == "central" ? halg::coct_mul_central(lhs, rhs)
                                                   : halg::coct_mul_paper(lhs, rhs);
        std::cout << (opt.pretty ? halg::print_pretty(product) : halg::print_json(product)) << '\n';
    } else if (opt.algebra == "zorn") {
        const auto product = halg::zorn_mul(halg::parse_zorn(opt.lhs), halg::parse_zorn(opt.rhs));
        std::cout << (opt.pretty ? halg::print_pretty(product) : halg::print_json(product)) << '\n';
    } else {
        throw halg::ParseError("--algebra must be quat, oct, coct or zorn");
    }
    return kExitOk;
}

struct RepOptions {
    std::string map;
    std::string element;
    std::string params;
    std::string format = "csv";
};

int run_rep(const RepOptions& opt) {
    halg::RepMatrix<Rational> matrix;
    if (opt.map == "const") {
        halg::ConstMat which;
        if (!halg::parse_const_name(opt.element, which))
            throw halg::ParseError("unknown constant matrix '" + opt.element + "'");
        matrix = halg::const_matrix<Rational>(which);
    } else if (opt.map == "lambda" || opt.map == "rho") {
        const auto params = halg::parse_quat_params(opt.params.empty() ? "1,1" : opt.params);
        const auto q = halg::parse_quaternion(opt.element, params);
        matrix = opt.map == "lambda" ? halg::quat_left_rep(q) : halg::quat_right_rep(q);
    } else if (opt.map == "Lambda" || opt.map == "Delta") {
        const auto params = halg::parse_oct_params(opt.params.empty() ? "1,1,1" : opt.params);
        const auto a = halg::parse_octonion(opt.element, params);
        matrix = opt.map == "Lambda" ? halg::oct_left_rep(a) : halg::oct_right_rep(a);
    } else if (opt.map == "Gamma" || opt.map == "Theta") {
        const auto q = halg::parse_complex_quaternion(opt.element);
        matrix = opt.map == "Gamma" ? halg::cquat_left_rep(q) : halg::cquat_right_rep(q);
    } else if (opt.map == "Phi" || opt.map == "Psi") {
        const auto a = halg::parse_complex_octonion(opt.element);
        matrix = opt.map == "Phi" ? halg::coct_left_rep(a) : halg::coct_right_rep(a);
    } else {
        throw halg::ParseError("unknown representation map '" + opt.map + "'");
    }
    if (opt.format == "csv") std::cout << halg::matrix_csv(matrix);
    else if (opt.format == "json") std::cout << halg::matrix_json(matrix) << '\n';
    else throw halg::ParseError("--format must be csv or json");
    return kExitOk;
}

struct VerifyOptions {
    std::string id;
    bool exhaustive = false;
    std::uint64_t random_count = 0;
    std::uint64_t seed = 7;
};

int run_verify(const VerifyOptions& opt) {
    if (opt.exhaustive && opt.random_count > 0)
        throw halg::ParseError("--exhaustive and --random are mutually exclusive");
    const halg::VerifyMode mode = opt.random_count > 0
                                      ? halg::VerifyMode::random(opt.random_count, opt.seed)
                                      : halg::VerifyMode::exhaustive_basis();

    std::vector<std::string> ids;
    if (opt.id == "all") ids = halg::proposition_catalog();
    else ids.push_back(opt.id);

    bool asserted_failure = false;
    for (const std::string& id : ids) {
        for (const auto& report : halg::verify_proposition(id, mode)) {
            std::cout << halg::report_to_json(report) << '\n';
            if (!report.holds && !halg::proposition_adjudicated(report.id))
                asserted_failure = true;
        }
    }
    return asserted_failure ? kExitInvariantFailure : kExitOk;
}

struct InvertiblesOptions {
    std::string rec;
    std::string seeds;
    std::string algebra;
    std::string params;
    std::uint64_t bound = 200;
    std::string out = "json";
};

std::vector<std::int64_t> parse_int_list(const std::string& text, std::size_t expected,
                                         const char* what) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string tok =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw halg::ParseError(std::string(what) + ": bad integer '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != expected)
        throw halg::ParseError(std::string(what) + ": expected " + std::to_string(expected) +
                               " comma-separated integers");
    return out;
}

int run_invertibles(const InvertiblesOptions& opt) {
    const auto rec = parse_int_list(opt.rec, 3, "--rec");
    const auto seeds = parse_int_list(opt.seeds, 3, "--seed");
    const halg::RecurrenceSpec spec{rec[0], rec[1], rec[2], seeds[0], seeds[1], seeds[2]};

    halg::InvertibleReport report;
    if (opt.algebra == "quat") {
        const auto ps = parse_int_list(opt.params.empty() ? "1,1" : opt.params, 2, "--params");
        report = halg::find_invertible_threshold(
            spec, halg::QuatParams<Rational>{Rational(ps[0]), Rational(ps[1])}, opt.bound);
    } else if (opt.algebra == "oct") {
        const auto ps = parse_int_list(opt.params.empty() ? "1,1,1" : opt.params, 3, "--params");
        report = halg::find_invertible_threshold(
            spec,
            halg::OctParams<Rational>{Rational(ps[0]), Rational(ps[1]), Rational(ps[2])},
            opt.bound);
    } else {
        throw halg::ParseError("--algebra must be quat or oct");
    }

    if (opt.out == "json") std::cout << halg::invertible_report_to_json(report) << '\n';
    else if (opt.out == "csv") std::cout << halg::invertible_report_to_csv(report);
    else throw halg::ParseError("--out must be json or csv");
    return kExitOk;
}

struct TablesOptions {
    std::string algebra;
    std::string params;
    bool pretty = false;
};

int run_tables(const TablesOptions& opt) {
    nlohmann::json products = nlohmann::json::array();
    auto row_name = [](std::size_t k) { return k == 0 ? std::string("1") : "e" + std::to_string(k); };

    if (opt.algebra == "quat") {
        const auto params = halg::parse_quat_params(opt.params.empty() ? "1,1" : opt.params);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                const auto p = halg::Quaternion<Rational>::unit(i, params) *
                               halg::Quaternion<Rational>::unit(j, params);
                if (opt.pretty)
                    std::cout << row_name(i) << " * " << row_name(j) << " = "
                              << halg::print_pretty(p) << '\n';
                else
                    products.push_back({{"lhs", row_name(i)},
                                        {"rhs", row_name(j)},
                                        {"result", halg::print_pretty(p)}});
            }
    } else if (opt.algebra == "oct") {
        const auto params = halg::parse_oct_params(opt.params.empty() ? "1,1,1" : opt.params);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                const auto p = halg::Octonion<Rational>::unit(i, params) *
                               halg::Octonion<Rational>::unit(j, params);
                if (opt.pretty)
                    std::cout << row_name(i) << " * " << row_name(j) << " = "
                              << halg::print_pretty(p) << '\n';
                else
                    products.push_back({{"lhs", row_name(i)},
                                        {"rhs", row_name(j)},
                                        {"result", halg::print_pretty(p)}});
            }
    } else {
        throw halg::ParseError("--algebra must be quat or oct");
    }
    if (!opt.pretty) std::cout << products.dump() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized quaternion and octonion algebra toolkit"};
    app.require_subcommand(1);

    MulOptions mul_opt;
    auto* mul = app.add_subcommand("mul", "multiply two elements");
    mul->add_option("--algebra", mul_opt.algebra, "quat|oct|coct|zorn")->required();
    mul->add_option("--params", mul_opt.params, "b1,b2 (quat) or a,b,g (oct); defaults to ones");
    mul->add_option("--kind", mul_opt.kind, "coct product: paper|central (default paper)");
    mul->add_flag("--pretty", mul_opt.pretty, "human-readable output");
    mul->add_option("lhs", mul_opt.lhs, "left element literal")->required();
    mul->add_option("rhs", mul_opt.rhs, "right element literal")->required();

    RepOptions rep_opt;
    auto* rep = app.add_subcommand("rep", "dump a representation matrix");
    rep->add_option("map", rep_opt.map, "lambda|rho|Lambda|Delta|Gamma|Theta|Phi|Psi|const")
        ->required();
    rep->add_option("element", rep_opt.element, "element literal, or constant name after 'const'")
        ->required();
    rep->add_option("--params", rep_opt.params, "element params; must match the map's domain");
    rep->add_option("--format", rep_opt.format, "csv|json (default csv)");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "run proposition checkers");
    verify->add_option("id", verify_opt.id, "catalog id, group id, or 'all'")->required();
    verify->add_flag("--exhaustive", verify_opt.exhaustive, "exhaustive basis mode (default)");
    verify->add_option("--random", verify_opt.random_count, "random mode with this sample count");
    verify->add_option("--seed", verify_opt.seed, "random mode seed (default 7)");

    InvertiblesOptions inv_opt;
    auto* inv = app.add_subcommand("invertibles", "exact norm scan of W_n / Z_n");
    inv->add_option("--rec", inv_opt.rec, "recurrence coefficients a,b,c")->required();
    inv->add_option("--seed", inv_opt.seeds, "seeds x0,x1,x2")->required();
    inv->add_option("--algebra", inv_opt.algebra, "quat|oct")->required();
    inv->add_option("--params", inv_opt.params, "integer algebra params");
    inv->add_option("--bound", inv_opt.bound, "scan n = 0..bound (default 200)");
    inv->add_option("--out", inv_opt.out, "json|csv (default json)");

    TablesOptions tables_opt;
    auto* tables = app.add_subcommand("tables", "dump the structure-constant table");
    tables->add_option("--algebra", tables_opt.algebra, "quat|oct")->required();
    tables->add_option("--params", tables_opt.params, "algebra params; defaults to ones");
    tables->add_flag("--pretty", tables_opt.pretty, "human-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (mul->parsed()) return run_mul(mul_opt);
        if (rep->parsed()) return run_rep(rep_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        if (inv->parsed()) return run_invertibles(inv_opt);
        if (tables->parsed()) return run_tables(tables_opt);
    } catch (const halg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const halg::UnknownProposition& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const halg::ParamsMismatch& e) {
        std::cerr << "params error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const halg::DomainMismatch& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
