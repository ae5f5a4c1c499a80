#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include <swcalc/swcalc.hpp>

namespace {

using namespace swcalc;

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_inapplicable = 2;
constexpr int exit_domain = 3;

void emit_error(const std::string& kind, const std::string& reason,
                std::optional<std::size_t> offset = std::nullopt) {
    ordered_json j;
    j["error"] = kind;
    j["reason"] = reason;
    if (offset)
        j["offset"] = *offset;
    std::cerr << j.dump() << "\n";
}

Rational parse_rational_flag(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

struct Options {
    std::string format = "text";
    std::string space_spec;
    std::string expression;
    std::string suite = "all";
    std::string todd_r = "0";
    long g = 0, d = 0, chi = 1, a = 0, b = 1, pg = 0, n = 1, series_r = 0;
    std::optional<std::string> d_squared, d_dot_k;
};

int run_eval(const Options& opt) {
    const AmbientSpace space = parse_space(opt.space_spec);
    const EvalValue v = evaluate(opt.expression, space);
    const Format fmt = parse_format(opt.format);
    if (is_scalar(v))
        std::cout << render_value("scalar", to_canonical(std::get<Rational>(v)), std::nullopt, fmt);
    else
        std::cout << render_value("element", std::get<GradedElement>(v).str(), std::nullopt, fmt);
    return exit_ok;
}

int run_sw(const SWResult& r, const Options& opt) {
    std::cout << render(r, parse_format(opt.format));
    return exit_ok;
}

int run_grr(const Options& opt) {
    const AmbientSpace cd = AmbientSpace::symmetric_product(opt.g, opt.d);
    const GradedElement chern =
        chern_from_character(grr_pushforward(opt.chi, opt.n, cd, parse_rational_flag(opt.todd_r)));
    std::cout << render_value("element", chern.str(), std::nullopt, parse_format(opt.format));
    return exit_ok;
}

int run_segre(const Options& opt) {
    const GradedElement cls = segre_w1d(opt.g, opt.d);
    std::optional<Rational> integral;
    if (2 * opt.g - 2 * opt.d - 1 == opt.g)
        integral = integrate(cls);
    std::cout << render_value("element", cls.str(), integral, parse_format(opt.format));
    return exit_ok;
}

int run_dims(const Options& opt) {
    const RuledSpec spec{opt.g, opt.a, opt.b};
    const auto [tangent, obstruction] = hilbert_dims(opt.b, opt.g, spec.d(), opt.series_r);
    ordered_json j;
    j["sw_expected_dim"] = sw_expected_dim(spec);
    j["hilbert_tangent_dim"] = tangent;
    j["hilbert_obstruction_dim"] = obstruction;
    std::optional<Rational> hdim;
    if (opt.d_squared && opt.d_dot_k) {
        hdim = hilbert_expected_dim(parse_rational_flag(*opt.d_squared), parse_rational_flag(*opt.d_dot_k));
        j["hilbert_expected_dim"] = json_number(*hdim);
    }
    const Format fmt = parse_format(opt.format);
    if (fmt == Format::json) {
        std::cout << j.dump() << "\n";
    } else if (fmt == Format::csv) {
        std::string header = "sw_expected_dim,hilbert_tangent_dim,hilbert_obstruction_dim";
        std::string row = std::to_string(sw_expected_dim(spec)) + "," + std::to_string(tangent) + "," +
                          std::to_string(obstruction);
        if (hdim) {
            header += ",hilbert_expected_dim";
            row += "," + to_canonical(*hdim);
        }
        std::cout << header << "\n" << row << "\n";
    } else {
        std::cout << "sw_expected_dim: " << sw_expected_dim(spec) << "\n"
                  << "hilbert_tangent_dim: " << tangent << "\n"
                  << "hilbert_obstruction_dim: " << obstruction << "\n";
        if (hdim)
            std::cout << "hilbert_expected_dim: " << to_canonical(*hdim) << "\n";
    }
    return exit_ok;
}

int run_verify(const Options& opt) {
    const auto results = verify_suite(opt.suite);
    bool all_pass = true;
    for (const auto& c : results) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
        all_pass = all_pass && c.pass;
    }
    return all_pass ? exit_ok : exit_verification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Seiberg-Witten invariants of elliptic and product ruled surfaces "
                 "via truncated Chern-class calculus"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression over a model space");
    eval->add_option("--space", opt.space_spec, "Space spec: P(a), Cd(g,d), Jac(g), or products with x")
        ->required();
    eval->add_option("expression", opt.expression, "Expression to evaluate")->required();
    add_format(eval);

    CLI::App* sw = app.add_subcommand("sw", "Seiberg-Witten invariant pipelines");
    sw->require_subcommand(1);

    CLI::App* sw_er = sw->add_subcommand("elliptic-regular", "Regular elliptic surface, fiber degree a");
    sw_er->add_option("--pg", opt.pg, "geometric genus p_g")->required();
    sw_er->add_option("--a", opt.a, "fiber degree of D_0")->required();
    add_format(sw_er);

    CLI::App* sw_el = sw->add_subcommand("elliptic", "Minimal elliptic surface over a genus-g curve");
    sw_el->add_option("--chi", opt.chi, "chi(O_X)")->required();
    sw_el->add_option("--g", opt.g, "base curve genus")->required();
    sw_el->add_option("--d", opt.d, "degree of the horizontal part")->required();
    add_format(sw_el);

    CLI::App* sw_ruled = sw->add_subcommand("ruled", "P^1 x C, b = 2: component-by-component total");
    sw_ruled->add_option("--g", opt.g, "genus of C")->required();
    sw_ruled->add_option("--d", opt.d, "degree of the horizontal divisor")->required();
    add_format(sw_ruled);

    CLI::App* sw_rg = sw->add_subcommand("ruled-general", "P^1 x C, type (2a,2b): closed form b^g");
    sw_rg->add_option("--g", opt.g, "genus of C")->required();
    sw_rg->add_option("--a", opt.a, "a < 0")->required();
    sw_rg->add_option("--b", opt.b, "b >= 1")->required();
    add_format(sw_rg);

    CLI::App* sw_sec = sw->add_subcommand("section", "Sections of a general P(V): Segre route");
    sw_sec->add_option("--g", opt.g, "genus of C")->required();
    add_format(sw_sec);

    CLI::App* segre = app.add_subcommand("segre", "Class of W_{1,d}(V) on the Jacobian");
    segre->add_option("--g", opt.g, "genus")->required();
    segre->add_option("--d", opt.d, "twist degree")->required();
    add_format(segre);

    CLI::App* grr = app.add_subcommand("grr", "Pushforward Chern class c(pi_2! O(D)) on C_d");
    grr->add_option("--chi", opt.chi, "chi(O_X)")->required();
    grr->add_option("--g", opt.g, "genus")->required();
    grr->add_option("--d", opt.d, "symmetric product degree")->required();
    grr->add_option("--n", opt.n, "fiber degree of the universal divisor (must not affect output)");
    grr->add_option("--r", opt.todd_r, "Todd coefficient of the fiber class (must not affect output)");
    add_format(grr);

    CLI::App* dims = app.add_subcommand("dims", "Expected/tangent/obstruction dimensions");
    dims->add_option("--g", opt.g, "genus of C")->required();
    dims->add_option("--a", opt.a, "a < 0")->required();
    dims->add_option("--b", opt.b, "b >= 1")->required();
    dims->add_option("--r", opt.series_r, "dimension of the linear series |d|");
    dims->add_option("--d2", opt.d_squared, "D^2 for the Hilbert-scheme dimension formula");
    dims->add_option("--dk", opt.d_dot_k, "D.K_X for the Hilbert-scheme dimension formula");
    add_format(dims);

    CLI::App* verify = app.add_subcommand("verify", "Run verification sweeps");
    verify->add_option("--suite", opt.suite, "Which suite to run")
        ->check(CLI::IsMember({"ring", "lemma45", "grr", "elliptic", "ruled", "segre", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_domain;
    }

    try {
        if (eval->parsed())
            return run_eval(opt);
        if (sw_er->parsed())
            return run_sw(sw_elliptic_regular(opt.pg, opt.a), opt);
        if (sw_el->parsed())
            return run_sw(sw_elliptic({opt.chi, opt.g, opt.d}), opt);
        if (sw_ruled->parsed())
            return run_sw(sw_ruled_b2_total(opt.g, opt.d), opt);
        if (sw_rg->parsed())
            return run_sw(sw_ruled_general({opt.g, opt.a, opt.b}), opt);
        if (sw_sec->parsed())
            return run_sw(sw_section_invariant(opt.g), opt);
        if (segre->parsed())
            return run_segre(opt);
        if (grr->parsed())
            return run_grr(opt);
        if (dims->parsed())
            return run_dims(opt);
        if (verify->parsed())
            return run_verify(opt);
    } catch (const parse_error& e) {
        emit_error("parse", e.what(), e.offset());
        return exit_domain;
    } catch (const inapplicable_case& e) {
        emit_error("inapplicable", e.what());
        return exit_inapplicable;
    } catch (const verification_error& e) {
        emit_error("verification", e.what());
        return exit_verification;
    } catch (const invalid_spec& e) {
        emit_error("invalid-spec", e.what());
        return exit_domain;
    } catch (const error& e) {
        emit_error("domain", e.what());
        return exit_domain;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return exit_domain;
    }
    return exit_ok;
}
