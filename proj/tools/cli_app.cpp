#include "cli_app.hpp"

#include "loopalg/jsonio.hpp"
#include "loopalg/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace loopalg::cli {

namespace {

struct GlobalOpts {
    int genus = 1;
    int boundaries = 1;
    std::string format = "text";
    uint64_t seed = 1;
    int samples = 100;
    int max_len = 6;
};

Json load_json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{')
        return Json::parse(arg);
    std::ifstream in(arg);
    if (!in)
        throw std::invalid_argument("cannot open file '" + arg + "'");
    Json j;
    in >> j;
    return j;
}

template <class T>
void emit(std::ostream& out, const GlobalOpts& g, const Signature& sig, const T& value) {
    if (g.format == "json")
        out << to_json(sig, value).dump() << "\n";
    else
        out << show(sig, value) << "\n";
}

Json report_json(const SuiteReport& rep) {
    Json cases = Json::array();
    for (const CaseResult& c : rep.cases)
        cases.push_back(Json{{"id", c.id},
                             {"inputs", c.inputs},
                             {"residual", c.residual},
                             {"pass", c.pass}});
    return Json{{"suite", rep.suite},
                {"cases", std::move(cases)},
                {"seed", rep.seed},
                {"samples", rep.samples}};
}

void print_report_text(std::ostream& out, const SuiteReport& rep) {
    const int fails = rep.failures();
    out << "suite " << rep.suite << ": " << (fails == 0 ? "PASS" : "FAIL") << " ("
        << rep.cases.size() - std::size_t(fails) << "/" << rep.cases.size()
        << " cases, seed=" << rep.seed << ", samples=" << rep.samples << ")\n";
    int shown = 0;
    for (const CaseResult& c : rep.cases) {
        if (c.pass)
            continue;
        out << "  case " << c.id << " [" << c.inputs << "] residual: " << c.residual << "\n";
        if (++shown == 10) {
            out << "  ... (" << fails - shown << " more failures)\n";
            break;
        }
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    GlobalOpts g;
    CLI::App app{"Exact symbolic engine for double brackets, divergence maps and the framed "
                 "self-intersection operation on free surface-groupoid algebras"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    app.add_option("--genus", g.genus, "Surface genus g")->capture_default_str();
    app.add_option("--boundaries", g.boundaries,
                   "Number n of boundary components beyond the 0th (the surface has n+1)")
        ->capture_default_str();
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Random seed for the verification suites")
        ->capture_default_str();
    app.add_option("--samples", g.samples, "Random cases per suite")->capture_default_str();
    app.add_option("--max-len", g.max_len, "Maximum random word length")->capture_default_str();

    std::string path1, path2, theta_arg, pairing_arg, suite = "all", report_path;

    // Global flags may appear after the subcommand, as in
    // `loopalg verify --suite all --genus 1 --seed 7`.
    auto with_fallthrough = [](CLI::App* cmd) {
        cmd->fallthrough();
        return cmd;
    };

    auto* cmd_kappa = with_fallthrough(app.add_subcommand("kappa", "Evaluate the intersection bracket on two paths"));
    cmd_kappa->add_option("P1", path1, "First path expression")->required();
    cmd_kappa->add_option("P2", path2, "Second path expression")->required();

    auto* cmd_mu = with_fallthrough(app.add_subcommand("mu", "Evaluate the framed self-intersection operation"));
    cmd_mu->add_option("P", path1, "Path expression")->required();

    auto* cmd_phi = with_fallthrough(app.add_subcommand("phi", "Evaluate phi = TDiv of kappa(P, .)"));
    cmd_phi->add_option("P", path1, "Path expression")->required();

    auto* cmd_tdiv = with_fallthrough(app.add_subcommand("tdiv", "Triple divergence of a double derivation"));
    cmd_tdiv->add_option("--theta", theta_arg, "JSON theta table (file path or inline)")
        ->required();

    auto* cmd_div = with_fallthrough(app.add_subcommand("div", "Double divergence of mult o theta"));
    cmd_div->add_option("--theta", theta_arg, "JSON theta table (file path or inline)")
        ->required();

    auto* cmd_delta = with_fallthrough(app.add_subcommand("delta", "delta of the trace class of a loop path"));
    cmd_delta->add_option("P", path1, "Path expression")->required();

    auto* cmd_modular = with_fallthrough(app.add_subcommand("modular", "Modular vector field at a path"));
    cmd_modular->add_option("P", path1, "Path expression")->required();

    auto* cmd_ham = with_fallthrough(app.add_subcommand("ham", "Hamiltonian derivation of |T| applied to P"));
    cmd_ham->add_option("T", path1, "Loop path whose trace class drives the flow")->required();
    cmd_ham->add_option("P", path2, "Path expression the derivation is applied to")->required();

    auto* cmd_tensor = with_fallthrough(app.add_subcommand("tensor", "Tensor-algebra backend"));
    cmd_tensor->require_subcommand(1);
    auto* cmd_tb = with_fallthrough(cmd_tensor->add_subcommand("bracket", "Pairing-induced double bracket"));
    cmd_tb->add_option("U", path1, "First word in letters w1..wm")->required();
    cmd_tb->add_option("W", path2, "Second word in letters w1..wm")->required();
    cmd_tb->add_option("--pairing", pairing_arg, "JSON pairing matrix (file path or inline)")
        ->required();
    auto* cmd_tp = with_fallthrough(cmd_tensor->add_subcommand("phi", "phi for the pairing bracket"));
    cmd_tp->add_option("W", path1, "Word in letters w1..wm")->required();
    cmd_tp->add_option("--pairing", pairing_arg, "JSON pairing matrix (file path or inline)")
        ->required();
    auto* cmd_td = with_fallthrough(cmd_tensor->add_subcommand("delta", "delta for the pairing bracket"));
    cmd_td->add_option("W", path1, "Word in letters w1..wm")->required();
    cmd_td->add_option("--pairing", pairing_arg, "JSON pairing matrix (file path or inline)")
        ->required();

    auto* cmd_verify = with_fallthrough(app.add_subcommand("verify", "Run verification suites"));
    cmd_verify->add_option("--suite", suite, "Suite name or 'all'")->capture_default_str();
    cmd_verify->add_option("--report", report_path, "Write the JSON report to this file");
    std::string delta_rot;
    cmd_verify->add_option("--delta-rot", delta_rot,
                           "Override rot(d_j) in the main-theorem suite (harness sanity knob)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help("", CLI::AppFormatMode::All);
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_verify->parsed()) {
            SuiteOptions opt;
            opt.surfaces = {{g.genus, g.boundaries}};
            opt.seed = g.seed;
            opt.samples = g.samples;
            opt.max_len = g.max_len;
            if (!delta_rot.empty())
                opt.delta_rot_override = rat_parse(delta_rot);
            std::vector<SuiteReport> reports = run_suites(suite, opt);
            Json jreports = Json::array();
            bool ok = true;
            for (const SuiteReport& rep : reports) {
                ok = ok && rep.passed();
                jreports.push_back(report_json(rep));
                if (g.format == "text")
                    print_report_text(out, rep);
            }
            if (g.format == "json")
                out << (jreports.size() == 1 ? jreports[0] : jreports).dump() << "\n";
            if (!report_path.empty()) {
                std::ofstream rf(report_path);
                if (!rf)
                    throw std::invalid_argument("cannot write report file '" + report_path + "'");
                rf << (jreports.size() == 1 ? jreports[0] : jreports).dump(2) << "\n";
            }
            if (g.format == "text")
                out << (ok ? "all suites passed" : "verification FAILED") << "\n";
            return ok ? 0 : 1;
        }

        if (cmd_tensor->parsed()) {
            PairingMatrix p = pairing_from_json(load_json_arg(pairing_arg));
            Signature sig = Signature::tensor_algebra(p.dim);
            if (cmd_tb->parsed()) {
                DoubleBracket pi = pairing_bracket(sig, p);
                emit(out, g, sig, pi.eval(parse_path(sig, path1), parse_path(sig, path2)));
            } else if (cmd_tp->parsed()) {
                emit(out, g, sig, phi_tensor(sig, p, parse_path(sig, path1)));
            } else {
                emit(out, g, sig,
                     delta_tensor(sig, p, trace_project(parse_path(sig, path1))));
            }
            return 0;
        }

        Signature sig = make_surface(g.genus, g.boundaries);
        if (cmd_kappa->parsed()) {
            DoubleBracket kappa = kappa_bracket(sig);
            emit(out, g, sig, kappa.eval(parse_path(sig, path1), parse_path(sig, path2)));
        } else if (cmd_mu->parsed()) {
            MuOperator mu(sig);
            emit(out, g, sig, mu.eval(parse_path(sig, path1)));
        } else if (cmd_phi->parsed()) {
            emit(out, g, sig,
                 phi_map(sig, kappa_bracket(sig), nabla_basis(sig), parse_path(sig, path1)));
        } else if (cmd_tdiv->parsed()) {
            DoubleDerivation theta = theta_table_from_json(sig, load_json_arg(theta_arg));
            emit(out, g, sig, tdiv(sig, theta, nabla_basis(sig)));
        } else if (cmd_div->parsed()) {
            DoubleDerivation theta = theta_table_from_json(sig, load_json_arg(theta_arg));
            emit(out, g, sig, div_map(sig, mult_compose(theta), nabla_basis(sig)));
        } else if (cmd_delta->parsed()) {
            emit(out, g, sig,
                 delta_map(sig, kappa_bracket(sig), nabla_basis(sig),
                           trace_project(parse_path(sig, path1))));
        } else if (cmd_modular->parsed()) {
            emit(out, g, sig,
                 modular(sig, kappa_bracket(sig), nabla_basis(sig), ad_e(sig),
                         alg_word(parse_path(sig, path1))));
        } else if (cmd_ham->parsed()) {
            Derivation f =
                ham(sig, kappa_bracket(sig), trace_project(parse_path(sig, path1)));
            emit(out, g, sig, f.eval(parse_path(sig, path2)));
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace loopalg::cli
