#include "xy/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "xy/criticality.hpp"
#include "xy/entanglement.hpp"
#include "xy/spinmodel.hpp"
#include "xy/sweep.hpp"
#include "xy/teleport.hpp"
#include "xy/verify.hpp"

namespace xy {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// parameter flags shared by the point-evaluation subcommands
struct ParamFlags {
    double gamma = 0.0;
    double eta = 0.0;
    double J = 1.0;
    double temp = 1.0;
    double beta = 0.0;
    CLI::Option* beta_opt = nullptr;
};

void add_param_flags(CLI::App* sub, ParamFlags& f) {
    sub->add_option("--gamma", f.gamma, "anisotropy in [-1, 1]")
        ->check(CLI::Range(-1.0, 1.0))
        ->capture_default_str();
    sub->add_option("--eta", f.eta, "field strength in units of J")->capture_default_str();
    sub->add_option("--J", f.J, "exchange coupling")->capture_default_str();
    CLI::Option* temp_opt =
        sub->add_option("--temp", f.temp, "temperature")->capture_default_str();
    f.beta_opt = sub->add_option("--beta", f.beta, "inverse temperature");
    temp_opt->excludes(f.beta_opt);
    f.beta_opt->excludes(temp_opt);
}

double resolve_temperature(const ParamFlags& f) {
    if (f.beta_opt != nullptr && f.beta_opt->count() > 0) {
        if (!(f.beta > 0.0)) throw std::invalid_argument("beta must be positive");
        return 1.0 / f.beta;
    }
    return f.temp;
}

std::vector<Quantity> parse_quantities(const std::string& csv) {
    std::vector<Quantity> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const std::optional<Quantity> q = quantity_from_name(item);
        if (!q) throw std::invalid_argument("unknown quantity: " + item);
        out.push_back(*q);
    }
    if (out.empty()) throw std::invalid_argument("no quantities requested");
    return out;
}

// returns 3 when a critical-temperature solve did not converge
int emit_records(const std::vector<SweepRecord>& records, const std::string& format,
                 const std::string& output_path, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            err << "cannot open output file: " << output_path << '\n';
            return 1;
        }
        sink = &file;
    }
    if (format == "json")
        write_json(*sink, records);
    else
        write_csv(*sink, records);
    const bool nonconverged =
        std::any_of(records.begin(), records.end(), [](const SweepRecord& r) { return !r.converged; });
    return nonconverged ? 3 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"thermal two-qubit XY chain as a teleportation resource"};
    app.name("xychain");
    app.require_subcommand(1);

    // eval: closed-form quantities at one parameter point
    CLI::App* eval = app.add_subcommand("eval", "evaluate one parameter point");
    ParamFlags eval_p;
    add_param_flags(eval, eval_p);
    double eval_xi = 0.0;
    CLI::Option* eval_xi_opt =
        eval->add_option("--xi", eval_xi, "also report the partially known input fidelity");

    // sweep: grid over one variable
    CLI::App* sweep = app.add_subcommand("sweep", "sweep one variable over a grid");
    ParamFlags sweep_p;
    add_param_flags(sweep, sweep_p);
    std::string sweep_var;
    double sweep_start = 0.0;
    double sweep_stop = 0.0;
    int sweep_steps = 200;
    double sweep_xi = 0.0;
    std::string sweep_quantities = "concurrence";
    std::string sweep_format = "csv";
    std::string sweep_output;
    sweep->add_option("--variable", sweep_var, "one of eta, gamma, T, xi")->required();
    sweep->add_option("--start", sweep_start, "grid start")->required();
    sweep->add_option("--stop", sweep_stop, "grid stop")->required();
    sweep->add_option("--steps", sweep_steps, "grid points")->capture_default_str();
    sweep->add_option("--xi", sweep_xi, "input angle when not the swept variable")
        ->capture_default_str();
    sweep
        ->add_option("--quantities", sweep_quantities,
                     "comma list of concurrence,fef,max_fidelity,ent_fidelity,t1,t2,partial_fidelity")
        ->capture_default_str();
    sweep->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep->add_option("--output", sweep_output, "write to file instead of stdout");

    // critical: T1/T2 curves against the field
    CLI::App* critical = app.add_subcommand("critical", "critical temperatures vs eta");
    double crit_gamma = 0.0;
    double crit_eta_min = 0.0;
    double crit_eta_max = 1.0;
    double crit_J = 1.0;
    int crit_steps = 200;
    std::string crit_format = "csv";
    std::string crit_output;
    critical->add_option("--gamma", crit_gamma, "anisotropy in [-1, 1]")
        ->check(CLI::Range(-1.0, 1.0))
        ->capture_default_str();
    critical->add_option("--eta-min", crit_eta_min, "field grid start")->capture_default_str();
    critical->add_option("--eta-max", crit_eta_max, "field grid stop")->capture_default_str();
    critical->add_option("--J", crit_J, "exchange coupling")->capture_default_str();
    critical->add_option("--steps", crit_steps, "grid points")->capture_default_str();
    critical->add_option("--format", crit_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    critical->add_option("--output", crit_output, "write to file instead of stdout");

    // verify: oracle cross-check suite
    CLI::App* verify = app.add_subcommand("verify", "run the oracle cross-check suite");
    int verify_grid = 1000;
    std::uint64_t verify_seed = 42;
    verify->add_option("--grid", verify_grid, "random points per grid check")
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "random seed")->capture_default_str();

    // mc-fidelity: Monte Carlo estimate of the two-copy fidelity
    CLI::App* mc = app.add_subcommand("mc-fidelity", "Monte Carlo two-qubit fidelity estimate");
    ParamFlags mc_p;
    add_param_flags(mc, mc_p);
    int mc_m = -1;
    int mc_n = -1;
    std::int64_t mc_samples = 1000000;
    std::uint64_t mc_seed = 42;
    mc->add_option("--m", mc_m, "first correction index 0..3, -1 = best")
        ->check(CLI::Range(-1, 3))
        ->capture_default_str();
    mc->add_option("--n", mc_n, "second correction index 0..3, -1 = best")
        ->check(CLI::Range(-1, 3))
        ->capture_default_str();
    mc->add_option("--samples", mc_samples, "Monte Carlo samples")->capture_default_str();
    mc->add_option("--seed", mc_seed, "random seed")->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("xychain");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (eval->parsed()) {
            const ModelParams p{eval_p.J, eval_p.gamma, eval_p.eta, resolve_temperature(eval_p)};
            p.validate();
            if (!(p.T > 0.0)) throw std::invalid_argument("eval needs T > 0");
            out << "gamma=" << fmt(p.gamma) << " eta=" << fmt(p.eta) << " J=" << fmt(p.J)
                << " T=" << fmt(p.T) << '\n';
            out << "concurrence=" << fmt(thermal_concurrence_closed(p)) << '\n';
            out << "fef=" << fmt(fef_closed(p)) << '\n';
            out << "max_fidelity=" << fmt(max_fidelity_closed(p)) << '\n';
            out << "ent_fidelity=" << fmt(max_ent_fidelity_closed(p)) << '\n';
            out << "useful=" << (useful_for_teleportation(p) ? "true" : "false") << '\n';
            if (eval_xi_opt->count() > 0)
                out << "partial_fidelity=" << fmt(partial_output_fidelity_closed(p, eval_xi))
                    << '\n';
            return 0;
        }
        if (sweep->parsed()) {
            const std::optional<SweepVariable> var = variable_from_name(sweep_var);
            if (!var) throw std::invalid_argument("unknown sweep variable: " + sweep_var);
            SweepSpec spec;
            spec.variable = *var;
            spec.start = sweep_start;
            spec.stop = sweep_stop;
            spec.steps = sweep_steps;
            spec.fixed = ModelParams{sweep_p.J, sweep_p.gamma, sweep_p.eta,
                                     resolve_temperature(sweep_p)};
            spec.xi = sweep_xi;
            spec.quantities = parse_quantities(sweep_quantities);
            if (spec.variable == SweepVariable::Gamma &&
                (spec.start < -1.0 || spec.stop > 1.0))
                throw std::invalid_argument("gamma sweep range must stay in [-1, 1]");
            return emit_records(run_sweep(spec), sweep_format, sweep_output, out, err);
        }
        if (critical->parsed()) {
            SweepSpec spec;
            spec.variable = SweepVariable::Eta;
            spec.start = crit_eta_min;
            spec.stop = crit_eta_max;
            spec.steps = crit_steps;
            spec.fixed = ModelParams{crit_J, crit_gamma, 0.0, 1.0};
            spec.quantities = {Quantity::T1, Quantity::T2};
            return emit_records(run_sweep(spec), crit_format, crit_output, out, err);
        }
        if (verify->parsed()) {
            const std::vector<CheckResult> results = run_verification(verify_grid, verify_seed);
            for (const CheckResult& r : results) {
                char line[160];
                std::snprintf(line, sizeof line, "%s  %-34s worst=%.3e tol=%.1e  %s",
                              r.pass ? "PASS" : "FAIL", r.name.c_str(), r.worst, r.tol,
                              r.note.c_str());
                out << line << '\n';
            }
            if (all_passed(results)) {
                out << "all checks passed\n";
                return 0;
            }
            out << "verification FAILED\n";
            return 2;
        }
        if (mc->parsed()) {
            const ModelParams p{mc_p.J, mc_p.gamma, mc_p.eta, resolve_temperature(mc_p)};
            p.validate();
            if (!(p.T > 0.0)) throw std::invalid_argument("mc-fidelity needs T > 0");
            int m = mc_m;
            int n = mc_n;
            const std::array<double, 4> ov = thermal_bell_overlaps(p);
            const int best = static_cast<int>(
                std::max_element(ov.begin(), ov.end()) - ov.begin());
            if (m < 0) m = (4 - best) % 4;
            if (n < 0) n = (4 - best) % 4;
            const McEstimate est = ent_fidelity_mc(p, m, n, mc_samples, mc_seed);
            const double closed = 0.2 * (1.0 + 4.0 * ov[(4 - m) % 4] * ov[(4 - n) % 4]);
            out << "gamma=" << fmt(p.gamma) << " eta=" << fmt(p.eta) << " J=" << fmt(p.J)
                << " T=" << fmt(p.T) << " m=" << m << " n=" << n << " samples=" << mc_samples
                << " seed=" << mc_seed << '\n';
            out << "value=" << fmt(est.value) << '\n';
            out << "stderr=" << fmt(est.stderr_) << '\n';
            out << "closed=" << fmt(closed) << '\n';
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "no subcommand given\n";
    return 1;
}

}  // namespace xy
