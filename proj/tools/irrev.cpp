// Command-line front end: model inspection, structure verification, bracket
// evaluation and trajectory integration.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 runtime error. Every run ends with one machine-parseable summary line on
// standard error: "cmd=<name> elapsed_ms=<int> status=<ok|fail|error>".

#include "irrev/integrate.hpp"
#include "irrev/models.hpp"
#include "irrev/parse.hpp"
#include "irrev/verify.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using namespace irrev;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Builtin model, or a model file with its own H, S and tau.
struct ResolvedTarget {
    std::optional<ModelDescriptor> builtin;
    std::optional<LoadedModel> loaded;
};

ResolvedTarget resolve_target(const std::string& name, std::uint64_t seed) {
    ResolvedTarget t;
    if (auto m = find_model(name)) {
        t.builtin = std::move(m);
        return t;
    }
    if (std::filesystem::exists(name)) {
        t.loaded = load_model(name, seed);
        return t;
    }
    throw UsageError("unknown model '" + name + "' (not a builtin and not a file)");
}

std::string matrix_text(const BivectorField& b) {
    std::ostringstream out;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < b.dim(); ++j) {
            if (j) out << ", ";
            out << render(b.component(i, j), b.chart().names);
        }
        out << "]\n";
    }
    return out.str();
}

int cmd_models(const std::string& name) {
    if (name.empty()) {
        for (const auto& n : {"se2", "se2ext", "galilei", "bargmann"}) {
            ModelDescriptor d = *find_model(n);
            std::cout << d.name << "  dim=" << d.chart.dim()
                      << "  cocycle=" << (d.cocycle ? "yes" : "no") << "  casimirs:";
            for (const auto& c : d.casimirs) std::cout << " " << c.name;
            for (const auto& c : d.extended_casimirs) std::cout << " " << c.name << "(deformed)";
            std::cout << "\n";
        }
        std::cout << "parametric: canonical:N (Darboux chart), lv:<skew matrix rows ; by ;>\n";
        return 0;
    }
    auto d = find_model(name);
    if (!d) throw UsageError("no builtin model named '" + name + "'");
    std::cout << d->name << ": " << d->notes << "\n";
    std::cout << "chart:";
    for (const auto& c : d->chart.names) std::cout << " " << c;
    std::cout << "\nbivector:\n" << matrix_text(d->base);
    if (d->cocycle) {
        std::cout << "cocycle:\n" << matrix_text(*d->cocycle);
        std::cout << "deformed bivector:\n" << matrix_text(d->deformed());
    }
    for (const auto& c : d->casimirs)
        std::cout << "casimir " << c.name << " = " << render(c.poly, d->chart.names) << "\n";
    for (const auto& c : d->extended_casimirs)
        std::cout << "extended casimir " << c.name << " = " << render(c.poly, d->chart.names)
                  << "\n";
    std::cout << "default entropy = " << render(d->default_entropy, d->chart.names) << "\n";
    return 0;
}

int cmd_check(const std::string& target, std::uint64_t seed, const std::string& hamiltonian,
              bool machine) {
    VerificationReport rep("", seed);
    if (auto m = find_model(target)) {
        std::optional<Polynomial> H;
        if (!hamiltonian.empty()) H = parse_expression(hamiltonian, m->chart);
        rep = check_model(*m, seed, H);
    } else if (std::filesystem::exists(target)) {
        try {
            LoadedModel lm = load_model(target, seed);
            rep = lm.report;
        } catch (const VerificationFailure& e) {
            std::cout << e.report().text();
            std::cerr << e.what() << "\n";
            return 1;
        }
    } else {
        throw UsageError("unknown model '" + target + "' (not a builtin and not a file)");
    }
    std::cout << (machine ? rep.machine() : rep.text());
    return rep.all_passed() ? 0 : 1;
}

std::vector<double> parse_floats(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            std::size_t used = 0;
            double v = std::stod(cell, &used);
            while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used])))
                ++used;
            if (used != cell.size()) throw std::invalid_argument(cell);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("cannot parse '" + cell + "' as a number");
        }
    }
    return out;
}

struct SimulateOptions {
    std::string model;
    std::string hamiltonian, entropy, tau = "1";
    std::string initial;
    double dt = 1e-3;
    long steps = 1000;
    std::string scheme = "rk4";
    std::string output;
    unsigned jobs = 1;
    std::uint64_t seed = 0x5eed;
};

std::filesystem::path output_path(const SimulateOptions& opt, long index, bool batch) {
    std::filesystem::path base;
    if (!opt.output.empty()) {
        base = opt.output;
    } else {
        std::filesystem::path dir = ".";
        if (const char* env = std::getenv("IRREV_OUTPUT_DIR")) dir = env;
        std::string stem = std::filesystem::path(opt.model).stem().string();
        for (auto& ch : stem)
            if (ch == ':') ch = '_';
        base = dir / (stem + "_trajectory.csv");
    }
    if (!batch) return base;
    std::filesystem::path withsuffix = base;
    withsuffix.replace_filename(base.stem().string() + "_" + std::to_string(index) +
                                base.extension().string());
    return withsuffix;
}

int cmd_simulate(const SimulateOptions& opt) {
    ResolvedTarget target = resolve_target(opt.model, opt.seed);
    auto tau = rational_from_string(opt.tau);
    if (!tau) throw UsageError("malformed rational for --tau: '" + opt.tau + "'");

    std::optional<MetriplecticSystem> sys;
    if (target.builtin) {
        if (opt.hamiltonian.empty())
            throw UsageError("--hamiltonian is required for builtin models");
        Polynomial H = parse_expression(opt.hamiltonian, target.builtin->chart);
        Polynomial S = opt.entropy.empty()
                           ? target.builtin->default_entropy
                           : parse_expression(opt.entropy, target.builtin->chart);
        sys = target.builtin->system(std::move(H), std::move(S), *tau);
    } else {
        sys = target.loaded->system;
        const CoordinateChart& chart = sys->chart();
        if (!opt.hamiltonian.empty())
            sys = sys->with_hamiltonian(parse_expression(opt.hamiltonian, chart));
    }
    if (sys->isentropic())
        std::cerr << "warning: entropy is a Casimir of the deformed bracket; "
                     "the dissipative term vanishes identically\n";

    Scheme scheme = scheme_from_string(opt.scheme);

    std::vector<std::vector<double>> initials;
    if (!opt.initial.empty() && opt.initial[0] == '@') {
        std::ifstream in(opt.initial.substr(1));
        if (!in) throw UsageError("cannot open initial-condition file " + opt.initial.substr(1));
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            initials.push_back(parse_floats(line));
        }
        if (initials.empty()) throw UsageError("initial-condition file is empty");
    } else {
        if (opt.initial.empty()) throw UsageError("--initial is required");
        initials.push_back(parse_floats(opt.initial));
    }
    for (const auto& x0 : initials)
        if (x0.size() != sys->chart().dim())
            throw UsageError("initial state has " + std::to_string(x0.size()) +
                             " components, chart has " + std::to_string(sys->chart().dim()));

    bool batch = initials.size() > 1;
    std::vector<std::string> errors(initials.size());
    std::vector<int> codes(initials.size(), 0);

    auto run_one = [&](std::size_t k) {
        std::filesystem::path path = output_path(opt, static_cast<long>(k), batch);
        try {
            Trajectory tr =
                simulate(*sys, initials[k], opt.dt, opt.steps, scheme);
            std::ofstream out(path);
            write_csv(out, tr);
            std::cerr << "wrote " << path.string() << " (" << tr.records.size() << " records)\n";
        } catch (const SimulationError& e) {
            std::ofstream out(path);
            write_csv(out, e.partial());
            errors[k] = std::string(e.what()) + "; partial trajectory in " + path.string();
            codes[k] = 3;
        }
    };

    if (opt.jobs <= 1 || initials.size() == 1) {
        for (std::size_t k = 0; k < initials.size(); ++k) run_one(k);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        unsigned n_threads = std::min<std::size_t>(opt.jobs, initials.size());
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < initials.size();
                     k = next.fetch_add(1))
                    run_one(k);
            });
        for (auto& th : pool) th.join();
    }
    for (std::size_t k = 0; k < initials.size(); ++k)
        if (codes[k] != 0) {
            std::cerr << "error: " << errors[k] << "\n";
            return 3;
        }
    return 0;
}

int cmd_eval(const std::string& model, const std::string& expr, const std::string& at,
             const std::string& bracket, const std::string& hamiltonian, std::uint64_t seed) {
    ResolvedTarget target = resolve_target(model, seed);
    const CoordinateChart& chart =
        target.builtin ? target.builtin->chart : target.loaded->system.chart();

    if (at.empty()) throw UsageError("--at is required");
    // exact when every component is a rational literal, float otherwise
    std::vector<Rational> rational_pt;
    bool exact = true;
    {
        std::stringstream ss(at);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            auto r = rational_from_string(cell);
            if (!r) {
                exact = false;
                break;
            }
            rational_pt.push_back(*r);
        }
    }
    std::vector<double> float_pt = parse_floats(at);
    if (float_pt.size() != chart.dim())
        throw UsageError("--at has " + std::to_string(float_pt.size()) +
                         " components, chart has " + std::to_string(chart.dim()));

    auto print_value = [&](const std::string& label, const Polynomial& p) {
        if (exact)
            std::cout << label << " = " << to_string(p.eval(rational_pt)) << "\n";
        else
            std::cout << label << " = " << p.eval(std::span<const double>(float_pt)) << "\n";
    };

    if (!bracket.empty()) {
        auto comma = bracket.find(',');
        if (comma == std::string::npos)
            throw UsageError("--bracket needs two comma-separated expressions");
        Polynomial f = parse_expression(bracket.substr(0, comma), chart);
        Polynomial g = parse_expression(bracket.substr(comma + 1), chart);
        BivectorField deformed = target.builtin
                                     ? target.builtin->deformed()
                                     : target.loaded->system.structure().deformed();
        print_value("poisson", poisson_bracket(deformed, f, g));

        std::optional<MetriplecticSystem> sys;
        if (target.builtin) {
            Polynomial H = hamiltonian.empty() ? Polynomial(chart.dim())
                                               : parse_expression(hamiltonian, chart);
            sys = target.builtin->system(std::move(H));
        } else {
            sys = target.loaded->system;
            if (!hamiltonian.empty())
                sys = sys->with_hamiltonian(parse_expression(hamiltonian, chart));
        }
        print_value("symmetric", symmetric_bracket(*sys, f, g));
    }
    if (!expr.empty()) print_value("value", parse_expression(expr, chart));
    if (expr.empty() && bracket.empty())
        throw UsageError("nothing to evaluate: pass --expr and/or --bracket");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    auto t0 = std::chrono::steady_clock::now();
    std::string cmd_name = argc > 1 ? argv[1] : "(none)";
    auto summary = [&](const char* status) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "cmd=" << cmd_name << " elapsed_ms=" << ms << " status=" << status << "\n";
    };

    CLI::App app{"irreversible dynamics on Poisson manifolds"};
    app.require_subcommand(1);

    auto* models = app.add_subcommand("models", "list builtin models");
    std::string models_name;
    models->add_option("--name", models_name, "detail view of one builtin");

    auto* check = app.add_subcommand("check", "verify a builtin model or model file");
    std::string check_target, check_hamiltonian;
    std::uint64_t check_seed = 0x5eed;
    bool check_machine = false;
    check->add_option("target", check_target, "builtin name or model file")->required();
    check->add_option("--seed", check_seed, "seed for randomized sub-checks");
    check->add_option("--hamiltonian", check_hamiltonian,
                      "Hamiltonian for the axioms battery (default: seeded random)");
    check->add_flag("--machine", check_machine, "machine-readable output");

    auto* simulate = app.add_subcommand("simulate", "integrate a metriplectic flow");
    SimulateOptions sopt;
    simulate->add_option("model", sopt.model, "builtin name or model file")->required();
    simulate->add_option("--hamiltonian", sopt.hamiltonian, "Hamiltonian expression");
    simulate->add_option("--entropy", sopt.entropy, "entropy expression (default: model entropy)");
    simulate->add_option("--initial", sopt.initial, "x0 as comma floats, or @file for a batch");
    simulate->add_option("--dt", sopt.dt, "step size");
    simulate->add_option("--steps", sopt.steps, "number of steps");
    simulate->add_option("--scheme", sopt.scheme, "rk4 or midpoint");
    simulate->add_option("--tau", sopt.tau, "temperature (rational, default 1)");
    simulate->add_option("--output", sopt.output, "output CSV path");
    simulate->add_option("--jobs", sopt.jobs, "parallel trajectories in batch mode");
    simulate->add_option("--seed", sopt.seed, "seed recorded with the run");

    auto* eval = app.add_subcommand("eval", "evaluate expressions and brackets at a point");
    std::string eval_model, eval_expr, eval_at, eval_bracket, eval_hamiltonian;
    std::uint64_t eval_seed = 0x5eed;
    eval->add_option("model", eval_model, "builtin name or model file")->required();
    eval->add_option("--expr", eval_expr, "expression to evaluate");
    eval->add_option("--at", eval_at, "evaluation point (rationals give exact output)");
    eval->add_option("--bracket", eval_bracket, "two expressions f,g for bracket values");
    eval->add_option("--hamiltonian", eval_hamiltonian,
                     "Hamiltonian for the symmetric bracket (default 0)");
    eval->add_option("--seed", eval_seed, "seed recorded with the run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        int rc = app.exit(e);
        summary(rc == 0 ? "ok" : "error");
        return rc;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        summary("error");
        return 2;
    }

    try {
        int rc = 0;
        if (*models)
            rc = cmd_models(models_name);
        else if (*check)
            rc = cmd_check(check_target, check_seed, check_hamiltonian, check_machine);
        else if (*simulate)
            rc = cmd_simulate(sopt);
        else if (*eval)
            rc = cmd_eval(eval_model, eval_expr, eval_at, eval_bracket, eval_hamiltonian,
                          eval_seed);
        summary(rc == 0 ? "ok" : (rc == 1 ? "fail" : "error"));
        return rc;
    } catch (const VerificationFailure& e) {
        std::cout << e.report().text();
        std::cerr << "error: " << e.what() << "\n";
        summary("fail");
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        summary("error");
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        summary("error");
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        summary("error");
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        summary("error");
        return 3;
    }
}
