#include "ldaha/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <thread>

#include "ldaha/appendix.hpp"
#include "ldaha/io.hpp"
#include "ldaha/suite.hpp"

namespace ldaha {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string fmt_residual(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", r);
    return buf;
}

std::string check_line(const SuiteCheck &c) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s  %-12s  ", c.ok ? "PASS" : "FAIL", c.group.c_str());
    return buf + c.name + "  residual " + fmt_residual(c.residual);
}

Tolerance tolerance(const RunConfig &cfg) { return {resolve_tolerance(cfg), 1e-12}; }

int cmd_validate(const RunConfig &cfg, std::ostream &out) {
    const QRacahParams p = resolve_params(cfg);
    const ValidationReport r = validate(p, 0.0, tolerance(cfg));
    if (cfg.format == Format::Json) {
        out << nlohmann::ordered_json{{"params", params_to_json(p)}, {"report", validation_report_to_json(r)}}.dump(2)
            << '\n';
    } else {
        for (const auto &c : r.checks)
            out << (c.ok ? "PASS  " : "FAIL  ") << c.name << "  distance " << fmt_residual(c.distance) << '\n';
        out << (r.passed ? "valid" : "invalid: " + r.first_failure()) << '\n';
    }
    return r.passed ? 0 : 1;
}

void write_matrix(const CMatrix &m, Format f, std::ostream &out) {
    if (f == Format::Csv)
        out << matrix_to_csv(m);
    else
        out << matrix_to_json(m).dump() << '\n';
}

int cmd_emit(const RunConfig &cfg, std::ostream &out) {
    const bool by_op = cfg.op || cfg.basis, by_pair = cfg.from || cfg.to;
    if (by_op == by_pair) throw UsageError("emit needs either --op with --basis or --from with --to");
    if (by_op && !(cfg.op && cfg.basis)) throw UsageError("--op and --basis go together");
    if (by_pair && !(cfg.from && cfg.to)) throw UsageError("--from and --to go together");
    if (by_pair && *cfg.from == *cfg.to) throw UsageError("--from and --to name the same basis");
    const QRacahParams p = resolve_params(cfg);
    const ValidationReport r = validate(p, 0.0, tolerance(cfg));
    if (!r.passed) throw UsageError("invalid parameters: " + r.first_failure());
    const ModuleInputs in = derive_inputs(p);
    const CMatrix m = by_op ? operator_matrix(in, *cfg.op, *cfg.basis) : transition_matrix(in, *cfg.from, *cfg.to);
    write_matrix(m, cfg.format.value_or(Format::Json), out);
    return 0;
}

SuiteOptions suite_options(const RunConfig &cfg) {
    SuiteOptions opt;
    opt.tol = tolerance(cfg);
    opt.recurrence_tol = 10.0 * opt.tol.rel;
    return opt;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    const auto checks = run_suite(resolve_params(cfg), suite_options(cfg));
    std::size_t failed = 0;
    for (const auto &c : checks) {
        out << check_line(c) << '\n';
        failed += !c.ok;
    }
    out << checks.size() - failed << " of " << checks.size() << " checks passed\n";
    return failed ? 1 : 0;
}

struct Sample {
    std::uint64_t seed;
    int d;
    std::vector<SuiteCheck> checks;
};

int cmd_sweep(const RunConfig &cfg, std::ostream &out) {
    if (cfg.params_path) throw UsageError("sweep draws its own samples; --params does not apply");
    if (cfg.n < 1) throw UsageError("--n must be positive");
    if (cfg.d && *cfg.d < 3) throw UsageError("--d must be at least 3");
    const std::uint64_t base = cfg.seed.value_or(0);
    std::vector<Sample> samples(static_cast<std::size_t>(cfg.n));
    for (std::size_t k = 0; k < samples.size(); ++k)
        samples[k] = {base + k, cfg.d.value_or(3 + static_cast<int>(k % 6)), {}};

    const SuiteOptions opt = suite_options(cfg);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < samples.size();) {
            Sample &s = samples[k];
            try {
                s.checks = run_suite(sample(s.seed, s.d), opt);
            } catch (const std::exception &e) {
                s.checks = {{"params", std::string("exception: ") + e.what(), false, 0.0}};
            }
        }
    };
    unsigned nt = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    nt = std::min<unsigned>(nt, static_cast<unsigned>(samples.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto &t : pool) t.join();

    struct Worst {
        double residual = -1.0;
        std::size_t sample = 0;
        std::string name;
        std::size_t failures = 0, count = 0;
    };
    std::vector<std::string> order;
    std::map<std::string, Worst> groups;
    std::size_t failed = 0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        for (const auto &c : samples[k].checks) {
            auto [it, fresh] = groups.try_emplace(c.group);
            if (fresh) order.push_back(c.group);
            Worst &w = it->second;
            ++w.count;
            if (c.residual > w.residual) w = {c.residual, k, c.name, w.failures, w.count};
            if (!c.ok) {
                ++w.failures;
                ++failed;
                out << "FAIL  sample " << k << " (d=" << samples[k].d << " seed " << samples[k].seed << ")  "
                    << c.group << "  " << c.name << "  residual " << fmt_residual(c.residual) << '\n';
            }
        }
    }
    for (const auto &g : order) {
        const Worst &w = groups[g];
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s  %-12s  worst %s  sample %zu (d=%d)  ", w.failures ? "FAIL" : "PASS",
                      g.c_str(), fmt_residual(w.residual).c_str(), w.sample, samples[w.sample].d);
        out << buf << w.name << "  failures " << w.failures << "/" << w.count << '\n';
    }
    out << samples.size() << " samples, " << failed << " failing checks\n";
    return failed ? 1 : 0;
}

int cmd_appendix(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const QRacahParams p = resolve_params(cfg);
    if (p.d != 4) throw UsageError("appendix-d4 needs d = 4, the parameter set has d = " + std::to_string(p.d));
    const AppendixReport r = reproduce_appendix_d4(p, tolerance(cfg));
    std::size_t failed = 0;
    if (cfg.format == Format::Csv) {
        for (const auto &m : r.matrices) {
            out << "# " << m.name << (m.cmp.ok ? "" : "  MISMATCH") << '\n';
            out << matrix_to_csv(m.displayed);
        }
    } else {
        nlohmann::ordered_json ms = nlohmann::ordered_json::array(), cf = nlohmann::ordered_json::array();
        for (const auto &m : r.matrices)
            ms.push_back({{"name", m.name},
                          {"matrix", matrix_to_json(m.displayed)},
                          {"residual", m.cmp.residual},
                          {"bound", m.cmp.bound},
                          {"ok", m.cmp.ok}});
        for (const auto &c : r.closed_forms)
            cf.push_back({{"name", c.name}, {"residual", c.cmp.residual}, {"ok", c.cmp.ok}});
        out << nlohmann::ordered_json{{"params", params_to_json(p)}, {"matrices", ms}, {"closed_forms", cf}, {"ok", r.ok()}}.dump(1)
            << '\n';
    }
    for (const auto &m : r.matrices)
        if (!m.cmp.ok) ++failed, err << "FAIL  " << m.name << "  residual " << fmt_residual(m.cmp.residual) << '\n';
    for (const auto &c : r.closed_forms)
        if (!c.cmp.ok) ++failed, err << "FAIL  " << c.name << "  residual " << fmt_residual(c.cmp.residual) << '\n';
    err << r.matrices.size() << " matrices and " << r.closed_forms.size() << " closed forms checked, " << failed
        << " mismatches\n";
    return failed ? 1 : 0;
}

}  // namespace

double resolve_tolerance(const RunConfig &cfg) {
    if (cfg.tol) return *cfg.tol;
    if (const char *env = std::getenv("LDAHA_TOL"); env && *env) {
        char *end = nullptr;
        const double t = std::strtod(env, &end);
        if (*end != '\0' || !(t > 0.0)) throw std::invalid_argument(std::string("bad LDAHA_TOL \"") + env + "\"");
        return t;
    }
    return Tolerance{}.rel;
}

QRacahParams resolve_params(const RunConfig &cfg) {
    if (cfg.params_path) return load_params(*cfg.params_path);
    const int d = cfg.command == Command::AppendixD4 ? 4 : cfg.d.value_or(4);
    if (cfg.command == Command::AppendixD4 && cfg.d && *cfg.d != 4) throw UsageError("appendix-d4 runs at d = 4 only");
    if (d < 3) throw UsageError("--d must be at least 3");
    if (cfg.seed || cfg.d) return sample(cfg.seed.value_or(0), d);
    return desk_point();
}

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    try {
        std::ofstream file;
        if (cfg.out_path) {
            file.open(*cfg.out_path);
            if (!file) throw UsageError("cannot write " + *cfg.out_path);
        }
        std::ostream &dst = cfg.out_path ? static_cast<std::ostream &>(file) : out;
        switch (cfg.command) {
            case Command::Validate: return cmd_validate(cfg, dst);
            case Command::Emit: return cmd_emit(cfg, dst);
            case Command::Verify: return cmd_verify(cfg, dst);
            case Command::Sweep: return cmd_sweep(cfg, dst);
            case Command::AppendixD4: return cmd_appendix(cfg, dst, err);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Leonard pair and DAHA module computations"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format, op, basis, from, to;

    struct Sub {
        const char *name;
        Command cmd;
        const char *help;
    };
    const Sub subs[] = {{"validate", Command::Validate, "Check the parameter constraints"},
                        {"emit", Command::Emit, "Write one operator representation or transition matrix"},
                        {"verify", Command::Verify, "Run every identity check on one parameter set"},
                        {"sweep", Command::Sweep, "Run verify over seeded samples and report the worst residuals"},
                        {"appendix-d4", Command::AppendixD4, "Evaluate every displayed d = 4 matrix and cross-check it"}};
    for (const auto &s : subs) {
        CLI::App *sc = app.add_subcommand(s.name, s.help);
        sc->callback([&cfg, cmd = s.cmd] { cfg.command = cmd; });
        sc->add_option("--params", cfg.params_path, "Parameter JSON file");
        sc->add_option("--seed", cfg.seed, "Sampler seed");
        sc->add_option("--d", cfg.d, "Diameter")->check(CLI::Range(3, 64));
        sc->add_option("--tol", cfg.tol, "Relative tolerance")->check(CLI::PositiveNumber);
        sc->add_option("--format", format, "Matrix output format")->check(CLI::IsMember({"json", "csv"}));
        sc->add_option("--out", cfg.out_path, "Write output to this file");
        if (s.cmd == Command::Sweep) {
            sc->add_option("--n", cfg.n, "Number of samples")->check(CLI::PositiveNumber);
            sc->add_option("--threads", cfg.threads, "Worker threads (0: hardware count)");
        }
        if (s.cmd == Command::Emit) {
            sc->add_option("--op", op, "A, Astar, AstarTilde, P, Ptilde");
            sc->add_option("--basis", basis, "C, B, Balt, Btilde, BtildeAlt");
            sc->add_option("--from", from, "Transition source basis");
            sc->add_option("--to", to, "Transition target basis");
        }
    }

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (!format.empty()) cfg.format = format == "csv" ? Format::Csv : Format::Json;
    auto pick_basis = [&](const std::string &text, std::optional<BasisId> &dst) {
        if (text.empty()) return true;
        dst = parse_basis(text);
        if (!dst) err << "error: unknown basis \"" << text << "\"\n";
        return dst.has_value();
    };
    if (!op.empty()) {
        cfg.op = parse_operator(op);
        if (!cfg.op) {
            err << "error: unknown operator \"" << op << "\"\n";
            return 2;
        }
    }
    if (!pick_basis(basis, cfg.basis) || !pick_basis(from, cfg.from) || !pick_basis(to, cfg.to)) return 2;
    return run(cfg, out, err);
}

}  // namespace ldaha
