#include "ldaha/suite.hpp"

#include <algorithm>
#include <functional>

#include "ldaha/clique.hpp"
#include "ldaha/daha.hpp"
#include "ldaha/leonard.hpp"
#include "ldaha/module_w.hpp"

namespace ldaha {

namespace {

class Collector {
  public:
    explicit Collector(std::vector<SuiteCheck> &out) : out_(out) {}

    void add(const std::string &group, const std::string &name, bool ok, double residual) {
        out_.push_back({group, name, ok, residual});
    }
    void add(const std::string &group, const Check &c) {
        add(group, c.name, c.cmp.ok, c.cmp.separation ? 0.0 : c.cmp.relative());
    }
    void add(const std::string &group, const std::vector<Check> &cs) {
        for (const auto &c : cs) add(group, c);
    }

    // Runs `body`; an exception becomes one failing check in `group`.
    void guarded(const std::string &group, const std::function<void()> &body) {
        try {
            body();
        } catch (const std::exception &e) {
            add(group, std::string("exception: ") + e.what(), false, 0.0);
        }
    }

  private:
    std::vector<SuiteCheck> &out_;
};

CMatrix coeff_rows(const TridiagonalCoeffs &t) {
    CMatrix m(3, t.a.size());
    for (std::size_t i = 0; i < t.a.size(); ++i) m(0, i) = t.a[i], m(1, i) = t.b[i], m(2, i) = t.c[i];
    return m;
}

CMatrix row(const std::vector<CScalar> &v) { return CMatrix(1, v.size(), v); }

struct Derived {
    const char *name;
    const ParameterArray *pa;
    const QRacahData *data;
};

}  // namespace

std::vector<SuiteCheck> run_suite(const QRacahParams &p, const SuiteOptions &opt) {
    std::vector<SuiteCheck> out;
    Collector c(out);
    const Tolerance tol = opt.tol;

    const ValidationReport vr = validate(p, 0.0, tol);
    for (const auto &k : vr.checks) c.add("params", k.name, k.ok, 0.0);
    if (!vr.passed) return out;

    ModuleInputs in;
    try {
        in = derive_inputs(p);
    } catch (const std::exception &e) {
        c.add("params", std::string("exception: ") + e.what(), false, 0.0);
        return out;
    }
    const QRacahData primary = primary_qracah_data(p, in.h, in.hstar);
    const std::vector<Derived> arrays{{"Phi", &in.pa, &primary},
                                      {"Phi-tilde", &in.derived.Phi_tilde, &in.derived.tilde},
                                      {"Phi-perp", &in.derived.Phi_perp, &in.derived.perp},
                                      {"Phi-tilde-perp", &in.derived.Phi_tilde_perp, &in.derived.tilde_perp}};

    c.guarded("pa", [&] {
        for (const auto &a : arrays) {
            const PAReport r = check_PA(*a.pa, tol);
            for (const auto &k : r.conditions) {
                const bool identity = k.name != "PA1" && k.name != "PA2";
                c.add("pa", std::string(a.name) + " " + k.name, k.ok, identity ? k.residual : 0.0);
            }
        }
    });

    c.guarded("intersection", [&] {
        for (const auto &a : arrays) {
            const Comparison cmp = approx_eq(coeff_rows(intersection_numbers(*a.pa)), coeff_rows(qracah_b_c(*a.data)), tol);
            c.add("intersection", std::string(a.name) + " a, b, c against q-closed forms", cmp.ok, cmp.relative());
        }
        const Comparison dual = approx_eq(coeff_rows(dual_intersection_numbers(in.pa)),
                                          coeff_rows(qracah_dual_b_c(primary)), tol);
        c.add("intersection", "Phi dual a*, b*, c* against q-closed forms", dual.ok, dual.relative());
        const Tolerance exact{0.0, 1e-12};
        const Comparison c1 = approx_eq(in.abc.c[1], 1.0, exact);
        c.add("intersection", "c_1 = 1 from the array", c1.ok, c1.residual);
        const Comparison c1q = approx_eq(qracah_b_c(primary).c[1], 1.0, exact);
        c.add("intersection", "c_1 = 1 from the closed form", c1q.ok, c1q.residual);
    });

    c.guarded("u", [&] {
        for (const auto &a : arrays) {
            const double r = u_recurrence_residual(*a.data);
            c.add("u", std::string(a.name) + " three-term recurrence", r <= opt.recurrence_tol, r);
        }
        const auto u = u_table(primary);
        const int d = p.d;
        std::vector<CScalar> at_d, product;
        CMatrix table(d + 1, d + 1), hyper(d + 1, d + 1);
        for (int i = 0; i <= d; ++i) {
            at_d.push_back(u[i][d]);
            product.push_back(u_at_theta_d(in.pa, i));
            for (int j = 0; j <= d; ++j) {
                table(i, j) = u[i][j];
                hyper(i, j) = u_qracah(primary, i, j);
            }
        }
        c.add("u", Check{"u_i(theta_d) against the phi/varphi product", approx_eq(row(at_d), row(product), tol)});
        c.add("u", Check{"4phi3 sum against the defining sum", approx_eq(hyper, table, tol)});
    });

    c.guarded("clique", [&] { c.add("clique", clique_consistency_checks(p, in.pa, in.abc, in.cs, tol)); });
    c.guarded("counting", [&] {
        c.add("counting", counting_identity_checks(in.abc, in.cs, tol));
        c.add("counting", xi_eps_relation_checks(in.abc, in.perp, in.cs, tol));
        c.add("counting", zeta_tau_relation_checks(in.abc, in.tilde_perp, in.cs, tol));
    });

    ModuleRep mod;
    DahaRep rep;
    bool built = false;
    c.guarded("transition", [&] {
        mod = build_module(in);
        rep = assemble(p);
        built = true;
    });
    if (!built) return out;

    c.guarded("transition", [&] { c.add("transition", transition_checks(mod, tol)); });
    c.guarded("conjugation", [&] { c.add("conjugation", conjugation_checks(mod, tol)); });
    c.guarded("projection", [&] { c.add("projection", projection_checks(in, mod, tol)); });
    c.guarded("structure", [&] { c.add("structure", structure_checks(in, mod, tol)); });
    c.guarded("spectral", [&] {
        for (const auto &r : spectral_dims(in, mod)) c.add("spectral", r.name, r.ok, r.unmatched);
    });
    c.guarded("daha", [&] { c.add("daha", verify_daha_relations(rep, p, tol)); });
    c.guarded("blocks", [&] { c.add("blocks", verify_blocks(p, tol)); });
    c.guarded("action", [&] { c.add("action", verify_action_tables(rep, p, tol)); });
    c.guarded("main", [&] { c.add("main", verify_main_theorem(rep, in, mod, tol)); });

    if (opt.commutant) {
        c.guarded("commutant", [&] {
            const CommutantResult ops = commutant({mod.M(OperatorId::A, BasisId::C), mod.M(OperatorId::Astar, BasisId::C),
                                                   mod.M(OperatorId::AstarTilde, BasisId::C)});
            c.add("commutant", "A, A*, tilde A* in C", ops.dimension == 1, ops.sigma_null);
        });
        c.guarded("commutant", [&] {
            const CommutantResult gens = commutant({rep.T[0], rep.T[1], rep.T[2], rep.T[3]});
            c.add("commutant", "T0, T1, T2, T3", gens.dimension == 1, gens.sigma_null);
        });
    }
    return out;
}

bool all_ok(const std::vector<SuiteCheck> &checks) {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck &c) { return c.ok; });
}

}  // namespace ldaha
