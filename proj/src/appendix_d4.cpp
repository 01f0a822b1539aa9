#include "ldaha/appendix.hpp"

#include "appendix_d4_tables.hpp"

namespace ldaha {

namespace {

constexpr int kD = 4;
constexpr std::size_t kN = 2 * kD;

using appendix_tables::Display;
using appendix_tables::Kind;

// Part II blocks as functions of the block index i.
// sqrt(s* r1 r2) = ssh r1h r2h, sqrt(s*/(r1 r2)) = ssh/(r1h r2h), sqrt(s* q^5) = ssh qh^5.
const char *kT0 = R"(
    1/(ssh r1h r2h) ((r1-ss q^(i+1))(r2-ss q^(i+1))/(1-ss q^(2i+2)) + ss)
        & -(ssh/(r1h r2h)) (1-r1 q^(i+1))(1-r2 q^(i+1))/(1-ss q^(2i+2));
    1/(ssh r1h r2h) (r1-ss q^(i+1))(r2-ss q^(i+1))/(1-ss q^(2i+2))
        & ssh/(r1h r2h) (1-(1-r1 q^(i+1))(1-r2 q^(i+1))/(1-ss q^(2i+2)))
)";

const char *kT1 = R"(
    q^2(1-q^(i-4))(1-ss q^(i+1))/(1-ss q^(2i+1)) + 1/q^2
        & q^2(q^(i-4)-1)(1-ss q^(i+1))/(1-ss q^(2i+1));
    (1-q^i)(1-ss q^(i+5))/(q^2(1-ss q^(2i+1)))
        & (q^i-1)(1-ss q^(i+5))/(q^2(1-ss q^(2i+1))) + 1/q^2
)";

const char *kT2 = R"(
    1/(ssh qh^5) (ss q^5(1-q^i)(1-q^(i-4))/(1-ss q^(2i+1)) + 1)
        & q^i ssh qh^5 (1-q^(i-4))(1-ss q^(i+1))/(1-ss q^(2i+1));
    1/(q^i ssh qh^5) (q^i-1)(1-ss q^(i+5))/(1-ss q^(2i+1))
        & ssh qh^5 ((q^i-1)(1-q^(i-4))/(1-ss q^(2i+1)) + 1)
)";

const char *kT3 = R"(
    1/(q^(i+1) r1h r2h) (1 - (1-r1 q^(i+1))(1-r2 q^(i+1))/(1-ss q^(2i+2)))
        & 1/(q^(i+1) r1h r2h) (1-r1 q^(i+1))(1-r2 q^(i+1))/(1-ss q^(2i+2));
    -q^(i+1)/(r1h r2h) (r1-ss q^(i+1))(r2-ss q^(i+1))/(1-ss q^(2i+2))
        & q^(i+1)/(r1h r2h) ((r1-ss q^(i+1))(r2-ss q^(i+1))/(1-ss q^(2i+2)) + ss)
)";

const char *kT1End = "q^(-2)";
const char *kT2First = "ssh qh^5";
const char *kT2Last = "1/(ssh qh^5)";

// Y, Y^{-1} and A-bold carry the scalar factor sqrt(s* q^4/(r1 r2)) = ssh q^2/(r1h r2h).
const char *kBoldFactor = "ssh q^2/(r1h r2h)";

const char *kYa0 = R"(
    1/(ss q^4) ((r1-ss q)(r2-ss q)/(1-ss q^2) + ss);
    1/(ss q^4) (r1-ss q)(r2-ss q)/(1-ss q^2)
)";

const char *kYb3 = R"(
    -(1-r1 q^4)(1-r2 q^4)/(q^4(1-ss q^8));
    1/q^4 - (1-r1 q^4)(1-r2 q^4)/(q^4(1-ss q^8))
)";

const char *kYa = R"(
    1/(ss q^4) (1-q^i)(1-ss q^(i+5))/(1-ss q^(2i+1)) ((r1-ss q^(i+1))(r2-ss q^(i+1))/(1-ss q^(2i+2)) + ss)
        & 1/(ss q^4) (1 - (1-q^i)(1-ss q^(i+5))/(1-ss q^(2i+1))) ((r1-ss q^(i+1))(r2-ss q^(i+1))/(1-ss q^(2i+2)) + ss);
    1/(ss q^4) (1-q^i)(1-ss q^(i+5))(r1-ss q^(i+1))(r2-ss q^(i+1))/((1-ss q^(2i+1))(1-ss q^(2i+2)))
        & 1/(ss q^4) (1 - (1-q^i)(1-ss q^(i+5))/(1-ss q^(2i+1))) (r1-ss q^(i+1))(r2-ss q^(i+1))/(1-ss q^(2i+2))
)";

const char *kYb = R"(
    -(1-r1 q^(i+1))(1-r2 q^(i+1))/(1-ss q^(2i+2)) ((1-q^(i-3))(1-ss q^(i+2))/(1-ss q^(2i+3)) + q^(-4))
        & (1-q^(i-3))(1-ss q^(i+2))(1-r1 q^(i+1))(1-r2 q^(i+1))/((1-ss q^(2i+3))(1-ss q^(2i+2)));
    (1 - (1-r1 q^(i+1))(1-r2 q^(i+1))/(1-ss q^(2i+2))) ((1-q^(i-3))(1-ss q^(i+2))/(1-ss q^(2i+3)) + q^(-4))
        & (1-q^(i-3))(1-ss q^(i+2))/(1-ss q^(2i+3)) ((1-r1 q^(i+1))(1-r2 q^(i+1))/(1-ss q^(2i+2)) - 1)
)";

const char *kYinvA0 = R"(
    (1 - (1-r1 q)(1-r2 q)/(1-ss q^2)) ((1-q^(-4))(1-ss q)/(1-ss q) + 1/q^4)
        & (1-r1 q)(1-r2 q)/(1-ss q^2) ((1-q^(-4))(1-ss q)/(1-ss q) + 1/q^4);
)";

const char *kYinvC4 = R"(
    1/(ss q^4) (r1-ss q^4)(r2-ss q^4)/(1-ss q^8) ((1-q^4)(1-ss q^9)/(1-ss q^9) - 1)
        & 1/(ss q^4) ((r1-ss q^4)(r2-ss q^4)/(1-ss q^8) + ss) ((q^4-1)(1-ss q^9)/(1-ss q^9) + 1);
)";

const char *kYinvA = R"(
    (1-q^(i-4))(1-ss q^(i+1))/(1-ss q^(2i+1)) (1 - (1-r1 q^(i+1))(1-r2 q^(i+1))/(1-ss q^(2i+2)))
        & (1-q^(i-4))(1-ss q^(i+1))(1-r1 q^(i+1))(1-r2 q^(i+1))/((1-ss q^(2i+1))(1-ss q^(2i+2)));
    (1 - (1-r1 q^(i+1))(1-r2 q^(i+1))/(1-ss q^(2i+2))) ((1-q^(i-4))(1-ss q^(i+1))/(1-ss q^(2i+1)) + 1/q^4)
        & (1-r1 q^(i+1))(1-r2 q^(i+1))/(1-ss q^(2i+2)) ((1-q^(i-4))(1-ss q^(i+1))/(1-ss q^(2i+1)) + 1/q^4)
)";

const char *kYinvC = R"(
    1/(ss q^4) (r1-ss q^i)(r2-ss q^i)/(1-ss q^(2i)) ((1-q^i)(1-ss q^(i+5))/(1-ss q^(2i+1)) - 1)
        & 1/(ss q^4) ((r1-ss q^i)(r2-ss q^i)/(1-ss q^(2i)) + ss) ((q^i-1)(1-ss q^(i+5))/(1-ss q^(2i+1)) + 1);
    1/(ss q^4) (1-q^i)(1-ss q^(i+5))(r1-ss q^i)(r2-ss q^i)/((1-ss q^(2i))(1-ss q^(2i+1)))
        & 1/(ss q^4) (q^i-1)(1-ss q^(i+5))/(1-ss q^(2i+1)) ((r1-ss q^i)(r2-ss q^i)/(1-ss q^(2i)) + ss)
)";

const char *kAa = R"(
    1 + r1 r2/(ss q^4)
      - (1-q^i)(1-ss q^(i+5))(r1-ss q^(i+1))(r2-ss q^(i+1))/(ss q^4(1-ss q^(2i+1))(1-ss q^(2i+2)))
      - (1-q^(i-4))(1-ss q^(i+1))(1-r1 q^(i+1))(1-r2 q^(i+1))/((1-ss q^(2i+1))(1-ss q^(2i+2)))
        & (1-r1 q^(i+1))(1-r2 q^(i+1))/(1-ss q^(2i+2))
            ((1-q^(i-4))(1-ss q^(i+1))/(1-ss q^(2i+1)) - (1-q^(i-3))(1-ss q^(i+2))/(1-ss q^(2i+3)));
    (r1-ss q^(i+1))(r2-ss q^(i+1))/(ss q^4(1-ss q^(2i+2)))
            ((1-q^(i+1))(1-ss q^(i+6))/(1-ss q^(2i+3)) - (1-q^i)(1-ss q^(i+5))/(1-ss q^(2i+1)))
        & 1 + r1 r2/(ss q^4)
            - (1-q^(i+1))(1-ss q^(i+6))(r1-ss q^(i+1))(r2-ss q^(i+1))/(ss q^4(1-ss q^(2i+2))(1-ss q^(2i+3)))
            - (1-q^(i-3))(1-ss q^(i+2))(1-r1 q^(i+1))(1-r2 q^(i+1))/((1-ss q^(2i+2))(1-ss q^(2i+3)))
)";

const char *kAb = R"(
    (1-q^(i-3))(1-ss q^(i+2))(1-r1 q^(i+1))(1-r2 q^(i+1))/((1-ss q^(2i+2))(1-ss q^(2i+3)))
        & 0;
    (1-q^(i-3))(1-ss q^(i+2))/(1-ss q^(2i+3))
            ((1-r1 q^(i+1))(1-r2 q^(i+1))/(1-ss q^(2i+2)) - (1-r1 q^(i+2))(1-r2 q^(i+2))/(1-ss q^(2i+4)))
        & (1-q^(i-3))(1-ss q^(i+2))(1-r1 q^(i+2))(1-r2 q^(i+2))/((1-ss q^(2i+3))(1-ss q^(2i+4)))
)";

const char *kAc = R"(
    (1-q^i)(1-ss q^(i+5))(r1-ss q^i)(r2-ss q^i)/(ss q^4(1-ss q^(2i))(1-ss q^(2i+1)))
        & (1-q^i)(1-ss q^(i+5))/(ss q^4(1-ss q^(2i+1)))
            ((r1-ss q^(i+1))(r2-ss q^(i+1))/(1-ss q^(2i+2)) - (r1-ss q^i)(r2-ss q^i)/(1-ss q^(2i)));
    0
        & (1-q^i)(1-ss q^(i+5))(r1-ss q^(i+1))(r2-ss q^(i+1))/(ss q^4(1-ss q^(2i+1))(1-ss q^(2i+2)))
)";

const char *kX = "1/(q ssh) & q ssh & 1/(q^2 ssh) & q^2 ssh & 1/(q^3 ssh) & q^3 ssh & 1/(q^4 ssh) & q^4 ssh";
const char *kXinv = "q ssh & 1/(q ssh) & q^2 ssh & 1/(q^2 ssh) & q^3 ssh & 1/(q^3 ssh) & q^4 ssh & 1/(q^4 ssh)";
const char *kB = R"(1/(q ssh) + q ssh & 1/(q ssh) + q ssh & 1/(q^2 ssh) + q^2 ssh & 1/(q^2 ssh) + q^2 ssh
    & 1/(q^3 ssh) + q^3 ssh & 1/(q^3 ssh) + q^3 ssh & 1/(q^4 ssh) + q^4 ssh & 1/(q^4 ssh) + q^4 ssh;)";
// sqrt(s* q) = ssh qh.
const char *kBdag = R"(1/(ssh qh) + ssh qh & 1/(q ssh qh) + q ssh qh & 1/(q ssh qh) + q ssh qh
    & 1/(q^2 ssh qh) + q^2 ssh qh & 1/(q^2 ssh qh) + q^2 ssh qh & 1/(q^3 ssh qh) + q^3 ssh qh
    & 1/(q^3 ssh qh) + q^3 ssh qh & 1/(q^4 ssh qh) + q^4 ssh qh;)";

struct ClosedForm {
    const char *lhs;
    const char *rhs;
    int lo, hi;
};

// Symbol definitions specialized to d = 4, then the q-explicit forms printed
// beside the transition and operator displays.
const std::vector<ClosedForm> &closed_forms() {
    static const std::vector<ClosedForm> forms{
        {"e[i]", "(1-q^i)(1-ss q^(i+5))/(q^4(1-q^(i-4))(1-ss q^(i+1)))", 1, 3},
        {"x[i]", "q^(1-i)(1-q^(i-4))(1-ss q^(i+1))", 1, 3},
        {"t[i]", "ss(1-r1 q^(i+1))(1-r2 q^(i+1))/((r1-ss q^(i+1))(r2-ss q^(i+1)))", 0, 3},
        {"z[i]", "q^(-i)(r1-ss q^(i+1))(r2-ss q^(i+1))", 0, 3},
        {"ts[i]", "ts[0] + hs(1-q^i)(1-ss q^(i+1))q^(-i)", 0, 4},
        {"tts[i]", "tts[0] + ths(1-q^i)(1-ss q^(i+2))q^(-i)", 0, 3},

        {"x[i]e[i]", "q^(-i-3)(1-q^i)(1-ss q^(i+5))", 1, 3},
        {"e[i]/(e[i]-1)", "(1-q^i)(1-ss q^(i+5))/((1-q^4)(1-ss q^(2i+1)))", 1, 3},
        {"1/(1-e[i])", "q^4(1-q^(i-4))(1-ss q^(i+1))/((q^4-1)(1-ss q^(2i+1)))", 1, 3},
        {"1/(x[i](1-e[i]))", "q^(3+i)/((q^4-1)(1-ss q^(2i+1)))", 1, 3},
        {"1/(x[i](e[i]-1))", "q^(3+i)/((1-q^4)(1-ss q^(2i+1)))", 1, 3},
        {"z[i]t[i]", "q^(-i)ss(1-r1 q^(i+1))(1-r2 q^(i+1))", 0, 3},
        {"1/(1-t[i])", "(r1-ss q^(i+1))(r2-ss q^(i+1))/((r1 r2-ss)(1-ss q^(2i+2)))", 0, 3},
        {"t[i]/(t[i]-1)", "ss(1-r1 q^(i+1))(1-r2 q^(i+1))/((ss-r1 r2)(1-ss q^(2i+2)))", 0, 3},
        {"1/(z[i](t[i]-1))", "q^i/((ss-r1 r2)(1-ss q^(2i+2)))", 0, 3},
        {"1/(z[i](1-t[i]))", "q^i/((r1 r2-ss)(1-ss q^(2i+2)))", 0, 3},

        {"e[i]z[i-1]/(e[i]-1)",
         "q^(-i+1)(1-q^i)(1-ss q^(i+5))(r1-ss q^i)(r2-ss q^i)/((1-q^4)(1-ss q^(2i+1)))", 1, 3},
        {"z[i-1]/(x[i](1-e[i]))", "q^4(r1-ss q^i)(r2-ss q^i)/((q^4-1)(1-ss q^(2i+1)))", 1, 3},
        {"z[i]t[i]/(1-e[i])",
         "ss q^(4-i)(1-q^(i-4))(1-ss q^(i+1))(1-r1 q^(i+1))(1-r2 q^(i+1))/((q^4-1)(1-ss q^(2i+1)))", 1, 3},
        {"z[i]t[i]/(x[i](e[i]-1))", "ss q^3(1-r1 q^(i+1))(1-r2 q^(i+1))/((1-q^4)(1-ss q^(2i+1)))", 1, 3},
        {"x[i]e[i]/(1-t[i])",
         "q^(-i-3)(1-q^i)(1-ss q^(i+5))(r1-ss q^(i+1))(r2-ss q^(i+1))/((1-ss q^(2i+2))(r1 r2-ss))", 1, 3},
        {"x[i]e[i]/(z[i](t[i]-1))", "q^(-3)(1-q^i)(1-ss q^(i+5))/((1-ss q^(2i+2))(ss-r1 r2))", 1, 3},
        {"t[i]x[i+1]/(t[i]-1)",
         "ss q^(-i)(1-q^(i-3))(1-ss q^(i+2))(1-r1 q^(i+1))(1-r2 q^(i+1))/((1-ss q^(2i+2))(ss-r1 r2))", 0, 2},
        {"x[i+1]/(z[i](1-t[i]))", "(1-q^(i-3))(1-ss q^(i+2))/((1-ss q^(2i+2))(r1 r2-ss))", 0, 2},

        {"(ts[i]-t[i]ts[i+1])/(1-t[i])",
         "ts[i] + hs ss q^(-i-1)(1-q)(1-r1 q^(i+1))(1-r2 q^(i+1))/(ss-r1 r2)", 0, 3},
        {"z[i]t[i](ts[i]-ts[i+1])/(1-t[i])",
         "hs ss q^(-2i-1)(1-q)(r1-ss q^(i+1))(r2-ss q^(i+1))(1-r1 q^(i+1))(1-r2 q^(i+1))/(ss-r1 r2)", 0, 3},
        {"(ts[i]-ts[i+1])/(z[i](t[i]-1))", "hs q^(-1)(1-q)/(r1 r2-ss)", 0, 3},
        {"(t[i]ts[i]-ts[i+1])/(t[i]-1)",
         "ts[i+1] + hs ss q^(-i-1)(1-q)(1-r1 q^(i+1))(1-r2 q^(i+1))/(r1 r2-ss)", 0, 3},

        {"(e[i]tts[i-1]-tts[i])/(e[i]-1)", "tts[i-1] + ths(1-q)(1-q^(4-i))(1-ss q^(i+1))/(1-q^4)", 1, 3},
        {"e[i]x[i](tts[i-1]-tts[i])/(e[i]-1)",
         "ths q^(1-2i)(1-q)(1-q^i)(1-q^(i-4))(1-ss q^(i+1))(1-ss q^(i+5))/(q^4-1)", 1, 3},
        {"(tts[i-1]-tts[i])/(x[i](1-e[i]))", "ths q^3(1-q)/(1-q^4)", 1, 3},
        {"(tts[i-1]-e[i]tts[i])/(1-e[i])", "tts[i] + ths(q-1)(1-q^(4-i))(1-ss q^(i+1))/(1-q^4)", 1, 3},
    };
    return forms;
}

CMatrix block_at(const char *text, ExprEnv &env, int i) {
    env.set("i", i);
    return evaluate_matrix(text, env);
}

CMatrix scaled(const char *factor, const ExprEnv &env, const CMatrix &m) { return evaluate(factor, env) * m; }

CMatrix t_matrix(int n, ExprEnv &env, std::vector<std::pair<std::string, CMatrix>> &blocks) {
    CMatrix m(kN, kN);
    auto put = [&](int i, std::size_t at, CMatrix b) {
        blocks.emplace_back("t" + std::to_string(n) + "(" + std::to_string(i) + ")", b);
        m.set_block(at, at, b);
    };
    if (n == 0 || n == 3) {
        for (int i = 0; i < kD; ++i) put(i, 2 * i, block_at(n == 0 ? kT0 : kT3, env, i));
        return m;
    }
    put(0, 0, evaluate_matrix(n == 1 ? kT1End : kT2First, env));
    for (int i = 1; i < kD; ++i) put(i, 2 * i - 1, block_at(n == 1 ? kT1 : kT2, env, i));
    put(kD, kN - 1, evaluate_matrix(n == 1 ? kT1End : kT2Last, env));
    return m;
}

CMatrix y_matrix(ExprEnv &env) {
    CMatrix m(kN, kN);
    m.set_block(0, 0, evaluate_matrix(kYa0, env));
    for (int i = 1; i < kD; ++i) m.set_block(2 * i, 2 * i - 1, block_at(kYa, env, i));
    for (int i = 0; i < kD - 1; ++i) m.set_block(2 * i, 2 * i + 1, block_at(kYb, env, i));
    m.set_block(kN - 2, kN - 1, evaluate_matrix(kYb3, env));
    return scaled(kBoldFactor, env, m);
}

CMatrix y_inverse_matrix(ExprEnv &env) {
    CMatrix m(kN, kN);
    m.set_block(0, 0, evaluate_matrix(kYinvA0, env));
    for (int i = 1; i < kD; ++i) {
        m.set_block(2 * i - 1, 2 * i - 2, block_at(kYinvC, env, i));
        m.set_block(2 * i - 1, 2 * i, block_at(kYinvA, env, i));
    }
    m.set_block(kN - 1, kN - 2, evaluate_matrix(kYinvC4, env));
    return scaled(kBoldFactor, env, m);
}

CMatrix a_bold_matrix(ExprEnv &env) {
    CMatrix m(kN, kN);
    for (int i = 0; i < kD; ++i) m.set_block(2 * i, 2 * i, block_at(kAa, env, i));
    for (int i = 0; i < kD - 1; ++i) m.set_block(2 * i, 2 * i + 2, block_at(kAb, env, i));
    for (int i = 1; i < kD; ++i) m.set_block(2 * i, 2 * i - 2, block_at(kAc, env, i));
    return scaled(kBoldFactor, env, m);
}

CMatrix diagonal_display(const char *text, const ExprEnv &env) {
    const CMatrix row = evaluate_matrix(text, env);
    if (row.rows() != 1) throw ExprError("diagonal display must be one row");
    std::vector<CScalar> d(row.cols());
    for (std::size_t j = 0; j < row.cols(); ++j) d[j] = row(0, j);
    return CMatrix::diagonal(d);
}

CMatrix normalized(const CMatrix &t, CScalar k) {
    const CScalar kinv = 1.0 / k;
    return (1.0 / (k - kinv)) * (t - kinv * CMatrix::identity(t.rows()));
}

BasisId basis(const char *s) {
    const auto b = parse_basis(s);
    if (!b) throw ExprError(std::string("unknown basis ") + s);
    return *b;
}

}  // namespace

bool AppendixReport::ok() const {
    for (const auto &m : matrices)
        if (!m.cmp.ok) return false;
    for (const auto &c : closed_forms)
        if (!c.cmp.ok) return false;
    return !matrices.empty();
}

ExprEnv appendix_env(const ModuleInputs &in) {
    const QRacahParams &p = in.p;
    const CliqueScalars &cs = in.cs;
    ExprEnv env;
    env.set("q", p.q);
    env.set("s", p.s);
    env.set("ss", p.sstar);
    env.set("r1", p.r1);
    env.set("r2", p.r2);
    env.set("qh", p.q_half);
    env.set("sh", p.s_half);
    env.set("ssh", p.sstar_half);
    env.set("r1h", p.r1_half);
    env.set("r2h", p.r2_half);
    env.set("h", in.h);
    env.set("hs", in.hstar);
    env.set("ths", cs.tilde_h_star);
    env.set_sequence("e", 1, cs.eps);
    env.set_sequence("x", 1, cs.xi);
    env.set_sequence("t", 0, cs.tau);
    env.set_sequence("z", 0, cs.zeta);
    env.set_sequence("ts", 0, in.pa.theta_star);
    env.set_sequence("tts", 0, cs.tilde_theta_star);
    env.set_sequence("a", 0, in.abc.a);
    env.set_sequence("b", 0, in.abc.b);
    env.set_sequence("c", 0, in.abc.c);
    env.set_sequence("ta", 0, cs.tilde_a);
    env.set_sequence("tb", 0, cs.tilde_b);
    env.set_sequence("tc", 0, cs.tilde_c);
    env.set_sequence("ap", 0, in.perp.a);
    env.set_sequence("bp", 0, in.perp.b);
    env.set_sequence("cp", 0, in.perp.c);
    env.set_sequence("tap", 0, in.tilde_perp.a);
    env.set_sequence("tbp", 0, in.tilde_perp.b);
    env.set_sequence("tcp", 0, in.tilde_perp.c);
    return env;
}

AppendixReport reproduce_appendix_d4(const QRacahParams &p, Tolerance tol) {
    if (p.d != kD) throw DimensionError("the d = 4 displays need d = 4, got " + std::to_string(p.d));
    const ModuleInputs in = derive_inputs(p);
    const ModuleRep mod = build_module(in);
    const DahaRep rep = assemble(p);
    ExprEnv env = appendix_env(in);

    AppendixReport out;
    auto add = [&](std::string name, CMatrix shown, const CMatrix &general) {
        const Comparison cmp = approx_eq(shown, general, tol);
        out.matrices.push_back({std::move(name), std::move(shown), general, cmp});
    };

    for (const Display &t : appendix_tables::part_one()) {
        const CMatrix shown = t.diagonal ? diagonal_display(t.cells, env) : evaluate_matrix(t.cells, env);
        switch (t.kind) {
        case Kind::Transition:
            add(std::string("trans ") + t.a + "->" + t.b, shown, mod.T(basis(t.a), basis(t.b)));
            break;
        case Kind::Operator: {
            const auto op = parse_operator(t.a);
            if (!op) throw ExprError(std::string("unknown operator ") + t.a);
            add(std::string(t.a) + " in " + t.b, shown, mod.M(*op, basis(t.b)));
            break;
        }
        case Kind::Normalized: {
            const int n = std::string(t.a) == "t0norm" ? 0 : 1;
            add("t" + std::to_string(n) + " normalized", shown, normalized(rep.T[n], rep.k[n]));
            break;
        }
        }
    }

    for (int n = 0; n < 4; ++n) {
        std::vector<std::pair<std::string, CMatrix>> blocks;
        const CMatrix t = t_matrix(n, env, blocks);
        for (auto &[name, b] : blocks) {
            const int i = std::stoi(name.substr(3));
            add(name, b, t_block(p, n, i));
        }
        add("t" + std::to_string(n), t, rep.T[n]);
    }
    add("X", diagonal_display(kX, env), rep.X);
    add("Xinv", diagonal_display(kXinv, env), rep.Xinv);
    add("Y", y_matrix(env), rep.Y);
    add("Yinv", y_inverse_matrix(env), rep.Yinv);
    add("A-bold", a_bold_matrix(env), rep.Abold);
    add("B-bold", diagonal_display(kB, env), rep.Bbold);
    add("B-dagger", diagonal_display(kBdag, env), rep.Bdag);

    for (const ClosedForm &f : closed_forms()) {
        for (int i = f.lo; i <= f.hi; ++i) {
            env.set("i", i);
            out.closed_forms.push_back({std::string(f.lhs) + " at i=" + std::to_string(i),
                                        approx_eq(evaluate(f.lhs, env), evaluate(f.rhs, env), tol)});
        }
    }
    return out;
}

}  // namespace ldaha
