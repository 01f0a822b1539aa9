#pragma once

#include <string>
#include <vector>

#include "ldaha/daha.hpp"
#include "ldaha/expr.hpp"
#include "ldaha/module_w.hpp"

namespace ldaha {

// One displayed d = 4 matrix, evaluated from its transcription, next to the
// matrix the general-d construction produces for the same object.
struct AppendixMatrix {
    std::string name;  // "trans C->Balt", "A in C", "t0", "t1(0)", "Y", "t0 normalized", ...
    CMatrix displayed;
    CMatrix general;
    Comparison cmp;
};

struct AppendixReport {
    std::vector<AppendixMatrix> matrices;
    // Each named entry expression against the q-explicit form printed beside it,
    // and the symbol definitions (epsilon_i, xi_i, tau_i, zeta_i, theta*_i,
    // tilde theta*_i) against the values the library derives.
    std::vector<Check> closed_forms;

    bool ok() const;
};

// Symbols the transcriptions refer to, taken from the general-d inputs:
// q, s, ss = s*, r1, r2, h, hs = h*, ths = tilde h*, the fixed square roots
// qh, sh, ssh, r1h, r2h, and the sequences e, x (from 1), t, z, ts, tts,
// a, b, c, ta, tb, tc, ap, bp, cp, tap, tbp, tcp (from 0).
ExprEnv appendix_env(const ModuleInputs &in);

// Requires p.d == 4 (DimensionError otherwise). Evaluates all 20 transition
// matrices, the 25 operator representations, every t_n(i) block, T_0..T_3,
// X^{+-1}, Y^{+-1}, A-bold, B, B-dagger and both normalized generators.
AppendixReport reproduce_appendix_d4(const QRacahParams &p, Tolerance tol = {});

}  // namespace ldaha
