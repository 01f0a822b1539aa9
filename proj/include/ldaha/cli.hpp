#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "ldaha/module_w.hpp"

namespace ldaha {

enum class Command { Validate, Emit, Verify, Sweep, AppendixD4 };
enum class Format { Json, Csv };

struct RunConfig {
    Command command = Command::Verify;
    std::optional<std::string> params_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> d;
    int n = 100;                 // sweep sample count
    std::optional<double> tol;   // relative tolerance; LDAHA_TOL, then 1e-9, when unset
    std::optional<Format> format;
    std::optional<std::string> out_path;
    std::optional<OperatorId> op;
    std::optional<BasisId> basis, from, to;
    unsigned threads = 0;        // sweep workers; 0 picks the hardware count
};

// --tol, else LDAHA_TOL, else 1e-9. Throws std::invalid_argument on an
// unparsable or non-positive LDAHA_TOL.
double resolve_tolerance(const RunConfig &cfg);

// The parameter set a command works on: --params if given; otherwise
// sample(seed or 0, d or 4) when --seed or --d is present; otherwise the desk
// point. appendix-d4 forces d = 4 for sampled points.
QRacahParams resolve_params(const RunConfig &cfg);

// Exit status: 0 when everything checked passes, 1 when a check fails, 2 on
// usage, file or parse errors. Primary output goes to `out` or to --out.
int run(const RunConfig &cfg, std::ostream &out, std::ostream &err);

// Parses argv (subcommand first) and calls run().
int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace ldaha
