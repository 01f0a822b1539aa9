#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ldaha/clique.hpp"
#include "ldaha/leonard.hpp"
#include "ldaha/numerics.hpp"
#include "ldaha/qracah_params.hpp"

namespace ldaha {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Complex scalars are written as [re, im]. Reading also accepts a bare number.
nlohmann::ordered_json scalar_to_json(CScalar x);
CScalar scalar_from_json(const nlohmann::ordered_json &j);

// {"d", "q", "s", "sstar", "r1", "theta0", "theta0star"}; theta0 and theta0star
// default to 0. r2 and every square root are derived, so any "r2" key is ignored.
nlohmann::ordered_json params_to_json(const QRacahParams &p);
QRacahParams params_from_json(const nlohmann::ordered_json &j);
QRacahParams load_params(const std::string &path);

// {"rows": r, "cols": c, "entries": [[re, im], ...]} in row-major order.
nlohmann::ordered_json matrix_to_json(const CMatrix &m);
CMatrix matrix_from_json(const nlohmann::ordered_json &j);

// One line per row, cells "re+imi" (or "re-imi") with 17 significant digits,
// which round-trips every double.
std::string matrix_to_csv(const CMatrix &m);
CMatrix matrix_from_csv(const std::string &text);

nlohmann::ordered_json parameter_array_to_json(const ParameterArray &pa);
ParameterArray parameter_array_from_json(const nlohmann::ordered_json &j);
nlohmann::ordered_json clique_scalars_to_json(const CliqueScalars &cs);
nlohmann::ordered_json validation_report_to_json(const ValidationReport &r);

}  // namespace ldaha
