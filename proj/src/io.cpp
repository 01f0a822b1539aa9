#include "ldaha/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ldaha {

using json = nlohmann::ordered_json;

namespace {

json vec_to_json(const std::vector<CScalar> &v) {
    json out = json::array();
    for (CScalar x : v) out.push_back(scalar_to_json(x));
    return out;
}

std::vector<CScalar> vec_from_json(const json &j, const char *what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<CScalar> out;
    for (const auto &x : j) out.push_back(scalar_from_json(x));
    return out;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_double(const std::string &s, std::size_t &pos, const std::string &cell) {
    const char *begin = s.c_str() + pos;
    char *end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("bad CSV cell \"" + cell + "\"");
    pos += static_cast<std::size_t>(end - begin);
    return v;
}

CScalar parse_cell(const std::string &cell) {
    std::size_t pos = 0;
    const double re = parse_double(cell, pos, cell);
    if (pos == cell.size()) return re;
    // Imaginary part keeps its sign, so strtod reads "+x" and "-x" alike.
    const double im = parse_double(cell, pos, cell);
    if (pos + 1 != cell.size() || cell[pos] != 'i') throw ParseError("bad CSV cell \"" + cell + "\"");
    return {re, im};
}

}  // namespace

json scalar_to_json(CScalar x) { return json::array({x.real(), x.imag()}); }

CScalar scalar_from_json(const json &j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw ParseError("expected a number or [re, im], got " + j.dump());
}

json params_to_json(const QRacahParams &p) {
    return {{"d", p.d},
            {"q", scalar_to_json(p.q)},
            {"s", scalar_to_json(p.s)},
            {"sstar", scalar_to_json(p.sstar)},
            {"r1", scalar_to_json(p.r1)},
            {"theta0", scalar_to_json(p.theta0)},
            {"theta0star", scalar_to_json(p.theta0star)}};
}

QRacahParams params_from_json(const json &j) {
    if (!j.is_object()) throw ParseError("parameter file must hold a JSON object");
    for (const char *key : {"d", "q", "s", "sstar", "r1"})
        if (!j.contains(key)) throw ParseError(std::string("missing parameter \"") + key + "\"");
    if (!j["d"].is_number_integer()) throw ParseError("\"d\" must be an integer");
    const int d = j["d"].get<int>();
    if (d < 3) throw ParseError("\"d\" must be at least 3");
    auto opt = [&](const char *key) { return j.contains(key) ? scalar_from_json(j[key]) : CScalar(0.0); };
    return make_params(d, scalar_from_json(j["q"]), scalar_from_json(j["s"]), scalar_from_json(j["sstar"]),
                       scalar_from_json(j["r1"]), opt("theta0"), opt("theta0star"));
}

QRacahParams load_params(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError(path + ": " + e.what());
    }
    return params_from_json(j);
}

json matrix_to_json(const CMatrix &m) {
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", vec_to_json(m.entries())}};
}

CMatrix matrix_from_json(const json &j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix needs rows, cols and entries");
    const auto r = j["rows"].get<std::size_t>(), c = j["cols"].get<std::size_t>();
    std::vector<CScalar> e = vec_from_json(j["entries"], "entries");
    if (e.size() != r * c) throw ParseError("entries do not match rows * cols");
    return CMatrix(r, c, std::move(e));
}

std::string matrix_to_csv(const CMatrix &m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            const CScalar x = m(i, j);
            out += format_double(x.real());
            if (!std::signbit(x.imag())) out += '+';
            out += format_double(x.imag()) + 'i';
        }
        out += '\n';
    }
    return out;
}

CMatrix matrix_from_csv(const std::string &text) {
    std::vector<CScalar> entries;
    std::size_t rows = 0, cols = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::size_t n = 0;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            entries.push_back(parse_cell(cell));
            ++n;
        }
        if (rows && n != cols) throw ParseError("ragged CSV at row " + std::to_string(rows));
        cols = n;
        ++rows;
    }
    return CMatrix(rows, cols, std::move(entries));
}

json parameter_array_to_json(const ParameterArray &pa) {
    return {{"diam", pa.diam},
            {"theta", vec_to_json(pa.theta)},
            {"theta_star", vec_to_json(pa.theta_star)},
            {"varphi", vec_to_json(pa.varphi)},
            {"phi", vec_to_json(pa.phi)}};
}

ParameterArray parameter_array_from_json(const json &j) {
    ParameterArray pa;
    pa.diam = j.at("diam").get<int>();
    pa.theta = vec_from_json(j.at("theta"), "theta");
    pa.theta_star = vec_from_json(j.at("theta_star"), "theta_star");
    pa.varphi = vec_from_json(j.at("varphi"), "varphi");
    pa.phi = vec_from_json(j.at("phi"), "phi");
    const auto n = static_cast<std::size_t>(pa.diam);
    if (pa.theta.size() != n + 1 || pa.theta_star.size() != n + 1 || pa.varphi.size() != n || pa.phi.size() != n)
        throw ParseError("parameter array lengths do not match diam");
    return pa;
}

json clique_scalars_to_json(const CliqueScalars &cs) {
    return {{"d", cs.d},
            {"h", scalar_to_json(cs.h)},
            {"k", scalar_to_json(cs.k)},
            {"theta_d_graph", scalar_to_json(cs.theta_d_graph)},
            {"N", vec_to_json(cs.N)},
            {"Csize", scalar_to_json(cs.Csize)},
            {"tilde_a", vec_to_json(cs.tilde_a)},
            {"tilde_b", vec_to_json(cs.tilde_b)},
            {"tilde_c", vec_to_json(cs.tilde_c)},
            {"tilde_theta_star", vec_to_json(cs.tilde_theta_star)},
            {"tilde_h_star", scalar_to_json(cs.tilde_h_star)},
            {"eps", vec_to_json(cs.eps)},
            {"xi", vec_to_json(cs.xi)},
            {"tau", vec_to_json(cs.tau)},
            {"zeta", vec_to_json(cs.zeta)},
            {"one_minus_eps", vec_to_json(cs.one_minus_eps)},
            {"one_minus_tau", vec_to_json(cs.one_minus_tau)},
            {"card_minus", vec_to_json(cs.card_minus)},
            {"card_plus", vec_to_json(cs.card_plus)}};
}

json validation_report_to_json(const ValidationReport &r) {
    json checks = json::array();
    for (const auto &c : r.checks)
        checks.push_back({{"name", c.name}, {"value", scalar_to_json(c.value)}, {"distance", c.distance}, {"ok", c.ok}});
    return {{"passed", r.passed}, {"checks", checks}};
}

}  // namespace ldaha
