#include "ldaha/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace ldaha {

namespace {

class Parser {
  public:
    Parser(const std::string &text, const ExprEnv &env) : s_(text), env_(env) {}

    CScalar run() {
        const CScalar v = expr();
        skip_space();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

  private:
    const std::string &s_;
    const ExprEnv &env_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &what) const {
        throw ExprError(what + " at " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool starts_primary() {
        const char c = peek();
        return c == '(' || c == '.' || std::isalnum(static_cast<unsigned char>(c));
    }

    CScalar expr() {
        CScalar v = term();
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                v += term();
            } else if (c == '-') {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    CScalar term() {
        CScalar v = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                v *= unary();
            } else if (c == '/') {
                ++pos_;
                const CScalar d = unary();
                if (d == CScalar(0.0)) fail("division by zero");
                v /= d;
            } else if (starts_primary()) {
                v *= power();
            } else {
                return v;
            }
        }
    }

    CScalar unary() {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    CScalar power() {
        const CScalar base = primary();
        if (peek() != '^') return base;
        ++pos_;
        return ipow(base, as_int(unary(), "exponent"));
    }

    int as_int(CScalar x, const char *what) {
        const double r = std::round(x.real());
        if (x.imag() != 0.0 || std::abs(x.real() - r) > 1e-12) fail(std::string(what) + " is not an integer");
        return static_cast<int>(r);
    }

    CScalar primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            const CScalar v = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char *begin = s_.c_str() + pos_;
            char *end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin) fail("bad number");
            pos_ += static_cast<std::size_t>(end - begin);
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            if (pos_ < s_.size() && s_[pos_] == '[') {
                ++pos_;
                const int idx = as_int(expr(), "index");
                if (peek() != ']') fail("expected ']'");
                ++pos_;
                const auto it = env_.sequences.find(name);
                if (it == env_.sequences.end()) fail("unknown sequence " + name);
                const int k = idx - it->second.lo;
                if (k < 0 || k >= static_cast<int>(it->second.v.size()))
                    fail("index " + std::to_string(idx) + " outside " + name);
                return it->second.v[static_cast<std::size_t>(k)];
            }
            const auto it = env_.scalars.find(name);
            if (it == env_.scalars.end()) fail("unknown name " + name);
            return it->second;
        }
        fail(c == '\0' ? "unexpected end" : "unexpected '" + std::string(1, c) + "'");
    }
};

std::vector<std::string> split(const std::string &s, const std::string &seps) {
    std::vector<std::string> out(1);
    for (char c : s) {
        if (seps.find(c) != std::string::npos)
            out.emplace_back();
        else
            out.back() += c;
    }
    return out;
}

bool blank(const std::string &s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

CScalar evaluate(const std::string &text, const ExprEnv &env) { return Parser(text, env).run(); }

CMatrix evaluate_matrix(const std::string &text, const ExprEnv &env) {
    std::vector<std::vector<CScalar>> rows;
    for (const auto &line : split(text, text.find(';') != std::string::npos ? ";" : "\n")) {
        if (blank(line)) continue;
        std::vector<CScalar> row;
        for (const auto &cell : split(line, "&")) row.push_back(evaluate(cell, env));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ExprError("ragged matrix: row " + std::to_string(rows.size()) + " has " +
                            std::to_string(row.size()) + " cells");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ExprError("empty matrix");
    CMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace ldaha
