#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldaha/numerics.hpp"

namespace ldaha {

class ExprError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Symbols for evaluate(): plain scalars by name and integer-indexed sequences
// whose first element sits at index `lo`.
struct ExprEnv {
    struct Sequence {
        int lo = 0;
        std::vector<CScalar> v;
    };
    std::map<std::string, CScalar> scalars;
    std::map<std::string, Sequence> sequences;

    void set(const std::string &name, CScalar x) { scalars[name] = x; }
    void set_sequence(const std::string &name, int lo, std::vector<CScalar> v) { sequences[name] = {lo, std::move(v)}; }
};

// Arithmetic over complex scalars:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/' | juxtaposition) unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?        exponent must be an integer
//   primary := number | name | name '[' expr ']' | '(' expr ')'
// Names are [A-Za-z][A-Za-z0-9]*, so "ss q" is two factors and "ssq" one name.
// Juxtaposed factors multiply with the same precedence as '*', left to right:
// "(a)/(b)(c)" is (a/b)*c. Throws ExprError on syntax errors, unknown names,
// indices outside a sequence, and non-integer exponents.
CScalar evaluate(const std::string &text, const ExprEnv &env);

// Cells separated by '&'. Rows end at ';' when the text contains one, so a
// row may span lines; otherwise at each newline. Blank rows are skipped.
CMatrix evaluate_matrix(const std::string &text, const ExprEnv &env);

}  // namespace ldaha
