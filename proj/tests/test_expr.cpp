#include <gtest/gtest.h>

#include "ldaha/expr.hpp"

using namespace ldaha;

namespace {

ExprEnv env() {
    ExprEnv e;
    e.set("q", 0.5);
    e.set("ss", 3.0);
    e.set("i", 2.0);
    e.set("z", CScalar(0.0, 1.0));
    e.set_sequence("t", 0, {10.0, 20.0, 30.0});
    e.set_sequence("e", 1, {-1.0, -2.0});
    return e;
}

double val(const std::string &s) { return evaluate(s, env()).real(); }

}  // namespace

TEST(Expr, Precedence) {
    EXPECT_DOUBLE_EQ(val("1+2*3"), 7.0);
    EXPECT_DOUBLE_EQ(val("(1+2)*3"), 9.0);
    EXPECT_DOUBLE_EQ(val("8/4/2"), 1.0);
    EXPECT_DOUBLE_EQ(val("2-3-4"), -5.0);
    EXPECT_DOUBLE_EQ(val("-2^2"), -4.0);
    EXPECT_DOUBLE_EQ(val("2^-2"), 0.25);
}

TEST(Expr, Juxtaposition) {
    EXPECT_DOUBLE_EQ(val("2q"), 1.0);
    EXPECT_DOUBLE_EQ(val("ss q^2"), 0.75);
    EXPECT_DOUBLE_EQ(val("(1)/(2)(4)"), 2.0);
    EXPECT_DOUBLE_EQ(val("1/(ss q) (2)"), 4.0 / 3.0);
    EXPECT_DOUBLE_EQ(val("q^(2i+1)"), 1.0 / 32.0);
    EXPECT_DOUBLE_EQ(val("-t[0]t[1]"), -200.0);
}

TEST(Expr, Sequences) {
    EXPECT_DOUBLE_EQ(val("t[i]"), 30.0);
    EXPECT_DOUBLE_EQ(val("e[1]/(e[1]-1)"), 0.5);
    EXPECT_DOUBLE_EQ(val("t[i-1]e[i]"), -40.0);
    EXPECT_THROW(val("e[0]"), ExprError);
    EXPECT_THROW(val("t[3]"), ExprError);
}

TEST(Expr, Complex) {
    const CScalar v = evaluate("z^2 + 2z", env());
    EXPECT_DOUBLE_EQ(v.real(), -1.0);
    EXPECT_DOUBLE_EQ(v.imag(), 2.0);
}

TEST(Expr, Errors) {
    EXPECT_THROW(val("ssq"), ExprError);
    EXPECT_THROW(val("(1+2"), ExprError);
    EXPECT_THROW(val("1+"), ExprError);
    EXPECT_THROW(val("q^q"), ExprError);
    EXPECT_THROW(val("1/(q-q)"), ExprError);
    EXPECT_THROW(val("2 ) 3"), ExprError);
}

TEST(Expr, Matrix) {
    // Without ';' every newline ends a row.
    const CMatrix m = evaluate_matrix("1 & q\n\n t[2] & -1\n", env());
    ASSERT_EQ(m.rows(), 2u);
    ASSERT_EQ(m.cols(), 2u);
    EXPECT_DOUBLE_EQ(m(0, 1).real(), 0.5);
    EXPECT_DOUBLE_EQ(m(1, 0).real(), 30.0);
    // With ';' only ';' ends a row, so a row may span lines.
    const CMatrix w = evaluate_matrix("1 &\n q;\n t[2]\n & -1;", env());
    ASSERT_EQ(w.rows(), 2u);
    ASSERT_EQ(w.cols(), 2u);
    EXPECT_EQ(w.entries(), m.entries());
    EXPECT_THROW(evaluate_matrix("1 & 2; 3", env()), ExprError);
    EXPECT_THROW(evaluate_matrix(" ; ", env()), ExprError);
}
