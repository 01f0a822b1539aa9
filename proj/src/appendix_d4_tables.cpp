// Display tables for d = 4, one cell per entry in the expression language of
// ldaha/expr.hpp. Symbols: e[i] epsilon, x[i] xi, t[i] tau, z[i] zeta,
// ts[i] theta*, tts[i] tilde theta*, a/b/c, ta/tb/tc, ap/bp/cp, tap/tbp/tcp
// for the intersection numbers of Phi, tilde Phi, Phi-perp, tilde Phi-perp.
#include "appendix_d4_tables.hpp"

namespace ldaha::appendix_tables {

const std::vector<Display> &part_one() {
    static const std::vector<Display> tables{
        {Kind::Transition, "C", "Balt", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 1 & x[1] & 0 & 0 & 0 & 0 & 0
            0 & 1 & x[1]e[1] & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 1 & x[2] & 0 & 0 & 0
            0 & 0 & 0 & 1 & x[2]e[2] & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 1 & x[3] & 0
            0 & 0 & 0 & 0 & 0 & 1 & x[3]e[3] & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 1
        )"},
        {Kind::Transition, "Balt", "C", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & (e[1])/(e[1]-1) & (1)/(1-e[1]) & 0 & 0 & 0 & 0 & 0
            0 & (1)/(x[1](1-e[1])) & (1)/(x[1](e[1]-1)) & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & (e[2])/(e[2]-1) & (1)/(1-e[2]) & 0 & 0 & 0
            0 & 0 & 0 & (1)/(x[2](1-e[2])) & (1)/(x[2](e[2]-1)) & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & (e[3])/(e[3]-1) & (1)/(1-e[3]) & 0
            0 & 0 & 0 & 0 & 0 & (1)/(x[3](1-e[3])) & (1)/(x[3](e[3]-1)) & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 1
        )"},
        {Kind::Transition, "C", "BtildeAlt", false, R"(
            1 & z[0]t[0] & 0 & 0 & 0 & 0 & 0 & 0
            1 & z[0] & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 1 & z[1]t[1] & 0 & 0 & 0 & 0
            0 & 0 & 1 & z[1] & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 1 & z[2]t[2] & 0 & 0
            0 & 0 & 0 & 0 & 1 & z[2] & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 1 & z[3]t[3]
            0 & 0 & 0 & 0 & 0 & 0 & 1 & z[3]
        )"},
        {Kind::Transition, "BtildeAlt", "C", false, R"(
            (1)/(1-t[0]) & (t[0])/(t[0]-1) & 0 & 0 & 0 & 0 & 0 & 0
            (1)/(z[0](t[0]-1)) & (1)/(z[0](1-t[0])) & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & (1)/(1-t[1]) & (t[1])/(t[1]-1) & 0 & 0 & 0 & 0
            0 & 0 & (1)/(z[1](t[1]-1)) & (1)/(z[1](1-t[1])) & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & (1)/(1-t[2]) & (t[2])/(t[2]-1) & 0 & 0
            0 & 0 & 0 & 0 & (1)/(z[2](t[2]-1)) & (1)/(z[2](1-t[2])) & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & (1)/(1-t[3]) & (t[3])/(t[3]-1)
            0 & 0 & 0 & 0 & 0 & 0 & (1)/(z[3](t[3]-1)) & (1)/(z[3](1-t[3]))
        )"},
        {Kind::Transition, "Balt", "BtildeAlt", false, R"(
            1 & z[0]t[0] & 0 & 0 & 0 & 0 & 0 & 0
            (e[1])/(e[1]-1) & (e[1]z[0])/(e[1]-1) & (1)/(1-e[1]) & (z[1]t[1])/(1-e[1]) & 0 & 0 & 0 & 0
            (1)/(x[1](1-e[1])) & (z[0])/(x[1](1-e[1])) & (1)/(x[1](e[1]-1)) & (z[1]t[1])/(x[1](e[1]-1)) & 0 & 0 & 0 & 0
            0 & 0 & (e[2])/(e[2]-1) & (e[2]z[1])/(e[2]-1) & (1)/(1-e[2]) & (z[2]t[2])/(1-e[2]) & 0 & 0
            0 & 0 & (1)/(x[2](1-e[2])) & (z[1])/(x[2](1-e[2])) & (1)/(x[2](e[2]-1)) & (z[2]t[2])/(x[2](e[2]-1)) & 0 & 0
            0 & 0 & 0 & 0 & (e[3])/(e[3]-1) & (e[3]z[2])/(e[3]-1) & (1)/(1-e[3]) & (z[3]t[3])/(1-e[3])
            0 & 0 & 0 & 0 & (1)/(x[3](1-e[3])) & (z[2])/(x[3](1-e[3])) & (1)/(x[3](e[3]-1)) & (z[3]t[3])/(x[3](e[3]-1))
            0 & 0 & 0 & 0 & 0 & 0 & 1 & z[3]
        )"},
        {Kind::Transition, "BtildeAlt", "Balt", false, R"(
            (1)/(1-t[0]) & (t[0])/(t[0]-1) & (t[0]x[1])/(t[0]-1) & 0 & 0 & 0 & 0 & 0
            (1)/(z[0](t[0]-1)) & (1)/(z[0](1-t[0])) & (x[1])/(z[0](1-t[0])) & 0 & 0 & 0 & 0 & 0
            0 & (1)/(1-t[1]) & (x[1]e[1])/(1-t[1]) & (t[1])/(t[1]-1) & (t[1]x[2])/(t[1]-1) & 0 & 0 & 0
            0 & (1)/(z[1](t[1]-1)) & (x[1]e[1])/(z[1](t[1]-1)) & (1)/(z[1](1-t[1])) & (x[2])/(z[1](1-t[1])) & 0 & 0 & 0
            0 & 0 & 0 & (1)/(1-t[2]) & (x[2]e[2])/(1-t[2]) & (t[2])/(t[2]-1) & (t[2]x[3])/(t[2]-1) & 0
            0 & 0 & 0 & (1)/(z[2](t[2]-1)) & (x[2]e[2])/(z[2](t[2]-1)) & (1)/(z[2](1-t[2])) & (x[3])/(z[2](1-t[2])) & 0
            0 & 0 & 0 & 0 & 0 & (1)/(1-t[3]) & (x[3]e[3])/(1-t[3]) & (t[3])/(t[3]-1)
            0 & 0 & 0 & 0 & 0 & (1)/(z[3](t[3]-1)) & (x[3]e[3])/(z[3](t[3]-1)) & (1)/(z[3](1-t[3]))
        )"},
        {Kind::Transition, "B", "Balt", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 1 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 1 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 1 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 1
            0 & 0 & 1 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 1 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 1 & 0
        )"},
        {Kind::Transition, "Balt", "B", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 1 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 1 & 0 & 0
            0 & 0 & 1 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 1 & 0
            0 & 0 & 0 & 1 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 1
            0 & 0 & 0 & 0 & 1 & 0 & 0 & 0
        )"},
        {Kind::Transition, "Btilde", "BtildeAlt", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 1 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 1 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 1 & 0
            0 & 1 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 1 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 1 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 1
        )"},
        {Kind::Transition, "BtildeAlt", "Btilde", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 1 & 0 & 0 & 0
            0 & 1 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 1 & 0 & 0
            0 & 0 & 1 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 1 & 0
            0 & 0 & 0 & 1 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 1
        )"},
        {Kind::Transition, "C", "B", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 1 & 0 & 0 & 0 & x[1] & 0 & 0
            0 & 1 & 0 & 0 & 0 & x[1]e[1] & 0 & 0
            0 & 0 & 1 & 0 & 0 & 0 & x[2] & 0
            0 & 0 & 1 & 0 & 0 & 0 & x[2]e[2] & 0
            0 & 0 & 0 & 1 & 0 & 0 & 0 & x[3]
            0 & 0 & 0 & 1 & 0 & 0 & 0 & x[3]e[3]
            0 & 0 & 0 & 0 & 1 & 0 & 0 & 0
        )"},
        {Kind::Transition, "B", "C", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & (e[1])/(e[1]-1) & (1)/(1-e[1]) & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & (e[2])/(e[2]-1) & (1)/(1-e[2]) & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & (e[3])/(e[3]-1) & (1)/(1-e[3]) & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 1
            0 & (1)/(x[1](1-e[1])) & (1)/(x[1](e[1]-1)) & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & (1)/(x[2](1-e[2])) & (1)/(x[2](e[2]-1)) & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & (1)/(x[3](1-e[3])) & (1)/(x[3](e[3]-1)) & 0
        )"},
        {Kind::Transition, "C", "Btilde", false, R"(
            1 & 0 & 0 & 0 & z[0]t[0] & 0 & 0 & 0
            1 & 0 & 0 & 0 & z[0] & 0 & 0 & 0
            0 & 1 & 0 & 0 & 0 & z[1]t[1] & 0 & 0
            0 & 1 & 0 & 0 & 0 & z[1] & 0 & 0
            0 & 0 & 1 & 0 & 0 & 0 & z[2]t[2] & 0
            0 & 0 & 1 & 0 & 0 & 0 & z[2] & 0
            0 & 0 & 0 & 1 & 0 & 0 & 0 & z[3]t[3]
            0 & 0 & 0 & 1 & 0 & 0 & 0 & z[3]
        )"},
        {Kind::Transition, "Btilde", "C", false, R"(
            (1)/(1-t[0]) & (t[0])/(t[0]-1) & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & (1)/(1-t[1]) & (t[1])/(t[1]-1) & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & (1)/(1-t[2]) & (t[2])/(t[2]-1) & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & (1)/(1-t[3]) & (t[3])/(t[3]-1)
            (1)/(z[0](t[0]-1)) & (1)/(z[0](1-t[0])) & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & (1)/(z[1](t[1]-1)) & (1)/(z[1](1-t[1])) & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & (1)/(z[2](t[2]-1)) & (1)/(z[2](1-t[2])) & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & (1)/(z[3](t[3]-1)) & (1)/(z[3](1-t[3]))
        )"},
        {Kind::Transition, "B", "BtildeAlt", false, R"(
            1 & z[0]t[0] & 0 & 0 & 0 & 0 & 0 & 0
            (e[1])/(e[1]-1) & (e[1]z[0])/(e[1]-1) & (1)/(1-e[1]) & (z[1]t[1])/(1-e[1]) & 0 & 0 & 0 & 0
            0 & 0 & (e[2])/(e[2]-1) & (e[2]z[1])/(e[2]-1) & (1)/(1-e[2]) & (z[2]t[2])/(1-e[2]) & 0 & 0
            0 & 0 & 0 & 0 & (e[3])/(e[3]-1) & (e[3]z[2])/(e[3]-1) & (1)/(1-e[3]) & (z[3]t[3])/(1-e[3])
            0 & 0 & 0 & 0 & 0 & 0 & 1 & z[3]
            (1)/(x[1](1-e[1])) & (z[0])/(x[1](1-e[1])) & (1)/(x[1](e[1]-1)) & (z[1]t[1])/(x[1](e[1]-1)) & 0 & 0 & 0 & 0
            0 & 0 & (1)/(x[2](1-e[2])) & (z[1])/(x[2](1-e[2])) & (1)/(x[2](e[2]-1)) & (z[2]t[2])/(x[2](e[2]-1)) & 0 & 0
            0 & 0 & 0 & 0 & (1)/(x[3](1-e[3])) & (z[2])/(x[3](1-e[3])) & (1)/(x[3](e[3]-1)) & (z[3]t[3])/(x[3](e[3]-1))
        )"},
        {Kind::Transition, "BtildeAlt", "B", false, R"(
            (1)/(1-t[0]) & (t[0])/(t[0]-1) & 0 & 0 & 0 & (t[0]x[1])/(t[0]-1) & 0 & 0
            (1)/(z[0](t[0]-1)) & (1)/(z[0](1-t[0])) & 0 & 0 & 0 & (x[1])/(z[0](1-t[0])) & 0 & 0
            0 & (1)/(1-t[1]) & (t[1])/(t[1]-1) & 0 & 0 & (x[1]e[1])/(1-t[1]) & (t[1]x[2])/(t[1]-1) & 0
            0 & (1)/(z[1](t[1]-1)) & (1)/(z[1](1-t[1])) & 0 & 0 & (x[1]e[1])/(z[1](t[1]-1)) & (x[2])/(z[1](1-t[1])) & 0
            0 & 0 & (1)/(1-t[2]) & (t[2])/(t[2]-1) & 0 & 0 & (x[2]e[2])/(1-t[2]) & (t[2]x[3])/(t[2]-1)
            0 & 0 & (1)/(z[2](t[2]-1)) & (1)/(z[2](1-t[2])) & 0 & 0 & (x[2]e[2])/(z[2](t[2]-1)) & (x[3])/(z[2](1-t[2]))
            0 & 0 & 0 & (1)/(1-t[3]) & (t[3])/(t[3]-1) & 0 & 0 & (x[3]e[3])/(1-t[3])
            0 & 0 & 0 & (1)/(z[3](t[3]-1)) & (1)/(z[3](1-t[3])) & 0 & 0 & (x[3]e[3])/(z[3](t[3]-1))
        )"},
        {Kind::Transition, "Balt", "Btilde", false, R"(
            1 & 0 & 0 & 0 & z[0]t[0] & 0 & 0 & 0
            (e[1])/(e[1]-1) & (1)/(1-e[1]) & 0 & 0 & (e[1]z[0])/(e[1]-1) & (z[1]t[1])/(1-e[1]) & 0 & 0
            (1)/(x[1](1-e[1])) & (1)/(x[1](e[1]-1)) & 0 & 0 & (z[0])/(x[1](1-e[1])) & (z[1]t[1])/(x[1](e[1]-1)) & 0 & 0
            0 & (e[2])/(e[2]-1) & (1)/(1-e[2]) & 0 & 0 & (e[2]z[1])/(e[2]-1) & (z[2]t[2])/(1-e[2]) & 0
            0 & (1)/(x[2](1-e[2])) & (1)/(x[2](e[2]-1)) & 0 & 0 & (z[1])/(x[2](1-e[2])) & (z[2]t[2])/(x[2](e[2]-1)) & 0
            0 & 0 & (e[3])/(e[3]-1) & (1)/(1-e[3]) & 0 & 0 & (e[3]z[2])/(e[3]-1) & (z[3]t[3])/(1-e[3])
            0 & 0 & (1)/(x[3](1-e[3])) & (1)/(x[3](e[3]-1)) & 0 & 0 & (z[2])/(x[3](1-e[3])) & (z[3]t[3])/(x[3](e[3]-1))
            0 & 0 & 0 & 1 & 0 & 0 & 0 & z[3]
        )"},
        {Kind::Transition, "Btilde", "Balt", false, R"(
            (1)/(1-t[0]) & (t[0])/(t[0]-1) & (t[0]x[1])/(t[0]-1) & 0 & 0 & 0 & 0 & 0
            0 & (1)/(1-t[1]) & (x[1]e[1])/(1-t[1]) & (t[1])/(t[1]-1) & (t[1]x[2])/(t[1]-1) & 0 & 0 & 0
            0 & 0 & 0 & (1)/(1-t[2]) & (x[2]e[2])/(1-t[2]) & (t[2])/(t[2]-1) & (t[2]x[3])/(t[2]-1) & 0
            0 & 0 & 0 & 0 & 0 & (1)/(1-t[3]) & (x[3]e[3])/(1-t[3]) & (t[3])/(t[3]-1)
            (1)/(z[0](t[0]-1)) & (1)/(z[0](1-t[0])) & (x[1])/(z[0](1-t[0])) & 0 & 0 & 0 & 0 & 0
            0 & (1)/(z[1](t[1]-1)) & (x[1]e[1])/(z[1](t[1]-1)) & (1)/(z[1](1-t[1])) & (x[2])/(z[1](1-t[1])) & 0 & 0 & 0
            0 & 0 & 0 & (1)/(z[2](t[2]-1)) & (x[2]e[2])/(z[2](t[2]-1)) & (1)/(z[2](1-t[2])) & (x[3])/(z[2](1-t[2])) & 0
            0 & 0 & 0 & 0 & 0 & (1)/(z[3](t[3]-1)) & (x[3]e[3])/(z[3](t[3]-1)) & (1)/(z[3](1-t[3]))
        )"},
        {Kind::Transition, "B", "Btilde", false, R"(
            1 & 0 & 0 & 0 & z[0]t[0] & 0 & 0 & 0
            (e[1])/(e[1]-1) & (1)/(1-e[1]) & 0 & 0 & (e[1]z[0])/(e[1]-1) & (z[1]t[1])/(1-e[1]) & 0 & 0
            0 & (e[2])/(e[2]-1) & (1)/(1-e[2]) & 0 & 0 & (e[2]z[1])/(e[2]-1) & (z[2]t[2])/(1-e[2]) & 0
            0 & 0 & (e[3])/(e[3]-1) & (1)/(1-e[3]) & 0 & 0 & (e[3]z[2])/(e[3]-1) & (z[3]t[3])/(1-e[3])
            0 & 0 & 0 & 1 & 0 & 0 & 0 & z[3]
            (1)/(x[1](1-e[1])) & (1)/(x[1](e[1]-1)) & 0 & 0 & (z[0])/(x[1](1-e[1])) & (z[1]t[1])/(x[1](e[1]-1)) & 0 & 0
            0 & (1)/(x[2](1-e[2])) & (1)/(x[2](e[2]-1)) & 0 & 0 & (z[1])/(x[2](1-e[2])) & (z[2]t[2])/(x[2](e[2]-1)) & 0
            0 & 0 & (1)/(x[3](1-e[3])) & (1)/(x[3](e[3]-1)) & 0 & 0 & (z[2])/(x[3](1-e[3])) & (z[3]t[3])/(x[3](e[3]-1))
        )"},
        {Kind::Transition, "Btilde", "B", false, R"(
            (1)/(1-t[0]) & (t[0])/(t[0]-1) & 0 & 0 & 0 & (t[0]x[1])/(t[0]-1) & 0 & 0
            0 & (1)/(1-t[1]) & (t[1])/(t[1]-1) & 0 & 0 & (x[1]e[1])/(1-t[1]) & (t[1]x[2])/(t[1]-1) & 0
            0 & 0 & (1)/(1-t[2]) & (t[2])/(t[2]-1) & 0 & 0 & (x[2]e[2])/(1-t[2]) & (t[2]x[3])/(t[2]-1)
            0 & 0 & 0 & (1)/(1-t[3]) & (t[3])/(t[3]-1) & 0 & 0 & (x[3]e[3])/(1-t[3])
            (1)/(z[0](t[0]-1)) & (1)/(z[0](1-t[0])) & 0 & 0 & 0 & (x[1])/(z[0](1-t[0])) & 0 & 0
            0 & (1)/(z[1](t[1]-1)) & (1)/(z[1](1-t[1])) & 0 & 0 & (x[1]e[1])/(z[1](t[1]-1)) & (x[2])/(z[1](1-t[1])) & 0
            0 & 0 & (1)/(z[2](t[2]-1)) & (1)/(z[2](1-t[2])) & 0 & 0 & (x[2]e[2])/(z[2](t[2]-1)) & (x[3])/(z[2](1-t[2]))
            0 & 0 & 0 & (1)/(z[3](t[3]-1)) & (1)/(z[3](1-t[3])) & 0 & 0 & (x[3]e[3])/(z[3](t[3]-1))
        )"},
        {Kind::Operator, "A", "C", false, R"(
            ta[0]-b[0]+tb[0] & b[0]-tb[0] & tb[0] & 0 & 0 & 0 & 0 & 0
            c[1]-tc[0] & ta[0]-c[1]+tc[0] & tb[0]-b[1] & b[1] & 0 & 0 & 0 & 0
            c[1] & tc[1]-c[1] & ta[1]-b[1]+tb[1] & b[1]-tb[1] & tb[1] & 0 & 0 & 0
            0 & tc[1] & c[2]-tc[1] & ta[1]-c[2]+tc[1] & tb[1]-b[2] & b[2] & 0 & 0
            0 & 0 & c[2] & tc[2]-c[2] & ta[2]-b[2]+tb[2] & b[2]-tb[2] & tb[2] & 0
            0 & 0 & 0 & tc[2] & c[3]-tc[2] & ta[2]-c[3]+tc[2] & tb[2]-b[3] & b[3]
            0 & 0 & 0 & 0 & c[3] & tc[3]-c[3] & ta[3]-b[3]+tb[3] & b[3]-tb[3]
            0 & 0 & 0 & 0 & 0 & tc[3] & c[4]-tc[3] & ta[3]-c[4]+tc[3]
        )"},
        {Kind::Operator, "A", "B", false, R"(
            a[0] & b[0] & 0 & 0 & 0 & 0 & 0 & 0
            c[1] & a[1] & b[1] & 0 & 0 & 0 & 0 & 0
            0 & c[2] & a[2] & b[2] & 0 & 0 & 0 & 0
            0 & 0 & c[3] & a[3] & b[3] & 0 & 0 & 0
            0 & 0 & 0 & c[4] & a[4] & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & ap[0] & bp[0] & 0
            0 & 0 & 0 & 0 & 0 & cp[1] & ap[1] & bp[1]
            0 & 0 & 0 & 0 & 0 & 0 & cp[2] & ap[2]
        )"},
        {Kind::Operator, "A", "Balt", false, R"(
            a[0] & b[0] & 0 & 0 & 0 & 0 & 0 & 0
            c[1] & a[1] & 0 & b[1] & 0 & 0 & 0 & 0
            0 & 0 & ap[0] & 0 & bp[0] & 0 & 0 & 0
            0 & c[2] & 0 & a[2] & 0 & b[2] & 0 & 0
            0 & 0 & cp[1] & 0 & ap[1] & 0 & bp[1] & 0
            0 & 0 & 0 & c[3] & 0 & a[3] & 0 & b[3]
            0 & 0 & 0 & 0 & cp[2] & 0 & ap[2] & 0
            0 & 0 & 0 & 0 & 0 & c[4] & 0 & a[4]
        )"},
        {Kind::Operator, "A", "Btilde", false, R"(
            ta[0] & tb[0] & 0 & 0 & 0 & 0 & 0 & 0
            tc[1] & ta[1] & tb[1] & 0 & 0 & 0 & 0 & 0
            0 & tc[2] & ta[2] & tb[2] & 0 & 0 & 0 & 0
            0 & 0 & tc[3] & ta[3] & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & tap[0] & tbp[0] & 0 & 0
            0 & 0 & 0 & 0 & tcp[1] & tap[1] & tbp[1] & 0
            0 & 0 & 0 & 0 & 0 & tcp[2] & tap[2] & tbp[2]
            0 & 0 & 0 & 0 & 0 & 0 & tcp[3] & tap[3]
        )"},
        {Kind::Operator, "A", "BtildeAlt", false, R"(
            ta[0] & 0 & tb[0] & 0 & 0 & 0 & 0 & 0
            0 & tap[0] & 0 & tbp[0] & 0 & 0 & 0 & 0
            tc[1] & 0 & ta[1] & 0 & tb[1] & 0 & 0 & 0
            0 & tcp[1] & 0 & tap[1] & 0 & tbp[1] & 0 & 0
            0 & 0 & tc[2] & 0 & ta[2] & 0 & tb[2] & 0
            0 & 0 & 0 & tcp[2] & 0 & tap[2] & 0 & tbp[2]
            0 & 0 & 0 & 0 & tc[3] & 0 & ta[3] & 0
            0 & 0 & 0 & 0 & 0 & tcp[3] & 0 & tap[3]
        )"},
        {Kind::Operator, "Astar", "C", true, R"(
            ts[0] & ts[1] & ts[1] & ts[2] & ts[2] & ts[3] & ts[3] & ts[4]
        )"},
        {Kind::Operator, "Astar", "B", true, R"(
            ts[0] & ts[1] & ts[2] & ts[3] & ts[4] & ts[1] & ts[2] & ts[3]
        )"},
        {Kind::Operator, "Astar", "Balt", true, R"(
            ts[0] & ts[1] & ts[1] & ts[2] & ts[2] & ts[3] & ts[3] & ts[4]
        )"},
        {Kind::Operator, "Astar", "Btilde", false, R"(
            (ts[0]-t[0]ts[1])/(1-t[0]) & 0 & 0 & 0 & (z[0]t[0](ts[0]-ts[1]))/(1-t[0]) & 0 & 0 & 0
            0 & (ts[1]-t[1]ts[2])/(1-t[1]) & 0 & 0 & 0 & (z[1]t[1](ts[1]-ts[2]))/(1-t[1]) & 0 & 0
            0 & 0 & (ts[2]-t[2]ts[3])/(1-t[2]) & 0 & 0 & 0 & (z[2]t[2](ts[2]-ts[3]))/(1-t[2]) & 0
            0 & 0 & 0 & (ts[3]-t[3]ts[4])/(1-t[3]) & 0 & 0 & 0 & (z[3]t[3](ts[3]-ts[4]))/(1-t[3])
            (ts[0]-ts[1])/(z[0](t[0]-1)) & 0 & 0 & 0 & (t[0]ts[0]-ts[1])/(t[0]-1) & 0 & 0 & 0
            0 & (ts[1]-ts[2])/(z[1](t[1]-1)) & 0 & 0 & 0 & (t[1]ts[1]-ts[2])/(t[1]-1) & 0 & 0
            0 & 0 & (ts[2]-ts[3])/(z[2](t[2]-1)) & 0 & 0 & 0 & (t[2]ts[2]-ts[3])/(t[2]-1) & 0
            0 & 0 & 0 & (ts[3]-ts[4])/(z[3](t[3]-1)) & 0 & 0 & 0 & (t[3]ts[3]-ts[4])/(t[3]-1)
        )"},
        {Kind::Operator, "Astar", "BtildeAlt", false, R"(
            (ts[0]-t[0]ts[1])/(1-t[0]) & (z[0]t[0](ts[0]-ts[1]))/(1-t[0]) & 0 & 0 & 0 & 0 & 0 & 0
            (ts[0]-ts[1])/(z[0](t[0]-1)) & (t[0]ts[0]-ts[1])/(t[0]-1) & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & (ts[1]-t[1]ts[2])/(1-t[1]) & (z[1]t[1](ts[1]-ts[2]))/(1-t[1]) & 0 & 0 & 0 & 0
            0 & 0 & (ts[1]-ts[2])/(z[1](t[1]-1)) & (t[1]ts[1]-ts[2])/(t[1]-1) & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & (ts[2]-t[2]ts[3])/(1-t[2]) & (z[2]t[2](ts[2]-ts[3]))/(1-t[2]) & 0 & 0
            0 & 0 & 0 & 0 & (ts[2]-ts[3])/(z[2](t[2]-1)) & (t[2]ts[2]-ts[3])/(t[2]-1) & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & (ts[3]-t[3]ts[4])/(1-t[3]) & (z[3]t[3](ts[3]-ts[4]))/(1-t[3])
            0 & 0 & 0 & 0 & 0 & 0 & (ts[3]-ts[4])/(z[3](t[3]-1)) & (t[3]ts[3]-ts[4])/(t[3]-1)
        )"},
        {Kind::Operator, "AstarTilde", "C", true, R"(
            tts[0] & tts[0] & tts[1] & tts[1] & tts[2] & tts[2] & tts[3] & tts[3]
        )"},
        {Kind::Operator, "AstarTilde", "Btilde", true, R"(
            tts[0] & tts[1] & tts[2] & tts[3] & tts[0] & tts[1] & tts[2] & tts[3]
        )"},
        {Kind::Operator, "AstarTilde", "BtildeAlt", true, R"(
            tts[0] & tts[0] & tts[1] & tts[1] & tts[2] & tts[2] & tts[3] & tts[3]
        )"},
        {Kind::Operator, "AstarTilde", "B", false, R"(
            tts[0] & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & (e[1]tts[0]-tts[1])/(e[1]-1) & 0 & 0 & 0 & (e[1]x[1](tts[0]-tts[1]))/(e[1]-1) & 0 & 0
            0 & 0 & (e[2]tts[1]-tts[2])/(e[2]-1) & 0 & 0 & 0 & (e[2]x[2](tts[1]-tts[2]))/(e[2]-1) & 0
            0 & 0 & 0 & (e[3]tts[2]-tts[3])/(e[3]-1) & 0 & 0 & 0 & (e[3]x[3](tts[2]-tts[3]))/(e[3]-1)
            0 & 0 & 0 & 0 & tts[3] & 0 & 0 & 0
            0 & (tts[0]-tts[1])/(x[1](1-e[1])) & 0 & 0 & 0 & (tts[0]-e[1]tts[1])/(1-e[1]) & 0 & 0
            0 & 0 & (tts[1]-tts[2])/(x[2](1-e[2])) & 0 & 0 & 0 & (tts[1]-e[2]tts[2])/(1-e[2]) & 0
            0 & 0 & 0 & (tts[2]-tts[3])/(x[3](1-e[3])) & 0 & 0 & 0 & (tts[2]-e[3]tts[3])/(1-e[3])
        )"},
        {Kind::Operator, "AstarTilde", "Balt", false, R"(
            tts[0] & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & (e[1]tts[0]-tts[1])/(e[1]-1) & (e[1]x[1](tts[0]-tts[1]))/(e[1]-1) & 0 & 0 & 0 & 0 & 0
            0 & (tts[0]-tts[1])/(x[1](1-e[1])) & (tts[0]-e[1]tts[1])/(1-e[1]) & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & (e[2]tts[1]-tts[2])/(e[2]-1) & (e[2]x[2](tts[1]-tts[2]))/(e[2]-1) & 0 & 0 & 0
            0 & 0 & 0 & (tts[1]-tts[2])/(x[2](1-e[2])) & (tts[1]-e[2]tts[2])/(1-e[2]) & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & (e[3]tts[2]-tts[3])/(e[3]-1) & (e[3]x[3](tts[2]-tts[3]))/(e[3]-1) & 0
            0 & 0 & 0 & 0 & 0 & (tts[2]-tts[3])/(x[3](1-e[3])) & (tts[2]-e[3]tts[3])/(1-e[3]) & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & tts[3]
        )"},
        {Kind::Operator, "P", "C", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & (e[1])/(e[1]-1) & (1)/(1-e[1]) & 0 & 0 & 0 & 0 & 0
            0 & (e[1])/(e[1]-1) & (1)/(1-e[1]) & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & (e[2])/(e[2]-1) & (1)/(1-e[2]) & 0 & 0 & 0
            0 & 0 & 0 & (e[2])/(e[2]-1) & (1)/(1-e[2]) & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & (e[3])/(e[3]-1) & (1)/(1-e[3]) & 0
            0 & 0 & 0 & 0 & 0 & (e[3])/(e[3]-1) & (1)/(1-e[3]) & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 1
        )"},
        {Kind::Operator, "P", "B", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 1 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 1 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 1 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 1 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
        )"},
        {Kind::Operator, "P", "Balt", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 1 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 1 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 1 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 1
        )"},
        {Kind::Operator, "P", "Btilde", false, R"(
            (1-e[1](1-t[0]))/((1-t[0])(1-e[1])) & (-t[0])/((1-t[0])(1-e[1])) & 0 & 0 & (z[0]t[0])/((1-t[0])(1-e[1])) & (-t[0]t[1]z[1])/((1-t[0])(1-e[1])) & 0 & 0
            (-e[1])/((1-t[1])(1-e[1])) & (1-e[2]+t[1]e[2](1-e[1]))/((1-t[1])(1-e[1])(1-e[2])) & (-t[1])/((1-t[1])(1-e[2])) & 0 & (-z[0]e[1])/((1-t[1])(1-e[1])) & (z[1]t[1](1-e[1]e[2]))/((1-t[1])(1-e[1])(1-e[2])) & (-t[1]t[2]z[2])/((1-t[1])(1-e[2])) & 0
            0 & (-e[2])/((1-t[2])(1-e[2])) & (1-e[3]+t[2]e[3](1-e[2]))/((1-t[2])(1-e[2])(1-e[3])) & (-t[2])/((1-t[2])(1-e[3])) & 0 & (-z[1]e[2])/((1-t[2])(1-e[2])) & (z[2]t[2](1-e[2]e[3]))/((1-t[2])(1-e[2])(1-e[3])) & (-t[2]t[3]z[3])/((1-t[2])(1-e[3]))
            0 & 0 & (-e[3])/((1-t[3])(1-e[3])) & (1+t[3](e[3]-1))/((1-t[3])(1-e[3])) & 0 & 0 & (-z[2]e[3])/((1-t[3])(1-e[3])) & (z[3]t[3]e[3])/((1-t[3])(1-e[3]))
            (-1)/(z[0](1-t[0])(1-e[1])) & (1)/(z[0](1-t[0])(1-e[1])) & 0 & 0 & (t[0](e[1]-1)-e[1])/((1-t[0])(1-e[1])) & (z[1]t[1])/(z[0](1-t[0])(1-e[1])) & 0 & 0
            (e[1])/(z[1](1-t[1])(1-e[1])) & (-1+e[1]e[2])/(z[1](1-t[1])(1-e[1])(1-e[2])) & (1)/(z[1](1-t[1])(1-e[2])) & 0 & (z[0]e[1])/(z[1](1-t[1])(1-e[1])) & (t[1](e[2]-1)+e[2](e[1]-1))/((1-t[1])(1-e[1])(1-e[2])) & (z[2]t[2])/(z[1](1-t[1])(1-e[2])) & 0
            0 & (e[2])/(z[2](1-t[2])(1-e[2])) & (-1+e[2]e[3])/(z[2](1-t[2])(1-e[2])(1-e[3])) & (1)/(z[2](1-t[2])(1-e[3])) & 0 & (z[1]e[2])/(z[2](1-t[2])(1-e[2])) & (t[2](e[3]-1)+e[3](e[2]-1))/((1-t[2])(1-e[2])(1-e[3])) & (z[3]t[3])/(z[2](1-t[2])(1-e[3]))
            0 & 0 & (e[3])/(z[3](1-t[3])(1-e[3])) & (-e[3])/(z[3](1-t[3])(1-e[3])) & 0 & 0 & (z[2]e[3])/(z[3](1-t[3])(1-e[3])) & (1-t[3]-e[3])/((1-t[3])(1-e[3]))
        )"},
        {Kind::Operator, "P", "BtildeAlt", false, R"(
            (1-e[1](1-t[0]))/((1-t[0])(1-e[1])) & (z[0]t[0])/((1-t[0])(1-e[1])) & (-t[0])/((1-t[0])(1-e[1])) & (-t[0]t[1]z[1])/((1-t[0])(1-e[1])) & 0 & 0 & 0 & 0
            (-1)/(z[0](1-t[0])(1-e[1])) & (t[0](e[1]-1)-e[1])/((1-t[0])(1-e[1])) & (1)/(z[0](1-t[0])(1-e[1])) & (z[1]t[1])/(z[0](1-t[0])(1-e[1])) & 0 & 0 & 0 & 0
            (-e[1])/((1-t[1])(1-e[1])) & (-z[0]e[1])/((1-t[1])(1-e[1])) & (1-e[2]+t[1]e[2](1-e[1]))/((1-t[1])(1-e[1])(1-e[2])) & (z[1]t[1](1-e[1]e[2]))/((1-t[1])(1-e[1])(1-e[2])) & (-t[1])/((1-t[1])(1-e[2])) & (-t[1]t[2]z[2])/((1-t[1])(1-e[2])) & 0 & 0
            (e[1])/(z[1](1-t[1])(1-e[1])) & (z[0]e[1])/(z[1](1-t[1])(1-e[1])) & (-1+e[1]e[2])/(z[1](1-t[1])(1-e[1])(1-e[2])) & (t[1](e[2]-1)+e[2](e[1]-1))/((1-t[1])(1-e[1])(1-e[2])) & (1)/(z[1](1-t[1])(1-e[2])) & (z[2]t[2])/(z[1](1-t[1])(1-e[2])) & 0 & 0
            0 & 0 & (-e[2])/((1-t[2])(1-e[2])) & (-z[1]e[2])/((1-t[2])(1-e[2])) & (1-e[3]+t[2]e[3](1-e[2]))/((1-t[2])(1-e[2])(1-e[3])) & (z[2]t[2](1-e[2]e[3]))/((1-t[2])(1-e[2])(1-e[3])) & (-t[2])/((1-t[2])(1-e[3])) & (-t[2]t[3]z[3])/((1-t[2])(1-e[3]))
            0 & 0 & (e[2])/(z[2](1-t[2])(1-e[2])) & (z[1]e[2])/(z[2](1-t[2])(1-e[2])) & (-1+e[2]e[3])/(z[2](1-t[2])(1-e[2])(1-e[3])) & (t[2](e[3]-1)+e[3](e[2]-1))/((1-t[2])(1-e[2])(1-e[3])) & (1)/(z[2](1-t[2])(1-e[3])) & (z[3]t[3])/(z[2](1-t[2])(1-e[3]))
            0 & 0 & 0 & 0 & (-e[3])/((1-t[3])(1-e[3])) & (-z[2]e[3])/((1-t[3])(1-e[3])) & (1+t[3](e[3]-1))/((1-t[3])(1-e[3])) & (z[3]t[3]e[3])/((1-t[3])(1-e[3]))
            0 & 0 & 0 & 0 & (e[3])/(z[3](1-t[3])(1-e[3])) & (z[2]e[3])/(z[3](1-t[3])(1-e[3])) & (-e[3])/(z[3](1-t[3])(1-e[3])) & (1-t[3]-e[3])/((1-t[3])(1-e[3]))
        )"},
        {Kind::Operator, "Ptilde", "C", false, R"(
            (1)/(1-t[0]) & (t[0])/(t[0]-1) & 0 & 0 & 0 & 0 & 0 & 0
            (1)/(1-t[0]) & (t[0])/(t[0]-1) & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & (1)/(1-t[1]) & (t[1])/(t[1]-1) & 0 & 0 & 0 & 0
            0 & 0 & (1)/(1-t[1]) & (t[1])/(t[1]-1) & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & (1)/(1-t[2]) & (t[2])/(t[2]-1) & 0 & 0
            0 & 0 & 0 & 0 & (1)/(1-t[2]) & (t[2])/(t[2]-1) & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & (1)/(1-t[3]) & (t[3])/(t[3]-1)
            0 & 0 & 0 & 0 & 0 & 0 & (1)/(1-t[3]) & (t[3])/(t[3]-1)
        )"},
        {Kind::Operator, "Ptilde", "Btilde", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 1 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 1 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 1 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
        )"},
        {Kind::Operator, "Ptilde", "BtildeAlt", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 1 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 1 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 1 & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 0
        )"},
        {Kind::Operator, "Ptilde", "B", false, R"(
            (1)/(1-t[0]) & (t[0])/(t[0]-1) & 0 & 0 & 0 & (t[0]x[1])/(t[0]-1) & 0 & 0
            (-e[1])/((1-t[0])(1-e[1])) & (e[1]t[0](t[1]-1)+t[0]-1)/((t[0]-1)(t[1]-1)(e[1]-1)) & (-t[1])/((1-e[1])(1-t[1])) & 0 & 0 & (x[1]e[1](1-t[0]t[1]))/((1-t[0])(1-t[1])(1-e[1])) & (-t[1]x[2])/((1-e[1])(1-t[1])) & 0
            0 & (-e[2])/((1-t[1])(1-e[2])) & (e[2]t[1](t[2]-1)+t[1]-1)/((t[1]-1)(t[2]-1)(e[2]-1)) & (-t[2])/((1-e[2])(1-t[2])) & 0 & (-x[1]e[1]e[2])/((1-t[1])(1-e[2])) & (x[2]e[2](1-t[1]t[2]))/((1-t[1])(1-t[2])(1-e[2])) & (-t[2]x[3])/((1-e[2])(1-t[2]))
            0 & 0 & (-e[3])/((1-t[2])(1-e[3])) & (e[3]t[2](t[3]-1)+t[2]-1)/((t[2]-1)(t[3]-1)(e[3]-1)) & (-t[3])/((1-e[3])(1-t[3])) & 0 & (-x[2]e[2]e[3])/((1-t[2])(1-e[3])) & (x[3]e[3](1-t[2]t[3]))/((1-t[2])(1-t[3])(1-e[3]))
            0 & 0 & 0 & (1)/(1-t[3]) & (t[3])/(t[3]-1) & 0 & 0 & (x[3]e[3])/(1-t[3])
            (1)/(x[1](e[1]-1)(t[0]-1)) & (t[0]t[1]-1)/(x[1](1-e[1])(1-t[1])(1-t[0])) & (t[1])/(x[1](1-e[1])(1-t[1])) & 0 & 0 & (t[0](t[1]-1)+e[1](t[0]-1))/((1-e[1])(1-t[1])(1-t[0])) & (t[1]x[2])/(x[1](1-e[1])(1-t[1])) & 0
            0 & (1)/(x[2](e[2]-1)(t[1]-1)) & (t[1]t[2]-1)/(x[2](1-e[2])(1-t[2])(1-t[1])) & (t[2])/(x[2](1-e[2])(1-t[2])) & 0 & (x[1]e[1])/(x[2](1-e[2])(1-t[1])) & (t[1](t[2]-1)+e[2](t[1]-1))/((1-e[2])(1-t[2])(1-t[1])) & (t[2]x[3])/(x[2](1-e[2])(1-t[2]))
            0 & 0 & (1)/(x[3](e[3]-1)(t[2]-1)) & (t[2]t[3]-1)/(x[3](1-e[3])(1-t[3])(1-t[2])) & (t[3])/(x[3](1-e[3])(1-t[3])) & 0 & (x[2]e[2])/(x[3](1-e[3])(1-t[2])) & (t[2](t[3]-1)+e[3](t[2]-1))/((1-e[3])(1-t[3])(1-t[2]))
        )"},
        {Kind::Operator, "Ptilde", "Balt", false, R"(
            (1)/(1-t[0]) & (t[0])/(t[0]-1) & (t[0]x[1])/(t[0]-1) & 0 & 0 & 0 & 0 & 0
            (-e[1])/((1-t[0])(1-e[1])) & (e[1]t[0](t[1]-1)+t[0]-1)/((t[0]-1)(t[1]-1)(e[1]-1)) & (x[1]e[1](1-t[0]t[1]))/((1-t[0])(1-t[1])(1-e[1])) & (-t[1])/((1-e[1])(1-t[1])) & (-t[1]x[2])/((1-e[1])(1-t[1])) & 0 & 0 & 0
            (1)/(x[1](e[1]-1)(t[0]-1)) & (t[0]t[1]-1)/(x[1](1-e[1])(1-t[1])(1-t[0])) & (t[0](t[1]-1)+e[1](t[0]-1))/((1-e[1])(1-t[1])(1-t[0])) & (t[1])/(x[1](1-e[1])(1-t[1])) & (t[1]x[2])/(x[1](1-e[1])(1-t[1])) & 0 & 0 & 0
            0 & (-e[2])/((1-t[1])(1-e[2])) & (-x[1]e[1]e[2])/((1-t[1])(1-e[2])) & (e[2]t[1](t[2]-1)+t[1]-1)/((t[1]-1)(t[2]-1)(e[2]-1)) & (x[2]e[2](1-t[1]t[2]))/((1-t[1])(1-t[2])(1-e[2])) & (-t[2])/((1-e[2])(1-t[2])) & (-t[2]x[3])/((1-e[2])(1-t[2])) & 0
            0 & (1)/(x[2](e[2]-1)(t[1]-1)) & (x[1]e[1])/(x[2](1-e[2])(1-t[1])) & (t[1]t[2]-1)/(x[2](1-e[2])(1-t[2])(1-t[1])) & (t[1](t[2]-1)+e[2](t[1]-1))/((1-e[2])(1-t[2])(1-t[1])) & (t[2])/(x[2](1-e[2])(1-t[2])) & (t[2]x[3])/(x[2](1-e[2])(1-t[2])) & 0
            0 & 0 & 0 & (-e[3])/((1-t[2])(1-e[3])) & (-x[2]e[2]e[3])/((1-t[2])(1-e[3])) & (e[3]t[2](t[3]-1)+t[2]-1)/((t[2]-1)(t[3]-1)(e[3]-1)) & (x[3]e[3](1-t[2]t[3]))/((1-t[2])(1-t[3])(1-e[3])) & (-t[3])/((1-e[3])(1-t[3]))
            0 & 0 & 0 & (1)/(x[3](e[3]-1)(t[2]-1)) & (x[2]e[2])/(x[3](1-e[3])(1-t[2])) & (t[2]t[3]-1)/(x[3](1-e[3])(1-t[3])(1-t[2])) & (t[2](t[3]-1)+e[3](t[2]-1))/((1-e[3])(1-t[3])(1-t[2])) & (t[3])/(x[3](1-e[3])(1-t[3]))
            0 & 0 & 0 & 0 & 0 & (1)/(1-t[3]) & (x[3]e[3])/(1-t[3]) & (t[3])/(t[3]-1)
        )"},
        {Kind::Normalized, "t0norm", "", false, R"(
            (1)/(1-t[0]) & (t[0])/(t[0]-1) & 0 & 0 & 0 & 0 & 0 & 0
            (1)/(1-t[0]) & (t[0])/(t[0]-1) & 0 & 0 & 0 & 0 & 0 & 0
            0 & 0 & (1)/(1-t[1]) & (t[1])/(t[1]-1) & 0 & 0 & 0 & 0
            0 & 0 & (1)/(1-t[1]) & (t[1])/(t[1]-1) & 0 & 0 & 0 & 0
            0 & 0 & 0 & 0 & (1)/(1-t[2]) & (t[2])/(t[2]-1) & 0 & 0
            0 & 0 & 0 & 0 & (1)/(1-t[2]) & (t[2])/(t[2]-1) & 0 & 0
            0 & 0 & 0 & 0 & 0 & 0 & (1)/(1-t[3]) & (t[3])/(t[3]-1)
            0 & 0 & 0 & 0 & 0 & 0 & (1)/(1-t[3]) & (t[3])/(t[3]-1)
        )"},
        {Kind::Normalized, "t1norm", "", false, R"(
            1 & 0 & 0 & 0 & 0 & 0 & 0 & 0
            0 & (e[1])/(e[1]-1) & (1)/(1-e[1]) & 0 & 0 & 0 & 0 & 0
            0 & (e[1])/(e[1]-1) & (1)/(1-e[1]) & 0 & 0 & 0 & 0 & 0
            0 & 0 & 0 & (e[2])/(e[2]-1) & (1)/(1-e[2]) & 0 & 0 & 0
            0 & 0 & 0 & (e[2])/(e[2]-1) & (1)/(1-e[2]) & 0 & 0 & 0
            0 & 0 & 0 & 0 & 0 & (e[3])/(e[3]-1) & (1)/(1-e[3]) & 0
            0 & 0 & 0 & 0 & 0 & (e[3])/(e[3]-1) & (1)/(1-e[3]) & 0
            0 & 0 & 0 & 0 & 0 & 0 & 0 & 1
        )"},
    };
    return tables;
}

}  // namespace ldaha::appendix_tables
