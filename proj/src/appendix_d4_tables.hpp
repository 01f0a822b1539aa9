#pragma once

#include <vector>

namespace ldaha::appendix_tables {

enum class Kind { Transition, Operator, Normalized };

// Transition: a = from, b = to. Operator: a = operator, b = basis.
// Normalized: a = "t0norm" or "t1norm". A diagonal display lists its diagonal
// as a single row.
struct Display {
    Kind kind;
    const char *a;
    const char *b;
    bool diagonal;
    const char *cells;
};

const std::vector<Display> &part_one();

}  // namespace ldaha::appendix_tables
