#pragma once

#include <qlwb/linalg.hpp>

#include <vector>

namespace qlwb {

/// minimize objective . x subject to rows . x = rhs and x >= 0.
struct LinearProgram
{
    int variables = 0;
    std::vector<Vector> rows;
    Vector rhs;
    Vector objective;
};

enum class LpStatus
{
    optimal,
    infeasible,
    unbounded,
};

struct LpResult
{
    LpStatus status = LpStatus::infeasible;
    Rational value;
    Vector x;
};

/// Exact two-phase simplex with Bland's rule. Redundant equality rows are removed
/// by row reduction first; an inconsistent system is reported infeasible.
auto solve_lp(const LinearProgram & lp) -> LpResult;

}
