#include "qlwb/lp.hpp"
#include "qlwb/error.hpp"

namespace qlwb {

namespace {
    class Tableau
    {
    public:
        Tableau(std::vector<Vector> rows, int columns) : _rows(std::move(rows)), _cols(columns) {}

        /// Row m of _rows holds the reduced costs: entries c_j - z_j and the negated value.
        void set_objective(const Vector & cost)
        {
            Vector obj(_cols + 1, 0);
            for (int j = 0; j < _cols; ++j)
                obj[j] = cost[j];
            for (std::size_t r = 0; r < _basis.size(); ++r) {
                const auto & cb = cost[_basis[r]];
                if (cb == 0)
                    continue;
                for (int j = 0; j <= _cols; ++j)
                    obj[j] -= cb * _rows[r][j];
            }
            _obj = std::move(obj);
        }

        /// Minimizes over the allowed columns; false when unbounded.
        auto optimize(const std::vector<bool> & allowed) -> bool
        {
            while (true) {
                int enter = -1;
                for (int j = 0; j < _cols; ++j)
                    if (allowed[j] && _obj[j] < 0) {
                        enter = j;
                        break;
                    }
                if (enter < 0)
                    return true;
                int leave = -1;
                Rational best;
                for (std::size_t r = 0; r < _rows.size(); ++r) {
                    if (_rows[r][enter] <= 0)
                        continue;
                    Rational ratio = _rows[r][_cols] / _rows[r][enter];
                    if (leave < 0 || ratio < best || (ratio == best && _basis[r] < _basis[leave])) {
                        leave = static_cast<int>(r);
                        best = ratio;
                    }
                }
                if (leave < 0)
                    return false;
                pivot(leave, enter);
            }
        }

        void pivot(int r, int c)
        {
            Rational inv = 1 / _rows[r][c];
            for (auto & x : _rows[r])
                x *= inv;
            for (std::size_t i = 0; i < _rows.size(); ++i) {
                if (static_cast<int>(i) == r || _rows[i][c] == 0)
                    continue;
                Rational f = _rows[i][c];
                for (int j = 0; j <= _cols; ++j)
                    _rows[i][j] -= f * _rows[r][j];
            }
            if (_obj[c] != 0) {
                Rational f = _obj[c];
                for (int j = 0; j <= _cols; ++j)
                    _obj[j] -= f * _rows[r][j];
            }
            _basis[r] = c;
        }

        auto value() const -> Rational { return -_obj[_cols]; }
        auto rows() -> std::vector<Vector> & { return _rows; }
        auto basis() -> std::vector<int> & { return _basis; }

        auto solution() const -> Vector
        {
            Vector x(_cols, 0);
            for (std::size_t r = 0; r < _basis.size(); ++r)
                x[_basis[r]] = _rows[r][_cols];
            return x;
        }

    private:
        std::vector<Vector> _rows;
        int _cols;
        std::vector<int> _basis;
        Vector _obj;
    };
}

auto solve_lp(const LinearProgram & lp) -> LpResult
{
    const int n = lp.variables;
    if (lp.rows.size() != lp.rhs.size())
        throw InputError("solve_lp: row and right-hand side counts differ");
    // [A | b] reduced; a pivot in the b column means an inconsistent system.
    std::vector<Vector> aug;
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        if (static_cast<int>(lp.rows[r].size()) != n)
            throw InputError("solve_lp: row length differs from variable count");
        Vector v = lp.rows[r];
        v.push_back(lp.rhs[r]);
        aug.push_back(std::move(v));
    }
    auto pivots = rref(aug, n + 1);
    LpResult result;
    if (! pivots.empty() && pivots.back() == n)
        return result;
    const int m = static_cast<int>(aug.size());
    for (auto & row : aug)
        if (row[n] < 0)
            for (auto & x : row)
                x = -x;

    // Columns: n originals, m artificials, then the right-hand side.
    const int cols = n + m;
    std::vector<Vector> rows(m, Vector(cols + 1, 0));
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < n; ++j)
            rows[r][j] = aug[r][j];
        rows[r][n + r] = 1;
        rows[r][cols] = aug[r][n];
    }
    Tableau t(std::move(rows), cols);
    for (int r = 0; r < m; ++r)
        t.basis().push_back(n + r);
    Vector phase1(cols, 0);
    for (int r = 0; r < m; ++r)
        phase1[n + r] = 1;
    t.set_objective(phase1);
    t.optimize(std::vector<bool>(cols, true));
    if (t.value() != 0)
        return result;

    // Drive zero-level artificials out of the basis; their rows are redundant otherwise.
    for (int r = 0; r < m; ++r) {
        if (t.basis()[r] < n)
            continue;
        for (int j = 0; j < n; ++j)
            if (t.rows()[r][j] != 0) {
                t.pivot(r, j);
                break;
            }
    }

    Vector cost(cols, 0);
    for (int j = 0; j < n && j < static_cast<int>(lp.objective.size()); ++j)
        cost[j] = lp.objective[j];
    t.set_objective(cost);
    std::vector<bool> allowed(cols, false);
    for (int j = 0; j < n; ++j)
        allowed[j] = true;
    if (! t.optimize(allowed)) {
        result.status = LpStatus::unbounded;
        return result;
    }
    result.status = LpStatus::optimal;
    auto x = t.solution();
    x.resize(n);
    result.x = std::move(x);
    result.value = t.value();
    return result;
}

}
