#include "kmw/lp.hpp"

namespace kmw {

bool exact_feasible(const std::vector<QVec>& rows, const QVec& rhs)
{
    const std::size_t m = rows.size();
    if (rhs.size() != m) throw Error(ErrorKind::InvalidArgument, "right-hand side has the wrong length");
    if (m == 0) return true;
    const std::size_t n = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != n) throw Error(ErrorKind::InvalidArgument, "ragged constraint matrix");

    // tableau columns: n structural, m artificial, then the right-hand side
    const std::size_t width = n + m + 1;
    std::vector<QVec> t(m, QVec(width, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const int sign = rhs[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = rows[i][j] * sign;
        t[i][n + i] = 1;
        t[i][width - 1] = rhs[i] * sign;
        basis[i] = n + i;
    }
    // reduced costs of "minimize the sum of artificials"
    QVec cost(width, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (j < n || j == width - 1) cost[j] -= t[i][j];

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == m) break;  // unbounded direction; cannot happen for a bounded phase-one objective
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            Rational f = cost[enter];
            for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    // objective value is -cost[rhs]
    return cost[width - 1] == 0;
}

}  // namespace kmw
