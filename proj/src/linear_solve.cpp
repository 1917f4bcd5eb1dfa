#include "cslab/linear_solve.hpp"

#include <limits>

#include "cslab/errors.hpp"

namespace cslab {

void SparseMatrix::set(int row, int col, const Rational& value) {
    auto& r = rows_[static_cast<std::size_t>(row)];
    if (value == 0)
        r.erase(col);
    else
        r[col] = value;
}

Rational SparseMatrix::get(int row, int col) const {
    const auto& r = rows_[static_cast<std::size_t>(row)];
    auto it = r.find(col);
    return it == r.end() ? Rational(0) : it->second;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t total = 0;
    for (const auto& r : rows_)
        total += r.size();
    return total;
}

std::vector<Rational> solve_exact(const SparseMatrix& a, const std::vector<Rational>& b) {
    const int n = a.dim();
    if (static_cast<int>(b.size()) != n)
        throw SingularSystem("solve_exact: right-hand side has wrong dimension");

    std::vector<std::map<int, Rational>> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)] = a.row(i);
    std::vector<Rational> rhs = b;

    // Column -> rows that currently hold a nonzero there.
    std::vector<std::map<int, bool>> col_rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (const auto& [c, v] : rows[static_cast<std::size_t>(i)])
            col_rows[static_cast<std::size_t>(c)][i] = true;

    std::vector<bool> row_done(static_cast<std::size_t>(n), false);
    std::vector<int> pivot_col_of_row(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));

    for (int step = 0; step < n; ++step) {
        int best_row = -1;
        std::size_t best_nnz = std::numeric_limits<std::size_t>::max();
        for (int i = 0; i < n; ++i) {
            if (row_done[static_cast<std::size_t>(i)])
                continue;
            std::size_t nnz = rows[static_cast<std::size_t>(i)].size();
            if (nnz == 0)
                throw SingularSystem("solve_exact: matrix is singular");
            if (nnz < best_nnz) {
                best_nnz = nnz;
                best_row = i;
                if (nnz == 1)
                    break;
            }
        }
        auto& prow = rows[static_cast<std::size_t>(best_row)];
        // Pivot on the column of this row with the fewest other occupants.
        int pcol = -1;
        std::size_t best_col_count = std::numeric_limits<std::size_t>::max();
        for (const auto& [c, v] : prow) {
            std::size_t cnt = col_rows[static_cast<std::size_t>(c)].size();
            if (cnt < best_col_count) {
                best_col_count = cnt;
                pcol = c;
            }
        }
        row_done[static_cast<std::size_t>(best_row)] = true;
        pivot_col_of_row[static_cast<std::size_t>(best_row)] = pcol;
        order.push_back(best_row);

        const Rational pivot = prow.at(pcol);
        std::vector<int> targets;
        for (const auto& [r, unused] : col_rows[static_cast<std::size_t>(pcol)])
            if (r != best_row)
                targets.push_back(r);
        for (int r : targets) {
            auto& trow = rows[static_cast<std::size_t>(r)];
            const Rational factor = trow.at(pcol) / pivot;
            for (const auto& [c, v] : prow) {
                Rational updated = -factor * v;
                if (auto found = trow.find(c); found != trow.end())
                    updated += found->second;
                if (updated == 0) {
                    trow.erase(c);
                    col_rows[static_cast<std::size_t>(c)].erase(r);
                } else {
                    trow[c] = updated;
                    col_rows[static_cast<std::size_t>(c)][r] = true;
                }
            }
            rhs[static_cast<std::size_t>(r)] -= factor * rhs[static_cast<std::size_t>(best_row)];
        }
    }

    // After full elimination each pivot column is cleared outside its pivot row,
    // so back substitution proceeds in reverse pivot order.
    std::vector<Rational> x(static_cast<std::size_t>(n), 0);
    std::vector<bool> known(static_cast<std::size_t>(n), false);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int r = *it;
        const int pc = pivot_col_of_row[static_cast<std::size_t>(r)];
        Rational acc = rhs[static_cast<std::size_t>(r)];
        for (const auto& [c, v] : rows[static_cast<std::size_t>(r)]) {
            if (c == pc)
                continue;
            if (!known[static_cast<std::size_t>(c)])
                throw SingularSystem("solve_exact: inconsistent elimination order");
            acc -= v * x[static_cast<std::size_t>(c)];
        }
        x[static_cast<std::size_t>(pc)] = acc / rows[static_cast<std::size_t>(r)].at(pc);
        known[static_cast<std::size_t>(pc)] = true;
    }
    return x;
}

}  // namespace cslab
