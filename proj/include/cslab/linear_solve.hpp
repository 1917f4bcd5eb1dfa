#pragma once

#include <map>
#include <vector>

#include "cslab/partition.hpp"

namespace cslab {

/// Square sparse matrix over the rationals, stored by rows.
class SparseMatrix {
public:
    explicit SparseMatrix(int dim) : rows_(static_cast<std::size_t>(dim)) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    void set(int row, int col, const Rational& value);
    Rational get(int row, int col) const;
    const std::map<int, Rational>& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
    std::size_t nonzeros() const;

private:
    std::vector<std::map<int, Rational>> rows_;
};

/// Solves A x = b exactly by Gaussian elimination. Pivots are chosen among the
/// rows with the fewest remaining nonzeros, so triangular systems (up to a
/// permutation) are solved without fill-in. Throws SingularSystem.
std::vector<Rational> solve_exact(const SparseMatrix& a, const std::vector<Rational>& b);

}  // namespace cslab
