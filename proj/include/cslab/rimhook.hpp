#pragma once

#include <utility>
#include <vector>

#include "cslab/graph.hpp"
#include "cslab/symfunc.hpp"

namespace cslab {

/// Cell (row, column), both 0-based, English notation.
using Cell = std::pair<int, int>;

/// Decomposition of a Young diagram into rim hooks that each meet column 1.
struct SpecialRimHookTabloid {
    Partition shape;
    /// Hooks ordered by the topmost row of their column-1 cells.
    std::vector<std::vector<Cell>> hooks;
    /// Hook sizes in the same order.
    Composition content;
    /// Number of hooks spanning an even number of rows.
    int sign_exponent = 0;

    int sign() const { return sign_exponent % 2 ? -1 : 1; }
};

inline constexpr int kSrhtMaxSize = 30;
inline constexpr int kSrhtMaxLength = 12;

/// All special rim hook tabloids of shape λ. The hook through the lowest
/// column-1 cell is peeled first; hooks ending in lower rows come first.
/// Throws TooLarge when |λ| > 30 or ℓ(λ) > 12.
std::vector<SpecialRimHookTabloid> enumerate_srht(const Partition& lambda);

/// Signed content counts: sum of signs of tabloids of shape λ whose sorted content is ν.
std::map<Partition, int, RevLexLess> srht_signed_contents(const Partition& lambda);

struct SchurTraceEntry {
    Composition content;
    int sign = 1;
    Integer semi_ordered_count;  // ã of the sorted content
};

struct SchurCoefficientTrace {
    Partition shape;
    /// Tabloids whose content is the type of some stable partition of G.
    std::vector<SchurTraceEntry> tabloids;
    /// Tabloids dropped because their content type has no stable partition (they contribute 0).
    int unrealizable = 0;
    Integer total;
};

/// [s_λ] X_G as the signed sum of ã over special rim hook tabloids of shape λ.
SchurCoefficientTrace schur_coefficient(const Graph& g, const Partition& lambda, int block_cap = kDefaultBlockCap);

inline constexpr int kSchurSolveMaxVertices = 12;

/// Full Schur expansion from the stable-partition route and an exact change of basis.
SymFunc schur_expansion_solve(const Graph& g, int max_vertices = kSchurSolveMaxVertices);

}  // namespace cslab
