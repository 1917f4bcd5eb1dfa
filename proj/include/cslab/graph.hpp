#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cslab/partition.hpp"

namespace cslab {

using Edge = std::pair<int, int>;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kDefaultBlockCap = 12;

/// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
/// (u < v) and sorted; loops and repeated edges are rejected.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexMask neighbor_mask(int v) const { return masks_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const { return (masks_[static_cast<std::size_t>(u)] >> v) & 1U; }
    VertexMask all_vertices() const { return n_ == 64 ? ~VertexMask{0} : ((VertexMask{1} << n_) - 1); }

    bool is_connected() const;
    bool is_tree() const { return is_connected() && edge_count() == n_ - 1; }
    /// Vertex sets of the connected components, ordered by smallest vertex.
    std::vector<std::vector<int>> components() const;

    /// Copy with extra edges added; existing edges are kept once.
    Graph with_edges(const std::vector<Edge>& extra) const;
    /// Copy with vertex v removed; higher labels shift down by one.
    Graph without_vertex(int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexMask> masks_;
};

Graph disjoint_union(const Graph& g, const Graph& h);

// ------------------------------------------------------------------ families

enum class FamilyKind { Path, Cycle, Star, Spider, Broom, DoubleBroom, Complete, Claw, Edges };

/// A graph descriptor in the "path:7", "spider:4,4,2", "edges:3:0-1,1-2" mini-language.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    std::vector<int> params;
    int explicit_order = 0;         // Edges only
    std::vector<Edge> explicit_edges;

    std::string to_string() const;
    bool operator==(const FamilySpec&) const = default;
};

FamilySpec parse_graph_spec(std::string_view text);

/// Builds the graph with the frozen labeling:
///  - path:n       vertices 0..n-1 along the path
///  - cycle:n      path plus the edge (n-1, 0)
///  - star:l       center 0, leaves 1..l
///  - spider:λ     legs in the given order, each labeled from its free end toward the center; center last
///  - broom:p,l    long leg v_1..v_p = 0..p-1 from the free end, center v_{p+1} = p, leaves p+1..p+l
///  - dbroom:l,q,l' path v_1..v_{q+1} = 0..q, l leaves on v_1 (q+1..q+l), l' leaves on v_{q+1} after them
///  - complete:n, claw (= spider:1,1,1), edges:n:u-v,...
/// Throws BadSpec for out-of-range parameters.
Graph build_family(const FamilySpec& spec);
Graph build_graph(std::string_view spec_text);

Graph path_graph(int n);
Graph spider_graph(const Partition& legs);
Graph broom_graph(int p, int l);
Graph double_broom_graph(int l, int q, int lp);

// ------------------------------------------------------------------ stable partitions

struct StablePartitionCount {
    Partition type;
    Integer count;              // a_λ: unordered stable partitions
    Integer semi_ordered_count; // ã_λ = a_λ · λ^!
};

/// Stable partitions of the given type, by block-assignment backtracking.
/// Throws TooManyBlocks when the type has more than `block_cap` parts.
StablePartitionCount count_stable_partitions(const Graph& g, const Partition& type,
                                             int block_cap = kDefaultBlockCap);

/// All a_λ at once. Requires n <= 16.
std::map<Partition, Integer, RevLexLess> enumerate_stable_partitions(const Graph& g);

// ------------------------------------------------------------------ connected partitions

/// Whether V(G) splits into blocks of the given sizes each inducing a connected subgraph.
/// Trees up to 24 vertices use edge-cut enumeration; other graphs need n <= 16.
bool has_connected_partition(const Graph& g, const Partition& type);

/// Every type realized by a connected partition of a tree (n <= 24).
std::set<Partition, RevLexLess> tree_connected_partition_types(const Graph& tree);

// ------------------------------------------------------------------ bipartitions, colorings

struct BipartitionSizes {
    int first = 0;
    int second = 0;
};

/// Sizes of the color classes of a connected bipartite graph (class of vertex 0 first).
BipartitionSizes bipartition_sizes(const Graph& g);

/// Whether the unique stable bipartition has class sizes differing by at most one.
/// Throws NotConnected or NotBipartite.
bool balanced_stable_bipartition(const Graph& g);

/// Coefficients c_0..c_n of the chromatic polynomial (deletion-contraction, n <= 20).
std::vector<Integer> chromatic_polynomial_coefficients(const Graph& g);
Integer chromatic_polynomial(const Graph& g, int k);

/// Largest stable set size (n <= 24).
int independence_number(const Graph& g);

// ------------------------------------------------------------------ random instances

/// Uniform integer in [0, bound) from a 64-bit Mersenne Twister; portable across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform labeled tree via a random Prüfer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

/// Each edge independently with probability num/den.
Graph random_graph(int n, int num, int den, std::mt19937_64& rng);

}  // namespace cslab
