#include "cslab/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "cslab/errors.hpp"

namespace cslab {

namespace {

int lowest_vertex(VertexMask m) { return std::countr_zero(m); }
int popcount(VertexMask m) { return std::popcount(m); }
VertexMask bit(int v) { return VertexMask{1} << v; }

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw BadSpec("graph order must be in [0, " + std::to_string(kMaxVertices) + "]");
    adj_.assign(static_cast<std::size_t>(n), {});
    masks_.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw BadSpec("edge endpoint out of range");
        if (u == v)
            throw BadSpec("loops are not allowed");
        if (u > v)
            std::swap(u, v);
        if (masks_[static_cast<std::size_t>(u)] & bit(v))
            throw BadSpec("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
        masks_[static_cast<std::size_t>(u)] |= bit(v);
        masks_[static_cast<std::size_t>(v)] |= bit(u);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj_)
        std::sort(a.begin(), a.end());
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<int> comp{s};
        seen[static_cast<std::size_t>(s)] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : neighbors(comp[i]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

Graph Graph::with_edges(const std::vector<Edge>& extra) const {
    std::vector<Edge> all = edges_;
    for (auto [u, v] : extra) {
        if (u > v)
            std::swap(u, v);
        if (u >= 0 && v < n_ && u != v && adjacent(u, v))
            continue;
        all.emplace_back(u, v);
    }
    return Graph(n_, std::move(all));
}

Graph Graph::without_vertex(int v) const {
    std::vector<Edge> kept;
    for (auto [a, b] : edges_) {
        if (a == v || b == v)
            continue;
        kept.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Graph(n_ - 1, std::move(kept));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges())
        edges.emplace_back(u + g.order(), v + g.order());
    return Graph(g.order() + h.order(), std::move(edges));
}

// ---------------------------------------------------------------- families

Graph path_graph(int n) {
    if (n < 1)
        throw BadSpec("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph spider_graph(const Partition& legs) {
    if (legs.length() < 3)
        throw BadSpec("spider needs at least 3 legs");
    const int n = legs.size() + 1;
    const int center = n - 1;
    std::vector<Edge> edges;
    int next = 0;
    for (int len : legs.parts()) {
        for (int i = 0; i + 1 < len; ++i)
            edges.emplace_back(next + i, next + i + 1);
        edges.emplace_back(next + len - 1, center);
        next += len;
    }
    return Graph(n, std::move(edges));
}

Graph broom_graph(int p, int l) {
    if (p < 1 || l < 1)
        throw BadSpec("broom needs p >= 1 and l >= 1");
    const int center = p;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < p; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(p - 1, center);
    for (int j = 1; j <= l; ++j)
        edges.emplace_back(center, center + j);
    return Graph(p + l + 1, std::move(edges));
}

Graph double_broom_graph(int l, int q, int lp) {
    if (l < 1 || q < 1 || lp < 1)
        throw BadSpec("double broom needs l, p, l' >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < q; ++i)
        edges.emplace_back(i, i + 1);
    int next = q + 1;
    for (int j = 0; j < l; ++j)
        edges.emplace_back(0, next++);
    for (int j = 0; j < lp; ++j)
        edges.emplace_back(q, next++);
    return Graph(l + q + 1 + lp, std::move(edges));
}

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
    std::vector<int> out;
    std::size_t pos = 0;
    if (text.empty())
        throw BadSpec(std::string(what) + ": missing parameters");
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw BadSpec(std::string(what) + ": bad integer '" + std::string(tok) + "'");
        out.push_back(value);
        pos = end + 1;
        if (end == text.size())
            break;
    }
    return out;
}

void expect_count(const FamilySpec& spec, std::size_t count, std::string_view name) {
    if (spec.params.size() != count)
        throw BadSpec(std::string(name) + " expects " + std::to_string(count) + " parameter(s)");
}

}  // namespace

FamilySpec parse_graph_spec(std::string_view text) {
    FamilySpec spec;
    if (text == "claw") {
        spec.kind = FamilyKind::Claw;
        return spec;
    }
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw BadSpec("graph spec '" + std::string(text) + "' has no ':'");
    std::string_view name = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);
    if (name == "edges") {
        spec.kind = FamilyKind::Edges;
        const std::size_t colon2 = rest.find(':');
        std::string_view order_text = rest.substr(0, colon2);
        auto [ptr, ec] = std::from_chars(order_text.data(), order_text.data() + order_text.size(),
                                         spec.explicit_order);
        if (order_text.empty() || ec != std::errc() || ptr != order_text.data() + order_text.size())
            throw BadSpec("edges: bad vertex count");
        if (colon2 != std::string_view::npos) {
            std::string_view list = rest.substr(colon2 + 1);
            std::size_t pos = 0;
            while (pos < list.size()) {
                std::size_t end = list.find(',', pos);
                if (end == std::string_view::npos)
                    end = list.size();
                std::string_view tok = list.substr(pos, end - pos);
                const std::size_t dash = tok.find('-');
                if (dash == std::string_view::npos)
                    throw BadSpec("edges: pair '" + std::string(tok) + "' lacks '-'");
                auto ends = parse_int_list(std::string(tok.substr(0, dash)) + "," +
                                               std::string(tok.substr(dash + 1)),
                                           "edges");
                spec.explicit_edges.emplace_back(ends[0], ends[1]);
                pos = end + 1;
            }
        }
        return spec;
    }
    if (name == "path")
        spec.kind = FamilyKind::Path;
    else if (name == "cycle")
        spec.kind = FamilyKind::Cycle;
    else if (name == "star")
        spec.kind = FamilyKind::Star;
    else if (name == "spider")
        spec.kind = FamilyKind::Spider;
    else if (name == "broom")
        spec.kind = FamilyKind::Broom;
    else if (name == "dbroom")
        spec.kind = FamilyKind::DoubleBroom;
    else if (name == "complete")
        spec.kind = FamilyKind::Complete;
    else
        throw BadSpec("unknown graph family '" + std::string(name) + "'");
    spec.params = parse_int_list(rest, name);
    return spec;
}

std::string FamilySpec::to_string() const {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    switch (kind) {
    case FamilyKind::Path: return "path:" + join(params);
    case FamilyKind::Cycle: return "cycle:" + join(params);
    case FamilyKind::Star: return "star:" + join(params);
    case FamilyKind::Spider: return "spider:" + join(params);
    case FamilyKind::Broom: return "broom:" + join(params);
    case FamilyKind::DoubleBroom: return "dbroom:" + join(params);
    case FamilyKind::Complete: return "complete:" + join(params);
    case FamilyKind::Claw: return "claw";
    case FamilyKind::Edges: {
        std::string s = "edges:" + std::to_string(explicit_order);
        for (std::size_t i = 0; i < explicit_edges.size(); ++i)
            s += (i ? "," : ":") + std::to_string(explicit_edges[i].first) + "-" +
                 std::to_string(explicit_edges[i].second);
        return s;
    }
    }
    return "?";
}

Graph build_family(const FamilySpec& spec) {
    switch (spec.kind) {
    case FamilyKind::Path:
        expect_count(spec, 1, "path");
        return path_graph(spec.params[0]);
    case FamilyKind::Cycle: {
        expect_count(spec, 1, "cycle");
        const int n = spec.params[0];
        if (n < 3)
            throw BadSpec("cycle needs at least 3 vertices");
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph(n, std::move(edges));
    }
    case FamilyKind::Star: {
        expect_count(spec, 1, "star");
        const int l = spec.params[0];
        if (l < 1)
            throw BadSpec("star needs at least 1 leaf");
        std::vector<Edge> edges;
        for (int j = 1; j <= l; ++j)
            edges.emplace_back(0, j);
        return Graph(l + 1, std::move(edges));
    }
    case FamilyKind::Spider: {
        if (spec.params.size() < 3)
            throw BadSpec("spider needs at least 3 legs");
        for (std::size_t i = 0; i < spec.params.size(); ++i) {
            if (spec.params[i] < 1)
                throw BadSpec("spider legs must be positive");
            if (i && spec.params[i] > spec.params[i - 1])
                throw BadSpec("spider legs must be weakly decreasing");
        }
        return spider_graph(Partition(spec.params));
    }
    case FamilyKind::Broom:
        expect_count(spec, 2, "broom");
        return broom_graph(spec.params[0], spec.params[1]);
    case FamilyKind::DoubleBroom:
        expect_count(spec, 3, "dbroom");
        return double_broom_graph(spec.params[0], spec.params[1], spec.params[2]);
    case FamilyKind::Complete: {
        expect_count(spec, 1, "complete");
        const int n = spec.params[0];
        if (n < 1)
            throw BadSpec("complete graph needs at least 1 vertex");
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(i, j);
        return Graph(n, std::move(edges));
    }
    case FamilyKind::Claw:
        return spider_graph(Partition{1, 1, 1});
    case FamilyKind::Edges:
        return Graph(spec.explicit_order, spec.explicit_edges);
    }
    throw BadSpec("unknown family");
}

Graph build_graph(std::string_view spec_text) { return build_family(parse_graph_spec(spec_text)); }

// ---------------------------------------------------------------- stable partitions

namespace {

// BFS order per component so that adjacency prunes the assignment early.
std::vector<int> search_order(const Graph& g) {
    std::vector<int> order;
    for (const auto& comp : g.components()) {
        std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
        std::queue<int> q;
        q.push(comp.front());
        seen[static_cast<std::size_t>(comp.front())] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    q.push(w);
                }
        }
    }
    return order;
}

struct BlockSearch {
    const Graph& g;
    std::vector<int> order;
    std::vector<int> capacity;        // remaining room per block
    std::vector<int> target;          // block sizes, weakly decreasing
    std::vector<VertexMask> members;
    std::vector<int> first_in_group;  // index of the first block with the same target size

    Integer run(std::size_t idx) {
        if (idx == order.size())
            return 1;
        const int v = order[idx];
        Integer total = 0;
        for (std::size_t b = 0; b < capacity.size(); ++b) {
            if (capacity[b] == 0 || (members[b] & g.neighbor_mask(v)))
                continue;
            // Equal-size blocks are interchangeable: open them left to right.
            if (members[b] == 0 && b > static_cast<std::size_t>(first_in_group[b]) && members[b - 1] == 0)
                continue;
            --capacity[b];
            members[b] |= bit(v);
            total += run(idx + 1);
            members[b] &= ~bit(v);
            ++capacity[b];
        }
        return total;
    }
};

}  // namespace

StablePartitionCount count_stable_partitions(const Graph& g, const Partition& type, int block_cap) {
    if (type.size() != g.order())
        throw DegreeMismatch("count_stable_partitions: type " + type.to_string() + " is not a partition of " +
                             std::to_string(g.order()));
    if (type.length() > block_cap)
        throw TooManyBlocks("count_stable_partitions: " + std::to_string(type.length()) +
                            " blocks exceed the cap of " + std::to_string(block_cap));
    BlockSearch search{g, search_order(g), type.parts(), type.parts(),
                       std::vector<VertexMask>(type.parts().size(), 0), {}};
    search.first_in_group.resize(type.parts().size());
    for (std::size_t b = 0; b < type.parts().size(); ++b)
        search.first_in_group[b] =
            (b > 0 && type.parts()[b] == type.parts()[b - 1]) ? search.first_in_group[b - 1] : static_cast<int>(b);
    StablePartitionCount out;
    out.type = type;
    out.count = search.run(0);
    out.semi_ordered_count = out.count * factorials(type).multiplicity_factorial;
    return out;
}

std::map<Partition, Integer, RevLexLess> enumerate_stable_partitions(const Graph& g) {
    if (g.order() > 16)
        throw TooLarge("enumerate_stable_partitions: more than 16 vertices");
    using TypeCounts = std::map<Partition, Integer, RevLexLess>;
    std::unordered_map<VertexMask, TypeCounts> memo;

    // Partitions of the remaining set; the block of its lowest vertex is chosen first.
    std::function<const TypeCounts&(VertexMask)> solve = [&](VertexMask rest) -> const TypeCounts& {
        if (auto it = memo.find(rest); it != memo.end())
            return it->second;
        TypeCounts result;
        if (rest == 0) {
            result[Partition{}] = 1;
        } else {
            const int v = lowest_vertex(rest);
            const VertexMask allowed = rest & ~bit(v) & ~g.neighbor_mask(v);
            // Enumerate stable subsets of `allowed`, each extended by v.
            std::function<void(VertexMask, VertexMask)> grow = [&](VertexMask block, VertexMask cand) {
                const TypeCounts& sub = solve(rest & ~block);
                const int size = popcount(block);
                for (const auto& [type, count] : sub)
                    result[merge(type, Partition{size})] += count;
                while (cand) {
                    const int w = lowest_vertex(cand);
                    cand &= cand - 1;
                    grow(block | bit(w), cand & ~g.neighbor_mask(w));
                }
            };
            grow(bit(v), allowed);
        }
        return memo.emplace(rest, std::move(result)).first->second;
    };
    return solve(g.all_vertices());
}

// ---------------------------------------------------------------- connected partitions

std::set<Partition, RevLexLess> tree_connected_partition_types(const Graph& tree) {
    if (!tree.is_tree())
        throw std::invalid_argument("tree_connected_partition_types: graph is not a tree");
    const int n = tree.order();
    if (n > 24)
        throw TooLarge("tree_connected_partition_types: more than 24 vertices");
    std::set<Partition, RevLexLess> types;
    if (n == 0) {
        types.insert(Partition{});
        return types;
    }
    // Root at 0; children follow parents in BFS order.
    std::vector<int> order = search_order(tree);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[0] = true;
    for (int v : order)
        for (int w : tree.neighbors(v))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                parent[static_cast<std::size_t>(w)] = v;
            }
    // Edge index e <-> non-root vertex order[e + 1] and its parent.
    std::vector<int> open(static_cast<std::size_t>(n));
    std::vector<int> sizes;
    const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (std::uint64_t cut = 0; cut < subsets; ++cut) {
        std::fill(open.begin(), open.end(), 1);
        sizes.clear();
        for (int e = n - 2; e >= 0; --e) {
            const int child = order[static_cast<std::size_t>(e) + 1];
            if ((cut >> e) & 1U)
                sizes.push_back(open[static_cast<std::size_t>(child)]);
            else
                open[static_cast<std::size_t>(parent[static_cast<std::size_t>(child)])] +=
                    open[static_cast<std::size_t>(child)];
        }
        sizes.push_back(open[static_cast<std::size_t>(order[0])]);
        types.insert(Partition::from_unsorted(sizes));
    }
    return types;
}

namespace {

// Connected vertex sets of `size` that contain `root`, drawn from `allowed`.
void connected_sets(const Graph& g, VertexMask current, VertexMask frontier, VertexMask excluded,
                    VertexMask allowed, int size, const std::function<bool(VertexMask)>& visit, bool& stop) {
    if (stop)
        return;
    if (popcount(current) == size) {
        stop = visit(current);
        return;
    }
    VertexMask cand = frontier & allowed & ~excluded;
    VertexMask local_excluded = excluded;
    while (cand && !stop) {
        const int w = lowest_vertex(cand);
        cand &= cand - 1;
        VertexMask next = current | bit(w);
        connected_sets(g, next, (frontier | g.neighbor_mask(w)) & ~next, local_excluded, allowed, size, visit,
                       stop);
        local_excluded |= bit(w);
    }
}

bool split_connected(const Graph& g, VertexMask rest, std::vector<int>& remaining_sizes) {
    if (rest == 0)
        return remaining_sizes.empty();
    const int v = lowest_vertex(rest);
    int last = -1;
    for (std::size_t i = 0; i < remaining_sizes.size(); ++i) {
        const int size = remaining_sizes[i];
        if (size == last)
            continue;
        last = size;
        remaining_sizes.erase(remaining_sizes.begin() + static_cast<long>(i));
        bool found = false;
        connected_sets(
            g, bit(v), g.neighbor_mask(v) & rest, 0, rest, size,
            [&](VertexMask block) {
                std::vector<int> copy = remaining_sizes;
                return split_connected(g, rest & ~block, copy);
            },
            found);
        remaining_sizes.insert(remaining_sizes.begin() + static_cast<long>(i), size);
        if (found)
            return true;
    }
    return false;
}

}  // namespace

bool has_connected_partition(const Graph& g, const Partition& type) {
    if (type.size() != g.order())
        throw DegreeMismatch("has_connected_partition: type size differs from the vertex count");
    if (g.is_tree() && g.order() <= 24)
        return tree_connected_partition_types(g).count(type) > 0;
    if (g.order() > 16)
        throw TooLarge("has_connected_partition: more than 16 vertices");
    std::vector<int> sizes = type.parts();
    return split_connected(g, g.all_vertices(), sizes);
}

// ---------------------------------------------------------------- bipartitions

BipartitionSizes bipartition_sizes(const Graph& g) {
    if (!g.is_connected())
        throw NotConnected("graph is not connected");
    BipartitionSizes sizes;
    if (g.order() == 0)
        return sizes;
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (color[static_cast<std::size_t>(w)] < 0) {
                color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                q.push(w);
            } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                throw NotBipartite("graph has an odd cycle");
            }
        }
    }
    for (int c : color)
        (c == 0 ? sizes.first : sizes.second) += 1;
    return sizes;
}

bool balanced_stable_bipartition(const Graph& g) {
    BipartitionSizes s = bipartition_sizes(g);
    return std::abs(s.first - s.second) <= 1;
}

// ---------------------------------------------------------------- chromatic polynomial

namespace {

using Poly = std::vector<Integer>;  // coefficient of k^i at index i

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    return a;
}

struct DcSolver {
    std::map<std::vector<VertexMask>, Poly> memo;

    // Adjacency given as masks over vertices 0..n-1.
    Poly solve(const std::vector<VertexMask>& adj) {
        const int n = static_cast<int>(adj.size());
        if (auto it = memo.find(adj); it != memo.end())
            return it->second;
        Poly result;
        bool any_edge = false;
        for (VertexMask m : adj)
            any_edge |= m != 0;
        if (!any_edge) {
            result.assign(static_cast<std::size_t>(n) + 1, 0);
            result[static_cast<std::size_t>(n)] = 1;
        } else {
            // Split into components when disconnected.
            VertexMask all = n == 64 ? ~VertexMask{0} : ((VertexMask{1} << n) - 1);
            VertexMask comp = bit(0), frontier = bit(0);
            while (frontier) {
                VertexMask nxt = 0;
                for (VertexMask f = frontier; f; f &= f - 1)
                    nxt |= adj[static_cast<std::size_t>(lowest_vertex(f))];
                frontier = nxt & ~comp;
                comp |= nxt;
            }
            if (comp != all) {
                result = poly_mul(solve(induced(adj, comp)), solve(induced(adj, all & ~comp)));
            } else {
                // Edge at a vertex of minimum positive degree.
                int u = -1, best = 1 << 30;
                for (int v = 0; v < n; ++v) {
                    int d = popcount(adj[static_cast<std::size_t>(v)]);
                    if (d > 0 && d < best) {
                        best = d;
                        u = v;
                    }
                }
                const int w = lowest_vertex(adj[static_cast<std::size_t>(u)]);
                std::vector<VertexMask> deleted = adj;
                deleted[static_cast<std::size_t>(u)] &= ~bit(w);
                deleted[static_cast<std::size_t>(w)] &= ~bit(u);
                result = poly_sub(solve(deleted), solve(contract(adj, u, w)));
            }
        }
        while (result.size() > 1 && result.back() == 0)
            result.pop_back();
        memo.emplace(adj, result);
        return result;
    }

    static std::vector<VertexMask> induced(const std::vector<VertexMask>& adj, VertexMask keep) {
        std::vector<int> relabel(adj.size(), -1);
        int next = 0;
        for (std::size_t v = 0; v < adj.size(); ++v)
            if ((keep >> v) & 1U)
                relabel[v] = next++;
        std::vector<VertexMask> out(static_cast<std::size_t>(next), 0);
        for (std::size_t v = 0; v < adj.size(); ++v) {
            if (relabel[v] < 0)
                continue;
            for (VertexMask m = adj[v] & keep; m; m &= m - 1)
                out[static_cast<std::size_t>(relabel[v])] |= bit(relabel[static_cast<std::size_t>(lowest_vertex(m))]);
        }
        return out;
    }

    // Merge w into u and drop w.
    static std::vector<VertexMask> contract(const std::vector<VertexMask>& adj, int u, int w) {
        std::vector<VertexMask> merged = adj;
        merged[static_cast<std::size_t>(u)] |= merged[static_cast<std::size_t>(w)];
        merged[static_cast<std::size_t>(u)] &= ~(bit(u) | bit(w));
        for (std::size_t v = 0; v < merged.size(); ++v)
            if ((merged[v] >> w) & 1U) {
                merged[v] &= ~bit(w);
                if (static_cast<int>(v) != u)
                    merged[v] |= bit(u);
            }
        VertexMask all = merged.size() == 64 ? ~VertexMask{0} : ((VertexMask{1} << merged.size()) - 1);
        return induced(merged, all & ~bit(w));
    }
};

}  // namespace

std::vector<Integer> chromatic_polynomial_coefficients(const Graph& g) {
    if (g.order() > 20)
        throw TooLarge("chromatic_polynomial: more than 20 vertices");
    std::vector<VertexMask> adj;
    for (int v = 0; v < g.order(); ++v)
        adj.push_back(g.neighbor_mask(v));
    DcSolver solver;
    return solver.solve(adj);
}

Integer chromatic_polynomial(const Graph& g, int k) {
    Poly coeffs = chromatic_polynomial_coefficients(g);
    Integer value = 0, power = 1;
    for (const Integer& c : coeffs) {
        value += c * power;
        power *= k;
    }
    return value;
}

// ---------------------------------------------------------------- independence number

namespace {

int max_stable(const Graph& g, VertexMask rest) {
    if (rest == 0)
        return 0;
    // Vertices of degree <= 1 within `rest` can always be taken.
    int pick = -1, pick_degree = 1 << 30;
    for (VertexMask m = rest; m; m &= m - 1) {
        const int v = lowest_vertex(m);
        const int d = popcount(g.neighbor_mask(v) & rest);
        if (d <= 1)
            return 1 + max_stable(g, rest & ~bit(v) & ~g.neighbor_mask(v));
        if (pick < 0 || d > pick_degree) {
            pick = v;
            pick_degree = d;
        }
    }
    const int with = 1 + max_stable(g, rest & ~bit(pick) & ~g.neighbor_mask(pick));
    const int without = max_stable(g, rest & ~bit(pick));
    return std::max(with, without);
}

}  // namespace

int independence_number(const Graph& g) {
    if (g.order() > 24)
        throw TooLarge("independence_number: more than 24 vertices");
    return max_stable(g, g.all_vertices());
}

// ---------------------------------------------------------------- random instances

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0)
        return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 1)
        throw BadSpec("random_tree: need at least one vertex");
    if (n == 1)
        return Graph(1, {});
    if (n == 2)
        return Graph(2, {{0, 1}});
    std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
    for (int& x : pruefer)
        x = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : pruefer)
        ++degree[static_cast<std::size_t>(x)];
    std::vector<Edge> edges;
    for (int x : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                edges.emplace_back(leaf, x);
                --degree[static_cast<std::size_t>(leaf)];
                --degree[static_cast<std::size_t>(x)];
                break;
            }
    }
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (u < 0)
                u = v;
            else
                edges.emplace_back(u, v);
        }
    return Graph(n, std::move(edges));
}

Graph random_graph(int n, int num, int den, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(den))) < num)
                edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

}  // namespace cslab
