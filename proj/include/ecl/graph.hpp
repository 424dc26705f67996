#ifndef ECL_GRAPH_HPP
#define ECL_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ecl/errors.hpp"

namespace ecl {

// Sorted set of 1-based vertex indices.
using VertexSet = std::vector<int>;

bool vs_contains(const VertexSet& s, int v);
VertexSet vs_sorted(std::vector<int> v);

struct Edge {
    int a = 0, b = 0; // endpoints, a < b, 1-based
};

// Connected simple graph with labeled vertices x_1..x_n and edges y_1..y_q.
// Vertex and edge indices are 1-based throughout; edge order is semantic.
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    Edge edge(int j) const { return edges_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& incident_edges(int v) const { return inc_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool adjacent(int a, int b) const;
    // 1-based edge index joining a,b; 0 if absent.
    int edge_index(int a, int b) const;

private:
    Graph() = default;
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_; // adj_[v] sorted ascending
    std::vector<std::vector<int>> inc_; // inc_[v] edge indices, ascending
};

// Edge-list document: first non-comment line is n, then one "i j" pair per
// line; '#' starts a comment.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

struct CoverReport {
    int tau = 0;
    int alpha = 0;
    bool unmixed = false;
    std::vector<VertexSet> minimal_covers; // sorted lexicographically
    // two minimal covers of different sizes; present iff not unmixed
    std::optional<std::pair<VertexSet, VertexSet>> witness_pair;
};

// All maximal stable sets, sorted lexicographically. Throws CapExceeded.
std::vector<VertexSet> maximal_stable_sets(const Graph& g, std::size_t cap = 1'000'000);

// Complete inclusion-minimal vertex cover enumeration via complementation of
// maximal stable sets. Throws CapExceeded past `cap` covers.
CoverReport cover_report(const Graph& g, std::size_t cap = 1'000'000);

// Odd cycle in canonical traversal: starts at the smallest vertex and leaves
// it along the incident cycle edge with the smaller index.
struct OddCycle {
    std::vector<int> vertices;     // traversal v_1..v_k, k odd
    std::vector<int> edge_indices; // edge_indices[i] joins vertices[i], vertices[i+1 mod k]
};

struct Bipartition {
    VertexSet left;  // class containing vertex 1
    VertexSet right;
};

// BFS two-coloring, or the odd cycle closed by the first violating edge.
std::variant<Bipartition, OddCycle> bipartition_or_odd_cycle(const Graph& g);

bool is_bipartite(const Graph& g);

// Every simple odd cycle, once up to rotation/reflection, sorted by
// (sorted vertex set, traversal). Throws CapExceeded carrying the partial
// list via the `partial` out-parameter when more than `cap` cycles exist.
std::vector<OddCycle> enumerate_odd_cycles(const Graph& g, std::size_t cap = 100'000,
                                           std::vector<OddCycle>* partial = nullptr);

// Induced odd cycles of length in `lengths`, same order as above.
std::vector<OddCycle> induced_odd_cycles(const Graph& g, const std::vector<int>& lengths,
                                         std::size_t cap = 100'000);

// BFS tree from vertex 1; returns the n-1 tree edge indices, ascending.
std::vector<int> spanning_tree(const Graph& g);

struct PropertyPResult {
    bool holds = true;
    // violating pair of neighbors when !holds: z ~ x, zp ~ x' and {z,zp} is
    // not an edge (z == zp means a common neighbor, which also violates)
    int z = 0, zp = 0;
};

// Property (P) of edge y_j = {x,x'}: any z ~ x (z != x') and z' ~ x'
// (z' != x) must themselves be adjacent.
PropertyPResult has_property_P(const Graph& g, int edge_idx);

VertexSet closed_neighborhood(const Graph& g, const VertexSet& a);

bool is_vertex_cover(const Graph& g, const VertexSet& c);
bool is_stable_set(const Graph& g, const VertexSet& s);

} // namespace ecl

#endif
