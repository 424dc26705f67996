#include "ecl/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace ecl {

bool vs_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet vs_sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1)
        throw ParseError(ParseError::Kind::BadHeader, "vertex count must be positive");
    if (edges.empty())
        throw ParseError(ParseError::Kind::EmptyEdgeSet, "edge set must be nonempty");

    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n) + 1, {});
    g.inc_.assign(static_cast<std::size_t>(n) + 1, {});

    std::set<std::pair<int, int>> seen;
    int j = 0;
    for (auto [a, b] : edges) {
        ++j;
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError(ParseError::Kind::VertexRange,
                             "edge y" + std::to_string(j) + " has endpoint out of range");
        if (a == b)
            throw ParseError(ParseError::Kind::Loop, "edge y" + std::to_string(j) + " is a loop");
        if (a > b)
            std::swap(a, b);
        if (!seen.insert({a, b}).second)
            throw ParseError(ParseError::Kind::DuplicateEdge,
                             "edge y" + std::to_string(j) + " duplicates an earlier edge");
        g.edges_.push_back({a, b});
        g.adj_[static_cast<std::size_t>(a)].push_back(b);
        g.adj_[static_cast<std::size_t>(b)].push_back(a);
        g.inc_[static_cast<std::size_t>(a)].push_back(j);
        g.inc_[static_cast<std::size_t>(b)].push_back(j);
    }
    for (int v = 1; v <= n; ++v)
        std::sort(g.adj_[static_cast<std::size_t>(v)].begin(), g.adj_[static_cast<std::size_t>(v)].end());

    // connectivity
    std::vector<char> vis(static_cast<std::size_t>(n) + 1, 0);
    std::queue<int> bfs;
    bfs.push(1);
    vis[1] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int u : g.neighbors(v))
            if (!vis[static_cast<std::size_t>(u)]) {
                vis[static_cast<std::size_t>(u)] = 1;
                ++reached;
                bfs.push(u);
            }
    }
    if (reached != n)
        throw ParseError(ParseError::Kind::Disconnected, "graph is not connected");
    return g;
}

bool Graph::adjacent(int a, int b) const {
    const auto& nb = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
}

int Graph::edge_index(int a, int b) const {
    if (a > b)
        std::swap(a, b);
    for (int j : inc_[static_cast<std::size_t>(a)]) {
        Edge e = edges_[static_cast<std::size_t>(j - 1)];
        if (e.a == a && e.b == b)
            return j;
    }
    return 0;
}

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

} // namespace

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (blank(body))
            continue;
        std::istringstream ls(body);
        if (n < 0) {
            if (!(ls >> n) || n < 1)
                throw ParseError(ParseError::Kind::BadHeader,
                                 "line " + std::to_string(lineno) + ": expected vertex count");
            std::string rest;
            if (ls >> rest)
                throw ParseError(ParseError::Kind::BadHeader,
                                 "line " + std::to_string(lineno) + ": trailing tokens after vertex count");
            continue;
        }
        int a, b;
        if (!(ls >> a >> b))
            throw ParseError(ParseError::Kind::BadLine,
                             "line " + std::to_string(lineno) + ": expected \"i j\"");
        std::string rest;
        if (ls >> rest)
            throw ParseError(ParseError::Kind::BadLine,
                             "line " + std::to_string(lineno) + ": trailing tokens after edge");
        edges.emplace_back(a, b);
    }
    if (n < 0)
        throw ParseError(ParseError::Kind::BadHeader, "empty document");
    return Graph::from_edges(n, edges);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(ParseError::Kind::BadHeader, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

namespace {

// Bron-Kerbosch with pivoting on the complement graph: maximal cliques of
// the complement are exactly the maximal stable sets of g.
void bk_stable(const Graph& g, std::vector<int>& R, std::vector<int> P, std::vector<int> X,
               std::vector<VertexSet>& out, std::size_t cap) {
    if (P.empty() && X.empty()) {
        if (out.size() >= cap)
            throw CapExceeded("maximal stable set cap exceeded", cap, out.size() + 1);
        out.push_back(vs_sorted(R));
        return;
    }
    // pivot: vertex of P∪X with most complement-neighbors inside P
    int pivot = 0, best = -1;
    auto nonadj_count = [&](int u) {
        int c = 0;
        for (int w : P)
            if (w != u && !g.adjacent(u, w))
                ++c;
        return c;
    };
    for (int u : P)
        if (nonadj_count(u) > best) {
            best = nonadj_count(u);
            pivot = u;
        }
    for (int u : X)
        if (nonadj_count(u) > best) {
            best = nonadj_count(u);
            pivot = u;
        }
    std::vector<int> cands;
    for (int u : P)
        if (u == pivot || g.adjacent(u, pivot))
            cands.push_back(u);
    for (int u : cands) {
        std::vector<int> nP, nX;
        for (int w : P)
            if (w != u && !g.adjacent(u, w))
                nP.push_back(w);
        for (int w : X)
            if (w != u && !g.adjacent(u, w))
                nX.push_back(w);
        R.push_back(u);
        bk_stable(g, R, std::move(nP), std::move(nX), out, cap);
        R.pop_back();
        P.erase(std::find(P.begin(), P.end(), u));
        X.push_back(u);
    }
}

} // namespace

std::vector<VertexSet> maximal_stable_sets(const Graph& g, std::size_t cap) {
    std::vector<VertexSet> out;
    std::vector<int> R, P, X;
    for (int v = 1; v <= g.vertex_count(); ++v)
        P.push_back(v);
    bk_stable(g, R, std::move(P), std::move(X), out, cap);
    std::sort(out.begin(), out.end());
    return out;
}

CoverReport cover_report(const Graph& g, std::size_t cap) {
    CoverReport r;
    auto stables = maximal_stable_sets(g, cap);
    for (const auto& f : stables) {
        VertexSet cover;
        for (int v = 1; v <= g.vertex_count(); ++v)
            if (!vs_contains(f, v))
                cover.push_back(v);
        r.minimal_covers.push_back(std::move(cover));
        r.alpha = std::max(r.alpha, static_cast<int>(f.size()));
    }
    std::sort(r.minimal_covers.begin(), r.minimal_covers.end());
    r.tau = g.vertex_count();
    for (const auto& c : r.minimal_covers)
        r.tau = std::min(r.tau, static_cast<int>(c.size()));
    r.unmixed = true;
    for (const auto& c : r.minimal_covers)
        if (static_cast<int>(c.size()) != r.tau)
            r.unmixed = false;
    if (!r.unmixed) {
        // lex-least cover of minimum size vs lex-least of maximum size
        const VertexSet* small = nullptr;
        const VertexSet* large = nullptr;
        std::size_t maxsz = 0;
        for (const auto& c : r.minimal_covers)
            maxsz = std::max(maxsz, c.size());
        for (const auto& c : r.minimal_covers) {
            if (!small && static_cast<int>(c.size()) == r.tau)
                small = &c;
            if (!large && c.size() == maxsz)
                large = &c;
        }
        r.witness_pair = std::make_pair(*small, *large);
    }
    return r;
}

namespace {

// rotate/reflect so the traversal starts at the least vertex and leaves it
// along the incident cycle edge with the smaller index
OddCycle canonical_cycle(const Graph& g, const std::vector<int>& verts) {
    int k = static_cast<int>(verts.size());
    int mpos = 0;
    for (int i = 1; i < k; ++i)
        if (verts[static_cast<std::size_t>(i)] < verts[static_cast<std::size_t>(mpos)])
            mpos = i;
    auto at = [&](int i) { return verts[static_cast<std::size_t>(((i % k) + k) % k)]; };
    int fwd = g.edge_index(at(mpos), at(mpos + 1));
    int bwd = g.edge_index(at(mpos), at(mpos - 1));
    OddCycle c;
    c.vertices.reserve(static_cast<std::size_t>(k));
    if (fwd < bwd)
        for (int i = 0; i < k; ++i)
            c.vertices.push_back(at(mpos + i));
    else
        for (int i = 0; i < k; ++i)
            c.vertices.push_back(at(mpos - i));
    for (int i = 0; i < k; ++i)
        c.edge_indices.push_back(
            g.edge_index(c.vertices[static_cast<std::size_t>(i)], c.vertices[static_cast<std::size_t>((i + 1) % k)]));
    return c;
}

} // namespace

std::variant<Bipartition, OddCycle> bipartition_or_odd_cycle(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1), parent(static_cast<std::size_t>(n) + 1, 0);
    std::queue<int> q;
    color[1] = 0;
    q.push(1);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v))
            if (color[static_cast<std::size_t>(u)] < 0) {
                color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
                parent[static_cast<std::size_t>(u)] = v;
                q.push(u);
            }
    }
    for (int j = 1; j <= g.edge_count(); ++j) {
        Edge e = g.edge(j);
        if (color[static_cast<std::size_t>(e.a)] != color[static_cast<std::size_t>(e.b)])
            continue;
        // close the cycle through the BFS tree
        std::vector<int> pa{e.a}, pb{e.b};
        auto lift = [&](std::vector<int>& p) { p.push_back(parent[static_cast<std::size_t>(p.back())]); };
        std::set<int> seen(pa.begin(), pa.end());
        while (pa.back() != 1)
            lift(pa), seen.insert(pa.back());
        while (!seen.count(pb.back()))
            lift(pb);
        int meet = pb.back();
        while (pa.back() != meet)
            pa.pop_back();
        std::vector<int> cyc(pa.rbegin(), pa.rend()); // meet .. e.a
        for (std::size_t i = 0; i + 1 < pb.size(); ++i)
            cyc.push_back(pb[i]); // e.b .. child of meet
        if (cyc.size() < 3 || cyc.size() % 2 == 0)
            throw InternalError("odd cycle extraction produced a non-odd walk");
        return canonical_cycle(g, cyc);
    }
    Bipartition bp;
    for (int v = 1; v <= n; ++v)
        (color[static_cast<std::size_t>(v)] == 0 ? bp.left : bp.right).push_back(v);
    return bp;
}

bool is_bipartite(const Graph& g) {
    return std::holds_alternative<Bipartition>(bipartition_or_odd_cycle(g));
}

namespace {

struct CycleEnum {
    const Graph& g;
    std::size_t cap;
    std::vector<OddCycle> found;
    std::vector<int> path;
    std::vector<char> onpath;
    int root = 0;

    void dfs(int v) {
        for (int u : g.neighbors(v)) {
            if (u == root && path.size() >= 3) {
                if (path[1] < path.back()) { // one direction per cycle
                    if (path.size() % 2 == 1) {
                        if (found.size() >= cap)
                            throw CapExceeded("odd cycle cap exceeded", cap, found.size() + 1);
                        found.push_back(canonical_cycle(g, path));
                    }
                }
                continue;
            }
            if (u <= root || onpath[static_cast<std::size_t>(u)])
                continue;
            path.push_back(u);
            onpath[static_cast<std::size_t>(u)] = 1;
            dfs(u);
            onpath[static_cast<std::size_t>(u)] = 0;
            path.pop_back();
        }
    }
};

bool cycle_less(const OddCycle& a, const OddCycle& b) {
    auto sa = vs_sorted(a.vertices), sb = vs_sorted(b.vertices);
    if (sa != sb)
        return sa < sb;
    return a.vertices < b.vertices;
}

} // namespace

std::vector<OddCycle> enumerate_odd_cycles(const Graph& g, std::size_t cap, std::vector<OddCycle>* partial) {
    CycleEnum ce{g, cap, {}, {}, std::vector<char>(static_cast<std::size_t>(g.vertex_count()) + 1, 0), 0};
    try {
        for (int r = 1; r <= g.vertex_count(); ++r) {
            ce.root = r;
            ce.path = {r};
            ce.onpath.assign(ce.onpath.size(), 0);
            ce.onpath[static_cast<std::size_t>(r)] = 1;
            ce.dfs(r);
        }
    } catch (const CapExceeded&) {
        if (partial) {
            std::sort(ce.found.begin(), ce.found.end(), cycle_less);
            *partial = std::move(ce.found);
        }
        throw;
    }
    std::sort(ce.found.begin(), ce.found.end(), cycle_less);
    return ce.found;
}

std::vector<OddCycle> induced_odd_cycles(const Graph& g, const std::vector<int>& lengths, std::size_t cap) {
    std::vector<OddCycle> out;
    for (const auto& c : enumerate_odd_cycles(g, cap)) {
        int k = static_cast<int>(c.vertices.size());
        if (std::find(lengths.begin(), lengths.end(), k) == lengths.end())
            continue;
        // induced: no chords, i.e. exactly k edges inside the vertex set
        int inside = 0;
        auto vs = vs_sorted(c.vertices);
        for (int j = 1; j <= g.edge_count(); ++j) {
            Edge e = g.edge(j);
            if (vs_contains(vs, e.a) && vs_contains(vs, e.b))
                ++inside;
        }
        if (inside == k)
            out.push_back(c);
    }
    return out;
}

std::vector<int> spanning_tree(const Graph& g) {
    std::vector<int> tree;
    std::vector<char> vis(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::queue<int> q;
    q.push(1);
    vis[1] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v))
            if (!vis[static_cast<std::size_t>(u)]) {
                vis[static_cast<std::size_t>(u)] = 1;
                tree.push_back(g.edge_index(v, u));
                q.push(u);
            }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

PropertyPResult has_property_P(const Graph& g, int edge_idx) {
    if (edge_idx < 1 || edge_idx > g.edge_count())
        throw ContractError("edge index out of range");
    Edge y = g.edge(edge_idx);
    for (int z : g.neighbors(y.a)) {
        if (z == y.b)
            continue;
        for (int zp : g.neighbors(y.b)) {
            if (zp == y.a)
                continue;
            if (z == zp || !g.adjacent(z, zp))
                return {false, z, zp};
        }
    }
    return {true, 0, 0};
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& a) {
    std::vector<int> out(a.begin(), a.end());
    for (int v : a)
        for (int u : g.neighbors(v))
            out.push_back(u);
    return vs_sorted(std::move(out));
}

bool is_vertex_cover(const Graph& g, const VertexSet& c) {
    for (const Edge& e : g.edges())
        if (!vs_contains(c, e.a) && !vs_contains(c, e.b))
            return false;
    return true;
}

bool is_stable_set(const Graph& g, const VertexSet& s) {
    for (const Edge& e : g.edges())
        if (vs_contains(s, e.a) && vs_contains(s, e.b))
            return false;
    return true;
}

} // namespace ecl
