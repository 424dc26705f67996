#include "ecl/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace ecl {

namespace {

struct EdgeSlot {
    int a0, b0; // 0-based endpoints
    int orig;   // 1-based edge index
};

// largest degree-sum first, then index: keeps early branches tight
std::vector<EdgeSlot> ordered_edges(const Graph& g) {
    std::vector<EdgeSlot> v;
    for (int j = 1; j <= g.edge_count(); ++j) {
        Edge e = g.edge(j);
        v.push_back({e.a - 1, e.b - 1, j});
    }
    std::stable_sort(v.begin(), v.end(), [&](const EdgeSlot& x, const EdgeSlot& y) {
        int dx = g.degree(x.a0 + 1) + g.degree(x.b0 + 1);
        int dy = g.degree(y.a0 + 1) + g.degree(y.b0 + 1);
        if (dx != dy)
            return dx > dy;
        return x.orig < y.orig;
    });
    return v;
}

struct U128Hash {
    std::size_t operator()(unsigned __int128 x) const {
        auto lo = static_cast<std::uint64_t>(x);
        auto hi = static_cast<std::uint64_t>(x >> 64);
        std::uint64_t h = lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x9e3779b97f4a7c15ULL + (lo << 6));
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

class MembershipSearch {
public:
    MembershipSearch(const Graph& g, const LatticeVector& w, bool edges_only)
        : g_(g), edges_(ordered_edges(g)), b_(w.degree()), edges_only_(edges_only) {
        res_.assign(w.coords.begin(), w.coords.end() - 1);
        packable_ = res_.size() <= 16;
        for (long long x : res_)
            if (x > 255)
                packable_ = false;
        alpha_.assign(edges_.size(), 0);
        memo_.resize(edges_.size() + 1);
    }

    std::optional<Representation> solve() {
        long long weight = std::accumulate(res_.begin(), res_.end(), 0LL);
        if (!dfs(0, weight, 0))
            return std::nullopt;
        Representation r;
        r.alpha.assign(static_cast<std::size_t>(g_.edge_count()), 0);
        for (std::size_t k = 0; k < edges_.size(); ++k)
            r.alpha[static_cast<std::size_t>(edges_[k].orig - 1)] = alpha_[k];
        r.beta = beta_;
        r.lambda = lambda_;
        return r;
    }

private:
    unsigned __int128 pack() const {
        unsigned __int128 key = 0;
        for (long long x : res_)
            key = (key << 8) | static_cast<unsigned>(x);
        return key;
    }

    bool dfs(std::size_t pos, long long weight, long long used) {
        long long slack = b_ - used - weight; // final lambda if we stop adding edges
        if (edges_only_ ? weight == 0 : slack >= 0) {
            if (edges_only_ && used != b_)
                return false;
            beta_ = res_;
            lambda_ = edges_only_ ? 0 : slack;
            for (std::size_t k = pos; k < edges_.size(); ++k)
                alpha_[k] = 0;
            return true;
        }
        if (pos == edges_.size())
            return false;
        // future edge usage must close the gap
        long long maxfut = 0;
        for (std::size_t k = pos; k < edges_.size(); ++k)
            maxfut += std::min(res_[static_cast<std::size_t>(edges_[k].a0)],
                               res_[static_cast<std::size_t>(edges_[k].b0)]);
        long long need = edges_only_ ? (weight + 1) / 2 : -slack;
        if (maxfut < need)
            return false;
        unsigned __int128 key = 0;
        if (packable_) {
            key = pack();
            if (memo_[pos].count(key))
                return false;
        }
        const EdgeSlot& e = edges_[pos];
        long long cap = std::min(res_[static_cast<std::size_t>(e.a0)], res_[static_cast<std::size_t>(e.b0)]);
        if (!edges_only_)
            cap = std::min(cap, b_ - used);
        for (long long v = cap; v >= 0; --v) {
            res_[static_cast<std::size_t>(e.a0)] -= v;
            res_[static_cast<std::size_t>(e.b0)] -= v;
            bool ok = dfs(pos + 1, weight - 2 * v, used + v);
            res_[static_cast<std::size_t>(e.a0)] += v;
            res_[static_cast<std::size_t>(e.b0)] += v;
            if (ok) {
                alpha_[pos] = v;
                return true;
            }
        }
        if (packable_)
            memo_[pos].insert(key);
        return false;
    }

    const Graph& g_;
    std::vector<EdgeSlot> edges_;
    long long b_;
    bool edges_only_;
    bool packable_ = false;
    std::vector<long long> res_;
    std::vector<long long> alpha_;
    std::vector<long long> beta_;
    long long lambda_ = 0;
    std::vector<std::unordered_set<unsigned __int128, U128Hash>> memo_;
};

bool nonneg(const LatticeVector& w) {
    return std::all_of(w.coords.begin(), w.coords.end(), [](long long x) { return x >= 0; });
}

} // namespace

std::optional<Representation> membership(const Graph& g, const LatticeVector& w) {
    if (w.dim() != g.vertex_count() + 1)
        throw ContractError("dimension mismatch in membership");
    if (!nonneg(w) || w.weight() > 2 * w.degree())
        return std::nullopt;
    MembershipSearch ms(g, w, false);
    auto r = ms.solve();
    if (r)
        return checked_representation(g, std::move(*r), w);
    return std::nullopt;
}

std::optional<std::vector<long long>> membership_edges_only(const Graph& g, const LatticeVector& w) {
    if (w.dim() != g.vertex_count() + 1)
        throw ContractError("dimension mismatch in membership_edges_only");
    if (w.weight() != 2 * w.degree())
        throw ContractError("membership_edges_only requires |w| = 2b");
    if (!nonneg(w))
        return std::nullopt;
    MembershipSearch ms(g, w, true);
    auto r = ms.solve();
    if (!r)
        return std::nullopt;
    checked_representation(g, *r, w);
    return r->alpha;
}

namespace {

void require_spanning(const Graph& g, const std::vector<int>& tree) {
    int n = g.vertex_count();
    if (static_cast<int>(tree.size()) != n - 1)
        throw ContractError("spanning tree must have n-1 edges");
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    for (int j : tree) {
        if (j < 1 || j > g.edge_count())
            throw ContractError("tree edge index out of range");
        Edge e = g.edge(j);
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb)
            throw ContractError("tree edges contain a cycle");
        parent[static_cast<std::size_t>(ra)] = rb;
    }
}

} // namespace

std::pair<LatticeVector, Representation> spanning_tree_vector(const Graph& g, const std::vector<int>& tree) {
    require_spanning(g, tree);
    Representation r;
    r.alpha.assign(static_cast<std::size_t>(g.edge_count()), 0);
    r.beta.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int j : tree)
        r.alpha[static_cast<std::size_t>(j - 1)] = 1;
    r.lambda = 1;
    LatticeVector w = evaluate(g, r);
    return {w, std::move(r)};
}

std::pair<LatticeVector, Representation> cover_vector(const Graph& g, const VertexSet& cover) {
    if (!is_vertex_cover(g, cover))
        throw ContractError("not a vertex cover");
    int n = g.vertex_count();
    Representation r;
    r.alpha.assign(static_cast<std::size_t>(g.edge_count()), 0);
    r.beta.assign(static_cast<std::size_t>(n), 0);
    r.lambda = 1;
    VertexSet touched = cover;
    for (int v : cover) {
        int priv = 0;
        for (int j : g.incident_edges(v)) {
            Edge e = g.edge(j);
            int other = e.a == v ? e.b : e.a;
            if (!vs_contains(cover, other)) {
                priv = j;
                break; // incident lists ascend, so this is the smallest index
            }
        }
        if (!priv)
            throw ContractError("cover vertex x" + std::to_string(v) +
                                " has no private edge; cover is not minimal");
        r.alpha[static_cast<std::size_t>(priv - 1)] = 1;
        Edge e = g.edge(priv);
        touched.push_back(e.a == v ? e.b : e.a);
    }
    touched = vs_sorted(std::move(touched));
    for (int v = 1; v <= n; ++v)
        if (!vs_contains(touched, v))
            r.beta[static_cast<std::size_t>(v - 1)] = 1;
    LatticeVector w = evaluate(g, r);
    return {w, std::move(r)};
}

std::pair<LatticeVector, Representation> odd_cycle_vector(const Graph& g, const OddCycle& c, int anchor) {
    int k = static_cast<int>(c.vertices.size());
    auto it = std::find(c.vertices.begin(), c.vertices.end(), anchor);
    if (it == c.vertices.end())
        throw ContractError("anchor is not on the cycle");
    int off = static_cast<int>(it - c.vertices.begin());
    Representation r;
    r.alpha.assign(static_cast<std::size_t>(g.edge_count()), 0);
    r.beta.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    // alternating edges z_2z_3, z_4z_5, ... avoid the anchor z_1
    for (int i = 1; i < k; i += 2) {
        int e = c.edge_indices[static_cast<std::size_t>((off + i) % k)];
        r.alpha[static_cast<std::size_t>(e - 1)] += 1;
    }
    r.beta[static_cast<std::size_t>(anchor - 1)] = 1;
    r.lambda = 0;
    LatticeVector w = evaluate(g, r);
    return {w, std::move(r)};
}

NormalityReport is_normal(const Graph& g, const FacetSet& fs, long long degree_bound,
                          const ScanLimits& lim, long long threshold) {
    if (degree_bound < 1)
        throw ContractError("degree bound must be at least 1");
    NormalityReport rep;
    rep.degree_bound = degree_bound;
    rep.threshold = threshold < 0 ? g.vertex_count() : threshold;

    auto gs = build_generators(g);
    FastFacets ff = fast_facets(fs);
    int n = fs.n;
    std::size_t m = ff.ell.size();
    // per-generator facet values, so a peel is a few subtractions
    std::vector<std::vector<long long>> gen_vals;
    for (const auto& gen : gs.gens) {
        std::vector<long long> v;
        for (const auto& row : ff.ell) {
            long long s = 0;
            for (int i = 0; i <= n; ++i)
                s += row[static_cast<std::size_t>(i)] * gen[static_cast<std::size_t>(i)];
            v.push_back(s);
        }
        gen_vals.push_back(std::move(v));
    }

    std::size_t budget = lim.point_cap;
    for (long long h = 1; h <= degree_bound; ++h) {
        bool clean = true;
        auto kernel = [&](const long long* a, long long height) -> char {
            std::vector<long long> wv(m, 0);
            for (std::size_t f = 0; f < m; ++f) {
                long long s = ff.ell[f][static_cast<std::size_t>(n)] * height;
                for (int i = 0; i < n; ++i)
                    s += ff.ell[f][static_cast<std::size_t>(i)] * a[i];
                wv[f] = s;
            }
            for (int gi = 0; gi < gs.count(); ++gi) {
                const auto& gen = gs.gens[static_cast<std::size_t>(gi)];
                bool ok = true;
                for (int i = 0; i < n && ok; ++i)
                    if (gen[static_cast<std::size_t>(i)] && a[i] < gen[static_cast<std::size_t>(i)])
                        ok = false;
                for (std::size_t f = 0; f < m && ok; ++f)
                    if (wv[f] < gen_vals[static_cast<std::size_t>(gi)][f])
                        ok = false;
                if (ok)
                    return 1;
            }
            return 0;
        };
        auto sink = std::function<bool(const PointBlock&)>([&](const PointBlock& pb) {
            rep.lattice_points_checked += pb.count();
            auto flags = map_points_parallel<char>(pb, kernel, lim.threads);
            for (std::size_t i = 0; i < flags.size(); ++i)
                if (!flags[i]) {
                    rep.witness = pb.vector(i);
                    clean = false;
                    return false;
                }
            return true;
        });
        bool within_cap = cone_slice_chunked(ff, h, false, lim.chunk, budget, sink);
        if (!clean) {
            rep.verdict = NormalityReport::Verdict::NotNormal;
            rep.checked_degree = h - 1;
            return rep;
        }
        if (!within_cap) {
            rep.capped = true;
            rep.checked_degree = h - 1;
            rep.verdict = NormalityReport::Verdict::Unknown;
            return rep;
        }
        rep.checked_degree = h;
    }
    rep.verdict = rep.checked_degree >= rep.threshold ? NormalityReport::Verdict::Normal
                                                      : NormalityReport::Verdict::Unknown;
    return rep;
}

} // namespace ecl
