#include "ecl/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ecl::oracle {

namespace {

long long det_bareiss(std::vector<std::vector<long long>> m) {
    std::size_t n = m.size();
    long long prev = 1;
    long long sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// nullspace vector of n independent rows in R^{n+1} via cofactor expansion
std::vector<long long> cross_normal(const std::vector<std::vector<long long>>& rows) {
    std::size_t d = rows[0].size();
    std::vector<long long> out(d, 0);
    long long sgn = 1;
    for (std::size_t skip = 0; skip < d; ++skip) {
        std::vector<std::vector<long long>> minor;
        for (const auto& r : rows) {
            std::vector<long long> mr;
            for (std::size_t c = 0; c < d; ++c)
                if (c != skip)
                    mr.push_back(r[c]);
            minor.push_back(std::move(mr));
        }
        out[skip] = sgn * det_bareiss(std::move(minor));
        sgn = -sgn;
    }
    return out;
}

void primitive_ll(std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v)
        g = std::gcd(g, x);
    if (g > 1)
        for (long long& x : v)
            x /= g;
}

} // namespace

std::vector<std::vector<long long>> facets_bruteforce(const GeneratorSet& gs) {
    int n = gs.n, total = gs.count();
    std::set<std::vector<long long>> found;
    std::vector<int> idx(static_cast<std::size_t>(n));
    // iterate all n-element subsets of the generators
    for (int i = 0; i < n; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    auto advance = [&]() {
        int i = n - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == total - n + i)
            --i;
        if (i < 0)
            return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < n; ++k)
            idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
        return true;
    };
    do {
        std::vector<std::vector<long long>> rows;
        for (int i : idx)
            rows.push_back(gs.gens[static_cast<std::size_t>(i)]);
        auto nrm = cross_normal(rows);
        bool zero = std::all_of(nrm.begin(), nrm.end(), [](long long x) { return x == 0; });
        if (zero)
            continue; // subset not of full rank
        bool ok_pos = true, ok_neg = true;
        for (const auto& g : gs.gens) {
            long long s = 0;
            for (std::size_t c = 0; c < g.size(); ++c)
                s += nrm[c] * g[c];
            if (s < 0)
                ok_pos = false;
            if (s > 0)
                ok_neg = false;
        }
        if (!ok_pos && !ok_neg)
            continue;
        if (ok_neg)
            for (long long& x : nrm)
                x = -x;
        primitive_ll(nrm);
        found.insert(std::move(nrm));
    } while (advance());
    return {found.begin(), found.end()};
}

namespace {

// counts over B in its fixed order: vertex generators, edge generators, unit
struct SimplexEnum {
    const Graph& g;
    long long b;
    std::vector<long long> target; // first n coords
    std::vector<long long> beta, alpha;
    std::vector<Representation>* all = nullptr;
    std::optional<Representation> first;

    bool done() const { return !all && first.has_value(); }

    void finish(long long used, const std::vector<long long>& residual) {
        bool clear = std::all_of(residual.begin(), residual.end(), [](long long x) { return x == 0; });
        if (!clear)
            return;
        Representation r{alpha, beta, b - used};
        if (all)
            all->push_back(std::move(r));
        else if (!first)
            first = std::move(r);
    }

    void edges(std::size_t j, long long used, std::vector<long long>& residual) {
        if (done())
            return;
        if (j == alpha.size()) {
            finish(used, residual);
            return;
        }
        Edge e = g.edge(static_cast<int>(j) + 1);
        long long cap = std::min({residual[static_cast<std::size_t>(e.a - 1)],
                                  residual[static_cast<std::size_t>(e.b - 1)], b - used});
        for (long long c = 0; c <= cap && !done(); ++c) {
            alpha[j] = c;
            residual[static_cast<std::size_t>(e.a - 1)] -= c;
            residual[static_cast<std::size_t>(e.b - 1)] -= c;
            edges(j + 1, used + c, residual);
            residual[static_cast<std::size_t>(e.a - 1)] += c;
            residual[static_cast<std::size_t>(e.b - 1)] += c;
        }
        alpha[j] = 0;
    }

    void verts(std::size_t i, long long used, std::vector<long long>& residual) {
        if (done())
            return;
        if (i == beta.size()) {
            edges(0, used, residual);
            return;
        }
        long long cap = std::min(residual[i], b - used);
        for (long long c = 0; c <= cap && !done(); ++c) {
            beta[i] = c;
            residual[i] -= c;
            verts(i + 1, used + c, residual);
            residual[i] += c;
        }
        beta[i] = 0;
    }

    void run() {
        std::vector<long long> residual = target;
        verts(0, 0, residual);
    }
};

std::optional<SimplexEnum> make_simplex(const Graph& g, const LatticeVector& w) {
    if (w.dim() != g.vertex_count() + 1)
        throw ContractError("dimension mismatch");
    if (w.degree() < 0)
        return std::nullopt;
    for (int i = 1; i <= g.vertex_count(); ++i)
        if (w.entry(i) < 0)
            return std::nullopt;
    SimplexEnum se{g,
                   w.degree(),
                   std::vector<long long>(w.coords.begin(), w.coords.end() - 1),
                   std::vector<long long>(static_cast<std::size_t>(g.vertex_count()), 0),
                   std::vector<long long>(static_cast<std::size_t>(g.edge_count()), 0),
                   nullptr,
                   std::nullopt};
    return se;
}

} // namespace

std::optional<Representation> membership_enumerate(const Graph& g, const LatticeVector& w) {
    auto se = make_simplex(g, w);
    if (!se)
        return std::nullopt;
    se->run();
    return se->first;
}

std::vector<Representation> representations_all(const Graph& g, const LatticeVector& w) {
    std::vector<Representation> all;
    auto se = make_simplex(g, w);
    if (!se)
        return all;
    se->all = &all;
    se->run();
    return all;
}

std::vector<VertexSet> minimal_covers_bruteforce(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> covers;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        VertexSet c;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1)))
                c.push_back(v);
        if (!is_vertex_cover(g, c))
            continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < c.size() && minimal; ++drop) {
            VertexSet smaller;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop)
                    smaller.push_back(c[i]);
            if (is_vertex_cover(g, smaller))
                minimal = false;
        }
        if (minimal)
            covers.push_back(std::move(c));
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

std::vector<std::vector<int>> odd_cycle_edge_sets_bruteforce(const Graph& g) {
    int n = g.vertex_count();
    std::set<std::vector<int>> sets;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> verts;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1)))
                verts.push_back(v);
        std::size_t k = verts.size();
        if (k < 3 || k % 2 == 0)
            continue;
        // arrangements fixing verts[0] first; reflection killed by
        // requiring second < last
        std::vector<int> rest(verts.begin() + 1, verts.end());
        std::sort(rest.begin(), rest.end());
        do {
            if (rest.front() > rest.back())
                continue;
            std::vector<int> cyc{verts[0]};
            cyc.insert(cyc.end(), rest.begin(), rest.end());
            bool ok = true;
            std::vector<int> edges;
            for (std::size_t i = 0; i < k && ok; ++i) {
                int e = g.edge_index(cyc[i], cyc[(i + 1) % k]);
                if (e == 0)
                    ok = false;
                else
                    edges.push_back(e);
            }
            if (ok) {
                std::sort(edges.begin(), edges.end());
                sets.insert(std::move(edges));
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return {sets.begin(), sets.end()};
}

bool is_spanning_tree(const Graph& g, const std::vector<int>& edge_indices) {
    int n = g.vertex_count();
    if (static_cast<int>(edge_indices.size()) != n - 1)
        return false;
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    for (int j : edge_indices) {
        if (j < 1 || j > g.edge_count())
            return false;
        Edge e = g.edge(j);
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb)
            return false; // cycle
        parent[static_cast<std::size_t>(ra)] = rb;
    }
    return true; // n-1 edges and acyclic on n vertices => spanning
}

std::vector<std::vector<int>> all_spanning_trees(const Graph& g) {
    int q = g.edge_count(), n = g.vertex_count();
    std::vector<std::vector<int>> trees;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == n - 1) {
            if (is_spanning_tree(g, pick))
                trees.push_back(pick);
            return;
        }
        for (int j = from; j <= q; ++j) {
            pick.push_back(j);
            self(self, j + 1);
            pick.pop_back();
        }
    };
    rec(rec, 1);
    return trees;
}

std::vector<LatticeVector> interior_generators_bruteforce(const Graph& g, long long bound) {
    auto normals = facets_bruteforce(build_generators(g));
    int n = g.vertex_count();
    auto interior = [&](const LatticeVector& w) {
        for (const auto& f : normals) {
            long long s = 0;
            for (int i = 0; i < w.dim(); ++i)
                s += f[static_cast<std::size_t>(i)] * w.coords[static_cast<std::size_t>(i)];
            if (s <= 0)
                return false;
        }
        return true;
    };
    std::vector<LatticeVector> points;
    for (long long b = 1; b <= bound; ++b) {
        std::vector<long long> a(static_cast<std::size_t>(n), 1);
        a.push_back(b);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n) {
                LatticeVector w{a};
                if (interior(w) && membership_enumerate(g, w))
                    points.push_back(w);
                return;
            }
            for (long long v = 1; v <= b; ++v) {
                a[static_cast<std::size_t>(i)] = v;
                self(self, i + 1);
            }
            a[static_cast<std::size_t>(i)] = 1;
        };
        rec(rec, 0);
    }
    std::vector<LatticeVector> gens;
    for (const auto& w : points) {
        bool minimal = true;
        for (const auto& w2 : points) {
            if (w2 == w)
                continue;
            LatticeVector d = w - w2;
            bool nonneg = std::all_of(d.coords.begin(), d.coords.end(), [](long long x) { return x >= 0; });
            if (nonneg && membership_enumerate(g, d)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            gens.push_back(w);
    }
    std::sort(gens.begin(), gens.end(), [](const LatticeVector& x, const LatticeVector& y) {
        if (x.degree() != y.degree())
            return x.degree() < y.degree();
        return x.coords < y.coords;
    });
    return gens;
}

std::optional<long long> max_part_alpha_bruteforce(const Graph& g, const std::vector<int>& part_edges,
                                                   const LatticeVector& w) {
    auto reps = representations_all(g, w);
    if (reps.empty())
        return std::nullopt;
    long long best = -1;
    for (const auto& r : reps) {
        long long s = 0;
        for (int j : part_edges)
            s += r.alpha[static_cast<std::size_t>(j - 1)];
        best = std::max(best, s);
    }
    return best;
}

} // namespace ecl::oracle
