#include "ecl/cone.hpp"

#include <algorithm>
#include <numeric>

namespace ecl {

namespace {

struct Bits128 {
    unsigned long long lo = 0, hi = 0;
    void set(int i) { (i < 64 ? lo : hi) |= 1ULL << (i & 63); }
    friend Bits128 operator&(const Bits128& a, const Bits128& b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend bool subset(const Bits128& a, const Bits128& b) {
        return (a.lo & ~b.lo) == 0 && (a.hi & ~b.hi) == 0;
    }
};

void make_primitive(std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v)
            x /= g;
}

// incremental exact Gaussian elimination used to pick a spanning prefix
struct RowSpace {
    std::vector<std::vector<mpq_class>> rows; // reduced rows
    std::vector<int> lead;                    // pivot column per row

    // returns true (and absorbs) iff v is independent of the current rows
    bool add(std::vector<mpq_class> v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int c = lead[r];
            if (v[static_cast<std::size_t>(c)] == 0)
                continue;
            mpq_class f = v[static_cast<std::size_t>(c)] / rows[r][static_cast<std::size_t>(c)];
            for (std::size_t k = 0; k < v.size(); ++k)
                v[k] -= f * rows[r][k];
        }
        for (std::size_t c = 0; c < v.size(); ++c)
            if (v[c] != 0) {
                rows.push_back(std::move(v));
                lead.push_back(static_cast<int>(c));
                return true;
            }
        return false;
    }
};

// Gauss-Jordan inverse of a d x d exact matrix; throws if singular.
std::vector<std::vector<mpq_class>> invert(std::vector<std::vector<mpq_class>> m) {
    std::size_t d = m.size();
    std::vector<std::vector<mpq_class>> inv(d, std::vector<mpq_class>(d, 0));
    for (std::size_t i = 0; i < d; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && m[piv][col] == 0)
            ++piv;
        if (piv == d)
            throw InternalError("singular matrix in facet enumeration");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        mpq_class p = m[col][col];
        for (std::size_t k = 0; k < d; ++k) {
            m[col][k] /= p;
            inv[col][k] /= p;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            mpq_class f = m[r][col];
            for (std::size_t k = 0; k < d; ++k) {
                m[r][k] -= f * m[col][k];
                inv[r][k] -= f * inv[col][k];
            }
        }
    }
    return inv;
}

struct Ray {
    std::vector<mpz_class> v;
    Bits128 zero; // processed constraints tight at this ray
};

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<long long>& b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool ell_less(const FacetNormal& a, const FacetNormal& b) {
    for (std::size_t i = 0; i < a.ell.size(); ++i) {
        int c = cmp(a.ell[i], b.ell[i]);
        if (c)
            return c < 0;
    }
    return false;
}

} // namespace

GeneratorSet build_generators(const Graph& g) {
    int n = g.vertex_count(), q = g.edge_count();
    GeneratorSet gs;
    gs.n = n;
    for (int i = 1; i <= n; ++i) {
        std::vector<long long> v(static_cast<std::size_t>(n) + 1, 0);
        v[static_cast<std::size_t>(i - 1)] = 1;
        v[static_cast<std::size_t>(n)] = 1;
        gs.gens.push_back(std::move(v));
        gs.tags.push_back({GeneratorTag::Kind::Vertex, i});
    }
    for (int j = 1; j <= q; ++j) {
        Edge e = g.edge(j);
        std::vector<long long> v(static_cast<std::size_t>(n) + 1, 0);
        v[static_cast<std::size_t>(e.a - 1)] = 1;
        v[static_cast<std::size_t>(e.b - 1)] = 1;
        v[static_cast<std::size_t>(n)] = 1;
        gs.gens.push_back(std::move(v));
        gs.tags.push_back({GeneratorTag::Kind::Edge, j});
    }
    std::vector<long long> u(static_cast<std::size_t>(n) + 1, 0);
    u[static_cast<std::size_t>(n)] = 1;
    gs.gens.push_back(std::move(u));
    gs.tags.push_back({GeneratorTag::Kind::Unit, 0});
    return gs;
}

const FacetNormal& FacetSet::facet(int idx) const {
    if (idx < n)
        return coordinate_facets[static_cast<std::size_t>(idx)];
    return ell_facets[static_cast<std::size_t>(idx - n)];
}

// Extreme rays of the dual cone {y : y.g >= 0 for all g in B} are the facet
// normals of R+B. Incremental double description in the fixed B order with
// the combinatorial adjacency test.
FacetSet enumerate_facets(const GeneratorSet& gs) {
    int d = gs.n + 1;
    int total = gs.count();
    if (total > 128)
        throw ContractError("facet enumeration supports at most 128 generators");

    // greedy spanning prefix as the initial simplicial dual cone
    RowSpace rs;
    std::vector<int> basis;
    std::vector<char> in_basis(static_cast<std::size_t>(total), 0);
    for (int i = 0; i < total && static_cast<int>(basis.size()) < d; ++i) {
        std::vector<mpq_class> row(gs.gens[static_cast<std::size_t>(i)].begin(),
                                   gs.gens[static_cast<std::size_t>(i)].end());
        if (rs.add(std::move(row))) {
            basis.push_back(i);
            in_basis[static_cast<std::size_t>(i)] = 1;
        }
    }
    if (static_cast<int>(basis.size()) != d)
        throw InternalError("generators do not span the ambient space");

    std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r)
        m[static_cast<std::size_t>(r)] =
            std::vector<mpq_class>(gs.gens[static_cast<std::size_t>(basis[static_cast<std::size_t>(r)])].begin(),
                                   gs.gens[static_cast<std::size_t>(basis[static_cast<std::size_t>(r)])].end());
    auto inv = invert(std::move(m));

    std::vector<Ray> rays;
    for (int j = 0; j < d; ++j) {
        Ray r;
        mpz_class lcm = 1;
        for (int i = 0; i < d; ++i) {
            mpz_class den = inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (int i = 0; i < d; ++i) {
            mpq_class x = inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * mpq_class(lcm);
            r.v.push_back(x.get_num());
        }
        make_primitive(r.v);
        for (int i = 0; i < d; ++i)
            if (i != j)
                r.zero.set(basis[static_cast<std::size_t>(i)]);
        rays.push_back(std::move(r));
    }

    for (int ci = 0; ci < total; ++ci) {
        if (in_basis[static_cast<std::size_t>(ci)])
            continue;
        const auto& g = gs.gens[static_cast<std::size_t>(ci)];
        std::vector<mpz_class> val(rays.size());
        bool any_neg = false;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(rays[r].v, g);
            if (val[r] < 0)
                any_neg = true;
        }
        if (!any_neg) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (val[r] == 0)
                    rays[r].zero.set(ci);
            continue;
        }
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r)
            if (val[r] >= 0) {
                if (val[r] == 0)
                    rays[r].zero.set(ci);
                next.push_back(rays[r]);
            }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0)
                continue;
            for (std::size_t mneg = 0; mneg < rays.size(); ++mneg) {
                if (val[mneg] >= 0)
                    continue;
                Bits128 common = rays[p].zero & rays[mneg].zero;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size(); ++o) {
                    if (o == p || o == mneg)
                        continue;
                    if (subset(common, rays[o].zero)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent)
                    continue;
                Ray nr;
                nr.v.resize(static_cast<std::size_t>(d));
                for (int k = 0; k < d; ++k)
                    nr.v[static_cast<std::size_t>(k)] = val[p] * rays[mneg].v[static_cast<std::size_t>(k)] -
                                                        val[mneg] * rays[p].v[static_cast<std::size_t>(k)];
                make_primitive(nr.v);
                nr.zero = common;
                nr.zero.set(ci);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    FacetSet fs;
    fs.n = gs.n;
    for (auto& r : rays) {
        FacetNormal f;
        f.normal = std::move(r.v);
        const mpz_class& last = f.normal[static_cast<std::size_t>(gs.n)];
        if (last == 0) {
            int nz = 0, idx = 0;
            for (int i = 0; i < gs.n; ++i)
                if (f.normal[static_cast<std::size_t>(i)] != 0) {
                    ++nz;
                    idx = i + 1;
                }
            if (nz != 1 || f.normal[static_cast<std::size_t>(idx - 1)] != 1)
                throw InternalError("degree-zero facet normal is not a coordinate vector");
            f.coordinate = true;
            f.coord_index = idx;
            fs.coordinate_facets.push_back(std::move(f));
        } else {
            if (last < 0)
                throw InternalError("facet normal with negative last coordinate");
            for (int i = 0; i < gs.n; ++i) {
                mpq_class e(-f.normal[static_cast<std::size_t>(i)], last);
                e.canonicalize();
                f.ell.push_back(std::move(e));
            }
            fs.ell_facets.push_back(std::move(f));
        }
    }
    std::sort(fs.coordinate_facets.begin(), fs.coordinate_facets.end(),
              [](const FacetNormal& a, const FacetNormal& b) { return a.coord_index < b.coord_index; });
    std::sort(fs.ell_facets.begin(), fs.ell_facets.end(), ell_less);
    if (static_cast<int>(fs.coordinate_facets.size()) != gs.n)
        throw InternalError("expected one coordinate facet per vertex");
    return fs;
}

mpz_class facet_value(const FacetNormal& f, const LatticeVector& w) {
    if (static_cast<int>(f.normal.size()) != w.dim())
        throw ContractError("dimension mismatch in facet value");
    mpz_class s = 0;
    for (std::size_t i = 0; i < f.normal.size(); ++i)
        s += f.normal[i] * w.coords[i];
    return s;
}

ConePosition position(const FacetSet& fs, const LatticeVector& w) {
    if (w.dim() != fs.n + 1)
        throw ContractError("vector dimension does not match facet set");
    ConePosition pos;
    std::vector<int> tight;
    for (int idx = 0; idx < fs.facet_count(); ++idx) {
        mpz_class v = facet_value(fs.facet(idx), w);
        if (v < 0) {
            pos.region = Region::Outside;
            return pos;
        }
        if (v == 0)
            tight.push_back(idx);
    }
    if (tight.empty()) {
        pos.region = Region::Interior;
    } else {
        pos.region = Region::Boundary;
        pos.tight = std::move(tight);
    }
    return pos;
}

std::vector<std::vector<mpq_class>> expected_special_normals(const Graph& g, std::size_t stable_cap) {
    std::vector<std::vector<mpq_class>> out;
    int n = g.vertex_count();
    if (!is_bipartite(g))
        out.emplace_back(static_cast<std::size_t>(n), mpq_class(1, 2));
    for (const auto& f : maximal_stable_sets(g, stable_cap)) {
        std::vector<mpq_class> ind(static_cast<std::size_t>(n), 0);
        for (int v : f)
            ind[static_cast<std::size_t>(v - 1)] = 1;
        out.push_back(std::move(ind));
    }
    return out;
}

int tree_plus_edge_rank(const Graph& g, const std::vector<int>& tree, int extra_edge) {
    if (static_cast<int>(tree.size()) != g.vertex_count() - 1)
        throw ContractError("tree must have n-1 edges");
    if (std::find(tree.begin(), tree.end(), extra_edge) != tree.end())
        throw ContractError("extra edge must not lie in the tree");
    std::vector<int> cover;
    RowSpace rs;
    int rank = 0;
    auto add_edge = [&](int j) {
        Edge e = g.edge(j);
        std::vector<mpq_class> v(static_cast<std::size_t>(g.vertex_count()), 0);
        v[static_cast<std::size_t>(e.a - 1)] = 1;
        v[static_cast<std::size_t>(e.b - 1)] = 1;
        if (rs.add(std::move(v)))
            ++rank;
    };
    for (int j : tree)
        add_edge(j);
    add_edge(extra_edge);
    return rank;
}

} // namespace ecl
