#include "ecl/lattice.hpp"

#include <numeric>
#include <sstream>

namespace ecl {

long long LatticeVector::weight() const {
    return std::accumulate(coords.begin(), coords.end() - 1, 0LL);
}

LatticeVector lattice_vector(std::vector<long long> coords) {
    if (coords.size() < 2)
        throw ContractError("lattice vector needs at least two coordinates");
    return LatticeVector{std::move(coords)};
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    if (a.dim() != b.dim())
        throw ContractError("dimension mismatch");
    LatticeVector r = a;
    for (int i = 0; i < a.dim(); ++i)
        r.coords[static_cast<std::size_t>(i)] -= b.coords[static_cast<std::size_t>(i)];
    return r;
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    if (a.dim() != b.dim())
        throw ContractError("dimension mismatch");
    LatticeVector r = a;
    for (int i = 0; i < a.dim(); ++i)
        r.coords[static_cast<std::size_t>(i)] += b.coords[static_cast<std::size_t>(i)];
    return r;
}

std::string to_string(const LatticeVector& w) {
    std::ostringstream ss;
    ss << '(';
    for (int i = 0; i < w.dim(); ++i) {
        if (i)
            ss << ',';
        ss << w.coords[static_cast<std::size_t>(i)];
    }
    ss << ')';
    return ss.str();
}

LatticeVector evaluate(const Graph& g, const Representation& r) {
    int n = g.vertex_count(), q = g.edge_count();
    if (static_cast<int>(r.alpha.size()) != q || static_cast<int>(r.beta.size()) != n)
        throw ContractError("representation has wrong coefficient counts");
    std::vector<long long> c(static_cast<std::size_t>(n) + 1, 0);
    long long deg = r.lambda;
    for (int j = 1; j <= q; ++j) {
        long long a = r.alpha[static_cast<std::size_t>(j - 1)];
        Edge e = g.edge(j);
        c[static_cast<std::size_t>(e.a - 1)] += a;
        c[static_cast<std::size_t>(e.b - 1)] += a;
        deg += a;
    }
    for (int i = 1; i <= n; ++i) {
        c[static_cast<std::size_t>(i - 1)] += r.beta[static_cast<std::size_t>(i - 1)];
        deg += r.beta[static_cast<std::size_t>(i - 1)];
    }
    c[static_cast<std::size_t>(n)] = deg;
    return LatticeVector{std::move(c)};
}

Representation checked_representation(const Graph& g, Representation r, const LatticeVector& w) {
    for (long long a : r.alpha)
        if (a < 0)
            throw ContractError("negative alpha coefficient");
    for (long long b : r.beta)
        if (b < 0)
            throw ContractError("negative beta coefficient");
    if (r.lambda < 0)
        throw ContractError("negative lambda");
    if (evaluate(g, r) != w)
        throw ContractError("representation does not evaluate to its vector");
    return r;
}

} // namespace ecl
