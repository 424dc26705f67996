#ifndef ECL_SCAN_HPP
#define ECL_SCAN_HPP

#include <omp.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "ecl/cone.hpp"
#include "ecl/lattice.hpp"

namespace ecl {

struct ScanLimits {
    std::size_t point_cap = 20'000'000; // lattice points per scan
    std::size_t chunk = 262'144;        // points per kernel dispatch
    int threads = 0;                    // 0 = OpenMP default, 1 = serial
};

// int64 mirror of the ell-facet normals for hot loops; coordinate facets are
// the sign conditions a_i >= 0 and are handled implicitly
struct FastFacets {
    int n = 0;
    std::vector<std::vector<long long>> ell; // each length n+1, inward
};

FastFacets fast_facets(const FacetSet& fs);

// Lattice points of the cone slice at one height, lexicographic order, flat
// layout (count * n coordinates; the height is implicit).
struct PointBlock {
    int n = 0;
    long long height = 0;
    std::vector<long long> flat;

    std::size_t count() const { return n ? flat.size() / static_cast<std::size_t>(n) : 0; }
    const long long* point(std::size_t i) const { return flat.data() + i * static_cast<std::size_t>(n); }
    LatticeVector vector(std::size_t i) const;
};

// Streams the slice in lexicographic order through fixed-size chunks.
// `sink` is called with each filled block and returns false to stop early.
// Returns false iff the point budget ran out; `budget` is decremented.
bool cone_slice_chunked(const FastFacets& ff, long long height, bool interior, std::size_t chunk,
                        std::size_t& budget, const std::function<bool(const PointBlock&)>& sink);

// Whole slice in one block (small scans and tests). Returns false on cap.
bool cone_slice(const FastFacets& ff, long long height, bool interior, PointBlock& out, std::size_t cap);

// Reference kernel map: one result per point, input order.
template <class R, class K>
std::vector<R> map_points_serial(const PointBlock& pb, K&& kernel) {
    std::vector<R> out(pb.count());
    for (std::size_t i = 0; i < pb.count(); ++i)
        out[i] = kernel(pb.point(i), pb.height);
    return out;
}

// OpenMP kernel map; bitwise-identical output to map_points_serial. Kernels
// must be pure functions of the point.
template <class R, class K>
std::vector<R> map_points_parallel(const PointBlock& pb, K&& kernel, int threads) {
    if (threads == 1)
        return map_points_serial<R>(pb, kernel);
    std::vector<R> out(pb.count());
    const auto cnt = static_cast<std::int64_t>(pb.count());
    int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt)
    for (std::int64_t i = 0; i < cnt; ++i)
        out[static_cast<std::size_t>(i)] = kernel(pb.point(static_cast<std::size_t>(i)), pb.height);
    return out;
}

} // namespace ecl

#endif
