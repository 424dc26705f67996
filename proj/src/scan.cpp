#include "ecl/scan.hpp"

namespace ecl {

FastFacets fast_facets(const FacetSet& fs) {
    FastFacets ff;
    ff.n = fs.n;
    for (const auto& f : fs.ell_facets) {
        std::vector<long long> row;
        for (const auto& z : f.normal) {
            if (!z.fits_slong_p())
                throw InternalError("facet normal entry exceeds int64 range");
            row.push_back(z.get_si());
        }
        ff.ell.push_back(std::move(row));
    }
    return ff;
}

LatticeVector PointBlock::vector(std::size_t i) const {
    std::vector<long long> c(point(i), point(i) + n);
    c.push_back(height);
    return LatticeVector{std::move(c)};
}

namespace {

struct SliceEnum {
    const FastFacets& ff;
    long long b;
    bool interior;
    std::size_t chunk;
    std::size_t* budget;
    const std::function<bool(const PointBlock&)>* sink;

    int n = ff.n;
    long long lo = interior ? 1 : 0;
    std::vector<long long> a;
    std::vector<long long> val;                   // running facet values
    std::vector<std::vector<long long>> max_add;  // max_add[f][depth]: best possible suffix
    PointBlock block;
    bool stopped = false;  // sink asked to stop
    bool capped = false;   // budget ran out

    bool flush() {
        if (block.count() == 0)
            return true;
        bool go = (*sink)(block);
        block.flat.clear();
        return go;
    }

    bool feasible(int depth) const {
        for (std::size_t f = 0; f < val.size(); ++f) {
            long long best = val[f] + max_add[f][static_cast<std::size_t>(depth)];
            if (interior ? best <= 0 : best < 0)
                return false;
        }
        return true;
    }

    void rec(int depth, long long weight) {
        if (stopped || capped)
            return;
        if (depth == n) {
            if (*budget == 0) {
                capped = true;
                return;
            }
            --*budget;
            block.flat.insert(block.flat.end(), a.begin(), a.end());
            if (block.count() >= chunk)
                if (!flush())
                    stopped = true;
            return;
        }
        long long remaining_lo = lo * (n - depth - 1);
        for (long long v = lo; v <= b; ++v) {
            if (weight + v + remaining_lo > 2 * b)
                break;
            a[static_cast<std::size_t>(depth)] = v;
            for (std::size_t f = 0; f < val.size(); ++f)
                val[f] += ff.ell[f][static_cast<std::size_t>(depth)] * v;
            if (feasible(depth + 1))
                rec(depth + 1, weight + v);
            for (std::size_t f = 0; f < val.size(); ++f)
                val[f] -= ff.ell[f][static_cast<std::size_t>(depth)] * v;
            if (stopped || capped)
                return;
        }
    }

    bool run() {
        a.assign(static_cast<std::size_t>(n), 0);
        block.n = n;
        block.height = b;
        val.clear();
        for (const auto& row : ff.ell)
            val.push_back(row[static_cast<std::size_t>(n)] * b);
        max_add.clear();
        for (const auto& row : ff.ell) {
            std::vector<long long> suf(static_cast<std::size_t>(n) + 1, 0);
            for (int i = n - 1; i >= 0; --i) {
                long long c = row[static_cast<std::size_t>(i)];
                suf[static_cast<std::size_t>(i)] =
                    suf[static_cast<std::size_t>(i) + 1] + (c > 0 ? c * b : c * lo);
            }
            max_add.push_back(std::move(suf));
        }
        if (b >= lo * n && feasible(0))
            rec(0, 0);
        if (!stopped && !capped)
            flush();
        return !capped;
    }
};

} // namespace

bool cone_slice_chunked(const FastFacets& ff, long long height, bool interior, std::size_t chunk,
                        std::size_t& budget, const std::function<bool(const PointBlock&)>& sink) {
    if (height < 0)
        throw ContractError("negative height");
    SliceEnum se{ff, height, interior, chunk, &budget, &sink};
    return se.run();
}

bool cone_slice(const FastFacets& ff, long long height, bool interior, PointBlock& out, std::size_t cap) {
    out = PointBlock{};
    out.n = ff.n;
    out.height = height;
    std::size_t budget = cap;
    auto sink = std::function<bool(const PointBlock&)>([&](const PointBlock& pb) {
        out.flat.insert(out.flat.end(), pb.flat.begin(), pb.flat.end());
        return true;
    });
    return cone_slice_chunked(ff, height, interior, cap + 1, budget, sink);
}

} // namespace ecl
