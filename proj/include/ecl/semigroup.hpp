#ifndef ECL_SEMIGROUP_HPP
#define ECL_SEMIGROUP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ecl/cone.hpp"
#include "ecl/graph.hpp"
#include "ecl/lattice.hpp"
#include "ecl/scan.hpp"

namespace ecl {

// Decides w ∈ ℕB with an explicit certificate. Complete bounded search:
// depth-first over edge coefficients (largest-degree edges first), vertex
// coefficients forced, unit coefficient the remainder; failed residuals are
// memoized. First hit under the deterministic branch order is returned.
std::optional<Representation> membership(const Graph& g, const LatticeVector& w);

// Representation using edge generators only. Caller must ensure |w̃| = 2b.
std::optional<std::vector<long long>> membership_edges_only(const Graph& g, const LatticeVector& w);

// ẽ_τ = Σ_{tree edges}(v_i,1) + e_{n+1}; degree n.
std::pair<LatticeVector, Representation> spanning_tree_vector(const Graph& g, const std::vector<int>& tree);

// ẽ(C) built from a minimal cover: one private edge per cover vertex
// (smallest edge index), plus (e_i,1) for untouched outside vertices, plus
// e_{n+1}; degree n-s+1.
std::pair<LatticeVector, Representation> cover_vector(const Graph& g, const VertexSet& cover);

// (1_C,(k+1)/2) from the alternating cycle edges avoiding `anchor` plus
// (e_anchor,1).
std::pair<LatticeVector, Representation> odd_cycle_vector(const Graph& g, const OddCycle& c, int anchor);

struct NormalityReport {
    enum class Verdict { Normal, NotNormal, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::optional<LatticeVector> witness; // in R+B ∩ Z^{n+1} but not in ℕB
    long long checked_degree = 0;         // heights fully verified
    long long degree_bound = 0;
    long long threshold = 0;              // Normal requires checked_degree >= threshold
    std::size_t lattice_points_checked = 0;
    bool capped = false;
};

// Height-by-height scan: every cone lattice point at height h must peel some
// generator and stay in the cone. With all lower heights verified this is
// equivalent to ℕB-membership, and a peel failure is an exact witness of
// non-normality. threshold < 0 means the default n.
NormalityReport is_normal(const Graph& g, const FacetSet& fs, long long degree_bound,
                          const ScanLimits& lim = {}, long long threshold = -1);

} // namespace ecl

#endif
