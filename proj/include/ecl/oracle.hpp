#ifndef ECL_ORACLE_HPP
#define ECL_ORACLE_HPP

#include <optional>
#include <vector>

#include "ecl/cone.hpp"
#include "ecl/graph.hpp"
#include "ecl/lattice.hpp"

// Brute-force reference implementations. Everything here favors the most
// direct exhaustive formulation over speed; the fast paths are checked
// against these, so none of this may share search logic with src/ modules.
namespace ecl::oracle {

// Facet normals from every n-subset of generators: the subset's nullspace
// vector, kept when it is nonnegative on all of B. Primitive int64 vectors,
// sorted. Intended for n <= 6.
std::vector<std::vector<long long>> facets_bruteforce(const GeneratorSet& gs);

// Exhaustive search over all generator multisets of size exactly b.
std::optional<Representation> membership_enumerate(const Graph& g, const LatticeVector& w);

// Every representation of w (multisets of size b evaluating to w).
std::vector<Representation> representations_all(const Graph& g, const LatticeVector& w);

// All inclusion-minimal vertex covers by scanning every vertex subset.
std::vector<VertexSet> minimal_covers_bruteforce(const Graph& g);

// Edge-index sets of all odd cycles, found by testing every cyclic
// arrangement of every odd vertex subset. Sorted.
std::vector<std::vector<int>> odd_cycle_edge_sets_bruteforce(const Graph& g);

bool is_spanning_tree(const Graph& g, const std::vector<int>& edge_indices);

// Every spanning tree as a sorted edge-index set (subset scan).
std::vector<std::vector<int>> all_spanning_trees(const Graph& g);

// Minimal generators of the interior ideal up to degree `bound`, computed
// entirely from the facet and membership oracles above. Small graphs only.
std::vector<LatticeVector> interior_generators_bruteforce(const Graph& g, long long bound);

// Max of sum over `part_edges` (1-based indices) of alpha across all
// representations of w; nullopt when w has none.
std::optional<long long> max_part_alpha_bruteforce(const Graph& g, const std::vector<int>& part_edges,
                                                   const LatticeVector& w);

} // namespace ecl::oracle

#endif
