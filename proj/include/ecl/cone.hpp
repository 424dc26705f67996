#ifndef ECL_CONE_HPP
#define ECL_CONE_HPP

#include <gmpxx.h>

#include <vector>

#include "ecl/graph.hpp"
#include "ecl/lattice.hpp"

namespace ecl {

struct GeneratorTag {
    enum class Kind { Vertex, Edge, Unit } kind;
    int index = 0; // vertex or edge index, 1-based
};

// B = {(e_1,1),..,(e_n,1),(v_1,1),..,(v_q,1),e_{n+1}} in the fixed order.
struct GeneratorSet {
    int n = 0;
    std::vector<std::vector<long long>> gens; // each of length n+1
    std::vector<GeneratorTag> tags;

    int count() const { return static_cast<int>(gens.size()); }
};

GeneratorSet build_generators(const Graph& g);

// Inward facet normal of R+B, stored as a primitive integer vector. Either
// (e_i,0) (coordinate kind) or a positive multiple of (-ell,1) with ell
// rational (ell kind).
struct FacetNormal {
    std::vector<mpz_class> normal;  // length n+1, normal . g >= 0 for all g in B
    bool coordinate = false;
    int coord_index = 0;            // i for (e_i,0)
    std::vector<mpq_class> ell;     // ell kind only: the paper's ell vector, length n
};

struct FacetSet {
    int n = 0;
    std::vector<FacetNormal> coordinate_facets; // exactly n, ordered by i
    std::vector<FacetNormal> ell_facets;        // sorted lexicographically by ell

    int m() const { return static_cast<int>(ell_facets.size()); }
    int facet_count() const { return n + m(); }
    // facets in report order: coordinate facets first, then ell facets
    const FacetNormal& facet(int idx) const;
};

// Irreducible facet description of R+B by incremental double description
// over exact integer arithmetic.
FacetSet enumerate_facets(const GeneratorSet& gs);

enum class Region { Outside, Boundary, Interior };

struct ConePosition {
    Region region = Region::Outside;
    std::vector<int> tight; // facet indices (report order) with value 0, Boundary only
};

ConePosition position(const FacetSet& fs, const LatticeVector& w);

// Facet normals forced by the structure theory: (1/2,..,1/2) for
// non-bipartite graphs plus the indicator of every maximal stable set.
// Must be a subset of the ell facets.
std::vector<std::vector<mpq_class>> expected_special_normals(const Graph& g,
                                                             std::size_t stable_cap = 1'000'000);

// Rank over Q of the characteristic vectors of tree ∪ {extra_edge};
// equals n exactly when an odd cycle is present.
int tree_plus_edge_rank(const Graph& g, const std::vector<int>& tree, int extra_edge);

// exact signed value of facet . w
mpz_class facet_value(const FacetNormal& f, const LatticeVector& w);

} // namespace ecl

#endif
