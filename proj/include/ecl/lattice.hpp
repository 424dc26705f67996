#ifndef ECL_LATTICE_HPP
#define ECL_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ecl/errors.hpp"
#include "ecl/graph.hpp"

namespace ecl {

// Integer vector (a_1..a_n, b) in Z^{n+1}; the last coordinate is the degree.
struct LatticeVector {
    std::vector<long long> coords;

    int dim() const { return static_cast<int>(coords.size()); }
    int n() const { return dim() - 1; }
    long long degree() const { return coords.back(); }
    long long entry(int i) const { return coords[static_cast<std::size_t>(i - 1)]; } // 1-based, i <= n
    // |a| = sum of the first n coordinates
    long long weight() const;

    bool operator==(const LatticeVector& o) const = default;
    bool operator<(const LatticeVector& o) const { return coords < o.coords; }
};

LatticeVector lattice_vector(std::vector<long long> coords);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
std::string to_string(const LatticeVector& w);

// Coefficients expressing a vector over B:
//   sum alpha_j (v_j,1) + sum beta_i (e_i,1) + lambda e_{n+1}
struct Representation {
    std::vector<long long> alpha; // size q, edge coefficients
    std::vector<long long> beta;  // size n, vertex coefficients
    long long lambda = 0;
};

LatticeVector evaluate(const Graph& g, const Representation& r);

// Validates the defining identity against `w`; throws ContractError on
// mismatch or negative coefficients.
Representation checked_representation(const Graph& g, Representation r, const LatticeVector& w);

} // namespace ecl

#endif
