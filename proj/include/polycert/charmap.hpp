#ifndef POLYCERT_CHARMAP_HPP
#define POLYCERT_CHARMAP_HPP

// Characteristic functions: primitive integer vectors on facets, their
// face-induced quotient maps, and the local singularity group orders.

#include <map>
#include <optional>

#include "polycert/lattice.hpp"
#include "polycert/polytope.hpp"

namespace polycert {

struct CharMap {
    int ambient_rank = 0;
    std::vector<IntVector> vectors;  // one per facet index

    const IntVector& at(int facet) const { return vectors.at(facet); }
};

// Pass iff every vector is primitive of length ambient_rank and the vectors
// at every vertex have nonzero determinant. Checking vertices suffices: any
// nonempty facet intersection extends to a vertex corner.
ValidationReport validate_rchar(const CombinatorialPolytope& p,
                                const CharMap& lambda);
void require_rchar(const CombinatorialPolytope& p, const CharMap& lambda,
                   const std::string& what);

struct InducedCharMap {
    Face face;
    std::vector<IntVector> sat;   // basis of the saturated support lattice
    std::vector<IntVector> comp;  // completion to a basis of Z^n
    // facet index of the ambient polytope -> primitive induced vector
    std::map<int, IntVector> vectors;
    // gcd removed when primitivizing each projection
    std::map<int, Int> prim_scales;
    bool trivial = false;  // face == whole polytope, vectors are lambda itself
};

// The quotient map lambda_F: facets of F get primitive(projection of
// lambda(F_j)) modulo the span of the support vectors. comp, when given,
// must complete the saturation basis to a basis of Z^n.
InducedCharMap induce_on_face(
    const CombinatorialPolytope& p, const CharMap& lambda, const Face& f,
    const std::optional<std::vector<IntVector>>& comp = std::nullopt);

struct SingularityGroup {
    std::vector<Int> invariant_factors;
    Int order;  // product of the factors; >= 1 for valid pairs
};

Int singularity_order(const CombinatorialPolytope& p, const CharMap& lambda,
                      int v);

// Order of the singularity group of vertex v inside face f (dimension-0
// faces give order 1; the whole polytope reduces to singularity_order).
Int singularity_order_in_face(
    const CombinatorialPolytope& p, const CharMap& lambda, const Face& f,
    int v, const std::optional<std::vector<IntVector>>& comp = std::nullopt);

SingularityGroup singularity_group(const CombinatorialPolytope& p,
                                   const CharMap& lambda, int v);
SingularityGroup singularity_group_in_face(
    const CombinatorialPolytope& p, const CharMap& lambda, const Face& f,
    int v, const std::optional<std::vector<IntVector>>& comp = std::nullopt);

// Given lambda(target) = sum coeffs[i] * lambda(combo[i]) over Q, returns
// the positive integer d with
//   lambda_F(target cap F) = (sum coeffs[i] * lambda_F(combo[i] cap F)) / d.
// Zero coefficients are dropped with their facets before the check.
Int compute_dF(const CombinatorialPolytope& p, const CharMap& lambda,
               const Face& f, int target_facet, std::vector<int> combo_facets,
               std::vector<Rat> coeffs);

}  // namespace polycert

#endif
