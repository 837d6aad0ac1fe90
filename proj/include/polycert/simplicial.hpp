#ifndef POLYCERT_SIMPLICIAL_HPP
#define POLYCERT_SIMPLICIAL_HPP

// Dual simplicial complexes of simple polytopes, the simplicial wedge at a
// vertex, and vertex-vector assignments for the combinatorial fan side.

#include "polycert/charmap.hpp"
#include "polycert/polytope.hpp"

namespace polycert {

struct SimplicialComplex {
    std::vector<std::string> vertex_names;
    std::vector<std::vector<int>> maximal;  // sorted vertex ids, antichain

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    std::optional<int> vertex_index(const std::string& name) const;
};

// Distinct vertex names, sorted in-range simplices forming an antichain,
// every vertex used.
ValidationReport validate_complex(const SimplicialComplex& k);

// Largest simplex size minus one.
int complex_dim(const SimplicialComplex& k);
bool is_pure(const SimplicialComplex& k);

// One complex vertex per facet, one maximal (n-1)-simplex per polytope
// vertex (its facet set).
SimplicialComplex dual_of_polytope(const CombinatorialPolytope& p);

// Replace the vertex by k+1 copies: the full new k-simplex joined with the
// link of the vertex, together with the boundary of the new simplex joined
// with the maximal simplices avoiding it. The literal variant joins single
// new vertices instead of the boundary facets; it agrees for k = 1 but is
// not pure for k >= 2.
SimplicialComplex simplicial_k_wedge(const SimplicialComplex& k, int v,
                                     int wedge_k, bool literal = false);

struct VertexCharMap {
    int ambient_rank = 0;
    std::vector<IntVector> vectors;  // one per complex vertex
};

// Pass iff the vectors of every maximal simplex are linearly independent.
ValidationReport validate_cones(const SimplicialComplex& k,
                                const VertexCharMap& lambda);

// Determinant of the simplex's vectors (requires |simplex| == rank).
Int cone_determinant(const VertexCharMap& lambda,
                     const std::vector<int>& simplex);

// Vectors on the 2-wedge at v: old vertices get (0,0,lambda_i), the zeroth
// copy (-1,-1,lambda(v)), then (1,a,0_n) and (0,1,0_n). Requires a != 1;
// throws if some maximal cone of the wedge becomes dependent.
VertexCharMap wedge_vertex_vectors(const SimplicialComplex& k,
                                   const VertexCharMap& lambda, int v,
                                   const Int& a);

// Vertex bijection matching the maximal-simplex sets, if any.
std::optional<std::vector<int>> find_complex_isomorphism(
    const SimplicialComplex& a, const SimplicialComplex& b);
bool complexes_isomorphic(const SimplicialComplex& a,
                          const SimplicialComplex& b);

}  // namespace polycert

#endif
