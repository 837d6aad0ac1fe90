#ifndef POLYCERT_CONSTRUCTIONS_HPP
#define POLYCERT_CONSTRUCTIONS_HPP

// Face truncation (blowup), the inverse collapse of a facet with product
// structure (blowdown), the polytopal k-wedge, and the characteristic-map
// transports that go with them.

#include <map>

#include "polycert/charmap.hpp"
#include "polycert/polytope.hpp"

namespace polycert {

struct BlowupResult {
    CombinatorialPolytope result;
    int new_facet = -1;          // index of the truncation facet in result
    std::vector<int> facet_map;  // old facet index -> new (identity here)
};

// Truncate a proper face of dimension 0..n-2. Each vertex of the face with
// support facets H_1..H_{n-d} is replaced by the n-d vertices
// (S(v) minus H_s) plus the new facet. The new facet is named
// "T:<support names>".
BlowupResult blowup(const CombinatorialPolytope& p, const Face& f);

struct ProductStructure {
    Face big_facet;   // the facet to collapse
    Face base_face;   // the face it collapses onto
    // facets containing base_face (other than big_facet) first, then the
    // one facet completing the simplex directions
    std::vector<int> p_facets;
    std::map<int, FacetSet> fiber_key;  // vertex of big_facet -> key
    std::map<int, int> miss_index;      // vertex -> index into p_facets
};

// Finds the unique decomposition of the facet as base_face x simplex, with
// the simplex directions cut out by p_facets. Errors when no candidate
// verifies or when several do (reported with all witnesses).
ProductStructure detect_product_structure(const CombinatorialPolytope& p,
                                          int big_facet, const Face& base);

struct BlowdownResult {
    CombinatorialPolytope result;
    ProductStructure ps;
    std::vector<int> facet_map;   // old facet -> new facet, -1 for big_facet
    std::vector<int> vertex_map;  // old vertex -> new vertex
};

BlowdownResult blowdown(const CombinatorialPolytope& p,
                        const ProductStructure& ps);
BlowdownResult blowdown(const CombinatorialPolytope& p, int big_facet,
                        const Face& base);

struct WedgeResult {
    CombinatorialPolytope result;
    std::vector<int> facet_map;  // old facet -> new facet, -1 for the wedged
    int h_facet = -1;            // the hyperplane facet "H"
    std::vector<int> w_facets;   // the simplex facets "W1".."Wk"
};

// The k-wedge of p at a facet, built directly; isomorphic to the blowdown
// of p x Delta^k of (facet x Delta^k) on the facet.
WedgeResult k_wedge(const CombinatorialPolytope& p, int facet, int k);

// Characteristic map on p x Delta^k extending lambda: polytope facets get
// (0_k, lambda(F_j)); D0 gets (-1,..,-1, lambda(wedged)); D1 gets
// (1, a, 0,..); Dj gets the j-th unit vector. Requires a != 1.
CharMap wedge_char_on_product(const CombinatorialPolytope& p,
                              const CharMap& lambda, int wedged_facet, int k,
                              const Int& a);

// The same rows transported along the wedge facet list (old facets minus
// the wedged one, then H, then W1..Wk).
CharMap k_wedge_char(const CombinatorialPolytope& p, const CharMap& lambda,
                     int wedged_facet, int k, const Int& a);

struct RestrictedChar {
    CharMap char_map;                    // on bd.result
    std::vector<int> merged_vertices;    // vertices of bd.result (images of
                                         // big_facet fibers)
    std::vector<Int> merged_dets;        // determinant witness per merged
                                         // vertex
};

// Transport lambda across the blowdown facet bijection. Throws when the
// transported map fails validation (dependent vectors at some vertex of the
// collapsed polytope); the witnesses for the merged vertices are returned.
RestrictedChar restrict_char(const CombinatorialPolytope& p,
                             const CharMap& lambda, const BlowdownResult& bd);

}  // namespace polycert

#endif
