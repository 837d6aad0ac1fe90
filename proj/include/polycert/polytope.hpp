#ifndef POLYCERT_POLYTOPE_HPP
#define POLYCERT_POLYTOPE_HPP

// Simple polytopes as abstract vertex-facet incidence. No coordinates are
// stored; every operation is a pure function of the incidence data.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polycert {

struct polytope_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sorted list of facet indices.
using FacetSet = std::vector<int>;

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> errors;
    std::string summary() const;
};

class CombinatorialPolytope {
public:
    CombinatorialPolytope() = default;
    CombinatorialPolytope(int dim, std::vector<std::string> facet_names,
                          std::vector<FacetSet> vertices);

    int dim() const { return dim_; }
    int facet_count() const { return static_cast<int>(facet_names_.size()); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& facet_names() const { return facet_names_; }
    const std::string& facet_name(int f) const { return facet_names_.at(f); }
    std::optional<int> facet_index(const std::string& name) const;
    const FacetSet& vertex_facets(int v) const { return vertices_.at(v); }
    const std::vector<FacetSet>& vertices() const { return vertices_; }
    bool vertex_on_facet(int v, int f) const;
    std::vector<int> vertices_of_facet(int f) const;
    std::optional<int> find_vertex(const FacetSet& s) const;
    // vertices sharing dim-1 facets with v
    std::vector<int> vertex_neighbours(int v) const;

private:
    int dim_ = 0;
    std::vector<std::string> facet_names_;
    std::vector<FacetSet> vertices_;
};

ValidationReport validate(const CombinatorialPolytope& p);
// throws polytope_error with the report summary on failure
void require_valid(const CombinatorialPolytope& p, const std::string& what);

struct Face {
    FacetSet defining_facets;
    FacetSet support;          // all facets containing every vertex below
    std::vector<int> vertices; // sorted vertex ids
    int dim = -1;              // -1 marks the empty face
    bool is_empty() const { return vertices.empty(); }
    bool operator==(const Face& other) const {
        return vertices == other.vertices;
    }
};

// The face {v : S subset of S(v)}; empty-marker Face if no vertex qualifies.
Face face_from_facets(const CombinatorialPolytope& p, FacetSet s);

// A face of a simple polytope is itself a simple polytope under restricted
// incidence. vertex_ids/facet_origins translate back to p's numbering.
struct FacePolytope {
    CombinatorialPolytope poly;
    std::vector<int> vertex_ids;
    std::vector<int> facet_origins;
};
FacePolytope face_as_polytope(const CombinatorialPolytope& p, const Face& f);

// All distinct nonempty proper faces, grouped by nothing; includes vertices
// and facets but not the whole polytope.
std::vector<Face> all_faces(const CombinatorialPolytope& p);

// f_0 .. f_{n-1}
std::vector<std::size_t> face_counts(const CombinatorialPolytope& p);

// P x Delta^k. Facets: originals (names kept) then D0..Dk for the simplex
// facets (Ds = everything except copy s).
CombinatorialPolytope product_with_simplex(const CombinatorialPolytope& p,
                                           int k);

// Facet bijection p -> q realizing a vertex-set bijection, if any.
std::optional<std::vector<int>> find_isomorphism(
    const CombinatorialPolytope& p, const CombinatorialPolytope& q);

bool isomorphic(const CombinatorialPolytope& p,
                const CombinatorialPolytope& q);

// set helpers shared across modules (inputs sorted)
FacetSet set_union(const FacetSet& a, const FacetSet& b);
FacetSet set_intersect(const FacetSet& a, const FacetSet& b);
FacetSet set_difference(const FacetSet& a, const FacetSet& b);
bool is_subset(const FacetSet& a, const FacetSet& b);

}  // namespace polycert

#endif
