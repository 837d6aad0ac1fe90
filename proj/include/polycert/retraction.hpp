#ifndef POLYCERT_RETRACTION_HPP
#define POLYCERT_RETRACTION_HPP

// Retraction sequences: vertex-by-vertex collapses of a simple polytope
// through free vertices, the sequences induced on blowdowns and 2-wedges,
// and the singularity-order traces along them.

#include <functional>
#include <map>
#include <optional>

#include "polycert/charmap.hpp"
#include "polycert/constructions.hpp"
#include "polycert/polytope.hpp"

namespace polycert {

// A union of faces, stored by its maximal members (an antichain under
// vertex-set inclusion).
struct SubComplex {
    std::vector<Face> maximal_faces;
    std::vector<int> vertex_ids() const;
};

SubComplex whole_complex(const CombinatorialPolytope& p);

// Vertices with a unique maximal containing face.
std::vector<int> free_vertices(const SubComplex& b);

// The union of all faces of b avoiding the given free vertex.
SubComplex next_complex(const CombinatorialPolytope& p, const SubComplex& b,
                        int vertex);

struct RetractionStep {
    SubComplex complex;  // B before removing the vertex
    Face max_face;       // the unique maximal face containing it
    int vertex;
};

struct RetractionSequence {
    std::vector<RetractionStep> steps;
    std::vector<int> vertex_order() const;
};

using StepPredicate = std::function<bool(const Face&, int)>;

// Backtracking search with vertex-index tie-breaking. start pins the first
// vertex; vertices in defer are picked only when no other free vertex
// exists; predicate filters candidate (max_face, vertex) pairs; seed, when
// given, shuffles the candidate order (deterministically per seed).
std::optional<RetractionSequence> find_retraction(
    const CombinatorialPolytope& p, std::optional<int> start = std::nullopt,
    const std::vector<int>& defer = {}, const StepPredicate& predicate = {},
    std::optional<unsigned> seed = std::nullopt);

// Independent replay of the defining conditions; throws on any violation.
void verify_retraction(const CombinatorialPolytope& p,
                       const RetractionSequence& seq);

// Per-step order of the vertex inside its maximal face.
std::vector<Int> singularity_trace(const CombinatorialPolytope& p,
                                   const CharMap& lambda,
                                   const RetractionSequence& seq);

// A sequence whose every step order is coprime to the prime, or nullopt
// after exhausting the search space (a nonexistence certificate at corpus
// sizes).
std::optional<RetractionSequence> find_p_clean_retraction(
    const CombinatorialPolytope& p, const CharMap& lambda, const Int& prime,
    std::optional<int> start = std::nullopt,
    const std::vector<int>& defer = {});

enum class StepCase { unaffected, face_of, blowdown_of };

struct InducedRetractionReport {
    RetractionSequence sequence;       // on bd.result
    std::vector<StepCase> step_cases;  // one per output step
    std::vector<int> source_steps;     // output step -> input step index
    std::map<int, Int> d_values;       // output step -> d_t (blowdown-of
                                       // steps with the combination given)
    std::map<int, std::string> d_errors;
};

// The retraction of the collapsed polytope induced by a retraction of the
// original: fiber images are retracted at their first appearance and later
// appearances are skipped. When lambda is given and the collapsed facet's
// vector is a rational combination of the p-facet vectors, each
// blowdown-of step gets its contraction factor d_t.
InducedRetractionReport induced_retraction_blowdown(
    const CombinatorialPolytope& p, const RetractionSequence& seq,
    const BlowdownResult& bd,
    const std::optional<CharMap>& lambda = std::nullopt);

struct WedgeRetraction {
    WedgeResult wedge;
    CharMap wedge_map;
    RetractionSequence sequence;  // on wedge.result
    std::vector<Int> trace;
    std::vector<int> source_steps;  // wedge step -> input step index
};

// The explicit 3m-2a step sequence on the 2-wedge: each vertex off the
// wedged facet expands to its corner copy and the two hyperplane copies,
// each vertex on it to a single step. Requires the input to retract the
// wedged facet's vertices last.
WedgeRetraction induced_retraction_2wedge(const CombinatorialPolytope& p,
                                          const RetractionSequence& seq,
                                          int facet, const CharMap& lambda,
                                          const Int& a);

// Restriction of the sequence's vertex order to a face, replayed inside the
// face; throws if some restricted vertex is not free when reached.
RetractionSequence face_induced_retraction(const CombinatorialPolytope& p,
                                           const RetractionSequence& seq,
                                           const Face& f);

}  // namespace polycert

#endif
