#ifndef POLYCERT_IO_HPP
#define POLYCERT_IO_HPP

// JSON schemas for the file formats: polytopes with optional facet-vector
// assignments, simplicial complexes, retraction sequences, and torsion
// certificates.

#include <json.hpp>

#include "polycert/retraction.hpp"
#include "polycert/simplicial.hpp"
#include "polycert/torsion.hpp"

namespace polycert {

using nlohmann::json;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json int_to_json(const Int& x);
Int int_from_json(const json& j);

// {"dim": n, "facets": [names], "vertices": [[facet names]],
//  "char": {name: [ints]}} with "char" optional
json polytope_to_json(const CombinatorialPolytope& p,
                      const std::optional<CharMap>& lambda = std::nullopt);
CombinatorialPolytope polytope_from_json(const json& j);
std::optional<CharMap> char_from_json(const json& j,
                                      const CombinatorialPolytope& p);

// {"vertices": [names], "maximal": [[names]]}
json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);

// list of {"vertex": id, "max_face_facets": [names],
//          "complex_maximal_faces": [[names]]}
json sequence_to_json(const CombinatorialPolytope& p,
                      const RetractionSequence& seq);
// rebuilt by replay; throws io_error when the stored steps disagree with
// the replayed ones
RetractionSequence sequence_from_json(const CombinatorialPolytope& p,
                                      const json& j);

// {prime, kind, sequence, trace, a2: {coeffs}, a3: {d_values}, conclusion}
// plus source_sequence/source_trace/reason where applicable; sequences
// carry the data needed to re-attach them to their polytopes
json certificate_to_json(const TorsionCertificate& cert,
                         const CombinatorialPolytope& evidence_poly,
                         const CombinatorialPolytope* source_poly = nullptr);
TorsionCertificate certificate_from_json(
    const json& j, const CombinatorialPolytope& evidence_poly,
    const CombinatorialPolytope* source_poly = nullptr);

json scan_to_json(const PrimeScanReport& rep,
                  const CombinatorialPolytope& evidence_poly,
                  const CombinatorialPolytope* source_poly = nullptr);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace polycert

#endif
