#include "polycert/io.hpp"

#include <fstream>

namespace polycert {

json int_to_json(const Int& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw io_error("expected an integer, got " + j.dump());
}

namespace {

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) return Rat(j.get<std::string>());
    throw io_error("expected a rational, got " + j.dump());
}

json vector_to_json(const IntVector& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

IntVector vector_from_json(const json& j) {
    if (!j.is_array()) throw io_error("expected a vector");
    IntVector v;
    for (const json& x : j) v.push_back(int_from_json(x));
    return v;
}

json trace_to_json(const std::vector<Int>& t) {
    json a = json::array();
    for (const Int& x : t) a.push_back(int_to_json(x));
    return a;
}

std::vector<Int> trace_from_json(const json& j) {
    std::vector<Int> t;
    for (const json& x : j) t.push_back(int_from_json(x));
    return t;
}

int facet_by_name(const CombinatorialPolytope& p, const std::string& name) {
    auto idx = p.facet_index(name);
    if (!idx) throw io_error("unknown facet name: " + name);
    return *idx;
}

json names_of(const CombinatorialPolytope& p, const FacetSet& s) {
    json a = json::array();
    for (int f : s) a.push_back(p.facet_name(f));
    return a;
}

FacetSet facets_from_names(const CombinatorialPolytope& p, const json& j) {
    FacetSet s;
    for (const json& n : j) s.push_back(facet_by_name(p, n.get<std::string>()));
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

json polytope_to_json(const CombinatorialPolytope& p,
                      const std::optional<CharMap>& lambda) {
    json j;
    j["dim"] = p.dim();
    j["facets"] = p.facet_names();
    json vs = json::array();
    for (const FacetSet& s : p.vertices()) vs.push_back(names_of(p, s));
    j["vertices"] = vs;
    if (lambda) {
        json ch = json::object();
        for (int f = 0; f < p.facet_count(); ++f)
            ch[p.facet_name(f)] = vector_to_json(lambda->at(f));
        j["char"] = ch;
    }
    return j;
}

CombinatorialPolytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("facets") ||
        !j.contains("vertices"))
        throw io_error("polytope JSON needs dim, facets, vertices");
    std::vector<std::string> names;
    for (const json& n : j["facets"]) names.push_back(n.get<std::string>());
    std::vector<std::string> sorted_names = names;

    std::vector<FacetSet> verts;
    for (const json& v : j["vertices"]) {
        FacetSet s;
        for (const json& n : v) {
            auto it = std::find(names.begin(), names.end(),
                                n.get<std::string>());
            if (it == names.end())
                throw io_error("unknown facet name: " + n.get<std::string>());
            s.push_back(static_cast<int>(it - names.begin()));
        }
        std::sort(s.begin(), s.end());
        verts.push_back(s);
    }
    return CombinatorialPolytope(j["dim"].get<int>(), names, verts);
}

std::optional<CharMap> char_from_json(const json& j,
                                      const CombinatorialPolytope& p) {
    if (!j.contains("char")) return std::nullopt;
    const json& ch = j["char"];
    CharMap lam;
    lam.vectors.resize(p.facet_count());
    int rank = -1;
    for (int f = 0; f < p.facet_count(); ++f) {
        const std::string& name = p.facet_name(f);
        if (!ch.contains(name))
            throw io_error("char is missing facet " + name);
        lam.vectors[f] = vector_from_json(ch[name]);
        if (rank >= 0 && static_cast<int>(lam.vectors[f].size()) != rank)
            throw io_error("char vectors have mixed lengths");
        rank = static_cast<int>(lam.vectors[f].size());
    }
    lam.ambient_rank = rank;
    return lam;
}

json complex_to_json(const SimplicialComplex& k) {
    json j;
    j["vertices"] = k.vertex_names;
    json ms = json::array();
    for (const auto& s : k.maximal) {
        json m = json::array();
        for (int v : s) m.push_back(k.vertex_names.at(v));
        ms.push_back(m);
    }
    j["maximal"] = ms;
    return j;
}

SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("maximal"))
        throw io_error("complex JSON needs vertices, maximal");
    SimplicialComplex k;
    for (const json& n : j["vertices"])
        k.vertex_names.push_back(n.get<std::string>());
    for (const json& m : j["maximal"]) {
        std::vector<int> s;
        for (const json& n : m) {
            auto idx = k.vertex_index(n.get<std::string>());
            if (!idx)
                throw io_error("unknown vertex name: " + n.get<std::string>());
            s.push_back(*idx);
        }
        std::sort(s.begin(), s.end());
        k.maximal.push_back(s);
    }
    return k;
}

json sequence_to_json(const CombinatorialPolytope& p,
                      const RetractionSequence& seq) {
    json a = json::array();
    for (const RetractionStep& st : seq.steps) {
        json s;
        s["vertex"] = st.vertex;
        s["max_face_facets"] = names_of(p, st.max_face.support);
        json cs = json::array();
        for (const Face& f : st.complex.maximal_faces)
            cs.push_back(names_of(p, f.support));
        s["complex_maximal_faces"] = cs;
        a.push_back(s);
    }
    return a;
}

RetractionSequence sequence_from_json(const CombinatorialPolytope& p,
                                      const json& j) {
    if (!j.is_array()) throw io_error("sequence JSON must be a list");
    RetractionSequence seq;
    SubComplex cur = whole_complex(p);
    for (const json& s : j) {
        int b = s.at("vertex").get<int>();
        const Face* e = nullptr;
        for (const Face& f : cur.maximal_faces)
            if (std::binary_search(f.vertices.begin(), f.vertices.end(), b)) {
                if (e) throw io_error("stored vertex is not free on replay");
                e = &f;
            }
        if (!e) throw io_error("stored vertex is absent on replay");
        if (s.contains("max_face_facets")) {
            FacetSet want = facets_from_names(p, s["max_face_facets"]);
            if (want != e->support)
                throw io_error("stored maximal face disagrees with replay");
        }
        seq.steps.push_back({cur, *e, b});
        cur = next_complex(p, cur, b);
    }
    return seq;
}

namespace {

json a2_to_json(const A2Result& a2, const CombinatorialPolytope& p) {
    json j;
    j["pass"] = a2.pass;
    if (!a2.reason.empty()) j["reason"] = a2.reason;
    if (a2.combo) {
        json coeffs = json::object();
        for (std::size_t i = 0; i < a2.combo->coeffs.size(); ++i)
            coeffs[p.facet_name(a2.combo->combo_facets[i])] =
                rat_to_json(a2.combo->coeffs[i]);
        j["coeffs"] = coeffs;
        j["target"] = p.facet_name(a2.combo->target_facet);
    }
    return j;
}

A2Result a2_from_json(const json& j, const CombinatorialPolytope& p) {
    A2Result a2;
    a2.pass = j.at("pass").get<bool>();
    if (j.contains("reason")) a2.reason = j["reason"].get<std::string>();
    if (j.contains("coeffs")) {
        RationalCombination combo;
        combo.target_facet = facet_by_name(p, j.at("target"));
        for (const auto& [name, val] : j["coeffs"].items()) {
            combo.combo_facets.push_back(facet_by_name(p, name));
            combo.coeffs.push_back(rat_from_json(val));
        }
        a2.combo = combo;
    }
    return a2;
}

}  // namespace

json certificate_to_json(const TorsionCertificate& cert,
                         const CombinatorialPolytope& evidence_poly,
                         const CombinatorialPolytope* source_poly) {
    json j;
    j["prime"] = int_to_json(cert.prime);
    j["kind"] = cert.kind;
    j["conclusion"] = cert.conclusion == Conclusion::no_p_torsion
                          ? "no-p-torsion"
                          : "inconclusive";
    if (!cert.reason.empty()) j["reason"] = cert.reason;
    if (cert.sequence)
        j["sequence"] = sequence_to_json(evidence_poly, *cert.sequence);
    j["trace"] = trace_to_json(cert.trace);
    if (cert.source_sequence) {
        const CombinatorialPolytope& sp =
            source_poly ? *source_poly : evidence_poly;
        j["source_sequence"] = sequence_to_json(sp, *cert.source_sequence);
        j["source_trace"] = trace_to_json(cert.source_trace);
    }
    if (cert.a2) {
        const CombinatorialPolytope& sp =
            source_poly ? *source_poly : evidence_poly;
        j["a2"] = a2_to_json(*cert.a2, sp);
    }
    json dv = json::object();
    for (const auto& [i, d] : cert.d_values)
        dv[std::to_string(i)] = int_to_json(d);
    j["a3"] = json{{"d_values", dv}};
    return j;
}

TorsionCertificate certificate_from_json(
    const json& j, const CombinatorialPolytope& evidence_poly,
    const CombinatorialPolytope* source_poly) {
    TorsionCertificate cert;
    cert.prime = int_from_json(j.at("prime"));
    cert.kind = j.at("kind").get<std::string>();
    std::string c = j.at("conclusion").get<std::string>();
    if (c == "no-p-torsion")
        cert.conclusion = Conclusion::no_p_torsion;
    else if (c == "inconclusive")
        cert.conclusion = Conclusion::inconclusive;
    else
        throw io_error("unknown conclusion: " + c);
    if (j.contains("reason")) cert.reason = j["reason"].get<std::string>();
    if (j.contains("sequence"))
        cert.sequence = sequence_from_json(evidence_poly, j["sequence"]);
    if (j.contains("trace")) cert.trace = trace_from_json(j["trace"]);
    const CombinatorialPolytope& sp =
        source_poly ? *source_poly : evidence_poly;
    if (j.contains("source_sequence")) {
        cert.source_sequence = sequence_from_json(sp, j["source_sequence"]);
        cert.source_trace = trace_from_json(j.at("source_trace"));
    }
    if (j.contains("a2")) cert.a2 = a2_from_json(j["a2"], sp);
    if (j.contains("a3"))
        for (const auto& [k, v] : j["a3"].at("d_values").items())
            cert.d_values[std::stoi(k)] = int_from_json(v);
    return cert;
}

json scan_to_json(const PrimeScanReport& rep,
                  const CombinatorialPolytope& evidence_poly,
                  const CombinatorialPolytope* source_poly) {
    json j;
    json ps = json::array();
    for (const Int& q : rep.primes) ps.push_back(int_to_json(q));
    j["primes"] = ps;
    j["torsion_free"] = rep.torsion_free;
    j["prime_set_note"] = rep.prime_set_note;
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    json cs = json::object();
    for (const auto& [q, cert] : rep.certificates)
        cs[q.str()] = certificate_to_json(cert, evidence_poly, source_poly);
    j["certificates"] = cs;
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot read " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw io_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace polycert
