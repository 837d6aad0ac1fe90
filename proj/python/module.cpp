// Python bindings. The surface mirrors the CLI: JSON strings in the same
// schemas go in and come out, so Python callers use plain dicts via json.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polycert/io.hpp"

namespace py = pybind11;
using namespace polycert;

namespace {

CombinatorialPolytope parse_poly(const std::string& s) {
    return polytope_from_json(json::parse(s));
}

std::pair<CombinatorialPolytope, CharMap> parse_pair(const std::string& s) {
    json j = json::parse(s);
    auto p = polytope_from_json(j);
    auto lam = char_from_json(j, p);
    if (!lam) throw io_error("this operation needs a \"char\" entry");
    return {p, *lam};
}

int facet_of(const CombinatorialPolytope& p, const std::string& name) {
    auto idx = p.facet_index(name);
    if (!idx) throw io_error("unknown facet name: " + name);
    return *idx;
}

Face face_of(const CombinatorialPolytope& p,
             const std::vector<std::string>& names) {
    FacetSet s;
    for (const auto& n : names) s.push_back(facet_of(p, n));
    std::sort(s.begin(), s.end());
    return face_from_facets(p, s);
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_polycert, m) {
    m.doc() = "exact combinatorial toolkit for simple polytopes";

    py::register_exception<io_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<polytope_error>(m, "CheckError",
                                           PyExc_RuntimeError);
    py::register_exception<lattice_error>(m, "LatticeError",
                                          PyExc_ArithmeticError);

    m.def("validate", [](const std::string& s) {
        json j = json::parse(s);
        auto p = polytope_from_json(j);
        auto rep = validate(p);
        json out;
        out["polytope"] = {{"ok", rep.ok}, {"errors", rep.errors}};
        bool ok = rep.ok;
        if (auto lam = char_from_json(j, p); lam && rep.ok) {
            auto crep = validate_rchar(p, *lam);
            out["char"] = {{"ok", crep.ok}, {"errors", crep.errors}};
            ok = ok && crep.ok;
        }
        out["ok"] = ok;
        return dump(out);
    });

    m.def("info", [](const std::string& s) {
        json j = json::parse(s);
        auto p = polytope_from_json(j);
        require_valid(p, "input");
        json out;
        out["dim"] = p.dim();
        out["facet_count"] = p.facet_count();
        out["vertex_count"] = p.vertex_count();
        out["face_counts"] = face_counts(p);
        if (auto lam = char_from_json(j, p)) {
            require_rchar(p, *lam, "input");
            json orders = json::array();
            for (int v = 0; v < p.vertex_count(); ++v)
                orders.push_back(int_to_json(singularity_order(p, *lam, v)));
            out["vertex_orders"] = orders;
        }
        return dump(out);
    });

    m.def("vertex_order", [](const std::string& s, int v) {
        auto [p, lam] = parse_pair(s);
        return singularity_order(p, lam, v).str();
    });

    m.def("product", [](const std::string& s, int k) {
        return dump(polytope_to_json(product_with_simplex(parse_poly(s), k)));
    });

    m.def(
        "wedge",
        [](const std::string& s, const std::string& facet, int k,
           std::optional<long long> a) {
            json j = json::parse(s);
            auto p = polytope_from_json(j);
            int f = facet_of(p, facet);
            auto w = k_wedge(p, f, k);
            std::optional<CharMap> wlam;
            auto lam = char_from_json(j, p);
            if (lam && a) wlam = k_wedge_char(p, *lam, f, k, Int(*a));
            return dump(polytope_to_json(w.result, wlam));
        },
        py::arg("polytope"), py::arg("facet"), py::arg("k"),
        py::arg("a") = std::nullopt);

    m.def("blowup", [](const std::string& s,
                       const std::vector<std::string>& face) {
        auto p = parse_poly(s);
        return dump(polytope_to_json(blowup(p, face_of(p, face)).result));
    });

    m.def("blowdown", [](const std::string& s, const std::string& facet,
                         const std::vector<std::string>& face) {
        json j = json::parse(s);
        auto p = polytope_from_json(j);
        auto bd = blowdown(p, facet_of(p, facet), face_of(p, face));
        std::optional<CharMap> rlam;
        if (auto lam = char_from_json(j, p))
            rlam = restrict_char(p, *lam, bd).char_map;
        return dump(polytope_to_json(bd.result, rlam));
    });

    m.def(
        "retract",
        [](const std::string& s, const std::vector<int>& defer,
           std::optional<unsigned> seed) -> std::optional<std::string> {
            auto p = parse_poly(s);
            auto seq = find_retraction(p, std::nullopt, defer, {}, seed);
            if (!seq) return std::nullopt;
            return dump(sequence_to_json(p, *seq));
        },
        py::arg("polytope"), py::arg("defer") = std::vector<int>{},
        py::arg("seed") = std::nullopt);

    m.def(
        "trace",
        [](const std::string& s, const std::vector<int>& defer,
           std::optional<unsigned> seed) {
            auto [p, lam] = parse_pair(s);
            auto seq = find_retraction(p, std::nullopt, defer, {}, seed);
            if (!seq) throw polytope_error("no retraction found");
            auto tr = singularity_trace(p, lam, *seq);
            json out;
            out["sequence"] = sequence_to_json(p, *seq);
            json ta = json::array();
            for (const Int& e : tr) ta.push_back(int_to_json(e));
            out["trace"] = ta;
            return dump(out);
        },
        py::arg("polytope"), py::arg("defer") = std::vector<int>{},
        py::arg("seed") = std::nullopt);

    m.def("verify_sequence", [](const std::string& s, const std::string& sq) {
        auto p = parse_poly(s);
        verify_retraction(p, sequence_from_json(p, json::parse(sq)));
        return true;
    });

    m.def("torsion_plain", [](const std::string& s, long long prime) {
        auto [p, lam] = parse_pair(s);
        auto cert = check_plain(p, lam, Int(prime));
        return dump(certificate_to_json(cert, p));
    });

    m.def("torsion_blowdown", [](const std::string& s,
                                 const std::string& facet,
                                 const std::vector<std::string>& face,
                                 long long prime) {
        auto [p, lam] = parse_pair(s);
        int big = facet_of(p, facet);
        Face base = face_of(p, face);
        auto cert = blowdown_torsion_check(p, lam, big, base, Int(prime));
        auto bd = blowdown(p, big, base);
        return dump(certificate_to_json(cert, bd.result, &p));
    });

    m.def("torsion_wedge", [](const std::string& s, const std::string& facet,
                              long long a, long long prime) {
        auto [p, lam] = parse_pair(s);
        int f = facet_of(p, facet);
        auto cert = kwedge_torsion_check(p, lam, f, Int(a), Int(prime));
        auto w = k_wedge(p, f, 2);
        return dump(certificate_to_json(cert, w.result, &p));
    });

    m.def("verify_plain", [](const std::string& s, const std::string& cs) {
        auto [p, lam] = parse_pair(s);
        verify_certificate(p, lam, certificate_from_json(json::parse(cs), p));
        return true;
    });

    m.def("verify_blowdown", [](const std::string& s,
                                const std::string& facet,
                                const std::vector<std::string>& face,
                                const std::string& cs) {
        auto [p, lam] = parse_pair(s);
        int big = facet_of(p, facet);
        Face base = face_of(p, face);
        auto bd = blowdown(p, big, base);
        auto cert = certificate_from_json(json::parse(cs), bd.result, &p);
        verify_certificate(p, lam, big, base, cert);
        return true;
    });

    m.def("verify_wedge", [](const std::string& s, const std::string& facet,
                             long long a, const std::string& cs) {
        auto [p, lam] = parse_pair(s);
        int f = facet_of(p, facet);
        auto w = k_wedge(p, f, 2);
        auto cert = certificate_from_json(json::parse(cs), w.result, &p);
        verify_certificate(p, lam, f, Int(a), cert);
        return true;
    });

    m.def("scan", [](const std::string& s) {
        auto [p, lam] = parse_pair(s);
        return dump(scan_to_json(all_prime_scan(p, lam), p));
    });

    m.def("scan_blowdown", [](const std::string& s, const std::string& facet,
                              const std::vector<std::string>& face) {
        auto [p, lam] = parse_pair(s);
        int big = facet_of(p, facet);
        Face base = face_of(p, face);
        auto rep = all_prime_scan(p, lam, big, base);
        auto bd = blowdown(p, big, base);
        return dump(scan_to_json(rep, bd.result, &p));
    });

    m.def("dualize", [](const std::string& s) {
        auto p = parse_poly(s);
        require_valid(p, "input");
        return dump(complex_to_json(dual_of_polytope(p)));
    });

    m.def(
        "swedge",
        [](const std::string& s, const std::string& vertex, int k,
           bool literal) {
            auto kx = complex_from_json(json::parse(s));
            auto rep = validate_complex(kx);
            if (!rep.ok) throw io_error("invalid complex: " + rep.summary());
            auto idx = kx.vertex_index(vertex);
            if (!idx) throw io_error("unknown vertex name: " + vertex);
            return dump(
                complex_to_json(simplicial_k_wedge(kx, *idx, k, literal)));
        },
        py::arg("complex"), py::arg("vertex"), py::arg("k"),
        py::arg("literal") = false);

    m.def("complexes_isomorphic", [](const std::string& a,
                                     const std::string& b) {
        return complexes_isomorphic(complex_from_json(json::parse(a)),
                                    complex_from_json(json::parse(b)));
    });

    m.def("polytopes_isomorphic", [](const std::string& a,
                                     const std::string& b) {
        return isomorphic(parse_poly(a), parse_poly(b));
    });
}
