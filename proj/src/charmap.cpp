#include "polycert/charmap.hpp"

#include <algorithm>
#include <sstream>

namespace polycert {

namespace {

std::string vec_str(const IntVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

IntMatrix rows_matrix(const std::vector<IntVector>& rows) {
    return IntMatrix{std::vector<IntVector>(rows)};
}

}  // namespace

ValidationReport validate_rchar(const CombinatorialPolytope& p,
                                const CharMap& lambda) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.errors.push_back(msg);
    };
    int n = p.dim();
    if (lambda.ambient_rank != n) {
        fail("characteristic vectors have rank " +
             std::to_string(lambda.ambient_rank) + ", polytope has dimension " +
             std::to_string(n));
        return rep;
    }
    if (static_cast<int>(lambda.vectors.size()) != p.facet_count()) {
        fail("expected one vector per facet");
        return rep;
    }
    for (int f = 0; f < p.facet_count(); ++f) {
        const IntVector& v = lambda.vectors[f];
        if (static_cast<int>(v.size()) != n) {
            fail("vector on " + p.facet_name(f) + " has wrong length");
            return rep;
        }
        if (is_zero(v)) {
            fail("vector on " + p.facet_name(f) + " is zero");
            return rep;
        }
        if (gcd_all(v) != 1) {
            fail("vector on " + p.facet_name(f) + " is not primitive: " +
                 vec_str(v));
            return rep;
        }
    }
    for (int v = 0; v < p.vertex_count(); ++v) {
        std::vector<IntVector> rows;
        for (int f : p.vertex_facets(v)) rows.push_back(lambda.vectors[f]);
        if (det_exact(rows_matrix(rows)) == 0) {
            std::ostringstream os;
            os << "dependent vectors at vertex {";
            const FacetSet& s = p.vertex_facets(v);
            for (std::size_t i = 0; i < s.size(); ++i)
                os << (i ? "," : "") << p.facet_name(s[i]);
            os << "} (determinant 0)";
            fail(os.str());
            return rep;
        }
    }
    return rep;
}

void require_rchar(const CombinatorialPolytope& p, const CharMap& lambda,
                   const std::string& what) {
    ValidationReport rep = validate_rchar(p, lambda);
    if (!rep.ok) throw polytope_error(what + ": " + rep.summary());
}

InducedCharMap induce_on_face(
    const CombinatorialPolytope& p, const CharMap& lambda, const Face& f,
    const std::optional<std::vector<IntVector>>& comp) {
    if (f.is_empty()) throw polytope_error("induce_on_face of empty face");
    InducedCharMap out;
    out.face = f;
    if (f.dim == p.dim()) {
        out.trivial = true;
        for (int g = 0; g < p.facet_count(); ++g) {
            out.vectors[g] = lambda.vectors[g];
            out.prim_scales[g] = 1;
        }
        return out;
    }
    if (f.dim == 0) return out;  // a point has no facets

    std::vector<IntVector> support_vectors;
    for (int g : f.support) support_vectors.push_back(lambda.vectors[g]);
    out.sat = saturation_basis(support_vectors);
    out.comp = comp ? *comp : complement_basis(out.sat);
    verify_basis(out.sat, out.comp);

    std::set<int> incident;
    for (int v : f.vertices)
        for (int g : set_difference(p.vertex_facets(v), f.support))
            incident.insert(g);
    for (int g : incident) {
        IntVector proj = project_coordinates(lambda.vectors[g], out.sat,
                                             out.comp);
        if (is_zero(proj))
            throw polytope_error("induced map undefined: " + p.facet_name(g) +
                                 " projects to zero on the face");
        Int scale = gcd_all(proj);
        out.vectors[g] = primitive(proj);
        out.prim_scales[g] = scale;
    }
    return out;
}

Int singularity_order(const CombinatorialPolytope& p, const CharMap& lambda,
                      int v) {
    std::vector<IntVector> rows;
    for (int f : p.vertex_facets(v)) rows.push_back(lambda.vectors[f]);
    Int d = det_exact(rows_matrix(rows));
    return d < 0 ? -d : d;
}

namespace {

std::vector<IntVector> face_rows_at_vertex(const CombinatorialPolytope& p,
                                           const InducedCharMap& ind, int v) {
    const Face& f = ind.face;
    if (!std::binary_search(f.vertices.begin(), f.vertices.end(), v))
        throw polytope_error("vertex is not on the face");
    std::vector<IntVector> rows;
    for (int g : set_difference(p.vertex_facets(v), f.support))
        rows.push_back(ind.vectors.at(g));
    return rows;
}

}  // namespace

Int singularity_order_in_face(
    const CombinatorialPolytope& p, const CharMap& lambda, const Face& f,
    int v, const std::optional<std::vector<IntVector>>& comp) {
    if (f.dim == 0) {
        if (f.vertices != std::vector<int>{v})
            throw polytope_error("vertex is not on the face");
        return 1;
    }
    if (f.dim == p.dim()) return singularity_order(p, lambda, v);
    InducedCharMap ind = induce_on_face(p, lambda, f, comp);
    Int d = det_exact(rows_matrix(face_rows_at_vertex(p, ind, v)));
    return d < 0 ? -d : d;
}

SingularityGroup singularity_group(const CombinatorialPolytope& p,
                                   const CharMap& lambda, int v) {
    std::vector<IntVector> rows;
    for (int f : p.vertex_facets(v)) rows.push_back(lambda.vectors[f]);
    SnfResult snf = smith_normal_form(rows_matrix(rows));
    SingularityGroup g;
    g.invariant_factors = snf.invariant_factors;
    g.order = 1;
    for (const Int& d : g.invariant_factors) g.order *= (d < 0 ? -d : d);
    return g;
}

SingularityGroup singularity_group_in_face(
    const CombinatorialPolytope& p, const CharMap& lambda, const Face& f,
    int v, const std::optional<std::vector<IntVector>>& comp) {
    SingularityGroup g;
    if (f.dim == 0) {
        if (f.vertices != std::vector<int>{v})
            throw polytope_error("vertex is not on the face");
        g.order = 1;
        return g;
    }
    if (f.dim == p.dim()) return singularity_group(p, lambda, v);
    InducedCharMap ind = induce_on_face(p, lambda, f, comp);
    SnfResult snf =
        smith_normal_form(rows_matrix(face_rows_at_vertex(p, ind, v)));
    g.invariant_factors = snf.invariant_factors;
    g.order = 1;
    for (const Int& d : g.invariant_factors) g.order *= (d < 0 ? -d : d);
    return g;
}

Int compute_dF(const CombinatorialPolytope& p, const CharMap& lambda,
               const Face& f, int target_facet, std::vector<int> combo_facets,
               std::vector<Rat> coeffs) {
    if (combo_facets.size() != coeffs.size())
        throw polytope_error("compute_dF: one coefficient per facet");
    // drop zero coefficients before applying the identity
    for (std::size_t i = 0; i < coeffs.size();) {
        if (coeffs[i] == 0) {
            coeffs.erase(coeffs.begin() + i);
            combo_facets.erase(combo_facets.begin() + i);
        } else {
            ++i;
        }
    }
    if (combo_facets.empty())
        throw polytope_error("compute_dF: empty combination");
    int n = p.dim();
    std::vector<Rat> total(n, Rat(0));
    for (std::size_t i = 0; i < combo_facets.size(); ++i)
        for (int j = 0; j < n; ++j)
            total[j] += coeffs[i] * Rat(lambda.vectors[combo_facets[i]][j]);
    for (int j = 0; j < n; ++j)
        if (total[j] != Rat(lambda.vectors[target_facet][j]))
            throw polytope_error(
                "compute_dF: the rational combination identity fails");

    InducedCharMap ind = induce_on_face(p, lambda, f);
    auto induced_of = [&](int g) -> const IntVector& {
        auto it = ind.vectors.find(g);
        if (it == ind.vectors.end())
            throw polytope_error("compute_dF: facet " + p.facet_name(g) +
                                 " does not meet the face properly");
        return it->second;
    };
    const IntVector& t = induced_of(target_facet);
    std::size_t d = t.size();
    std::vector<Rat> s(d, Rat(0));
    for (std::size_t i = 0; i < combo_facets.size(); ++i) {
        const IntVector& w = induced_of(combo_facets[i]);
        for (std::size_t j = 0; j < d; ++j) s[j] += coeffs[i] * Rat(w[j]);
    }
    // s must equal q * t for a positive integer q
    std::optional<Rat> q;
    for (std::size_t j = 0; j < d; ++j) {
        if (t[j] == 0) {
            if (s[j] != 0)
                throw polytope_error("compute_dF: projections not parallel");
            continue;
        }
        Rat r = s[j] / Rat(t[j]);
        if (q && *q != r)
            throw polytope_error("compute_dF: projections not parallel");
        q = r;
    }
    if (!q) throw polytope_error("compute_dF: zero target projection");
    if (denominator(*q) != 1 || numerator(*q) <= 0)
        throw polytope_error("compute_dF: scaling factor is not a positive "
                             "integer");
    return numerator(*q);
}

}  // namespace polycert
