// Command-line front end: JSON file formats in, reports and JSON out.
// Exit codes: 0 pass, 1 check failure, 2 input or usage error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "polycert/io.hpp"

using namespace polycert;

namespace {

struct Common {
    std::string input;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("input", c.input, "input JSON file")->required();
    cmd->add_option("--format", c.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("-o", c.out, "write the result to a file");
}

void emit(const Common& c, const json& j, const std::string& text) {
    if (!c.out.empty()) {
        save_json_file(c.out, j);
        return;
    }
    if (c.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

Face parse_face(const CombinatorialPolytope& p, const std::string& spec) {
    FacetSet s;
    std::stringstream ss(spec);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto idx = p.facet_index(name);
        if (!idx) throw io_error("unknown facet name: " + name);
        s.push_back(*idx);
    }
    std::sort(s.begin(), s.end());
    return face_from_facets(p, s);
}

int parse_facet(const CombinatorialPolytope& p, const std::string& name) {
    auto idx = p.facet_index(name);
    if (!idx) throw io_error("unknown facet name: " + name);
    return *idx;
}

std::vector<int> parse_defer(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::string digits = tok;
        if (!digits.empty() && (digits[0] == 'v' || digits[0] == 'V'))
            digits = digits.substr(1);
        out.push_back(std::stoi(digits));
    }
    return out;
}

std::string render_report(const std::string& what,
                          const ValidationReport& rep) {
    std::string s = what + ": " + (rep.ok ? "pass" : "fail") + "\n";
    for (const auto& e : rep.errors) s += "  " + e + "\n";
    return s;
}

std::string render_trace(const CombinatorialPolytope& p,
                         const RetractionSequence& seq,
                         const std::vector<Int>* trace) {
    std::ostringstream os;
    os << "step  vertex  face_dim  face_facets";
    if (trace) os << "  order";
    os << "\n";
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const auto& st = seq.steps[i];
        std::string facets;
        for (int f : st.max_face.support) {
            if (!facets.empty()) facets += ",";
            facets += p.facet_name(f);
        }
        if (facets.empty()) facets = "-";
        os << i + 1 << "  " << st.vertex << "  " << st.max_face.dim << "  "
           << facets;
        if (trace) os << "  " << (*trace)[i];
        os << "\n";
    }
    return os.str();
}

std::string render_certificate(const TorsionCertificate& cert) {
    std::ostringstream os;
    os << "kind: " << cert.kind << "\nprime: " << cert.prime << "\n";
    if (cert.source_sequence) {
        os << "A1 source trace:";
        for (const Int& e : cert.source_trace) os << " " << e;
        os << "\n";
    } else if (cert.sequence) {
        os << "A1 trace:";
        for (const Int& e : cert.trace) os << " " << e;
        os << "\n";
    }
    if (cert.a2) {
        os << "A2 " << (cert.a2->pass ? "pass" : "fail");
        if (cert.a2->combo) {
            os << " coeffs:";
            for (const Rat& c : cert.a2->combo->coeffs) os << " " << c;
        }
        os << "\n";
    }
    if (!cert.d_values.empty()) {
        os << "A3 contraction factors:";
        for (const auto& [i, d] : cert.d_values)
            os << " step" << i + 1 << "=" << d;
        os << "\n";
    }
    if (cert.sequence && cert.source_sequence) {
        os << "induced trace:";
        for (const Int& e : cert.trace) os << " " << e;
        os << "\n";
    }
    os << "conclusion: "
       << (cert.conclusion == Conclusion::no_p_torsion ? "no-p-torsion"
                                                       : "inconclusive")
       << "\n";
    if (!cert.reason.empty()) os << "reason: " << cert.reason << "\n";
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"exact combinatorial toolkit for simple polytopes"};
    app.require_subcommand(1);

    Common c;
    std::string facet_name, face_spec, defer_spec;
    int k = 1;
    long long a_val = 0, prime_val = 0;
    bool a_set = false;
    unsigned seed = 0;
    bool seed_set = false, use_blowdown = false, use_wedge = false,
         literal = false;

    auto* v_validate = app.add_subcommand("validate", "check the input");
    auto* v_info = app.add_subcommand("info", "summarize the input");
    auto* v_product = app.add_subcommand("product", "product with a simplex");
    auto* v_wedge = app.add_subcommand("wedge", "polytopal wedge at a facet");
    auto* v_blowup = app.add_subcommand("blowup", "truncate a face");
    auto* v_blowdown = app.add_subcommand("blowdown", "collapse a facet");
    auto* v_retract = app.add_subcommand("retract", "find a retraction");
    auto* v_trace = app.add_subcommand("trace", "singularity orders along a "
                                                "retraction");
    auto* v_torsion = app.add_subcommand("torsion", "torsion certificate");
    auto* v_scan = app.add_subcommand("scan", "certify all relevant primes");
    auto* v_dualize = app.add_subcommand("dualize", "dual simplicial complex");
    auto* v_swedge =
        app.add_subcommand("swedge", "simplicial wedge at a vertex");

    for (auto* cmd : {v_validate, v_info, v_product, v_wedge, v_blowup,
                      v_blowdown, v_retract, v_trace, v_torsion, v_scan,
                      v_dualize, v_swedge})
        add_common(cmd, c);

    v_product->add_option("--k", k, "simplex dimension")->required();
    v_wedge->add_option("--facet", facet_name)->required();
    v_wedge->add_option("--k", k)->required();
    v_wedge->add_option("--a", a_val)->each([&](const std::string&) {
        a_set = true;
    });
    v_blowup->add_option("--face", face_spec, "comma-separated facet names")
        ->required();
    v_blowdown->add_option("--facet", facet_name)->required();
    v_blowdown->add_option("--face", face_spec)->required();
    for (auto* cmd : {v_retract, v_trace}) {
        cmd->add_option("--defer", defer_spec, "vertex ids kept for last");
        cmd->add_option("--seed", seed)->each([&](const std::string&) {
            seed_set = true;
        });
    }
    v_torsion->add_option("--prime", prime_val)->required();
    v_torsion->add_flag("--blowdown", use_blowdown);
    v_torsion->add_flag("--wedge", use_wedge);
    v_torsion->add_option("--facet", facet_name);
    v_torsion->add_option("--face", face_spec);
    v_torsion->add_option("--a", a_val)->each([&](const std::string&) {
        a_set = true;
    });
    v_scan->add_option("--facet", facet_name);
    v_scan->add_option("--face", face_spec);
    v_swedge->add_option("--facet", facet_name,
                         "complex vertex (named after the dual facet)")
        ->required();
    v_swedge->add_option("--k", k)->required();
    v_swedge->add_flag("--literal", literal);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    CLI::App* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();

    if (verb == "swedge") {
        auto kx = complex_from_json(load_json_file(c.input));
        auto rep = validate_complex(kx);
        if (!rep.ok) throw io_error("invalid complex: " + rep.summary());
        auto idx = kx.vertex_index(facet_name);
        if (!idx) throw io_error("unknown vertex name: " + facet_name);
        auto w = simplicial_k_wedge(kx, *idx, k, literal);
        emit(c, complex_to_json(w),
             "vertices: " + std::to_string(w.vertex_count()) +
                 "\nmaximal simplices: " + std::to_string(w.maximal.size()) +
                 "\npure: " + (is_pure(w) ? "yes" : "no") + "\n");
        return 0;
    }

    json in = load_json_file(c.input);
    auto p = polytope_from_json(in);
    auto lam = char_from_json(in, p);
    auto need_char = [&]() -> const CharMap& {
        if (!lam) throw io_error("this command needs a \"char\" entry");
        return *lam;
    };

    if (verb == "validate") {
        auto rep = validate(p);
        json j;
        j["polytope"] = {{"ok", rep.ok}, {"errors", rep.errors}};
        std::string text = render_report("polytope", rep);
        bool ok = rep.ok;
        if (lam && rep.ok) {
            auto crep = validate_rchar(p, *lam);
            j["char"] = {{"ok", crep.ok}, {"errors", crep.errors}};
            text += render_report("char", crep);
            ok = ok && crep.ok;
        }
        emit(c, j, text);
        return ok ? 0 : 1;
    }
    if (verb == "info") {
        require_valid(p, "input");
        auto counts = face_counts(p);
        json j;
        j["dim"] = p.dim();
        j["facet_count"] = p.facet_count();
        j["vertex_count"] = p.vertex_count();
        j["face_counts"] = counts;
        std::ostringstream os;
        os << "dim: " << p.dim() << "\nfacets: " << p.facet_count()
           << "\nvertices: " << p.vertex_count() << "\nface counts:";
        for (auto n : counts) os << " " << n;
        os << "\n";
        if (lam) {
            require_rchar(p, *lam, "input");
            json orders = json::array();
            os << "vertex orders:";
            for (int v = 0; v < p.vertex_count(); ++v) {
                Int o = singularity_order(p, *lam, v);
                orders.push_back(int_to_json(o));
                os << " " << o;
            }
            os << "\n";
            j["vertex_orders"] = orders;
        }
        emit(c, j, os.str());
        return 0;
    }
    if (verb == "product") {
        auto r = product_with_simplex(p, k);
        emit(c, polytope_to_json(r),
             "facets: " + std::to_string(r.facet_count()) +
                 "\nvertices: " + std::to_string(r.vertex_count()) + "\n");
        return 0;
    }
    if (verb == "wedge") {
        auto w = k_wedge(p, parse_facet(p, facet_name), k);
        std::optional<CharMap> wlam;
        if (lam && a_set)
            wlam = k_wedge_char(p, *lam, parse_facet(p, facet_name), k,
                                Int(a_val));
        emit(c, polytope_to_json(w.result, wlam),
             "facets: " + std::to_string(w.result.facet_count()) +
                 "\nvertices: " + std::to_string(w.result.vertex_count()) +
                 "\n");
        return 0;
    }
    if (verb == "blowup") {
        auto r = blowup(p, parse_face(p, face_spec));
        emit(c, polytope_to_json(r.result),
             "new facet: " + r.result.facet_name(r.new_facet) +
                 "\nfacets: " + std::to_string(r.result.facet_count()) +
                 "\nvertices: " + std::to_string(r.result.vertex_count()) +
                 "\n");
        return 0;
    }
    if (verb == "blowdown") {
        auto bd = blowdown(p, parse_facet(p, facet_name),
                           parse_face(p, face_spec));
        std::optional<CharMap> rlam;
        if (lam) rlam = restrict_char(p, *lam, bd).char_map;
        std::ostringstream os;
        for (int f = 0; f < p.facet_count(); ++f)
            if (bd.facet_map[f] >= 0)
                os << p.facet_name(f) << " -> "
                   << bd.result.facet_name(bd.facet_map[f]) << "\n";
            else
                os << p.facet_name(f) << " -> (collapsed)\n";
        emit(c, polytope_to_json(bd.result, rlam), os.str());
        return 0;
    }
    if (verb == "retract" || verb == "trace") {
        auto seq = find_retraction(
            p, std::nullopt, defer_spec.empty() ? std::vector<int>{}
                                                : parse_defer(defer_spec),
            {}, seed_set ? std::optional<unsigned>(seed) : std::nullopt);
        if (!seq) {
            std::cout << "no retraction found\n";
            return 1;
        }
        if (verb == "retract") {
            emit(c, sequence_to_json(p, *seq), render_trace(p, *seq, nullptr));
            return 0;
        }
        auto tr = singularity_trace(p, need_char(), *seq);
        json j;
        j["sequence"] = sequence_to_json(p, *seq);
        json ta = json::array();
        for (const Int& e : tr) ta.push_back(int_to_json(e));
        j["trace"] = ta;
        emit(c, j, render_trace(p, *seq, &tr));
        return 0;
    }
    if (verb == "torsion") {
        TorsionCertificate cert;
        json j;
        if (use_blowdown) {
            int big = parse_facet(p, facet_name);
            Face base = parse_face(p, face_spec);
            cert = blowdown_torsion_check(p, need_char(), big, base,
                                          Int(prime_val));
            auto bd = blowdown(p, big, base);
            j = certificate_to_json(cert, bd.result, &p);
        } else if (use_wedge) {
            if (!a_set) throw io_error("torsion --wedge needs --a");
            int f = parse_facet(p, facet_name);
            cert = kwedge_torsion_check(p, need_char(), f, Int(a_val),
                                        Int(prime_val));
            auto w = k_wedge(p, f, 2);
            j = certificate_to_json(cert, w.result, &p);
        } else {
            cert = check_plain(p, need_char(), Int(prime_val));
            j = certificate_to_json(cert, p);
        }
        emit(c, j, render_certificate(cert));
        return cert.conclusion == Conclusion::no_p_torsion ? 0 : 1;
    }
    if (verb == "scan") {
        PrimeScanReport rep;
        json j;
        if (!facet_name.empty()) {
            int big = parse_facet(p, facet_name);
            Face base = parse_face(p, face_spec);
            rep = all_prime_scan(p, need_char(), big, base);
            auto bd = blowdown(p, big, base);
            j = scan_to_json(rep, bd.result, &p);
        } else {
            rep = all_prime_scan(p, need_char());
            j = scan_to_json(rep, p);
        }
        std::ostringstream os;
        os << "relevant primes:";
        for (const Int& q : rep.primes) os << " " << q;
        os << "\n";
        for (const auto& [q, cert] : rep.certificates)
            os << "p=" << q << ": "
               << (cert.conclusion == Conclusion::no_p_torsion
                       ? "no-p-torsion"
                       : "inconclusive")
               << "\n";
        os << "torsion-free: " << (rep.torsion_free ? "yes" : "no") << "\n";
        if (!rep.reason.empty()) os << "reason: " << rep.reason << "\n";
        emit(c, j, os.str());
        return rep.torsion_free ? 0 : 1;
    }
    if (verb == "dualize") {
        require_valid(p, "input");
        auto kx = dual_of_polytope(p);
        emit(c, complex_to_json(kx),
             "vertices: " + std::to_string(kx.vertex_count()) +
                 "\nmaximal simplices: " + std::to_string(kx.maximal.size()) +
                 "\n");
        return 0;
    }
    throw io_error("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
}
