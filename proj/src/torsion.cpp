#include "polycert/torsion.hpp"

#include <algorithm>
#include <set>

namespace polycert {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

bool coprime(const Int& x, const Int& prime) {
    return gcd(abs(x), prime) == 1;
}

void add_prime_factors(std::set<Int>& out, Int n) {
    n = abs(n);
    if (n <= 1) return;
    for (Int q = 2; q * q <= n; ++q)
        while (n % q == 0) {
            out.insert(q);
            n /= q;
        }
    if (n > 1) out.insert(n);
}

std::vector<std::optional<int>> start_candidates(int vertex_count) {
    std::vector<std::optional<int>> starts = {std::nullopt};
    for (int v = 0; v < vertex_count; ++v) starts.push_back(v);
    return starts;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw polytope_error("certificate replay failed: " + what);
}

}  // namespace

A2Result check_A2(const CombinatorialPolytope&, const CharMap& lambda,
                  int big_facet, const ProductStructure& ps,
                  const Int& prime) {
    A2Result r;
    std::vector<IntVector> cols;
    for (int g : ps.p_facets) cols.push_back(lambda.at(g));
    std::optional<std::vector<Rat>> sol;
    try {
        sol = solve_rational(cols, lambda.at(big_facet));
    } catch (const std::runtime_error& e) {
        r.reason = std::string("combination base is degenerate: ") + e.what();
        return r;
    }
    if (!sol) {
        r.reason =
            "the collapsed facet's vector is not a rational combination of "
            "the base facet vectors";
        return r;
    }
    RationalCombination combo;
    combo.target_facet = big_facet;
    for (std::size_t i = 0; i < sol->size(); ++i) {
        if ((*sol)[i] == 0) continue;
        combo.combo_facets.push_back(ps.p_facets[i]);
        combo.coeffs.push_back((*sol)[i]);
    }
    r.combo = combo;
    for (const Rat& c : combo.coeffs)
        if (!coprime(denominator(c), prime)) {
            r.reason = "coefficient " + c.str() +
                       " has denominator sharing a factor with " + prime.str();
            return r;
        }
    r.pass = true;
    return r;
}

TorsionCertificate check_plain(const CombinatorialPolytope& p,
                               const CharMap& lambda, const Int& prime) {
    TorsionCertificate cert;
    cert.prime = prime;
    cert.kind = "plain";
    auto vr = validate_rchar(p, lambda);
    if (!vr.ok) {
        cert.reason = "invalid pair: " + vr.summary();
        return cert;
    }
    auto seq = find_p_clean_retraction(p, lambda, prime);
    if (!seq) {
        cert.reason = "no retraction with every step order coprime to " +
                      prime.str();
        return cert;
    }
    cert.sequence = *seq;
    cert.trace = singularity_trace(p, lambda, *seq);
    cert.conclusion = Conclusion::no_p_torsion;
    return cert;
}

TorsionCertificate blowdown_torsion_check(const CombinatorialPolytope& p,
                                          const CharMap& lambda,
                                          int big_facet, const Face& base,
                                          const Int& prime) {
    TorsionCertificate cert;
    cert.prime = prime;
    cert.kind = "blowdown";
    auto vr = validate_rchar(p, lambda);
    if (!vr.ok) {
        cert.reason = "invalid pair: " + vr.summary();
        return cert;
    }
    auto bd = blowdown(p, big_facet, base);
    RestrictedChar rc;
    try {
        rc = restrict_char(p, lambda, bd);
    } catch (const std::runtime_error& e) {
        cert.reason = std::string("collapsed pair is invalid: ") + e.what();
        return cert;
    }
    cert.a2 = check_A2(p, lambda, big_facet, bd.ps, prime);
    if (!cert.a2->pass) {
        cert.reason = "coefficient hypothesis fails: " + cert.a2->reason;
        return cert;
    }

    std::set<std::vector<int>> seen;
    std::string last;
    bool found_clean = false;
    for (const auto& start : start_candidates(p.vertex_count())) {
        auto seq = find_p_clean_retraction(p, lambda, prime, start);
        if (!seq) {
            if (!start) break;  // the unpinned search is exhaustive
            continue;
        }
        found_clean = true;
        if (!seen.insert(seq->vertex_order()).second) continue;

        std::string fail;
        InducedRetractionReport rep;
        try {
            rep = induced_retraction_blowdown(p, *seq, bd, lambda);
        } catch (const std::runtime_error& e) {
            last = std::string("induced retraction failed: ") + e.what();
            continue;
        }
        for (std::size_t i = 0; i < rep.step_cases.size() && fail.empty();
             ++i) {
            if (rep.step_cases[i] != StepCase::blowdown_of) continue;
            int idx = static_cast<int>(i);
            auto it = rep.d_values.find(idx);
            if (it == rep.d_values.end())
                fail = "no contraction factor at step " +
                       std::to_string(idx) + ": " + rep.d_errors.at(idx);
            else if (!coprime(it->second, prime))
                fail = "contraction hypothesis fails: factor " +
                       it->second.str() + " at step " + std::to_string(idx) +
                       " shares a factor with " + prime.str();
        }
        std::vector<Int> itrace;
        if (fail.empty()) {
            itrace = singularity_trace(bd.result, rc.char_map, rep.sequence);
            for (std::size_t i = 0; i < itrace.size() && fail.empty(); ++i)
                if (!coprime(itrace[i], prime))
                    fail = "induced trace entry " + itrace[i].str() +
                           " at step " + std::to_string(i) +
                           " shares a factor with " + prime.str();
        }
        if (!fail.empty()) {
            last = fail;
            continue;
        }
        cert.sequence = rep.sequence;
        cert.trace = itrace;
        cert.source_sequence = *seq;
        cert.source_trace = singularity_trace(p, lambda, *seq);
        cert.d_values = rep.d_values;
        cert.conclusion = Conclusion::no_p_torsion;
        return cert;
    }
    cert.reason = found_clean
                      ? last
                      : "no retraction of the source with every step order "
                        "coprime to " +
                            prime.str();
    return cert;
}

TorsionCertificate kwedge_torsion_check(const CombinatorialPolytope& p,
                                        const CharMap& lambda, int facet,
                                        const Int& a, const Int& prime) {
    if (a == 1)
        throw polytope_error("wedge parameter a = 1 gives a degenerate map");
    TorsionCertificate cert;
    cert.prime = prime;
    cert.kind = "2-wedge";
    auto vr = validate_rchar(p, lambda);
    if (!vr.ok) {
        cert.reason = "invalid pair: " + vr.summary();
        return cert;
    }
    if (!coprime(1 - a, prime)) {
        cert.reason = "|1 - a| = " + Int(abs(Int(1 - a))).str() +
                      " shares a factor with " + prime.str();
        return cert;
    }
    std::vector<int> defer = p.vertices_of_facet(facet);
    std::set<std::vector<int>> seen;
    std::string last;
    bool found_clean = false;
    for (const auto& start : start_candidates(p.vertex_count())) {
        if (start && p.vertex_on_facet(*start, facet)) continue;
        auto seq = find_p_clean_retraction(p, lambda, prime, start, defer);
        if (!seq) {
            if (!start) break;
            continue;
        }
        found_clean = true;
        if (!seen.insert(seq->vertex_order()).second) continue;

        WedgeRetraction wr;
        try {
            wr = induced_retraction_2wedge(p, *seq, facet, lambda, a);
        } catch (const std::runtime_error& e) {
            last = std::string("wedge expansion failed: ") + e.what();
            continue;
        }
        std::string fail;
        for (std::size_t i = 0; i < wr.trace.size() && fail.empty(); ++i)
            if (!coprime(wr.trace[i], prime))
                fail = "wedge trace entry " + wr.trace[i].str() +
                       " at step " + std::to_string(i) +
                       " shares a factor with " + prime.str();
        if (!fail.empty()) {
            last = fail;
            continue;
        }
        cert.sequence = wr.sequence;
        cert.trace = wr.trace;
        cert.source_sequence = *seq;
        cert.source_trace = singularity_trace(p, lambda, *seq);
        cert.conclusion = Conclusion::no_p_torsion;
        return cert;
    }
    cert.reason = found_clean
                      ? last
                      : "no retraction keeping the wedged facet last with "
                        "every step order coprime to " +
                            prime.str();
    return cert;
}

PrimeScanReport all_prime_scan(const CombinatorialPolytope& p,
                               const CharMap& lambda) {
    PrimeScanReport rep;
    auto vr = validate_rchar(p, lambda);
    if (!vr.ok) {
        rep.reason = "invalid pair: " + vr.summary();
        return rep;
    }
    std::set<Int> qs;
    for (int v = 0; v < p.vertex_count(); ++v)
        add_prime_factors(qs, singularity_order(p, lambda, v));
    rep.primes.assign(qs.begin(), qs.end());
    rep.prime_set_note =
        "primes dividing some vertex order; every step order of any "
        "retraction divides the order of its vertex, so other primes are "
        "vacuously clean";
    rep.torsion_free = true;
    for (const Int& q : rep.primes) {
        auto cert = check_plain(p, lambda, q);
        if (cert.conclusion != Conclusion::no_p_torsion) {
            rep.torsion_free = false;
            if (rep.reason.empty())
                rep.reason = "prime " + q.str() + ": " + cert.reason;
        }
        rep.certificates.emplace(q, std::move(cert));
    }
    return rep;
}

PrimeScanReport all_prime_scan(const CombinatorialPolytope& p,
                               const CharMap& lambda, int big_facet,
                               const Face& base) {
    PrimeScanReport rep;
    auto vr = validate_rchar(p, lambda);
    if (!vr.ok) {
        rep.reason = "invalid pair: " + vr.summary();
        return rep;
    }
    auto bd = blowdown(p, big_facet, base);
    RestrictedChar rc;
    try {
        rc = restrict_char(p, lambda, bd);
    } catch (const std::runtime_error& e) {
        rep.reason = std::string("collapsed pair is invalid: ") + e.what();
        return rep;
    }

    std::set<Int> qs;
    for (int v = 0; v < p.vertex_count(); ++v)
        add_prime_factors(qs, singularity_order(p, lambda, v));
    for (int v = 0; v < bd.result.vertex_count(); ++v)
        add_prime_factors(qs, singularity_order(bd.result, rc.char_map, v));

    // coefficient numerators and denominators
    std::vector<IntVector> cols;
    for (int g : bd.ps.p_facets) cols.push_back(lambda.at(g));
    std::optional<std::vector<Rat>> sol;
    try {
        sol = solve_rational(cols, lambda.at(big_facet));
    } catch (const std::runtime_error&) {
    }
    if (sol)
        for (const Rat& c : *sol) {
            add_prime_factors(qs, numerator(c));
            add_prime_factors(qs, denominator(c));
        }

    // contraction factors over every face meeting the collapsed facet;
    // a superset of the factors any induced retraction can produce
    if (sol) {
        auto faces = all_faces(p);
        faces.push_back(face_from_facets(p, {}));
        for (const Face& f : faces) {
            std::vector<int> cut;
            std::set_intersection(f.vertices.begin(), f.vertices.end(),
                                  bd.ps.big_facet.vertices.begin(),
                                  bd.ps.big_facet.vertices.end(),
                                  std::back_inserter(cut));
            if (cut.empty()) continue;
            try {
                add_prime_factors(
                    qs, compute_dF(p, lambda, f, big_facet, bd.ps.p_facets,
                                   *sol));
            } catch (const std::runtime_error&) {
            }
        }
    }

    rep.primes.assign(qs.begin(), qs.end());
    rep.prime_set_note =
        "primes dividing some vertex order of either pair, some coefficient "
        "numerator or denominator, or some face contraction factor; all "
        "pipeline gcds for other primes are 1 by construction";
    rep.torsion_free = true;
    for (const Int& q : rep.primes) {
        auto cert = blowdown_torsion_check(p, lambda, big_facet, base, q);
        if (cert.conclusion != Conclusion::no_p_torsion) {
            rep.torsion_free = false;
            if (rep.reason.empty())
                rep.reason = "prime " + q.str() + ": " + cert.reason;
        }
        rep.certificates.emplace(q, std::move(cert));
    }
    if (!sol) {
        rep.torsion_free = false;
        if (rep.reason.empty())
            rep.reason =
                "the collapsed facet's vector is not a rational combination "
                "of the base facet vectors";
    }
    return rep;
}

void verify_certificate(const CombinatorialPolytope& p, const CharMap& lambda,
                        const TorsionCertificate& cert) {
    if (cert.conclusion != Conclusion::no_p_torsion) return;
    require(cert.kind == "plain", "kind mismatch");
    require(cert.sequence.has_value(), "missing sequence");
    verify_retraction(p, *cert.sequence);
    auto tr = singularity_trace(p, lambda, *cert.sequence);
    require(tr == cert.trace, "trace mismatch");
    for (const Int& e : tr)
        require(coprime(e, cert.prime), "trace entry " + e.str() +
                                            " not coprime to the prime");
}

void verify_certificate(const CombinatorialPolytope& p, const CharMap& lambda,
                        int big_facet, const Face& base,
                        const TorsionCertificate& cert) {
    if (cert.conclusion != Conclusion::no_p_torsion) return;
    require(cert.kind == "blowdown", "kind mismatch");
    require(cert.sequence && cert.source_sequence, "missing sequences");
    require(cert.a2 && cert.a2->combo, "missing coefficient evidence");

    auto bd = blowdown(p, big_facet, base);
    auto rc = restrict_char(p, lambda, bd);

    verify_retraction(p, *cert.source_sequence);
    auto strc = singularity_trace(p, lambda, *cert.source_sequence);
    require(strc == cert.source_trace, "source trace mismatch");
    for (const Int& e : strc)
        require(coprime(e, cert.prime),
                "source trace entry " + e.str() + " not coprime");

    const RationalCombination& cb = *cert.a2->combo;
    require(cb.target_facet == big_facet, "combination target mismatch");
    require(cb.combo_facets.size() == cb.coeffs.size(),
            "combination shape mismatch");
    int n = lambda.ambient_rank;
    for (int r = 0; r < n; ++r) {
        Rat sum = 0;
        for (std::size_t i = 0; i < cb.coeffs.size(); ++i)
            sum += cb.coeffs[i] * Rat(lambda.at(cb.combo_facets[i])[r]);
        require(sum == Rat(lambda.at(big_facet)[r]),
                "coefficient identity fails");
    }
    for (const Rat& c : cb.coeffs)
        require(coprime(denominator(c), cert.prime),
                "coefficient denominator not coprime");

    auto rep = induced_retraction_blowdown(p, *cert.source_sequence, bd,
                                           lambda);
    require(rep.sequence.vertex_order() == cert.sequence->vertex_order(),
            "induced sequence mismatch");
    verify_retraction(bd.result, *cert.sequence);
    require(rep.d_values == cert.d_values, "contraction factor mismatch");
    for (const auto& [i, d] : cert.d_values)
        require(coprime(d, cert.prime),
                "contraction factor " + d.str() + " not coprime");

    auto itr = singularity_trace(bd.result, rc.char_map, *cert.sequence);
    require(itr == cert.trace, "induced trace mismatch");
    for (const Int& e : itr)
        require(coprime(e, cert.prime),
                "induced trace entry " + e.str() + " not coprime");
}

void verify_certificate(const CombinatorialPolytope& p, const CharMap& lambda,
                        int facet, const Int& a,
                        const TorsionCertificate& cert) {
    if (cert.conclusion != Conclusion::no_p_torsion) return;
    require(cert.kind == "2-wedge", "kind mismatch");
    require(cert.sequence && cert.source_sequence, "missing sequences");
    require(coprime(1 - a, cert.prime), "|1 - a| not coprime to the prime");

    verify_retraction(p, *cert.source_sequence);
    auto strc = singularity_trace(p, lambda, *cert.source_sequence);
    require(strc == cert.source_trace, "source trace mismatch");
    for (const Int& e : strc)
        require(coprime(e, cert.prime),
                "source trace entry " + e.str() + " not coprime");

    auto wr = induced_retraction_2wedge(p, *cert.source_sequence, facet,
                                        lambda, a);
    require(wr.sequence.vertex_order() == cert.sequence->vertex_order(),
            "wedge sequence mismatch");
    verify_retraction(wr.wedge.result, *cert.sequence);
    require(wr.trace == cert.trace, "wedge trace mismatch");
    for (const Int& e : wr.trace)
        require(coprime(e, cert.prime),
                "wedge trace entry " + e.str() + " not coprime");
}

}  // namespace polycert
