#ifndef CENQUOT_REPORT_HPP
#define CENQUOT_REPORT_HPP

#include <json.hpp>

#include "cenquot/fixtures.hpp"

namespace cenquot {

using json = nlohmann::ordered_json;

inline json to_json(const UfdElement& e) { return to_string(e); }
inline json to_json(const Residue& r) { return to_string(r.rep); }

inline json to_json(const Mat<Residue>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.n; ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const Mat<UfdElement>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.n; ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const IPreImage& p) {
    json steps = json::array();
    for (const auto& s : p.trace) {
        json step{{"prime", to_string(s.prime)}, {"q", s.q}, {"m", s.m}};
        if (s.gen_index) {
            step["generator_index"] = *s.gen_index;
            step["cofactor"] = to_string(s.cofactor);
        }
        steps.push_back(step);
    }
    return json{{"r", to_string(p.relative_prime_part)},
                {"delta", to_string(p.divisor_part)},
                {"trace", steps}};
}

inline json to_json(const PrincipalityReport& r) {
    auto exps = [](const std::vector<std::pair<UfdElement, unsigned>>& v) {
        json out = json::array();
        for (const auto& [p, e] : v) out.push_back({{"prime", to_string(p)}, {"exponent", e}});
        return out;
    };
    return json{{"principal", r.principal},
                {"q_principal", r.q_principal},
                {"k_is_unit", r.k_is_unit},
                {"delta_exponents", exps(r.delta_exponents)},
                {"k_exponents", exps(r.k_exponents)}};
}

inline json to_json(const InverseCertificate& c) {
    json factors = json::array();
    for (const auto& f : c.factors) factors.push_back(to_string(f));
    return json{{"doublings", c.doublings},
                {"factors", factors},
                {"residual", to_string(c.residual)},
                {"inverse", to_string(c.inverse.rep)}};
}

inline json to_json(const InverseOutcome& o) {
    json out{{"status", o.status == InverseOutcome::Status::Found      ? "found"
                        : o.status == InverseOutcome::Status::Refuted ? "refuted"
                                                                      : "unknown"},
             {"tag", to_string(o.tag)}};
    if (o.inverse) out["inverse"] = to_string(o.inverse->rep);
    if (o.certificate) out["certificate"] = to_json(*o.certificate);
    if (!o.note.empty()) out["note"] = o.note;
    return out;
}

inline json to_json(const SemiDivisorResult& s) {
    json out{{"certainty", s.certainty == SemiDivisorResult::Certainty::Found     ? "found"
                           : s.certainty == SemiDivisorResult::Certainty::Refuted ? "refuted"
                                                                                  : "unknown"},
             {"delta", to_string(s.divisor)}};
    if (s.cofactor) out["cofactor"] = to_string(s.cofactor->rep);
    out["scaled_query"] = to_json(s.scaled);
    return out;
}

inline json to_json(const IInvertibilityVerdict& v) {
    json out{{"verdict", v.kind == IInvertibilityVerdict::Kind::Yes  ? "yes"
                         : v.kind == IInvertibilityVerdict::Kind::No ? "no"
                                                                     : "unknown"}};
    if (v.witness) out["preimage"] = to_json(*v.witness);
    if (v.inverse) out["inverse_query"] = to_json(*v.inverse);
    if (!v.reason.empty()) out["reason"] = v.reason;
    return out;
}

inline json to_json(const BezoutCertificate& c) {
    static const char* names[3] = {"e-h", "f", "g"};
    return json{{"pair", {names[c.pair[0]], names[c.pair[1]]}},
                {"t", to_string(c.t)},
                {"alpha", to_string(c.alpha.rep)},
                {"beta", to_string(c.beta.rep)}};
}

inline json to_json(const IMatrixVerdict& v) {
    json out{{"verdict", v.certified() ? "certified" : v.refuted() ? "refuted" : "unknown"}};
    if (v.certificate) out["certificate"] = to_json(*v.certificate);
    out["audit"] = v.audit;
    if (!v.reason.empty()) out["reason"] = v.reason;
    return out;
}

inline json to_json(const AnnIdealView& view) {
    json out;
    out["closed_form"] = view.closed.has_value();
    if (view.closed) {
        json gens = json::array();
        for (const auto& g : view.closed->shown_gens) gens.push_back(to_string(g));
        out["generators"] = gens;
        out["zero_ideal"] = view.is_zero_ideal();
        out["whole_ring"] = view.is_whole_ring();
    }
    return out;
}

inline json to_json(const CentralizerDescription& d) {
    json out;
    out["kind"] = d.full()         ? "full"
                  : d.structured() ? "structured"
                                   : "containment-only";
    out["matrix"] = to_json(d.matrix);
    out["verdict"] = to_json(d.verdict);
    if (!d.full()) {
        out["triple_gcd"] = to_string(d.base->triple_gcd);
        out["generator"] = to_json(d.base->generator);
        out["generator_image"] = to_json(d.generator_image);
        out["decomposition_gcd"] = to_string(d.decomposition_gcd);
        out["block_diag"] = to_json(d.block_diag);
        out["block_upper"] = to_json(d.block_upper);
        out["block_lower"] = to_json(d.block_lower);
    }
    return out;
}

inline json to_json(const DecompositionCertificate& c) {
    return json{{"v", to_string(c.v_hat.rep)},
                {"d", to_string(c.d_hat.rep)},
                {"K", to_json(c.k_hat)},
                {"t", to_string(c.t)},
                {"m_k", to_string(c.m_k)},
                {"w", to_string(c.w_lift)},
                {"generator", to_json(c.generator_lift)},
                {"variant", variant_id(c.variant)}};
}

inline json to_json(const MembershipResult& m) {
    json out{{"membership", m.member()                                       ? "member"
                            : m.kind == MembershipResult::Kind::NotMember ? "not-member"
                                                                          : "unknown"}};
    if (m.certificate) out["certificate"] = to_json(*m.certificate);
    if (!m.reason.empty()) out["reason"] = m.reason;
    return out;
}

inline json to_json(const EnumerationReport& r) {
    json mismatches = json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back({{"matrix", to_json(m.matrix)},
                              {"enumerated", m.enumerated},
                              {"described", m.described}});
    return json{{"tested", r.tested},
                {"centralizer_size", r.centralizer_size},
                {"exact", r.exact()},
                {"mismatches", mismatches}};
}

inline json to_json(const QuotientGapFixture& f) {
    return json{{"ring", f.ideal->ring.name()},
                {"matrix", to_json(f.matrix)},
                {"witness", to_json(f.witness)},
                {"witness_commutes", f.witness_commutes},
                {"classifier", to_json(f.verdict)},
                {"witness_membership", to_json(f.witness_membership)}};
}

inline json to_json(const PropositionGapFixture& f) {
    json span = json::array();
    for (const auto& g : f.centralizer_span) span.push_back(to_json(g));
    return json{{"n", f.matrix.n},
                {"matrix", to_json(f.matrix)},
                {"witness", to_json(f.witness)},
                {"witness_commutes", f.witness_commutes},
                {"centralizer_span", span},
                {"span_zero_at_21", f.span_zero_at_21},
                {"grid_rejects_witness", f.grid_rejects_witness},
                {"witness_in_sum", f.witness_in_sum}};
}

}  // namespace cenquot

#endif
