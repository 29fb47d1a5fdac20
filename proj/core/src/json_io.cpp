#include "degseq/json_io.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace degseq {

std::string rat_decimal(const Rat& value, int digits10) {
    return decimal_string(value, digits10);
}

namespace {

Json rat_to_json(const Rat& value) {
    Json j;
    j["num"] = boost::multiprecision::numerator(value).str();
    j["den"] = boost::multiprecision::denominator(value).str();
    j["decimal"] = rat_decimal(value);
    return j;
}

} // namespace

Json graph_to_json(const LabeledGraph& g) {
    Json j;
    j["n"] = g.n();
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
    j["edges"] = std::move(edges);
    return j;
}

LabeledGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
        !j["n"].is_number_integer() || !j["edges"].is_array())
        fail(Errc::invalid_argument, "graph JSON must be {\"n\": int, \"edges\": [[i,j],...]}");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            fail(Errc::invalid_argument, "each edge must be a pair [i, j]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return LabeledGraph(n, edges);
    } catch (const Error& err) {
        fail(Errc::invalid_argument, std::string("bad graph: ") + err.what());
    }
}

Json sequence_to_json(const DegreeSequence& d) { return Json(d.degrees()); }

Json verdict_to_json(const GraphicVerdict& v) {
    Json j;
    j["graphic"] = v.graphic;
    j["failing_k"] = v.failing_k ? Json(*v.failing_k) : Json(nullptr);
    j["sort_permutation"] = v.sort_permutation;
    return j;
}

Json trail_to_json(const AlternatingTrail& t) {
    Json j;
    j["vertices"] = t.vertices;
    j["starts_with_edge"] = t.starts_with_edge;
    return j;
}

Json hostile_to_json(const HostileConfiguration& h) {
    Json j;
    j["p"] = h.p;
    j["q"] = h.q;
    j["S"] = h.s();
    j["K"] = h.k;
    j["Y"] = h.y;
    j["R"] = h.r;
    return j;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    if (is_witness(c)) {
        j["kind"] = "witness";
        j["trail"] = trail_to_json(std::get<AlternatingTrail>(c));
        j["partition"] = nullptr;
        j["d_pp"] = nullptr;
        j["final_graph"] = nullptr;
        j["case"] = nullptr;
        j["trace"] = nullptr;
        return j;
    }
    const auto& h = std::get<HostileCertificate>(c);
    j["kind"] = "hostile";
    j["trail"] = nullptr;
    j["partition"] = hostile_to_json(h.config);
    j["d_pp"] = sequence_to_json(h.d_pp);
    j["final_graph"] = graph_to_json(h.final_graph);
    j["case"] = h.trace.case_tag == CaseTag::case1 ? "I" : "II";
    Json steps = Json::array();
    for (const HingeFlipStep& s : h.trace.steps) {
        Json step;
        step["x"] = s.x;
        step["y"] = s.y;
        step["z"] = s.z;
        step["phase"] = phase_name(s.phase);
        steps.push_back(std::move(step));
    }
    j["trace"] = std::move(steps);
    return j;
}

Json classification_to_json(const RegionClassification& c) {
    Json j;
    j["fully_graphic"] = c.fully_graphic;
    j["q"] = c.q_value;
    if (c.lemma15_window)
        j["window"] = Json::array({c.lemma15_window->lo, c.lemma15_window->hi});
    else
        j["window"] = nullptr;
    j["window_defined"] = c.lemma15_window_defined;
    j["p1"] = c.p1;
    j["p2"] = c.p2;
    j["p3"] = c.p3;
    j["p4_applicable"] = c.p4_applicable;
    j["gs_plus"] = c.gs_plus ? Json(*c.gs_plus) : Json(nullptr);
    j["leg"] = sequence_to_json(c.leg);
    j["alpha_floor"] = c.alpha_floor;
    j["a"] = c.a_value;
    return j;
}

namespace {

Json quotient_to_json(const BoundaryReport& r) {
    Json q = rat_to_json(r.quotient);
    return q;
}

} // namespace

Json boundary_to_json(const BoundaryReport& le_report, const BoundaryReport& lt_report,
                      PairConvention selected) {
    Json j;
    j["convention"] = selected == PairConvention::i_le_j ? "i_le_j" : "i_lt_j";
    j["quotient"] =
        quotient_to_json(selected == PairConvention::i_le_j ? le_report : lt_report);
    j["base_count"] = le_report.base_count.str();
    j["quotient_diagonal"] = quotient_to_json(le_report);
    j["quotient_strict"] = quotient_to_json(lt_report);
    Json terms = Json::array();
    for (const BoundaryTerm& t : le_report.terms) {
        Json term;
        term["i"] = t.i;
        term["j"] = t.j;
        term["count"] = t.count.str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json window_to_json(const UnstableWindow& w) {
    Json j;
    j["n"] = w.n;
    j["c1"] = w.c1;
    j["c2"] = w.c2;
    j["r"] = w.r;
    j["q"] = w.q;
    j["q_r"] = w.q_r;
    j["empty"] = w.empty;
    if (!w.empty) {
        j["x_min"] = w.x_min;
        j["x_max"] = w.x_max;
        j["sigma_min"] = w.sigma_min;
        j["sigma_max"] = w.sigma_max;
    } else {
        j["x_min"] = nullptr;
        j["x_max"] = nullptr;
        j["sigma_min"] = nullptr;
        j["sigma_max"] = nullptr;
    }
    Json intervals = Json::array();
    for (const XInterval& iv : w.intervals) {
        Json e;
        e["x"] = iv.x;
        e["lo"] = iv.lo;
        e["hi"] = iv.hi;
        intervals.push_back(std::move(e));
    }
    j["intervals"] = std::move(intervals);
    if (w.epsilon) {
        Json e;
        e["exact"] = w.epsilon->exact;
        // the upper end of the bracket; exact value when exact == true
        Json hi = rat_to_json(w.epsilon->hi);
        e["num"] = hi["num"];
        e["den"] = hi["den"];
        e["decimal"] = hi["decimal"];
        if (!w.epsilon->exact) e["lo_decimal"] = rat_decimal(w.epsilon->lo);
        j["epsilon"] = std::move(e);
    } else {
        j["epsilon"] = nullptr;
    }
    j["beta"] = w.beta ? Json(rat_decimal(*w.beta, 6)) : Json(nullptr);
    j["eq8_holds"] = w.eq8_holds ? Json(*w.eq8_holds) : Json(nullptr);
    j["epsilon_bound_holds"] =
        w.epsilon_bound_holds ? Json(*w.epsilon_bound_holds) : Json(nullptr);
    if (w.eq9_interval)
        j["eq9_interval"] = Json::array({w.eq9_interval->lo, w.eq9_interval->hi});
    else
        j["eq9_interval"] = nullptr;
    j["eq9_inside_window"] = w.eq9_inside_window ? Json(*w.eq9_inside_window) : Json(nullptr);
    return j;
}

Json construction_to_json(const UnstableConstruction& u) {
    Json j;
    j["sequence"] = sequence_to_json(u.sequence);
    j["x"] = u.x;
    j["y"] = u.composition.y;
    j["r"] = u.composition.r;
    j["e"] = u.e;
    j["sigma"] = u.composition.sigma;
    j["graph"] = graph_to_json(u.composition.graph);
    return j;
}

Json mixing_to_json(const MixingReport& m) {
    Json j;
    j["total_samples"] = m.total_samples;
    j["distinct_states"] = m.visit_counts.size();
    j["tv_distance"] = m.tv_distance ? rat_to_json(*m.tv_distance) : Json(nullptr);
    Json counts = Json::array();
    for (const auto& [key, count] : m.visit_counts) {
        Json e;
        e["state"] = key;
        e["count"] = count;
        counts.push_back(std::move(e));
    }
    j["visit_counts"] = std::move(counts);
    return j;
}

} // namespace degseq
