#ifndef GENT_SERIALIZE_HPP
#define GENT_SERIALIZE_HPP

#include <json.hpp>

#include "gent/closed_forms.hpp"
#include "gent/coloring.hpp"
#include "gent/corner.hpp"
#include "gent/counting.hpp"
#include "gent/fractional.hpp"
#include "gent/symmetry.hpp"

namespace gent {

using Json = nlohmann::ordered_json;

inline Json to_json(const Bitset& b) { return b.to_vector(); }

inline Json to_json(const EntropyResult& r) {
    return Json{{"value_bits", r.value_bits},
                {"minimizer", r.minimizer},
                {"iterations", r.iterations},
                {"gap_bits", r.gap_bits},
                {"method", r.method}};
}

inline Json to_json(const Rational& r) { return rational_to_string(r); }

inline Json to_json(const FractionalChromatic& f) {
    Json weights = Json::array();
    for (const auto& [set, w] : f.weights)
        weights.push_back(Json{{"set", to_json(set)}, {"weight", to_json(w)}});
    return Json{{"value", to_json(f.value)}, {"weights", weights}};
}

inline Json to_json(const Coloring& c, const Distribution& p) {
    Json classes = Json::array();
    for (const auto& cls : c.classes) classes.push_back(to_json(cls));
    return Json{{"classes", classes}, {"color_sequence", color_sequence(c, p)}};
}

inline Json to_json(const BipartiteEntropyReport& r) {
    Json j{{"condition_holds", r.condition_holds},
           {"value_bits", r.value_bits},
           {"part_a", to_json(r.part_a)},
           {"part_b", to_json(r.part_b)}};
    if (r.partition) {
        Json blocks = Json::array();
        for (const auto& [d, u] : *r.partition)
            blocks.push_back(Json{{"D", to_json(d)}, {"U", to_json(u)}});
        j["partition"] = blocks;
    } else {
        j["partition"] = nullptr;
    }
    return j;
}

inline Json to_json(const SymmetryVerdict& v) {
    Json j;
    j["symmetric"] = v.symmetric == Symmetric::Yes ? Json(true)
                   : v.symmetric == Symmetric::No ? Json(false)
                                                  : Json("unknown");
    j["criterion"] = v.criterion;
    Json cert = Json::object();
    if (v.matching) {
        Json m = Json::array();
        for (auto [a, b] : *v.matching) m.push_back(Json::array({a, b}));
        cert["matching"] = m;
    }
    if (v.hall_violator_set) cert["hall_violator"] = to_json(*v.hall_violator_set);
    if (v.clique_partition) {
        Json parts = Json::array();
        for (const auto& q : *v.clique_partition) parts.push_back(to_json(q));
        cert["clique_partition"] = parts;
    }
    if (v.independent_set) cert["independent_set"] = to_json(*v.independent_set);
    if (v.odd_set) cert["odd_set"] = to_json(*v.odd_set);
    if (v.kkt_point) cert["kkt_point"] = *v.kkt_point;
    if (v.ambiguous_cover) cert["ambiguous_cover"] = true;
    j["certificate"] = cert;
    j["numeric_gap_bits"] = v.numeric_gap_bits;
    return j;
}

inline Json to_json(const ShearerReport& r) {
    return Json{{"n", r.n}, {"n1", r.n1}, {"n2", r.n2}, {"n3", r.n3}, {"holds", r.holds}};
}

inline Json to_json(const BregmanReport& r) {
    return Json{{"count", r.count}, {"bound", r.bound}, {"holds", r.holds}};
}

} // namespace gent

#endif
