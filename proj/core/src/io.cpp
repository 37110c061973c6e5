#include "smallarr/io.hpp"

#include <fstream>
#include <sstream>

#include "smallarr/errors.hpp"

namespace smallarr {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Json parse_json(const std::string& text, const std::string& what) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw input_error("malformed JSON in " + what);
    return doc;
}

}  // namespace

Rational rational_from_json(const Json& value) {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_string()) return parse_rational(value.get<std::string>());
    throw input_error("matrix entries must be integers or \"p/q\" strings");
}

Json rational_to_json(const Rational& q) {
    if (denominator(q) == 1 && numerator(q) >= -(1LL << 53) && numerator(q) <= (1LL << 53))
        return Json(static_cast<long long>(numerator(q)));
    return Json(rational_to_string(q));
}

Arrangement arrangement_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("ambient_rank") || !doc.contains("subspaces"))
        throw input_error("arrangement document needs \"ambient_rank\" and \"subspaces\"");
    if (!doc["ambient_rank"].is_number_integer() || doc["ambient_rank"].get<long long>() < 1)
        throw input_error("\"ambient_rank\" must be an integer >= 1");
    const auto ambient = doc["ambient_rank"].get<std::size_t>();
    if (!doc["subspaces"].is_array()) throw input_error("\"subspaces\" must be an array");

    std::vector<Subspace> subs;
    for (const auto& entry : doc["subspaces"]) {
        if (!entry.is_object() || !entry.contains("name") || !entry.contains("basis"))
            throw input_error("each subspace needs \"name\" and \"basis\"");
        Subspace sub;
        sub.name = entry["name"].get<std::string>();
        if (!entry["basis"].is_array() || entry["basis"].empty())
            throw input_error("component \"" + sub.name + "\": basis must be a nonempty array");
        std::vector<std::vector<Rational>> rows;
        for (const auto& row : entry["basis"]) {
            if (!row.is_array())
                throw input_error("component \"" + sub.name + "\": basis rows must be arrays");
            std::vector<Rational> parsed;
            for (const auto& cell : row) parsed.push_back(rational_from_json(cell));
            rows.push_back(std::move(parsed));
        }
        for (const auto& row : rows)
            if (row.size() != rows.front().size())
                throw input_error("component \"" + sub.name + "\": ragged rows");
        sub.basis = Matrix::from_rows(rows);
        subs.push_back(std::move(sub));
    }
    return Arrangement::create(ambient, std::move(subs));
}

Arrangement load_arrangement(const std::string& text) {
    return arrangement_from_json(parse_json(text, "arrangement document"));
}

Arrangement load_arrangement_file(const std::string& path) {
    return arrangement_from_json(parse_json(read_file(path), path));
}

Json arrangement_to_json(const Arrangement& arr) {
    Json subs = Json::array();
    for (const auto& sub : arr.components()) {
        Json basis = Json::array();
        for (std::size_t r = 0; r < sub.basis.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < sub.basis.cols(); ++c)
                row.push_back(rational_to_json(sub.basis.at(r, c)));
            basis.push_back(row);
        }
        subs.push_back(Json{{"name", sub.name}, {"basis", basis}});
    }
    return Json{{"ambient_rank", arr.ambient_rank()}, {"subspaces", subs}};
}

SimpleGraph graph_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw input_error("graph document needs \"n\" and \"edges\"");
    if (!doc["n"].is_number_integer()) throw input_error("\"n\" must be an integer");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2) throw input_error("edges must be [u, v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return SimpleGraph::create(doc["n"].get<int>(), std::move(edges));
}

SimpleGraph load_graph(const std::string& text) {
    return graph_from_json(parse_json(text, "graph document"));
}

SimpleGraph load_graph_file(const std::string& path) {
    return graph_from_json(parse_json(read_file(path), path));
}

namespace {

Json forest_to_json(const Forest& f) {
    Json edges = Json::array();
    for (const auto& [u, v] : f.edges) edges.push_back(Json::array({u, v}));
    return edges;
}

Json point_to_json(const std::vector<Rational>& point) {
    Json out = Json::array();
    for (const auto& c : point) out.push_back(rational_to_json(c));
    return out;
}

Json form_to_json(const LinearForm& form) { return point_to_json(form); }

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(point_to_json(m.row(r)));
    return rows;
}

}  // namespace

Json smallness_report_to_json(const SmallnessReport& report) {
    Json out{{"small", report.small},
             {"chi_w_min", report.chi_w_min},
             {"span_rank", report.span_rank},
             {"forest", forest_to_json(report.witness_forest)},
             {"certificate", report.certificate}};
    out["ordering"] = report.ordering ? Json(report.ordering->sequence) : Json(nullptr);
    return out;
}

Json verify_result_to_json(const VerifyResult& result) {
    Json out{{"ok", result.ok}, {"certificate", result.step_ranks}};
    out["first_failure"] = result.first_failure ? Json(*result.first_failure) : Json(nullptr);
    return out;
}

Json direct_sum_report_to_json(const DirectSumReport& report) {
    return Json{{"parts", report.parts}, {"is_direct_sum", report.is_direct_sum}};
}

Json projection_result_to_json(const ProjectionResult& result) {
    Json merged = Json::array();
    for (const auto& [from, into] : result.merged)
        merged.push_back(Json{{"from", from}, {"into", into}});
    return Json{{"arrangement", arrangement_to_json(result.image)},
                {"merged", merged},
                {"dropped", result.dropped}};
}

Json small_char_report_to_json(const SmallCharReport& report) {
    auto witness_to_json = [](const PlaneWitness& w) {
        Json out{{"plane", matrix_to_json(w.plane)}, {"points", Json::array()}};
        for (const auto& p : w.points) out["points"].push_back(point_to_json(p));
        out["component"] = w.component ? Json(*w.component) : Json(nullptr);
        return out;
    };
    Json trials = Json::array(), builtins = Json::array();
    for (const auto& w : report.trial_violations) trials.push_back(witness_to_json(w));
    for (const auto& w : report.builtin_findings) builtins.push_back(witness_to_json(w));
    return Json{{"trial_violations", trials},
                {"builtin_findings", builtins},
                {"abandoned_trials", report.abandoned_trials}};
}

Json generator_set_to_json(const GeneratorSet& gens) {
    Json quadrics = Json::array();
    for (const auto& q : gens.quadrics)
        quadrics.push_back(Json{{"left", form_to_json(q.left)},
                                {"right", form_to_json(q.right)},
                                {"summand", q.summand}});
    return Json{{"quadrics", quadrics},
                {"mu", gens.mu_predicted},
                {"degree2_rank", gens.degree2_rank}};
}

Json generation_report_to_json(const GenerationReport& report) {
    return Json{{"spans_degree2", report.spans_degree2},
                {"degree3_surjective", report.degree3_surjective},
                {"all_vanish", report.all_vanish},
                {"count_matches", report.count_matches},
                {"degree2_rank", report.degree2_rank},
                {"degree3_rank", report.degree3_rank},
                {"reduced_generator_count", report.reduced_generator_count},
                {"ok", report.all_ok()},
                {"detail", report.detail}};
}

Json chordality_report_to_json(const ChordalityReport& report) {
    Json out{{"chordal", report.chordal}};
    if (report.chordal)
        out["peo"] = report.peo;
    else
        out["chordless_cycle"] = report.chordless_cycle;
    return out;
}

Json froberg_report_to_json(const FrobergReport& report) {
    return Json{{"consistent", report.consistent},
                {"chordal", report.chordal},
                {"small", report.small},
                {"quadrics_match", report.quadrics_match},
                {"peo_order_ok", report.peo_order_ok},
                {"mcs_order_ok", report.mcs_order_ok}};
}

}  // namespace smallarr
