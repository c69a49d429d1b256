#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlrigid/analyze.hpp"
#include "dlrigid/construction.hpp"
#include "dlrigid/errors.hpp"
#include "dlrigid/global_rigidity.hpp"
#include "dlrigid/graph.hpp"
#include "dlrigid/realisation.hpp"

namespace dlrigid {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Graphs

inline EdgeKind parse_kind(const std::string& s) {
    if (s == "direction") return EdgeKind::Direction;
    if (s == "length") return EdgeKind::Length;
    fail(ErrorCode::ParseError, "unknown edge kind: " + s);
}

inline MixedGraph graph_from_json(const json& j) {
    require(j.is_object() && j.contains("vertices") && j.at("vertices").is_array(),
            ErrorCode::ParseError, "graph JSON needs a \"vertices\" array");
    std::vector<VertexId> vertices;
    for (const auto& v : j.at("vertices")) {
        require(v.is_string(), ErrorCode::ParseError, "vertex labels must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::tuple<VertexId, VertexId, EdgeKind>> edges;
    for (auto [key, kind] : {std::pair{"direction", EdgeKind::Direction},
                             std::pair{"length", EdgeKind::Length}}) {
        if (!j.contains(key)) continue;
        require(j.at(key).is_array(), ErrorCode::ParseError,
                std::string("\"") + key + "\" must be an array of vertex pairs");
        for (const auto& pair : j.at(key)) {
            require(pair.is_array() && pair.size() == 2 && pair[0].is_string() &&
                        pair[1].is_string(),
                    ErrorCode::ParseError, "edges must be [u, v] string pairs");
            edges.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>(), kind);
        }
    }
    return MixedGraph(std::move(vertices), edges);
}

inline json graph_to_json(const MixedGraph& g) {
    json j;
    j["vertices"] = g.vertices();
    json dir = json::array(), len = json::array();
    for (const auto& e : g.edges()) {
        (e.kind == EdgeKind::Direction ? dir : len).push_back({e.u, e.v});
    }
    j["direction"] = std::move(dir);
    j["length"] = std::move(len);
    return j;
}

/// Line format: `vertex <id>`, `dir <u> <v>`, `len <u> <v>`, `#` comments.
inline MixedGraph graph_from_text(const std::string& text) {
    std::vector<VertexId> vertices;
    std::vector<std::tuple<VertexId, VertexId, EdgeKind>> edges;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        if (word == "vertex") {
            std::string id;
            require(static_cast<bool>(ls >> id), ErrorCode::ParseError,
                    "vertex needs a label" + where());
            vertices.push_back(id);
        } else if (word == "dir" || word == "len") {
            std::string u, v;
            require(static_cast<bool>(ls >> u >> v), ErrorCode::ParseError,
                    word + " needs two endpoints" + where());
            edges.emplace_back(u, v, word == "dir" ? EdgeKind::Direction : EdgeKind::Length);
        } else {
            fail(ErrorCode::ParseError, "unknown directive \"" + word + "\"" + where());
        }
    }
    return MixedGraph(std::move(vertices), edges);
}

/// JSON when the first non-space byte is '{', the line format otherwise.
inline MixedGraph load_graph(const std::string& content) {
    auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        json j;
        try {
            j = json::parse(content);
        } catch (const json::exception& e) {
            fail(ErrorCode::ParseError, e.what());
        }
        return graph_from_json(j);
    }
    return graph_from_text(content);
}

inline std::string to_dot(const MixedGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& v : g.vertices()) out << "  \"" << v << "\";\n";
    for (const auto& e : g.edges()) {
        out << "  \"" << e.u << "\" -- \"" << e.v << "\" [style="
            << (e.kind == EdgeKind::Direction ? "dashed" : "solid") << "];\n";
    }
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Realisations

inline json realisation_to_json(const RealisationQ& p) {
    json coords = json::object();
    for (const auto& [v, pt] : p) coords[v] = {pt.x.to_string(), pt.y.to_string()};
    return json{{"coords", std::move(coords)}};
}

inline RealisationQ realisation_from_json(const json& j) {
    require(j.is_object() && j.contains("coords") && j.at("coords").is_object(),
            ErrorCode::ParseError, "realisation JSON needs a \"coords\" object");
    RealisationQ p;
    for (const auto& [v, pt] : j.at("coords").items()) {
        require(pt.is_array() && pt.size() == 2 && pt[0].is_string() && pt[1].is_string(),
                ErrorCode::ParseError, "coordinates must be [x, y] string pairs");
        p[v] = Vec2<BigRational>{BigRational::from_string(pt[0].get<std::string>()),
                                 BigRational::from_string(pt[1].get<std::string>())};
    }
    return p;
}

// ---------------------------------------------------------------------------
// Certificates

inline json edge_to_json(const Edge& e) { return {e.u, e.v, kind_name(e.kind)}; }

inline Edge edge_from_json(const json& j) {
    require(j.is_array() && j.size() == 3, ErrorCode::ParseError,
            "edge must be [u, v, kind]");
    return Edge(j[0].get<std::string>(), j[1].get<std::string>(),
                parse_kind(j[2].get<std::string>()));
}

inline json move_to_json(const Move& move) {
    json j;
    if (const auto* m = std::get_if<EdgeAddition>(&move)) {
        j["op"] = "EdgeAddition";
        j["edge"] = edge_to_json(m->edge);
    } else if (const auto* m = std::get_if<ZeroExtension>(&move)) {
        j["op"] = "ZeroExtension";
        j["v"] = m->v;
        j["x"] = m->x;
        j["y"] = m->y;
        j["kinds"] = {kind_name(m->kinds[0]), kind_name(m->kinds[1])};
    } else if (const auto* m = std::get_if<OneExtension>(&move)) {
        j["op"] = "OneExtension";
        j["v"] = m->v;
        j["deleted"] = edge_to_json(m->deleted);
        j["z"] = m->z;
        j["kinds"] = {kind_name(m->kinds[0]), kind_name(m->kinds[1]), kind_name(m->kinds[2])};
    } else {
        const auto& ts = std::get<TwoSumPureK4>(move);
        j["op"] = ts.kind == EdgeKind::Direction ? "TwoSumDirK4" : "TwoSumLenK4";
        j["x"] = ts.x;
        j["y"] = ts.y;
        j["new_labels"] = {ts.new_labels[0], ts.new_labels[1]};
    }
    return j;
}

inline Move move_from_json(const json& j) {
    require(j.is_object() && j.contains("op"), ErrorCode::ParseError,
            "move needs an \"op\" field");
    const std::string op = j.at("op").get<std::string>();
    if (op == "EdgeAddition") return EdgeAddition{edge_from_json(j.at("edge"))};
    if (op == "ZeroExtension") {
        return ZeroExtension{j.at("v").get<std::string>(), j.at("x").get<std::string>(),
                             j.at("y").get<std::string>(),
                             {parse_kind(j.at("kinds")[0].get<std::string>()),
                              parse_kind(j.at("kinds")[1].get<std::string>())}};
    }
    if (op == "OneExtension") {
        return OneExtension{j.at("v").get<std::string>(), edge_from_json(j.at("deleted")),
                            j.at("z").get<std::string>(),
                            {parse_kind(j.at("kinds")[0].get<std::string>()),
                             parse_kind(j.at("kinds")[1].get<std::string>()),
                             parse_kind(j.at("kinds")[2].get<std::string>())}};
    }
    if (op == "TwoSumDirK4" || op == "TwoSumLenK4") {
        return TwoSumPureK4{
            j.at("x").get<std::string>(), j.at("y").get<std::string>(),
            op == "TwoSumDirK4" ? EdgeKind::Direction : EdgeKind::Length,
            {j.at("new_labels")[0].get<std::string>(), j.at("new_labels")[1].get<std::string>()}};
    }
    fail(ErrorCode::ParseError, "unknown move op: " + op);
}

inline json certificate_to_json(const ConstructionCertificate& c) {
    json j;
    j["base"] = {{"kind", base_kind_name(c.base)},
                 {"labels", {c.base_labels[0], c.base_labels[1], c.base_labels[2]}}};
    j["mode"] = mode_name(c.mode);
    json moves = json::array();
    for (const auto& m : c.moves) moves.push_back(move_to_json(m));
    j["moves"] = std::move(moves);
    return j;
}

inline ConstructionCertificate certificate_from_json(const json& j) {
    require(j.is_object() && j.contains("base") && j.contains("moves"),
            ErrorCode::ParseError, "certificate needs \"base\" and \"moves\"");
    ConstructionCertificate c;
    const auto& base = j.at("base");
    const std::string kind = base.at("kind").get<std::string>();
    if (kind == "K3Plus") {
        c.base = BaseKind::K3Plus;
    } else if (kind == "K3Minus") {
        c.base = BaseKind::K3Minus;
    } else {
        fail(ErrorCode::ParseError, "unknown base kind: " + kind);
    }
    const auto& labels = base.at("labels");
    require(labels.is_array() && labels.size() == 3, ErrorCode::ParseError,
            "base needs three labels");
    for (int i = 0; i < 3; ++i) c.base_labels[i] = labels[i].get<std::string>();
    if (j.contains("mode")) {
        const std::string mode = j.at("mode").get<std::string>();
        if (mode == "dbal") {
            c.mode = ConstructionMode::DirectionBalanced;
        } else if (mode == "mconn") {
            c.mode = ConstructionMode::MConnOnly;
        } else {
            fail(ErrorCode::ParseError, "unknown mode: " + mode);
        }
    }
    for (const auto& m : j.at("moves")) c.moves.push_back(move_from_json(m));
    return c;
}

// ---------------------------------------------------------------------------
// Reports

inline json separation_to_json(const TwoSeparation& s) {
    return json{{"cut", {s.x, s.y}},
                {"side_a", s.side_a},
                {"side_b", s.side_b},
                {"direction_balanced", s.direction_balanced},
                {"length_balanced", s.length_balanced}};
}

inline json ears_to_json(const EarDecomposition& d) {
    json circuits = json::array(), lobes = json::array(), lobe_sizes = json::array();
    for (const auto& c : d.circuits) {
        json arr = json::array();
        for (const auto& e : c) arr.push_back(edge_to_json(e));
        circuits.push_back(std::move(arr));
    }
    for (const auto& l : d.lobes) {
        json arr = json::array();
        for (const auto& e : l) arr.push_back(edge_to_json(e));
        lobes.push_back(std::move(arr));
        lobe_sizes.push_back(l.size());
    }
    return json{{"circuits", std::move(circuits)},
                {"lobes", std::move(lobes)},
                {"lobe_sizes", std::move(lobe_sizes)},
                {"ranks", d.ranks}};
}

inline json report_to_json(const AnalysisReport& r) {
    json j;
    j["counts"] = {{"vertices", r.num_vertices},
                   {"direction", r.num_direction},
                   {"length", r.num_length},
                   {"edges", r.num_direction + r.num_length}};
    j["independent"] = r.independent;
    j["circuit"] = r.circuit;
    j["m_connected"] = r.m_connected;
    j["rigid"] = r.rigid;
    j["redundantly_rigid"] = r.redundantly_rigid;
    j["two_connected"] = r.two_connected;
    j["direction_balanced"] =
        r.direction_balanced ? json(*r.direction_balanced) : json(nullptr);
    j["length_balanced"] = r.length_balanced ? json(*r.length_balanced) : json(nullptr);
    if (r.ears) j["ears"] = ears_to_json(*r.ears);
    if (r.separations) {
        json seps = json::array();
        for (const auto& s : *r.separations) seps.push_back(separation_to_json(s));
        j["separations"] = std::move(seps);
    }
    j["audit"] = {{"seed", r.options.seed},
                  {"trials", r.options.trials},
                  {"primes", r.primes}};
    return j;
}

inline json witness_to_json(const MixedGraph& g, const RealisationQ& p, const Witness& w) {
    json j;
    j["realisation_p"] = realisation_to_json(p);
    j["realisation_q"] = realisation_to_json(w.q);
    j["separation"] = separation_to_json(w.separation);
    j["residuals"] = {{"equivalence", equivalence_residual(g, p, w.q)},
                      {"congruence", congruence_residual(g, p, w.q)}};
    j["equivalent_exact"] = check_equivalent(g, p, w.q, 0.0, Domain::ExactRational);
    j["congruent_exact"] = check_congruent(g, p, w.q, 0.0, Domain::ExactRational);
    return j;
}

} // namespace dlrigid
