/**
 * @file json_io.hpp
 * @brief JSON and text forms of tableaux, biwords, column sequences and
 * recording tableaux, plus DOT output of component graphs.
 */
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <infcrystal/errors.hpp>
#include <infcrystal/letters.hpp>
#include <infcrystal/partition.hpp>
#include <infcrystal/rs.hpp>
#include <infcrystal/schur_lr.hpp>
#include <infcrystal/tableau.hpp>
#include <infcrystal/word_crystal.hpp>

namespace infcrystal::io {

using json = nlohmann::ordered_json;

inline std::string type_name(LieType t) { return std::string(1, type_char(t)); }

inline json word_json(const Word& w) {
    json a = json::array();
    for (Letter x : w) a.push_back(x.value);
    return a;
}

inline json partition_json(const Partition& p) { return json(p.parts); }

inline json tableau_json(const Tableau& T) {
    json rows = json::array();
    for (const auto& r : T.rows) rows.push_back(word_json(r));
    return json{{"type", type_name(T.type)}, {"shape", partition_json(T.shape())}, {"rows", rows}};
}

inline json recording_json(const RecordingTableau& Q) {
    return json{{"shape", partition_json(Q.shape())}, {"rows", Q.rows}};
}

inline json biword_json(const Biword& b) {
    json rows = json::array();
    for (const auto& r : b.rows) rows.push_back(word_json(r));
    return json{{"type", type_name(b.type)}, {"rows", rows}};
}

inline json columns_json(const ColumnSeq& c) {
    json cols = json::array();
    for (const auto& col : c.columns) cols.push_back(word_json(col));
    return json{{"type", type_name(c.type)}, {"columns", cols}};
}

inline json pair_json(const RSPair& pq) { return json{{"P", tableau_json(pq.P)}, {"Q", recording_json(pq.Q)}}; }

inline json decomposition_json(const DecompositionMultiset& d) {
    json a = json::array();
    for (auto it = d.rbegin(); it != d.rend(); ++it)
        a.push_back(json{{"shape", partition_json(it->first)}, {"multiplicity", it->second}});
    return a;
}

// ---------------------------------------------------------------------------
// Parsing

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

inline bool looks_like_json(const std::string& s) {
    auto p = s.find_first_not_of(" \t\r\n");
    return p != std::string::npos && (s[p] == '{' || s[p] == '[');
}

inline Word word_from_json(const json& j, LieType t) {
    if (!j.is_array()) throw input_error("expected an array of letters");
    Word w;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw input_error("letters must be integers");
        w.push_back(Letter{x.get<int>()});
    }
    require_legal(w, t);
    return w;
}

inline std::vector<Word> segments_from_json(const json& j, LieType t) {
    if (!j.is_array()) throw input_error("expected an array of letter arrays");
    std::vector<Word> out;
    for (const auto& r : j) out.push_back(word_from_json(r, t));
    return out;
}

inline LieType type_from_json(const json& j, LieType fallback) {
    if (j.is_object() && j.contains("type")) return parse_type(j.at("type").get<std::string>());
    return fallback;
}

/// Segments separated by '|': "1 | -1 -1". Without '|', each letter is its
/// own segment.
inline std::vector<Word> segments_from_text(const std::string& s, LieType t) {
    std::vector<Word> out;
    if (s.find('|') == std::string::npos) {
        for (Letter x : parse_word(s, t)) out.push_back({x});
        return out;
    }
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '|')) out.push_back(parse_word(part, t));
    return out;
}

inline Tableau tableau_from(const std::string& s, LieType t) {
    Tableau T{t, {}};
    if (looks_like_json(s)) {
        json j = parse_json(s);
        T.type = type_from_json(j, t);
        T.rows = segments_from_json(j.is_object() ? j.at("rows") : j, T.type);
    } else {
        std::stringstream ss(s);
        std::string part;
        while (std::getline(ss, part, '|')) T.rows.push_back(parse_word(part, t));
    }
    for (std::size_t k = 1; k < T.rows.size(); ++k)
        if (T.rows[k].size() > T.rows[k - 1].size()) throw input_error("tableau rows must have weakly decreasing lengths");
    for (const auto& r : T.rows)
        if (r.empty()) throw input_error("tableau rows must be nonempty");
    return T;
}

inline RecordingTableau recording_from_json(const json& j) {
    const json& rows = j.is_object() ? j.at("rows") : j;
    if (!rows.is_array()) throw input_error("expected recording tableau rows");
    RecordingTableau q;
    for (const auto& r : rows) q.rows.push_back(r.get<std::vector<int>>());
    return q;
}

inline RecordingTableau recording_from(const std::string& s) {
    if (looks_like_json(s)) return recording_from_json(parse_json(s));
    RecordingTableau q;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '|')) {
        std::stringstream row(part);
        std::vector<int> r;
        int v;
        while (row >> v) r.push_back(v);
        if (!row.eof()) throw input_error("malformed recording tableau row '" + part + "'");
        q.rows.push_back(r);
    }
    return q;
}

inline Biword biword_from(const std::string& s, LieType t) {
    if (looks_like_json(s)) {
        json j = parse_json(s);
        LieType tt = type_from_json(j, t);
        return Biword{tt, segments_from_json(j.is_object() ? j.at("rows") : j, tt)};
    }
    return Biword{t, segments_from_text(s, t)};
}

inline ColumnSeq columns_from(const std::string& s, LieType t) {
    if (looks_like_json(s)) {
        json j = parse_json(s);
        LieType tt = type_from_json(j, t);
        return ColumnSeq{tt, segments_from_json(j.is_object() ? j.at("columns") : j, tt)};
    }
    return ColumnSeq{t, segments_from_text(s, t)};
}

inline Partition partition_from(const std::string& s) {
    if (looks_like_json(s)) return Partition(parse_json(s).get<std::vector<int>>());
    std::stringstream ss(s);
    std::vector<int> p;
    int v;
    while (ss >> v) p.push_back(v);
    if (!ss.eof()) throw input_error("malformed partition '" + s + "'");
    return Partition(std::move(p));
}

// ---------------------------------------------------------------------------
// DOT

/// Vertices in BFS order from the highest vertex; edges labeled by color.
inline std::string component_dot(const ComponentGraph& g, const std::string& name) {
    static const char* palette[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta"};
    std::ostringstream s;
    s << "digraph \"" << name << "\" {\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        s << "  v" << v << " [label=\"" << to_string(g.vertices[v]) << "\"];\n";
    for (const auto& [from, to, color] : g.edges)
        s << "  v" << from << " -> v" << to << " [label=\"" << color << "\", color=\""
          << palette[static_cast<std::size_t>(color) % 8] << "\"];\n";
    s << "}\n";
    return s.str();
}

}  // namespace infcrystal::io
