#include "fintopo/io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace fintopo {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream stream(s);
    while (std::getline(stream, item, sep)) parts.push_back(trim(item));
    return parts;
}

}  // namespace

FinitePoset read_poset_text(std::istream& in) {
    std::vector<std::string> labels;
    std::map<std::string, int> seen;
    auto declare = [&](const std::string& name) {
        if (name.empty()) throw ParseError("empty element label");
        if (seen.emplace(name, static_cast<int>(labels.size())).second) labels.push_back(name);
    };

    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto parts = split(line, '<');
        if (parts.size() == 1) {
            declare(parts[0]);
        } else if (parts.size() == 2) {
            declare(parts[0]);
            declare(parts[1]);
            pairs.emplace_back(parts[0], parts[1]);
        } else {
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'a < b' or a bare element");
        }
    }
    if (labels.empty()) throw ParseError("no elements declared");
    return FinitePoset::from_relations(labels, pairs);
}

FinitePoset read_poset_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
        throw ParseError("structured poset needs an 'elements' array");
    std::vector<std::string> labels;
    for (const auto& e : doc["elements"]) {
        if (!e.is_string()) throw ParseError("'elements' entries must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    if (doc.contains("relations")) {
        if (!doc["relations"].is_array()) throw ParseError("'relations' must be an array");
        for (const auto& r : doc["relations"]) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
                throw ParseError("each relation must be a [lower, upper] pair of strings");
            pairs.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
        }
    }
    bool covers = false;
    if (doc.contains("relations_are_covers")) {
        if (!doc["relations_are_covers"].is_boolean())
            throw ParseError("'relations_are_covers' must be a boolean");
        covers = doc["relations_are_covers"].get<bool>();
    }
    return FinitePoset::from_relations(labels, pairs, covers);
}

FinitePoset read_poset_any(std::istream& in) {
    int c;
    while ((c = in.peek()) != std::istream::traits_type::eof() &&
           std::isspace(static_cast<unsigned char>(c)))
        in.get();
    if (c == '{') return read_poset_json(in);
    return read_poset_text(in);
}

FinitePoset read_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_poset_any(in);
}

void write_poset_text(std::ostream& out, const FinitePoset& poset) {
    Bitset isolated = poset.full_mask();
    for (int x = 0; x < poset.size(); ++x) {
        for (int y = poset.upper_covers(x).find_first(); y != static_cast<int>(Bitset::npos);
             y = poset.upper_covers(x).find_next(y)) {
            out << poset.label(x) << " < " << poset.label(y) << "\n";
            isolated.reset(x);
            isolated.reset(y);
        }
    }
    for (int x = isolated.find_first(); x != static_cast<int>(Bitset::npos);
         x = isolated.find_next(x))
        out << poset.label(x) << "\n";
}

void write_dot(std::ostream& out, const FinitePoset& poset) {
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (int lv = 0; lv <= poset.height(); ++lv) {
        out << "  { rank=same;";
        for (int x = 0; x < poset.size(); ++x)
            if (poset.level(x) == lv) out << " \"" << poset.label(x) << "\";";
        out << " }\n";
    }
    for (int x = 0; x < poset.size(); ++x)
        for (int y = poset.upper_covers(x).find_first(); y != static_cast<int>(Bitset::npos);
             y = poset.upper_covers(x).find_next(y))
            out << "  \"" << poset.label(x) << "\" -> \"" << poset.label(y) << "\";\n";
    out << "}\n";
}

void write_trace(std::ostream& out, const std::vector<BeatPointReport>& trace) {
    for (const BeatPointReport& r : trace) {
        const char* kind = r.kind == BeatKind::down ? "down" : "up";
        out << r.point_label << " " << kind << " witness=" << r.witness_label << "\n";
    }
}

Hypergraph read_hypergraph_text(std::istream& in) {
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    std::vector<std::vector<int>> raw_edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::vector<int> edge;
        for (const std::string& name : split(line, ',')) {
            if (name.empty())
                throw ParseError("line " + std::to_string(lineno) + ": empty vertex label");
            auto it = index.find(name);
            if (it == index.end()) {
                it = index.emplace(name, static_cast<int>(labels.size())).first;
                labels.push_back(name);
            }
            edge.push_back(it->second);
        }
        raw_edges.push_back(std::move(edge));
    }
    if (labels.empty()) throw ParseError("no hyperedges declared");
    if (labels.size() > 64) throw SizeBudgetExceeded("hypergraphs limited to 64 vertices");
    std::vector<std::uint64_t> edges;
    for (const auto& e : raw_edges) {
        std::uint64_t m = 0;
        for (int v : e) m |= std::uint64_t{1} << v;
        edges.push_back(m);
    }
    return make_hypergraph(std::move(labels), std::move(edges));
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_hypergraph_text(in);
}

void write_hypergraph_text(std::ostream& out, const Hypergraph& h) {
    for (std::uint64_t e : h.edges) {
        const auto labels = h.edge_labels(e);
        for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
        out << "\n";
    }
}

std::vector<Bitset> read_cover_file(std::istream& in, const FinitePoset& poset) {
    std::vector<Bitset> cover;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        Bitset gens(poset.size());
        for (const std::string& name : split(line, ',')) {
            const auto idx = poset.find(name);
            if (!idx)
                throw ParseError("line " + std::to_string(lineno) + ": unknown element '" + name +
                                 "'");
            gens.set(*idx);
        }
        cover.push_back(std::move(gens));
    }
    if (cover.empty()) throw ParseError("empty cover file");
    return cover;
}

void write_compatibility_table(std::ostream& out, const CompatibilityTable& table) {
    for (const auto& [mask, compatible] : table.entries) {
        out << "{";
        bool first = true;
        for (std::uint64_t rest = mask; rest;) {
            const int p = std::countr_zero(rest);
            rest &= rest - 1;
            out << (first ? "" : ",") << table.universe_labels.at(p);
            first = false;
        }
        out << "}:" << (compatible ? 0 : 1) << "\n";
    }
}

namespace {

nlohmann::json bound_json(const BoundValue& v) {
    nlohmann::json j;
    if (v.exact()) {
        j["value"] = v.upper;
        j["kind"] = "exact";
    } else {
        j["lower"] = v.lower;
        j["upper"] = v.upper;
        j["kind"] = "bound";
    }
    return j;
}

nlohmann::json witness_json(const ExactCoverResult& w) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& member : w.cover_labels()) j.push_back(member);
    return j;
}

}  // namespace

std::string invariant_report_json(const InvariantReport& report) {
    nlohmann::json j;
    j["gcat"] = bound_json(report.gcat);
    j["gcat_p"] = bound_json(report.gcat_p);
    j["cat_u"] = bound_json(report.cat_u);
    j["max_core"] = {{"value", report.max_core}, {"kind", "exact"}};
    j["max_all"] = {{"value", report.max_all}, {"kind", "exact"}};
    if (report.cat_h1) j["cat_h1"] = bound_json(*report.cat_h1);
    if (report.gcat_witness) j["gcat_cover"] = witness_json(*report.gcat_witness);
    if (report.gcat_p_witness) j["gcat_p_cover"] = witness_json(*report.gcat_p_witness);
    if (report.cat_u_witness) j["cat_u_cover"] = witness_json(*report.cat_u_witness);
    if (report.cat_h1_witness) j["cat_h1_cover"] = witness_json(*report.cat_h1_witness);
    j["budget_hit"] = report.budget_hit;
    return j.dump(2);
}

namespace {

void print_bound(std::ostream& out, const char* name, const BoundValue& v) {
    out << name << " = ";
    if (v.exact())
        out << v.upper << " (exact)\n";
    else
        out << "[" << v.lower << ", " << v.upper << "] (bound)\n";
}

}  // namespace

void write_invariant_report(std::ostream& out, const InvariantReport& report, bool as_json) {
    if (as_json) {
        out << invariant_report_json(report) << "\n";
        return;
    }
    if (report.cat_h1) print_bound(out, "cat (height 1)", *report.cat_h1);
    print_bound(out, "cat_u", report.cat_u);
    print_bound(out, "gcat_p", report.gcat_p);
    print_bound(out, "gcat", report.gcat);
    out << "|Max(core)| = " << report.max_core << "\n";
    out << "|Max(X)| = " << report.max_all << "\n";
    if (report.gcat_witness) {
        out << "gcat cover:";
        for (const auto& member : report.gcat_witness->cover_labels()) {
            out << " {";
            for (std::size_t i = 0; i < member.size(); ++i) out << (i ? "," : "") << member[i];
            out << "}";
        }
        out << "\n";
    }
}

}  // namespace fintopo
