#include "poramsey/io.hpp"

#include "poramsey/error.hpp"

#include <sstream>

namespace poramsey {

using nlohmann::json;

json graph_to_json(const Graph & g)
{
    json edges = json::array();
    for (auto [a, b] : g.edges())
        edges.push_back({a, b});
    return {{"size", g.size()}, {"labels", g.labels()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json & doc)
{
    try {
        auto size = doc.at("size").get<std::size_t>();
        std::vector<std::string> labels;
        if (doc.contains("labels"))
            labels = doc.at("labels").get<std::vector<std::string>>();
        Graph g = labels.empty() && size != 0 ? Graph(size) : Graph(size, std::move(labels));
        for (const auto & e : doc.at("edges")) {
            if (! e.is_array() || e.size() != 2)
                throw Error(Errc::ParseError, "edge entries must be [i, j] pairs");
            g.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
        return g;
    }
    catch (const json::exception & e) {
        throw Error(Errc::ParseError, e.what());
    }
}

namespace {

std::string quoted(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string to_dot(const Graph & g, std::string_view name)
{
    std::ostringstream out;
    out << "graph " << quoted(name) << " {\n";
    for (Vertex v = 0; v < g.size(); ++v)
        out << "  " << v << " [label=" << quoted(g.label(v)) << "];\n";
    for (auto [a, b] : g.edges())
        out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

json poset_to_json(const Poset & p)
{
    json rows = json::array();
    for (Vertex a = 0; a < p.size(); ++a) {
        json row = json::array();
        for (Vertex b = 0; b < p.size(); ++b)
            row.push_back(p.leq(a, b));
        rows.push_back(std::move(row));
    }
    return {{"size", p.size()}, {"leq", std::move(rows)}};
}

Poset poset_from_json(const json & doc)
{
    std::vector<std::vector<bool>> raw;
    try {
        auto size = doc.at("size").get<std::size_t>();
        raw = doc.at("leq").get<std::vector<std::vector<bool>>>();
        if (raw.size() != size)
            throw Error(Errc::ParseError, "\"leq\" has " + std::to_string(raw.size()) + " rows, expected " + std::to_string(size));
    }
    catch (const json::exception & e) {
        throw Error(Errc::ParseError, e.what());
    }
    return validate_poset(raw);
}

} // namespace poramsey
