#include "tricm/graph.hpp"

#include <sstream>
#include <unordered_map>

namespace tricm {

Graph read_edge_list(std::istream& in) {
    std::unordered_map<std::string, Vertex> index;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    auto intern = [&](const std::string& label) {
        auto [it, inserted] = index.try_emplace(label, static_cast<Vertex>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first) || first.front() == '#') continue;
        std::string second;
        std::string extra;
        const bool has_second = static_cast<bool>(tokens >> second);
        if (tokens >> extra)
            throw InputError("line " + std::to_string(line_no) + ": expected at most two labels");
        const Vertex u = intern(first);
        if (!has_second) continue;
        if (first == second) throw InputError("line " + std::to_string(line_no) + ": self-loop on '" + first + "'");
        edges.push_back({u, intern(second)});
    }
    if (in.bad()) throw InputError("read error");
    const std::size_t count = labels.size();
    return Graph(count, std::move(edges), std::move(labels));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    // Declaring every vertex up front pins the index order on re-read.
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << g.label(v) << '\n';
    for (const auto& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

}  // namespace tricm
