#include "modd/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace modd {

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line))
        throw std::invalid_argument("graph file is empty");
    std::istringstream header(line);
    long long n = 0, m = 0;
    if (!(header >> n >> m) || n < 1 || m < 0)
        throw std::invalid_argument("bad header line: '" + line + "', expected 'n m'");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line))
            throw std::invalid_argument("expected " + std::to_string(m) + " edges, found " +
                                        std::to_string(i));
        std::istringstream row(line);
        long long u = 0, v = 0;
        if (!(row >> u >> v))
            throw std::invalid_argument("bad edge line: '" + line + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path.string() + " for writing");
    write_graph(out, g);
    if (!out) throw std::invalid_argument("failed writing " + path.string());
}

}  // namespace modd
