#include "lagrangia/io.hpp"

#include <fstream>
#include <sstream>

namespace lagrangia {

Hypergraph read_hg(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int r = 0, n = 0;
    std::vector<std::vector<Vertex>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<long long> values;
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                values.push_back(std::stoll(token, &used));
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw HypergraphError("line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
            }
        }
        if (values.empty()) continue;
        if (!have_header) {
            if (values.size() != 2)
                throw HypergraphError("line " + std::to_string(line_no) + ": header must be 'r n'");
            r = static_cast<int>(values[0]);
            n = static_cast<int>(values[1]);
            have_header = true;
            continue;
        }
        std::vector<Vertex> e;
        for (long long v : values) {
            if (v < 1 || v > kMaxVertices)
                throw HypergraphError("line " + std::to_string(line_no) + ": vertex out of range");
            e.push_back(static_cast<Vertex>(v));
        }
        edges.push_back(std::move(e));
    }
    if (!have_header) throw HypergraphError("missing 'r n' header");
    return Hypergraph::build(r, n, edges);
}

Hypergraph parse_hg(const std::string& text) {
    std::istringstream in(text);
    return read_hg(in);
}

Hypergraph load_hg(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw HypergraphError("cannot open " + path.string());
    return read_hg(in);
}

void write_hg(std::ostream& out, const Hypergraph& g) {
    out << g.uniformity() << ' ' << g.order() << '\n';
    for (VertexSet e : g.edges()) {
        bool first = true;
        for (Vertex v : members(e)) {
            out << (first ? "" : " ") << v;
            first = false;
        }
        out << '\n';
    }
}

std::string format_hg(const Hypergraph& g) {
    std::ostringstream out;
    write_hg(out, g);
    return out.str();
}

void save_hg(const std::filesystem::path& path, const Hypergraph& g) {
    std::ofstream out(path);
    if (!out) throw HypergraphError("cannot write " + path.string());
    write_hg(out, g);
}

}  // namespace lagrangia
