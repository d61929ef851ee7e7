#include "graphlogic/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace graphlogic {

namespace {

bool blank_or_comment(const std::string& line, char comment_char) {
    for (char c : line) {
        if (c == comment_char) return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line_no) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + tok + "'", line_no);
    }
}

Graph read_impl(std::istream& in, GraphFormat format) {
    const bool dimacs = format == GraphFormat::Dimacs;
    const char comment = dimacs ? 'c' : '#';
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    int body_lines = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (dimacs) {
            // dimacs comments are whole lines starting with 'c'
            if (line.empty() || line[0] == comment) continue;
            if (blank_or_comment(line, '\0')) continue;
        } else {
            if (blank_or_comment(line, comment)) continue;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
        }
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (n < 0) {
            // header line
            if (dimacs) {
                if (toks.size() != 4 || toks[0] != "p" || toks[1] != "edge")
                    throw ParseError("expected header 'p edge <n> <m>'", line_no);
                n = parse_int(toks[2], line_no);
                m = parse_int(toks[3], line_no);
            } else {
                if (toks.size() != 3 || toks[0] != "p")
                    throw ParseError("expected header 'p <n> <m>'", line_no);
                n = parse_int(toks[1], line_no);
                m = parse_int(toks[2], line_no);
            }
            if (n < 0 || m < 0) throw ParseError("negative count in header", line_no);
            continue;
        }
        // body line
        int u, v;
        if (dimacs) {
            if (toks.size() != 3 || toks[0] != "e") throw ParseError("expected edge line 'e <u> <v>'", line_no);
            u = parse_int(toks[1], line_no) - 1;
            v = parse_int(toks[2], line_no) - 1;
        } else {
            if (toks.size() != 2) throw ParseError("expected edge line '<u> <v>'", line_no);
            u = parse_int(toks[0], line_no);
            v = parse_int(toks[1], line_no);
        }
        ++body_lines;
        if (body_lines > m) throw ParseError("more edge lines than declared in header", line_no);
        if (u == v) throw ParseError("self-loop on vertex " + std::to_string(dimacs ? u + 1 : u), line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex id out of range [0," + std::to_string(n - 1) + "]", line_no);
        edges.push_back(make_edge(u, v));
    }
    if (n < 0) throw ParseError("missing header", line_no == 0 ? 1 : line_no);
    if (body_lines < m)
        throw ParseError("declared " + std::to_string(m) + " edges but found " + std::to_string(body_lines),
                         line_no == 0 ? 1 : line_no);
    return Graph::from_edges(n, edges);  // duplicates collapse here
}

}  // namespace

GraphFormat graph_format_from_name(const std::string& name) {
    if (name == "edge-list" || name == "edgelist" || name == "gr") return GraphFormat::EdgeList;
    if (name == "dimacs" || name == "col") return GraphFormat::Dimacs;
    throw InputError("unknown graph format '" + name + "'");
}

Graph read_graph(std::istream& in, GraphFormat format) { return read_impl(in, format); }

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
    if (format == GraphFormat::Dimacs) {
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    } else {
        out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    }
}

Graph read_graph_string(const std::string& text, GraphFormat format) {
    std::istringstream ss(text);
    return read_graph(ss, format);
}

std::string write_graph_string(const Graph& g, GraphFormat format) {
    std::ostringstream ss;
    write_graph(ss, g, format);
    return ss.str();
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_graph(in, format);
}

void write_graph_file(const std::string& path, const Graph& g, GraphFormat format) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    write_graph(out, g, format);
}

}  // namespace graphlogic
