#include "specgraph/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace specgraph {

Graph Graph::from_edge_list(int p, std::span<const Edge> pairs) {
    if (p < 0) {
        throw IndexOutOfRangeError("vertex count must be non-negative");
    }
    Graph g;
    g.p_ = p;
    g.edges_.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a == b) {
            throw SelfLoopError("self-loop at vertex " + std::to_string(a));
        }
        if (a < 0 || b < 0 || a >= p || b >= p) {
            throw IndexOutOfRangeError("edge (" + std::to_string(a) + "," +
                                       std::to_string(b) + ") outside [0," +
                                       std::to_string(p) + ")");
        }
        g.edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    return g;
}

Graph Graph::from_edge_list(int p, std::initializer_list<Edge> pairs) {
    return from_edge_list(p, std::span<const Edge>(pairs.begin(), pairs.size()));
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    Edge e{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(p_, 0);
    for (const auto& [u, v] : edges_) {
        ++d[u];
        ++d[v];
    }
    return d;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(p_);
    for (const auto& [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

bool Graph::is_connected() const {
    if (p_ <= 1) return true;
    auto adj = adjacency_lists();
    std::vector<char> seen(p_, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                frontier.push(v);
            }
        }
    }
    return reached == p_;
}

bool Graph::is_bipartite() const {
    auto adj = adjacency_lists();
    std::vector<int> color(p_, -1);
    std::queue<int> frontier;
    for (int start = 0; start < p_; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        frontier.push(start);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int v : adj[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    frontier.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool Graph::has_isolated_vertex() const {
    if (p_ == 0) return false;
    auto d = degrees();
    return std::any_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

Graph complete(int n) {
    if (n < 1) throw IndexOutOfRangeError("complete(n) requires n >= 1");
    std::vector<Edge> e;
    e.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw CycleTooSmallError("cycle(n) requires n >= 3");
    std::vector<Edge> e;
    e.reserve(n);
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph star(int n) {
    if (n < 1) throw IndexOutOfRangeError("star(n) requires n >= 1");
    std::vector<Edge> e;
    e.reserve(n - 1);
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph::from_edge_list(n, e);
}

Graph path(int n) {
    if (n < 1) throw IndexOutOfRangeError("path(n) requires n >= 1");
    std::vector<Edge> e;
    e.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edge_list(10, e);
}

Graph read_edge_list(std::istream& in) {
    // Strip comments, then tokenize the rest.
    std::string line;
    std::vector<long long> tokens;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        long long value = 0;
        while (ls >> value) tokens.push_back(value);
        if (ls.fail() && !ls.eof()) {
            throw std::runtime_error("edge list: non-numeric token in line: " + line);
        }
    }
    if (tokens.size() < 2) {
        throw std::runtime_error("edge list: missing 'p q' header");
    }
    long long p = tokens[0];
    long long q = tokens[1];
    if (p < 0 || q < 0 || tokens.size() != static_cast<size_t>(2 + 2 * q)) {
        throw std::runtime_error("edge list: expected " + std::to_string(q) +
                                 " edges after header");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(q));
    for (long long k = 0; k < q; ++k) {
        edges.emplace_back(static_cast<int>(tokens[2 + 2 * k]),
                           static_cast<int>(tokens[3 + 2 * k]));
    }
    return Graph::from_edge_list(static_cast<int>(p), edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph graph_from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("p") || !j.contains("edges")) {
        throw std::runtime_error("graph json: expected {\"p\": int, \"edges\": [[u,v],...]}");
    }
    int p = j.at("p").get<int>();
    std::vector<Edge> edges;
    for (const auto& item : j.at("edges")) {
        if (!item.is_array() || item.size() != 2) {
            throw std::runtime_error("graph json: each edge must be a pair");
        }
        edges.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return Graph::from_edge_list(p, edges);
}

std::string graph_to_json_string(const Graph& g) {
    nlohmann::json j;
    j["p"] = g.order();
    auto arr = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) arr.push_back({u, v});
    j["edges"] = std::move(arr);
    return j.dump();
}

} // namespace specgraph
