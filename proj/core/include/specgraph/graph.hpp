#ifndef SPECGRAPH_GRAPH_HPP
#define SPECGRAPH_GRAPH_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/errors.hpp"

namespace specgraph {

using Edge = std::pair<int, int>; // canonical form: first < second

/// Simple undirected graph: vertex count plus a canonical (sorted, deduplicated)
/// edge set with 0-based endpoints. Immutable after construction.
class Graph {
public:
    Graph() = default; // empty graph, p = 0

    /// Canonicalizes the pairs (orders endpoints, sorts, deduplicates).
    /// Throws IndexOutOfRangeError / SelfLoopError on invalid input.
    static Graph from_edge_list(int p, std::span<const Edge> pairs);
    static Graph from_edge_list(int p, std::initializer_list<Edge> pairs);

    int order() const { return p_; }                       // p
    int size() const { return static_cast<int>(edges_.size()); } // q
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency_lists() const;

    bool is_connected() const;   // vacuously true for p <= 1
    bool is_bipartite() const;
    bool has_isolated_vertex() const;

    bool operator==(const Graph&) const = default;

private:
    int p_ = 0;
    std::vector<Edge> edges_;
};

// Standard generators. Vertex 0 is the star's center; cycle requires n >= 3.
Graph complete(int n);
Graph cycle(int n);
Graph star(int n);
Graph path(int n);
Graph petersen();

// Edge-list text format: first line "p q", then q lines "u v" (0-based),
// whitespace-delimited, '#' starts a comment line.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// JSON format: {"p": int, "edges": [[u, v], ...]}, edges always canonical.
Graph graph_from_json_string(const std::string& text);
std::string graph_to_json_string(const Graph& g);

} // namespace specgraph

#endif
