#ifndef SPECGRAPH_GRAPH_OPS_HPP
#define SPECGRAPH_GRAPH_OPS_HPP

#include <string>

#include "specgraph/graph.hpp"

namespace specgraph {

enum class OpTag { Splitting, Shadow, DuplicateIter, H1, H2, H3 };

/// One of the six graph operations plus its integer parameter. The factories
/// enforce the construction bounds (splitting/shadow/duplicate m >= 1,
/// h1 m > 3 with a valid copy pair, h2 m >= 2, h3 m > 1).
struct OperationKind {
    OpTag tag;
    int m;
    int i = 0; // H1 only: first copy stripped of its internal edges
    int j = 0; // H1 only: second stripped copy

    static OperationKind splitting(int m);
    static OperationKind shadow(int m);
    static OperationKind duplicate_iter(int m);
    static OperationKind h1(int m); // default pair (0, m-1)
    static OperationKind h1(int m, int i, int j);
    static OperationKind h2(int m);
    static OperationKind h3(int m);

    /// Spec string, e.g. "splitting:2", "h1:4:0:3".
    std::string id() const;
    /// Parses the id() format back; throws std::invalid_argument on bad syntax.
    static OperationKind parse(const std::string& text);

    /// Vertex count of the constructed graph for a base of order p.
    long long output_order(long long p) const;
    /// Edge count of the constructed graph for a base of size q.
    long long output_size(long long q) const;
};

// Block layouts are fixed so the adjacency matrix of every output equals the
// documented backbone matrix Kronecker the base adjacency matrix. Vertex v of
// copy k sits at index k*p + v; copy 0 is the distinguished block (the
// original vertices for splitting/h2/h3, the first copy otherwise).

/// Adds m twin vertices per vertex, each adjacent to the original's neighbors.
/// Output: (m+1)p vertices, (2m+1)q edges.
Graph splitting(const Graph& g, int m);

/// m copies with every vertex also joined to its counterparts' neighbors.
/// Output: mp vertices, m^2 q edges.
Graph shadow(const Graph& g, int m);

/// Bipartite double: edges only between the two copies. 2p vertices, 2q edges.
Graph duplicate(const Graph& g);

/// duplicate applied m times: 2^m p vertices, 2^m q edges.
Graph duplicate_iter(const Graph& g, int m);

/// shadow(g, m) with the internal edges of copies i and j removed.
/// Output: mp vertices, (m^2 - 2)q edges. Requires m > 3, i != j in [0, m).
Graph h1(const Graph& g, int m, int i, int j);

/// Hub copy keeps its edges; m-1 satellite copies keep theirs and join the
/// hub's neighborhoods. Output: mp vertices, (3m-2)q edges. Requires m >= 2.
Graph h2(const Graph& g, int m);

/// As h2 but the hub's internal edges are removed. Output: mp vertices,
/// 3(m-1)q edges. Requires m > 1.
Graph h3(const Graph& g, int m);

Graph apply(const Graph& g, const OperationKind& op);

} // namespace specgraph

#endif
