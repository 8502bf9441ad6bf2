#include "specgraph/graph_ops.hpp"

#include <sstream>
#include <vector>

namespace specgraph {

namespace {

void require_m(bool ok, const std::string& what) {
    if (!ok) throw MTooSmallError(what);
}

} // namespace

OperationKind OperationKind::splitting(int m) {
    require_m(m >= 1, "splitting requires m >= 1");
    return {OpTag::Splitting, m};
}

OperationKind OperationKind::shadow(int m) {
    require_m(m >= 1, "shadow requires m >= 1");
    return {OpTag::Shadow, m};
}

OperationKind OperationKind::duplicate_iter(int m) {
    require_m(m >= 1, "duplicate requires m >= 1");
    return {OpTag::DuplicateIter, m};
}

OperationKind OperationKind::h1(int m) { return h1(m, 0, m - 1); }

OperationKind OperationKind::h1(int m, int i, int j) {
    require_m(m > 3, "h1 requires m > 3");
    if (i == j || i < 0 || j < 0 || i >= m || j >= m) {
        throw InvalidCopyPairError("h1 copy pair must be distinct indices in [0, m)");
    }
    return {OpTag::H1, m, i, j};
}

OperationKind OperationKind::h2(int m) {
    require_m(m >= 2, "h2 requires m >= 2");
    return {OpTag::H2, m};
}

OperationKind OperationKind::h3(int m) {
    require_m(m > 1, "h3 requires m > 1");
    return {OpTag::H3, m};
}

std::string OperationKind::id() const {
    std::ostringstream out;
    switch (tag) {
        case OpTag::Splitting: out << "splitting:" << m; break;
        case OpTag::Shadow: out << "shadow:" << m; break;
        case OpTag::DuplicateIter: out << "dup:" << m; break;
        case OpTag::H1: out << "h1:" << m << ":" << i << ":" << j; break;
        case OpTag::H2: out << "h2:" << m; break;
        case OpTag::H3: out << "h3:" << m; break;
    }
    return out.str();
}

OperationKind OperationKind::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ':')) parts.push_back(token);
    if (parts.size() < 2) {
        throw std::invalid_argument("operation spec '" + text + "': expected name:m");
    }
    auto to_int = [&](const std::string& s) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("operation spec '" + text + "': bad integer '" + s + "'");
        }
        if (used != s.size()) {
            throw std::invalid_argument("operation spec '" + text + "': bad integer '" + s + "'");
        }
        return v;
    };
    const std::string& name = parts[0];
    const int m = to_int(parts[1]);
    if (name == "h1") {
        if (parts.size() == 2) return h1(m);
        if (parts.size() == 4) return h1(m, to_int(parts[2]), to_int(parts[3]));
        throw std::invalid_argument("operation spec '" + text + "': h1 takes m or m:i:j");
    }
    if (parts.size() != 2) {
        throw std::invalid_argument("operation spec '" + text + "': unexpected extra fields");
    }
    if (name == "splitting") return splitting(m);
    if (name == "shadow") return shadow(m);
    if (name == "dup") return duplicate_iter(m);
    if (name == "h2") return h2(m);
    if (name == "h3") return h3(m);
    throw std::invalid_argument("operation spec '" + text + "': unknown operation '" + name + "'");
}

long long OperationKind::output_order(long long p) const {
    switch (tag) {
        case OpTag::Splitting: return (m + 1LL) * p;
        case OpTag::Shadow: return static_cast<long long>(m) * p;
        case OpTag::DuplicateIter: return (1LL << m) * p;
        case OpTag::H1:
        case OpTag::H2:
        case OpTag::H3: return static_cast<long long>(m) * p;
    }
    return 0;
}

long long OperationKind::output_size(long long q) const {
    switch (tag) {
        case OpTag::Splitting: return (2LL * m + 1) * q;
        case OpTag::Shadow: return static_cast<long long>(m) * m * q;
        case OpTag::DuplicateIter: return (1LL << m) * q;
        case OpTag::H1: return (static_cast<long long>(m) * m - 2) * q;
        case OpTag::H2: return (3LL * m - 2) * q;
        case OpTag::H3: return 3LL * (m - 1) * q;
    }
    return 0;
}

Graph splitting(const Graph& g, int m) {
    OperationKind::splitting(m);
    const int p = g.order();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>((2LL * m + 1) * g.size()));
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        for (int k = 1; k <= m; ++k) {
            // the k-th twin of each endpoint is adjacent to the other endpoint
            edges.emplace_back(u, k * p + v);
            edges.emplace_back(v, k * p + u);
        }
    }
    return Graph::from_edge_list((m + 1) * p, edges);
}

Graph shadow(const Graph& g, int m) {
    OperationKind::shadow(m);
    const int p = g.order();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m) * m * g.size());
    for (const auto& [u, v] : g.edges()) {
        for (int a = 0; a < m; ++a) {
            edges.emplace_back(a * p + u, a * p + v);
            for (int b = a + 1; b < m; ++b) {
                edges.emplace_back(a * p + u, b * p + v);
                edges.emplace_back(a * p + v, b * p + u);
            }
        }
    }
    return Graph::from_edge_list(m * p, edges);
}

Graph duplicate(const Graph& g) {
    const int p = g.order();
    std::vector<Edge> edges;
    edges.reserve(2 * g.edges().size());
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, p + v);
        edges.emplace_back(v, p + u);
    }
    return Graph::from_edge_list(2 * p, edges);
}

Graph duplicate_iter(const Graph& g, int m) {
    OperationKind::duplicate_iter(m);
    Graph out = g;
    for (int k = 0; k < m; ++k) out = duplicate(out);
    return out;
}

Graph h1(const Graph& g, int m, int i, int j) {
    OperationKind::h1(m, i, j);
    const int p = g.order();
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        for (int a = 0; a < m; ++a) {
            if (a != i && a != j) edges.emplace_back(a * p + u, a * p + v);
            for (int b = a + 1; b < m; ++b) {
                edges.emplace_back(a * p + u, b * p + v);
                edges.emplace_back(a * p + v, b * p + u);
            }
        }
    }
    return Graph::from_edge_list(m * p, edges);
}

Graph h2(const Graph& g, int m) {
    OperationKind::h2(m);
    const int p = g.order();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(3LL * m - 2) * g.size());
    for (const auto& [u, v] : g.edges()) {
        for (int a = 0; a < m; ++a) {
            edges.emplace_back(a * p + u, a * p + v); // every copy keeps its edges
        }
        for (int b = 1; b < m; ++b) {
            edges.emplace_back(u, b * p + v); // hub neighborhoods joined to copy b
            edges.emplace_back(v, b * p + u);
        }
    }
    return Graph::from_edge_list(m * p, edges);
}

Graph h3(const Graph& g, int m) {
    OperationKind::h3(m);
    const int p = g.order();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(3LL * (m - 1)) * g.size());
    for (const auto& [u, v] : g.edges()) {
        for (int b = 1; b < m; ++b) {
            edges.emplace_back(b * p + u, b * p + v); // satellites keep their edges
            edges.emplace_back(u, b * p + v);         // hub edges themselves removed
            edges.emplace_back(v, b * p + u);
        }
    }
    return Graph::from_edge_list(m * p, edges);
}

Graph apply(const Graph& g, const OperationKind& op) {
    switch (op.tag) {
        case OpTag::Splitting: return splitting(g, op.m);
        case OpTag::Shadow: return shadow(g, op.m);
        case OpTag::DuplicateIter: return duplicate_iter(g, op.m);
        case OpTag::H1: return h1(g, op.m, op.i, op.j);
        case OpTag::H2: return h2(g, op.m);
        case OpTag::H3: return h3(g, op.m);
    }
    throw std::invalid_argument("unknown operation tag");
}

} // namespace specgraph
