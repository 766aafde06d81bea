#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hmix/eisenstein.hpp"

namespace hmix {

using Vertex = int;

/// Unordered vertex pair stored as (lo, hi) with lo < hi.
struct PairKey {
    Vertex lo = 0;
    Vertex hi = 0;

    static PairKey of(Vertex u, Vertex v) { return u < v ? PairKey{u, v} : PairKey{v, u}; }
    auto operator<=>(const PairKey&) const = default;
};

/// Edges between lo and hi: undirected copies, arcs lo→hi (fwd) and arcs hi→lo (bwd).
/// Digon-free: fwd and bwd are never both positive.
struct PairState {
    int und = 0;
    int fwd = 0;
    int bwd = 0;

    int multiplicity() const { return und + fwd + bwd; }
    auto operator<=>(const PairState&) const = default;
};

enum class EdgeKind { Undirected, Forward, Backward };

/// One edge traversed from `from` to `to`. Parallel copies inside a pair are
/// indexed canonically: undirected copies first, then arcs.
struct EdgeRef {
    Vertex from = 0;
    Vertex to = 0;
    int index = 0;

    PairKey pair() const { return PairKey::of(from, to); }
    EdgeRef reversed() const { return {to, from, index}; }
    auto operator<=>(const EdgeRef&) const = default;
};

/// Closed walk through distinct vertices, given as chained edges.
struct CycleDescriptor {
    std::vector<EdgeRef> edges;

    std::size_t length() const { return edges.size(); }
    CycleDescriptor reversed() const;
    std::vector<Vertex> vertices() const;
};

class MixedMultigraph {
public:
    using PairMap = std::map<PairKey, PairState>;

    MixedMultigraph() = default;
    explicit MixedMultigraph(int n);

    int order() const { return n_; }
    const PairMap& pairs() const { return pairs_; }

    /// Total number of edges counting parallel copies.
    long long size() const;

    PairState pair(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return pair(u, v).multiplicity() > 0; }

    void add_edge(Vertex u, Vertex v, int count = 1);
    /// Adds arcs u→v. Throws DigonError if arcs v→u already exist.
    void add_arc(Vertex u, Vertex v, int count = 1);
    /// Replaces the pair record; an all-zero state removes the pair.
    void set_pair(PairKey key, PairState state);

    /// Kind of the edge relative to its traversal direction.
    EdgeKind kind(const EdgeRef& e) const;
    /// ω-exponent of N_e along the traversal: 0 undirected, 1 aligned arc, 5 opposed arc.
    UnitExponent label(const EdgeRef& e) const;
    bool contains(const EdgeRef& e) const;

    /// Neighbours in ascending order.
    std::vector<Vertex> neighbours(Vertex v) const;

    bool connected() const;

    friend bool operator==(const MixedMultigraph&, const MixedMultigraph&) = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    PairMap pairs_;
};

struct ParseOptions {
    /// Replace each opposite pair of arcs by one undirected edge instead of failing.
    bool merge_digons = false;
};

MixedMultigraph parse_mmg(std::istream& in, ParseOptions options = {});
MixedMultigraph parse_mmg(std::string_view text, ParseOptions options = {});
std::string serialize_mmg(const MixedMultigraph& m);

MixedMultigraph underlying(const MixedMultigraph& m);
MixedMultigraph converse(const MixedMultigraph& m);

struct SpanningTreeInfo {
    /// parent[v] for v != 0; parent[0] = -1.
    std::vector<Vertex> parent;
    /// Tree edges oriented parent → child, in discovery order.
    std::vector<EdgeRef> tree_edges;
    /// Non-tree edges oriented from the lower endpoint, sorted by (pair, index).
    std::vector<EdgeRef> non_tree_edges;
    /// BFS depth of each vertex.
    std::vector<int> depth;
};

/// Breadth-first tree from vertex 0 scanning neighbours in ascending order;
/// the tree uses parallel copy 0 of each tree pair. Throws DisconnectedError.
SpanningTreeInfo spanning_tree(const MixedMultigraph& m);

/// One cycle per non-tree edge, starting with that edge from its lower endpoint.
std::vector<CycleDescriptor> fundamental_cycles(const MixedMultigraph& m, const SpanningTreeInfo& tree);

struct CycleEnumerationLimits {
    int max_vertices = 16;
    std::size_t max_cycles = 1'000'000;
};

/// Every simple cycle once, including 2-cycles on parallel copies.
/// Throws CapacityError beyond the limits.
std::vector<CycleDescriptor> enumerate_simple_cycles(const MixedMultigraph& m,
                                                     CycleEnumerationLimits limits = {});

/// Pairs whose removal disconnects their endpoints (only single-edge pairs qualify).
std::set<PairKey> find_bridges(const MixedMultigraph& m);

} // namespace hmix
