#include "hmix/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "hmix/error.hpp"

namespace hmix {

CycleDescriptor CycleDescriptor::reversed() const
{
    CycleDescriptor r;
    r.edges.reserve(edges.size());
    for (auto it = edges.rbegin(); it != edges.rend(); ++it)
        r.edges.push_back(it->reversed());
    return r;
}

std::vector<Vertex> CycleDescriptor::vertices() const
{
    std::vector<Vertex> vs;
    vs.reserve(edges.size());
    for (const auto& e : edges)
        vs.push_back(e.from);
    return vs;
}

MixedMultigraph::MixedMultigraph(int n) : n_(n)
{
    if (n < 0)
        throw Error("negative vertex count");
}

long long MixedMultigraph::size() const
{
    long long m = 0;
    for (const auto& [key, st] : pairs_)
        m += st.multiplicity();
    return m;
}

void MixedMultigraph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw Error("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n_ - 1));
}

PairState MixedMultigraph::pair(Vertex u, Vertex v) const
{
    auto it = pairs_.find(PairKey::of(u, v));
    return it == pairs_.end() ? PairState{} : it->second;
}

void MixedMultigraph::add_edge(Vertex u, Vertex v, int count)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error("loop at vertex " + std::to_string(u));
    if (count <= 0)
        return;
    pairs_[PairKey::of(u, v)].und += count;
}

void MixedMultigraph::add_arc(Vertex u, Vertex v, int count)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error("loop at vertex " + std::to_string(u));
    if (count <= 0)
        return;
    PairState st = pair(u, v);
    int& same = u < v ? st.fwd : st.bwd;
    int& opposite = u < v ? st.bwd : st.fwd;
    if (opposite > 0)
        throw DigonError("arcs in both directions between " + std::to_string(u) + "," + std::to_string(v));
    same += count;
    pairs_[PairKey::of(u, v)] = st;
}

void MixedMultigraph::set_pair(PairKey key, PairState st)
{
    check_vertex(key.lo);
    check_vertex(key.hi);
    if (key.lo >= key.hi)
        throw Error("pair key must satisfy lo < hi");
    if (st.und < 0 || st.fwd < 0 || st.bwd < 0)
        throw Error("negative edge count");
    if (st.fwd > 0 && st.bwd > 0)
        throw DigonError("arcs in both directions between " + std::to_string(key.lo) + "," +
                         std::to_string(key.hi));
    if (st.multiplicity() == 0)
        pairs_.erase(key);
    else
        pairs_[key] = st;
}

bool MixedMultigraph::contains(const EdgeRef& e) const
{
    if (e.from == e.to || e.index < 0)
        return false;
    return e.index < pair(e.from, e.to).multiplicity();
}

EdgeKind MixedMultigraph::kind(const EdgeRef& e) const
{
    if (!contains(e))
        throw Error("edge " + std::to_string(e.from) + "-" + std::to_string(e.to) + "#" +
                    std::to_string(e.index) + " not in graph");
    PairState st = pair(e.from, e.to);
    if (e.index < st.und)
        return EdgeKind::Undirected;
    // arcs go lo→hi when fwd > 0
    bool arc_from_lo = st.fwd > 0;
    bool traversal_from_lo = e.from < e.to;
    return arc_from_lo == traversal_from_lo ? EdgeKind::Forward : EdgeKind::Backward;
}

UnitExponent MixedMultigraph::label(const EdgeRef& e) const
{
    switch (kind(e)) {
    case EdgeKind::Undirected: return UnitExponent(0);
    case EdgeKind::Forward: return UnitExponent(1);
    default: return UnitExponent(5);
    }
}

std::vector<Vertex> MixedMultigraph::neighbours(Vertex v) const
{
    std::vector<Vertex> out;
    for (const auto& [key, st] : pairs_) {
        if (key.lo == v)
            out.push_back(key.hi);
        else if (key.hi == v)
            out.push_back(key.lo);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::vector<Vertex>> adjacency(const MixedMultigraph& m)
{
    std::vector<std::vector<Vertex>> adj(m.order());
    for (const auto& [key, st] : m.pairs()) {
        adj[key.lo].push_back(key.hi);
        adj[key.hi].push_back(key.lo);
    }
    for (auto& a : adj)
        std::sort(a.begin(), a.end());
    return adj;
}

} // namespace

bool MixedMultigraph::connected() const
{
    if (n_ <= 1)
        return true;
    auto adj = adjacency(*this);
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

// ---------------------------------------------------------------------------
// MMG text format

MixedMultigraph parse_mmg(std::istream& in, ParseOptions options)
{
    std::string raw;
    int lineno = 0;
    int stage = 0; // 0: expect header, 1: expect vertices, 2: statements
    int n = 0;
    struct Raw {
        int und = 0;
        int fwd = 0;
        int bwd = 0;
    };
    std::map<PairKey, Raw> counts;

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;

        auto to_int = [&](const std::string& s) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(s, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != s.size() || s.empty())
                throw ParseError("expected an integer, got '" + s + "'", lineno);
            return v;
        };

        if (stage == 0) {
            if (tok.size() != 2 || tok[0] != "mmg")
                throw ParseError("expected header 'mmg 1'", lineno);
            if (tok[1] != "1")
                throw ParseError("unsupported mmg version '" + tok[1] + "'", lineno);
            stage = 1;
            continue;
        }
        if (stage == 1) {
            if (tok.size() != 2 || tok[0] != "vertices")
                throw ParseError("expected 'vertices <n>'", lineno);
            long long v = to_int(tok[1]);
            if (v < 1 || v > 1'000'000)
                throw ParseError("vertex count must be positive", lineno);
            n = static_cast<int>(v);
            stage = 2;
            continue;
        }
        if (tok.size() != 3 || (tok[0] != "e" && tok[0] != "a"))
            throw ParseError("expected 'e <u> <v>' or 'a <u> <v>'", lineno);
        long long u = to_int(tok[1]);
        long long v = to_int(tok[2]);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex out of range 0.." + std::to_string(n - 1), lineno);
        if (u == v)
            throw ParseError("loop at vertex " + std::to_string(u), lineno);
        auto key = PairKey::of(static_cast<Vertex>(u), static_cast<Vertex>(v));
        Raw& r = counts[key];
        if (tok[0] == "e")
            ++r.und;
        else if (u < v)
            ++r.fwd;
        else
            ++r.bwd;
        if (!options.merge_digons && r.fwd > 0 && r.bwd > 0)
            throw DigonError("line " + std::to_string(lineno) + ": arcs in both directions between " +
                             std::to_string(key.lo) + "," + std::to_string(key.hi));
    }
    if (stage == 0)
        throw ParseError("missing header 'mmg 1'", lineno + 1);
    if (stage == 1)
        throw ParseError("missing 'vertices <n>'", lineno + 1);

    MixedMultigraph m(n);
    for (const auto& [key, r] : counts) {
        int merged = std::min(r.fwd, r.bwd);
        m.set_pair(key, PairState{r.und + merged, r.fwd - merged, r.bwd - merged});
    }
    return m;
}

MixedMultigraph parse_mmg(std::string_view text, ParseOptions options)
{
    std::istringstream in{std::string(text)};
    return parse_mmg(in, options);
}

std::string serialize_mmg(const MixedMultigraph& m)
{
    std::ostringstream os;
    os << "mmg 1\nvertices " << m.order() << '\n';
    for (const auto& [key, st] : m.pairs())
        for (int i = 0; i < st.und; ++i)
            os << "e " << key.lo << ' ' << key.hi << '\n';
    for (const auto& [key, st] : m.pairs()) {
        for (int i = 0; i < st.fwd; ++i)
            os << "a " << key.lo << ' ' << key.hi << '\n';
        for (int i = 0; i < st.bwd; ++i)
            os << "a " << key.hi << ' ' << key.lo << '\n';
    }
    return os.str();
}

MixedMultigraph underlying(const MixedMultigraph& m)
{
    MixedMultigraph g(m.order());
    for (const auto& [key, st] : m.pairs())
        g.set_pair(key, PairState{st.multiplicity(), 0, 0});
    return g;
}

MixedMultigraph converse(const MixedMultigraph& m)
{
    MixedMultigraph c(m.order());
    for (const auto& [key, st] : m.pairs())
        c.set_pair(key, PairState{st.und, st.bwd, st.fwd});
    return c;
}

// ---------------------------------------------------------------------------
// Trees and cycles

SpanningTreeInfo spanning_tree(const MixedMultigraph& m)
{
    const int n = m.order();
    auto adj = adjacency(m);
    SpanningTreeInfo info;
    info.parent.assign(n, -1);
    info.depth.assign(n, -1);
    if (n == 0)
        return info;

    std::queue<Vertex> q;
    q.push(0);
    info.depth[0] = 0;
    std::set<PairKey> tree_pairs;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : adj[u]) {
            if (info.depth[w] >= 0)
                continue;
            info.depth[w] = info.depth[u] + 1;
            info.parent[w] = u;
            info.tree_edges.push_back({u, w, 0});
            tree_pairs.insert(PairKey::of(u, w));
            q.push(w);
        }
    }
    if (std::any_of(info.depth.begin(), info.depth.end(), [](int d) { return d < 0; }))
        throw DisconnectedError();

    for (const auto& [key, st] : m.pairs()) {
        int first = tree_pairs.count(key) ? 1 : 0;
        for (int i = first; i < st.multiplicity(); ++i)
            info.non_tree_edges.push_back({key.lo, key.hi, i});
    }
    return info;
}

std::vector<CycleDescriptor> fundamental_cycles(const MixedMultigraph& m, const SpanningTreeInfo& tree)
{
    std::vector<CycleDescriptor> out;
    out.reserve(tree.non_tree_edges.size());
    for (const EdgeRef& e : tree.non_tree_edges) {
        if (!m.contains(e))
            throw Error("spanning tree does not match graph");
        CycleDescriptor c;
        c.edges.push_back(e);
        // climb from e.to and e.from to their lowest common ancestor
        std::vector<EdgeRef> up;   // e.to → lca
        std::vector<EdgeRef> down; // lca → e.from, collected reversed
        Vertex a = e.to;
        Vertex b = e.from;
        while (a != b) {
            if (tree.depth[a] >= tree.depth[b]) {
                up.push_back({a, tree.parent[a], 0});
                a = tree.parent[a];
            } else {
                down.push_back({tree.parent[b], b, 0});
                b = tree.parent[b];
            }
        }
        c.edges.insert(c.edges.end(), up.begin(), up.end());
        c.edges.insert(c.edges.end(), down.rbegin(), down.rend());
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CycleDescriptor> enumerate_simple_cycles(const MixedMultigraph& m, CycleEnumerationLimits limits)
{
    const int n = m.order();
    if (n > limits.max_vertices)
        throw CapacityError("cycle enumeration refused: " + std::to_string(n) + " vertices exceeds " +
                            std::to_string(limits.max_vertices));
    std::vector<CycleDescriptor> out;
    auto push = [&](CycleDescriptor c) {
        if (out.size() >= limits.max_cycles)
            throw CapacityError("cycle enumeration exceeded cap of " + std::to_string(limits.max_cycles));
        out.push_back(std::move(c));
    };

    for (const auto& [key, st] : m.pairs()) {
        const int mu = st.multiplicity();
        for (int i = 0; i < mu; ++i)
            for (int j = i + 1; j < mu; ++j)
                push(CycleDescriptor{{{key.lo, key.hi, i}, {key.hi, key.lo, j}}});
    }

    auto adj = adjacency(m);
    std::vector<Vertex> path;
    std::vector<char> on_path(n, 0);

    // Expands one vertex cycle into every choice of parallel copy per step.
    auto expand = [&](const std::vector<Vertex>& cyc) {
        const std::size_t s = cyc.size();
        std::vector<int> mult(s);
        for (std::size_t i = 0; i < s; ++i)
            mult[i] = m.pair(cyc[i], cyc[(i + 1) % s]).multiplicity();
        std::vector<int> idx(s, 0);
        while (true) {
            CycleDescriptor c;
            c.edges.reserve(s);
            for (std::size_t i = 0; i < s; ++i)
                c.edges.push_back({cyc[i], cyc[(i + 1) % s], idx[i]});
            push(std::move(c));
            std::size_t k = s;
            while (k > 0) {
                --k;
                if (++idx[k] < mult[k])
                    break;
                idx[k] = 0;
                if (k == 0)
                    return;
            }
        }
    };

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex v) {
        for (Vertex w : adj[v]) {
            if (w == start) {
                if (path.size() >= 3 && path[1] < path.back())
                    expand(path);
                continue;
            }
            if (w < start || on_path[w])
                continue;
            on_path[w] = 1;
            path.push_back(w);
            dfs(start, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };

    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        dfs(s, s);
        on_path[s] = 0;
    }
    return out;
}

std::set<PairKey> find_bridges(const MixedMultigraph& m)
{
    const int n = m.order();
    auto adj = adjacency(m);
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    std::set<PairKey> bridges;
    int timer = 0;

    std::function<void(Vertex, Vertex)> visit = [&](Vertex v, Vertex parent) {
        disc[v] = low[v] = timer++;
        for (Vertex w : adj[v]) {
            if (w == parent)
                continue;
            if (disc[w] >= 0) {
                low[v] = std::min(low[v], disc[w]);
                continue;
            }
            visit(w, v);
            low[v] = std::min(low[v], low[w]);
            if (low[w] > disc[v] && m.pair(v, w).multiplicity() == 1)
                bridges.insert(PairKey::of(v, w));
        }
    };
    for (Vertex v = 0; v < n; ++v)
        if (disc[v] < 0)
            visit(v, -1);
    return bridges;
}

} // namespace hmix
