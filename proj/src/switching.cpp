#include "hmix/switching.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hmix/error.hpp"

namespace hmix {

EssentialVector conj(const EssentialVector& v)
{
    EssentialVector out;
    out.reserve(v.size());
    for (const auto& w : v)
        out.push_back(w.conj());
    return out;
}

bool conjugate_equivalent(const EssentialVector& x, const EssentialVector& y)
{
    return x == y || x == conj(y);
}

std::string to_string(const EssentialVector& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += "w^" + std::to_string(v[i].t.value());
    }
    return s + "]";
}

EisensteinInt walk_weight(const MixedMultigraph& m, const std::vector<EdgeRef>& walk)
{
    EisensteinInt w(1);
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (i > 0 && walk[i - 1].to != walk[i].from)
            throw Error("walk does not chain at step " + std::to_string(i));
        w *= EisensteinInt::unit(m.label(walk[i]));
    }
    return w;
}

CycleWeight cycle_weight(const MixedMultigraph& m, const CycleDescriptor& c)
{
    UnitExponent t;
    const auto& es = c.edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (es[i].to != es[(i + 1) % es.size()].from)
            throw Error("cycle does not close at step " + std::to_string(i));
        t += m.label(es[i]);
    }
    return {t};
}

EssentialVector essential_vector(const MixedMultigraph& m, const SpanningTreeInfo& tree)
{
    EssentialVector v;
    for (const auto& c : fundamental_cycles(m, tree))
        v.push_back(cycle_weight(m, c));
    return v;
}

EssentialVector essential_vector(const MixedMultigraph& m)
{
    return essential_vector(m, spanning_tree(underlying(m)));
}

// ---------------------------------------------------------------------------
// Gauges

std::vector<Vertex> GaugeAssignment::partition_class(UnitExponent j) const
{
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < t_.size(); ++v)
        if (t_[v] == j)
            out.push_back(static_cast<Vertex>(v));
    return out;
}

GaugeAssignment parse_gauge(std::string_view text, int n)
{
    GaugeAssignment g(n);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    auto number = [&](std::string_view tok) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
            throw ParseError("bad gauge entry '" + std::string(tok) + "'");
        return value;
    };
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("gauge entry '" + std::string(item) + "' is not vertex:exponent");
        int v = number(item.substr(0, colon));
        int t = number(item.substr(colon + 1));
        if (v < 0 || v >= n)
            throw ParseError("gauge vertex " + std::to_string(v) + " out of range");
        if (t < 0 || t > 5)
            throw ParseError("gauge exponent " + std::to_string(t) + " not in 0..5");
        if (seen[v])
            throw ParseError("gauge vertex " + std::to_string(v) + " listed twice");
        seen[v] = 1;
        g[v] = UnitExponent(t);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return g;
}

std::string to_string(const GaugeAssignment& g)
{
    std::string s;
    for (int v = 0; v < g.order(); ++v) {
        if (v)
            s += ',';
        s += std::to_string(v) + ":" + std::to_string(g[v].value());
    }
    return s;
}

std::optional<PairState> rotate_pair(PairState st, UnitExponent d)
{
    PairState out;
    auto place = [&](int count, int exponent) {
        if (count == 0)
            return true;
        switch (UnitExponent(exponent + d.value()).value()) {
        case 0: out.und += count; return true;
        case 1: out.fwd += count; return true;
        case 5: out.bwd += count; return true;
        default: return false;
        }
    };
    if (!place(st.und, 0) || !place(st.fwd, 1) || !place(st.bwd, 5))
        return std::nullopt;
    return out;
}

namespace {

std::string class_name(UnitExponent t)
{
    return t.value() == 0 ? "V_1" : "V_w^" + std::to_string(t.value());
}

} // namespace

std::optional<AdmissibilityViolation> admissibility_violation(const MixedMultigraph& m, const GaugeAssignment& g)
{
    if (g.order() != m.order())
        throw Error("gauge has " + std::to_string(g.order()) + " vertices, graph has " +
                    std::to_string(m.order()));
    for (const auto& [key, st] : m.pairs()) {
        UnitExponent d = g[key.hi] - g[key.lo];
        if (rotate_pair(st, d))
            continue;
        AdmissibilityViolation v;
        v.pair = key;
        const std::string where = "{" + std::to_string(key.lo) + "," + std::to_string(key.hi) + "} between " +
                                  class_name(g[key.lo]) + " and " + class_name(g[key.hi]);
        switch (d.value()) {
        case 3:
            v.condition = 2;
            v.message = "edge " + where + " violates condition (2): no edges between V_j and V_{w^3 j}";
            break;
        case 1:
        case 5:
            v.condition = 1;
            v.message = "arc " + where + " violates condition (1): no arcs from V_j to V_{w j}";
            break;
        default:
            v.condition = 3;
            v.message = "edge " + where + " violates condition (3): edges between V_j and V_{w^4 j} must be arcs from V_j to V_{w^4 j}";
            break;
        }
        return v;
    }
    return std::nullopt;
}

bool is_admissible(const MixedMultigraph& m, const GaugeAssignment& g)
{
    return !admissibility_violation(m, g).has_value();
}

MixedMultigraph apply_gauge(const MixedMultigraph& m, const GaugeAssignment& g)
{
    if (auto v = admissibility_violation(m, g))
        throw InadmissibleGaugeError("inadmissible gauge: " + v->message, v->condition);
    MixedMultigraph out(m.order());
    for (const auto& [key, st] : m.pairs())
        out.set_pair(key, *rotate_pair(st, g[key.hi] - g[key.lo]));
    return out;
}

EdgeRef transport(const MixedMultigraph& m, const GaugeAssignment& g, const EdgeRef& e)
{
    const PairKey key = e.pair();
    const PairState st = m.pair(key.lo, key.hi);
    if (!m.contains(e))
        throw Error("edge not in graph");
    const UnitExponent d = g[key.hi] - g[key.lo];
    const auto rotated = rotate_pair(st, d);
    if (!rotated)
        throw InadmissibleGaugeError("inadmissible gauge on pair {" + std::to_string(key.lo) + "," +
                                         std::to_string(key.hi) + "}",
                                     admissibility_violation(m, g)->condition);
    const bool undirected = e.index < st.und;
    const int rank = undirected ? e.index : e.index - st.und;
    const UnitExponent label(undirected ? 0 : (st.fwd > 0 ? 1 : 5));
    const int start = (label + d).value() == 0 ? 0 : rotated->und;
    return {e.from, e.to, start + rank};
}

CycleDescriptor transport(const MixedMultigraph& m, const GaugeAssignment& g, const CycleDescriptor& c)
{
    CycleDescriptor out;
    out.edges.reserve(c.edges.size());
    for (const auto& e : c.edges)
        out.edges.push_back(transport(m, g, e));
    return out;
}

// ---------------------------------------------------------------------------
// Equivalence

namespace {

// The unique d with rotate_pair(from, d) == to, if any.
std::optional<UnitExponent> pair_rotation(PairState from, PairState to)
{
    for (int d = 0; d < 6; ++d)
        if (auto r = rotate_pair(from, UnitExponent(d)); r && *r == to)
            return UnitExponent(d);
    return std::nullopt;
}

std::optional<GaugeAssignment> propagate(const MixedMultigraph& from, const MixedMultigraph& to,
                                         const SpanningTreeInfo& tree)
{
    std::map<PairKey, UnitExponent> rot;
    for (const auto& [key, st] : from.pairs()) {
        auto d = pair_rotation(st, to.pair(key.lo, key.hi));
        if (!d)
            return std::nullopt;
        rot.emplace(key, *d);
    }
    GaugeAssignment g(from.order());
    for (const EdgeRef& e : tree.tree_edges) {
        UnitExponent d = rot.at(e.pair());
        g[e.to] = e.from < e.to ? g[e.from] + d : g[e.from] - d;
    }
    for (const auto& [key, d] : rot)
        if (g[key.hi] - g[key.lo] != d)
            return std::nullopt;
    return g;
}

} // namespace

EquivalenceWitness decide_switching_equivalence(const MixedMultigraph& m1, const MixedMultigraph& m2)
{
    EquivalenceWitness w;
    const MixedMultigraph g1 = underlying(m1);
    if (g1 != underlying(m2)) {
        w.reason = "different underlying graph";
        return w;
    }
    const SpanningTreeInfo tree = spanning_tree(g1);

    if (auto g = propagate(m1, m2, tree)) {
        w.equivalent = true;
        w.gauge = std::move(*g);
        return w;
    }
    if (auto g = propagate(converse(m1), m2, tree)) {
        w.equivalent = true;
        w.converse_applied = true;
        w.gauge = std::move(*g);
        return w;
    }
    w.reason = "no three-way switching of the graph or its converse matches";
    return w;
}

bool verify_witness(const MixedMultigraph& m1, const MixedMultigraph& m2, const EquivalenceWitness& w)
{
    if (!w.equivalent || w.gauge.order() != m1.order() || m1.order() != m2.order())
        return false;
    const MixedMultigraph source = w.converse_applied ? converse(m1) : m1;
    if (!is_admissible(source, w.gauge))
        return false;
    return apply_gauge(source, w.gauge) == m2;
}

bool is_positive(const MixedMultigraph& m)
{
    const EssentialVector v = essential_vector(m);
    return std::all_of(v.begin(), v.end(), [](const CycleWeight& c) { return c.t.value() == 0; });
}

SwitchingSignature switching_signature(const MixedMultigraph& m)
{
    SwitchingSignature sig;
    std::map<PairKey, UnitExponent> phase;
    MixedMultigraph simple(m.order());
    for (const auto& [key, st] : m.pairs()) {
        std::pair<int, int> shape;
        int p = 0;
        if (st.fwd > 0) {
            shape = st.und > 0 ? std::pair{st.und, st.fwd} : std::pair{st.fwd, 0};
            p = st.und > 0 ? 0 : 1;
        } else if (st.bwd > 0) {
            shape = st.und > 0 ? std::pair{st.bwd, st.und} : std::pair{st.bwd, 0};
            p = 5;
        } else {
            shape = {st.und, 0};
        }
        sig.shapes.push_back(shape);
        phase.emplace(key, UnitExponent(p));
        simple.add_edge(key.lo, key.hi);
    }
    const SpanningTreeInfo tree = spanning_tree(simple);
    for (const auto& c : fundamental_cycles(simple, tree)) {
        UnitExponent sum;
        for (const EdgeRef& e : c.edges) {
            UnitExponent p = phase.at(e.pair());
            sum += e.from < e.to ? p : -p;
        }
        sig.phases.push_back(sum);
    }
    return sig;
}

SwitchingSignature switching_class_key(const MixedMultigraph& m)
{
    return std::min(switching_signature(m), switching_signature(converse(m)));
}

} // namespace hmix
