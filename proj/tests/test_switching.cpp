#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace hmix;
using namespace hmix::testing;

namespace {

std::vector<MixedMultigraph> family_of(const MixedMultigraph& g)
{
    return enumerate_mixed(g);
}

// D⁻¹ N D computed entrywise from the matrix.
EisensteinMatrix conjugated_matrix(const MixedMultigraph& m, const GaugeAssignment& g)
{
    EisensteinMatrix h = hermitian_matrix(m);
    for (int u = 0; u < m.order(); ++u)
        for (int v = 0; v < m.order(); ++v)
            h(u, v) = unit_pow(-g[u].value()) * h(u, v) * unit_pow(g[v].value());
    return h;
}

GaugeAssignment gauge_of(std::initializer_list<int> t)
{
    std::vector<UnitExponent> v;
    for (int x : t)
        v.emplace_back(x);
    return GaugeAssignment(v);
}

} // namespace

TEST_CASE("essential vectors of small graphs")
{
    CHECK(essential_vector(k3()) == EssentialVector{{UnitExponent(0)}});
    CHECK(essential_vector(cyclic_triangle()) == EssentialVector{{UnitExponent(3)}});
    CHECK(to_string(essential_vector(cyclic_triangle())) == "[w^3]");
    CHECK(essential_vector(p4()).empty());
    const auto theta = graph(2, {{0, 1}, {0, 1}}, {{0, 1}});
    CHECK(essential_vector(theta) == EssentialVector{{UnitExponent(0)}, {UnitExponent(1)}});
    CHECK(conj(essential_vector(theta)) == EssentialVector{{UnitExponent(0)}, {UnitExponent(5)}});
    CHECK(conjugate_equivalent(essential_vector(cyclic_triangle()), essential_vector(cyclic_triangle())));
}

TEST_CASE("walk and cycle weights")
{
    const auto m = cyclic_triangle();
    CHECK(walk_weight(m, {{0, 1, 0}, {1, 2, 0}}) == unit_pow(2));
    CHECK(walk_weight(m, {{1, 0, 0}}) == unit_pow(-1));
    CHECK(walk_weight(m, {}) == EisensteinInt(1));
    CHECK_THROWS_AS(walk_weight(m, {{0, 1, 0}, {2, 0, 0}}), Error);
    CHECK(cycle_weight(m, CycleDescriptor{{{0, 2, 0}, {2, 1, 0}, {1, 0, 0}}}).t.value() == 3);
    CHECK_THROWS_AS(cycle_weight(m, CycleDescriptor{{{0, 1, 0}, {1, 2, 0}}}), Error);
    std::mt19937 rng(2);
    for (int i = 0; i < 100; ++i) {
        const auto r = random_mixed(rng, 2 + i % 5, 2, 0.7);
        for (const auto& c : enumerate_simple_cycles(r)) {
            CHECK(cycle_weight(r, c.reversed()) == cycle_weight(r, c).conj());
            CHECK(walk_weight(r, c.edges) == cycle_weight(r, c).value());
        }
    }
}

TEST_CASE("converse conjugates the essential vector")
{
    std::mt19937 rng(3);
    for (int i = 0; i < 300; ++i) {
        const auto m = random_connected(rng, 1 + i % 7, 3, 0.5);
        const auto tree = spanning_tree(underlying(m));
        CHECK(essential_vector(converse(m), tree) == conj(essential_vector(m, tree)));
    }
}

TEST_CASE("gauge parsing and formatting")
{
    const auto g = parse_gauge("0:0,1:1,2:5", 3);
    CHECK(g == gauge_of({0, 1, 5}));
    CHECK(to_string(g) == "0:0,1:1,2:5");
    CHECK(parse_gauge("2:3", 4) == gauge_of({0, 0, 3, 0}));
    CHECK(parse_gauge("", 2) == GaugeAssignment::identity(2));
    CHECK(g.partition_class(UnitExponent(1)) == std::vector<Vertex>{1});
    CHECK_THROWS_AS(parse_gauge("0:6", 2), ParseError);
    CHECK_THROWS_AS(parse_gauge("2:1", 2), ParseError);
    CHECK_THROWS_AS(parse_gauge("0:1,0:2", 2), ParseError);
    CHECK_THROWS_AS(parse_gauge("0-1", 2), ParseError);
    CHECK_THROWS_AS(parse_gauge("a:1", 2), ParseError);
    CHECK_THROWS_AS(parse_gauge("0:1,", 2), ParseError);
}

TEST_CASE("pair rotation table")
{
    CHECK(rotate_pair({2, 0, 0}, UnitExponent(1)) == PairState{0, 2, 0});
    CHECK(rotate_pair({2, 0, 0}, UnitExponent(5)) == PairState{0, 0, 2});
    CHECK(rotate_pair({1, 2, 0}, UnitExponent(5)) == PairState{2, 0, 1});
    CHECK(rotate_pair({0, 0, 2}, UnitExponent(2)) == PairState{0, 2, 0});
    CHECK(rotate_pair({0, 2, 0}, UnitExponent(4)) == PairState{0, 0, 2});
    CHECK_FALSE(rotate_pair({0, 2, 0}, UnitExponent(2)));
    CHECK_FALSE(rotate_pair({1, 0, 0}, UnitExponent(3)));
    CHECK_FALSE(rotate_pair({1, 1, 0}, UnitExponent(1)));
    CHECK(rotate_pair({}, UnitExponent(3)) == PairState{});
}

TEST_CASE("admissibility conditions")
{
    const auto e = graph(2, {{0, 1}});
    const auto a = graph(2, {}, {{0, 1}});
    const auto b = graph(2, {}, {{1, 0}});
    CHECK(admissibility_violation(e, gauge_of({0, 3}))->condition == 2);
    CHECK(admissibility_violation(a, gauge_of({0, 1}))->condition == 1);
    CHECK(admissibility_violation(b, gauge_of({1, 0}))->condition == 1);
    CHECK(admissibility_violation(e, gauge_of({0, 2}))->condition == 3);
    CHECK(admissibility_violation(a, gauge_of({0, 2}))->condition == 3);
    CHECK(is_admissible(b, gauge_of({0, 2})));
    CHECK(is_admissible(a, gauge_of({2, 0})));
    CHECK(is_admissible(e, gauge_of({0, 1})));
    CHECK(is_admissible(e, gauge_of({4, 4})));
    CHECK_THROWS_AS(is_admissible(e, gauge_of({0})), Error);
    try {
        apply_gauge(e, gauge_of({0, 3}));
        FAIL("expected an inadmissible gauge");
    } catch (const InadmissibleGaugeError& err) {
        CHECK(err.condition() == 2);
        CHECK(std::string(err.what()).find("{0,1}") != std::string::npos);
    }
}

TEST_CASE("admissibility matches the matrix form exactly")
{
    // A gauge is admissible iff D⁻¹ N D has entries that are sums of 1, ω, ω̄
    // of the same multiset shape; check against all 6² gauges on 2-vertex pairs.
    for (int mu = 1; mu <= 3; ++mu)
        for (const auto& m : family_of(bundle(mu)))
            for (int t = 0; t < 6; ++t) {
                const auto g = gauge_of({0, t});
                const auto rotated = conjugated_matrix(m, g)(0, 1);
                bool representable = false;
                for (int und = 0; und <= mu; ++und)
                    for (int fwd = 0; und + fwd <= mu; ++fwd) {
                        const int bwd = mu - und - fwd;
                        if (fwd && bwd)
                            continue;
                        const EisensteinInt v = EisensteinInt(und) + EisensteinInt(fwd) * unit_pow(1) +
                                                EisensteinInt(bwd) * unit_pow(-1);
                        representable = representable || v == rotated;
                    }
                CHECK(is_admissible(m, g) == representable);
            }
}

TEST_CASE("applying a gauge conjugates the matrix")
{
    std::mt19937 rng(5);
    for (int i = 0; i < 1000; ++i) {
        auto [m, g] = random_admissible(rng, 1 + i % 8, 3, 0.6);
        REQUIRE(is_admissible(m, g));
        const auto s = apply_gauge(m, g);
        CHECK(hermitian_matrix(s) == conjugated_matrix(m, g));
        CHECK(char_poly(s) == char_poly(m));
        CHECK(underlying(s) == underlying(m));
    }
}

TEST_CASE("transport follows each edge to its image")
{
    std::mt19937 rng(6);
    for (int i = 0; i < 300; ++i) {
        auto [m, g] = random_admissible(rng, 2 + i % 5, 2, 0.6);
        const auto s = apply_gauge(m, g);
        for (const auto& [key, st] : m.pairs()) {
            const UnitExponent d = g[key.hi] - g[key.lo];
            for (int idx = 0; idx < st.multiplicity(); ++idx) {
                const EdgeRef e{key.lo, key.hi, idx};
                const EdgeRef img = transport(m, g, e);
                CHECK(s.label(img) == m.label(e) + d);
            }
        }
        for (const auto& c : enumerate_simple_cycles(m)) {
            const auto tc = transport(m, g, c);
            // cycle weights are gauge invariant: the ω^{t_v} factors cancel
            CHECK(cycle_weight(s, tc) == cycle_weight(m, c));
        }
    }
    CHECK_THROWS_AS(transport(graph(2, {{0, 1}}), gauge_of({0, 3}), EdgeRef{0, 1, 0}), InadmissibleGaugeError);
}

TEST_CASE("decision matches brute force on two-vertex bundles")
{
    for (int mu = 1; mu <= 3; ++mu) {
        const auto fam = family_of(bundle(mu));
        for (const auto& x : fam)
            for (const auto& y : fam) {
                const auto w = decide_switching_equivalence(x, y);
                CHECK(w.equivalent == brute_force_equivalent(x, y));
                if (w.equivalent)
                    CHECK(verify_witness(x, y, w));
            }
    }
}

TEST_CASE("decision matches brute force on the K3 family")
{
    const auto fam = family_of(k3());
    REQUIRE(fam.size() == 27);
    for (const auto& x : fam)
        for (const auto& y : fam) {
            const auto w = decide_switching_equivalence(x, y);
            CHECK(w.equivalent == brute_force_equivalent(x, y));
            if (w.equivalent)
                CHECK(verify_witness(x, y, w));
        }
}

TEST_CASE("decision matches brute force on random small pairs")
{
    std::mt19937 rng(8);
    int positives = 0;
    for (int i = 0; i < 400; ++i) {
        const int n = 2 + i % 3;
        auto [m, g] = random_admissible(rng, n, 2, 0.8);
        if (!m.connected())
            continue;
        MixedMultigraph other = apply_gauge(m, g);
        if (i % 3 == 0)
            other = converse(other);
        if (i % 2 == 0) {
            // perturb one pair to get mostly negative cases
            const auto [key, st] = *other.pairs().begin();
            if (st.fwd)
                other.set_pair(key, {st.und + 1, st.fwd - 1, 0});
            else if (st.und)
                other.set_pair(key, {st.und - 1, 0, st.bwd + 1});
            else
                other.set_pair(key, {st.und + 1, 0, st.bwd - 1});
        }
        const auto w = decide_switching_equivalence(m, other);
        const bool brute = brute_force_equivalent(m, other);
        CHECK(w.equivalent == brute);
        positives += brute;
        if (w.equivalent)
            CHECK(verify_witness(m, other, w));
    }
    CHECK(positives > 50);
}

TEST_CASE("witness conventions")
{
    const auto x = graph(3, {{0, 2}, {1, 2}}, {{0, 1}});
    const auto y = graph(3, {{0, 2}, {1, 2}}, {{1, 0}});
    auto w = decide_switching_equivalence(x, y);
    REQUIRE(w.equivalent);
    CHECK(verify_witness(x, y, w));
    auto self = decide_switching_equivalence(x, x);
    CHECK(self.equivalent);
    CHECK_FALSE(self.converse_applied);
    CHECK(self.gauge == GaugeAssignment::identity(3));
    w.gauge[0] = UnitExponent(3);
    CHECK_FALSE(verify_witness(x, y, w));
    CHECK_THROWS_AS(decide_switching_equivalence(graph(3, {{0, 1}}), graph(3, {{0, 1}})), DisconnectedError);
    CHECK_THROWS_AS(is_positive(graph(3, {{0, 1}})), DisconnectedError);
    const auto diff = decide_switching_equivalence(k3(), p4());
    CHECK_FALSE(diff.equivalent);
    CHECK(diff.reason == "different underlying graph");
    const auto no = decide_switching_equivalence(k3(), cyclic_triangle());
    CHECK_FALSE(no.equivalent);
    CHECK_FALSE(no.reason.empty());
    CHECK_FALSE(verify_witness(k3(), cyclic_triangle(), no));
}

TEST_CASE("switching equivalence is an equivalence relation")
{
    const auto fam = family_of(graph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}));
    REQUIRE(fam.size() == 45);
    const std::size_t n = fam.size();
    std::vector<std::vector<char>> eq(n, std::vector<char>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            eq[i][j] = decide_switching_equivalence(fam[i], fam[j]).equivalent;
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(eq[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(eq[i][j] == eq[j][i]);
            CHECK(eq[i][j] == (switching_class_key(fam[i]) == switching_class_key(fam[j])));
            if (eq[i][j])
                for (std::size_t k = 0; k < n; ++k)
                    if (eq[j][k])
                        CHECK(eq[i][k]);
        }
    }
}

TEST_CASE("class key agrees with the decision procedure")
{
    for (const auto& g : {bundle(2), bundle(3), bundle(4), k3(), c4(), graph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}})}) {
        const auto fam = family_of(g);
        for (const auto& x : fam)
            for (const auto& y : fam)
                CHECK((switching_class_key(x) == switching_class_key(y)) ==
                      decide_switching_equivalence(x, y).equivalent);
    }
}

TEST_CASE("on simple graphs the essential vector decides equivalence")
{
    for (const auto& g : {k3(), c4(), k4()}) {
        const auto fam = family_of(g);
        const auto tree = spanning_tree(g);
        std::vector<EssentialVector> ev;
        for (const auto& x : fam)
            ev.push_back(essential_vector(x, tree));
        for (std::size_t i = 0; i < fam.size(); i += (g.order() == 4 ? 7 : 1))
            for (std::size_t j = 0; j < fam.size(); ++j)
                CHECK(decide_switching_equivalence(fam[i], fam[j]).equivalent ==
                      conjugate_equivalent(ev[i], ev[j]));
    }
}

TEST_CASE("on multigraphs the labelled essential vector is not a complete invariant")
{
    const auto x = graph(2, {{0, 1}, {0, 1}}, {{0, 1}});
    const auto y = graph(2, {{0, 1}}, {{1, 0}, {1, 0}});
    CHECK(brute_force_equivalent(x, y));
    CHECK(decide_switching_equivalence(x, y).equivalent);
    CHECK_FALSE(conjugate_equivalent(essential_vector(x), essential_vector(y)));
}

TEST_CASE("positivity")
{
    CHECK(is_positive(k3()));
    CHECK(is_positive(p4()));
    CHECK_FALSE(is_positive(cyclic_triangle()));
    CHECK(is_positive(graph(3, {{0, 1}}, {{1, 2}})));
    std::mt19937 rng(10);
    for (int i = 0; i < 300; ++i) {
        const auto m = random_connected(rng, 1 + i % 6, 2, 0.5);
        CHECK(is_positive(m) == decide_switching_equivalence(underlying(m), m).equivalent);
        CHECK(is_positive(m) == cospectral_to_underlying(m));
    }
}

TEST_CASE("more named cases")
{
    const auto zigzag = graph(3, {}, {{0, 1}, {2, 1}});
    CHECK(walk_weight(zigzag, {{0, 1, 0}, {1, 2, 0}}) == EisensteinInt(1));
    CHECK(walk_weight(p4(), {{0, 1, 0}, {1, 2, 0}}) == EisensteinInt(1));
    const auto two_arcs = graph(2, {}, {{0, 1}, {0, 1}});
    const auto c2 = enumerate_simple_cycles(two_arcs);
    REQUIRE(c2.size() == 1);
    CHECK(cycle_weight(two_arcs, c2[0]).t.value() == 0);
    CHECK(cycle_weight(two_arcs, c2[0]).nu() == 2);
    CHECK(is_positive(two_arcs));
    CHECK_FALSE(is_positive(graph(3, {{0, 2}, {1, 2}}, {{0, 1}})));
    CHECK(essential_vector(bundle(3)) == EssentialVector{{UnitExponent(0)}, {UnitExponent(0)}});
    const auto one_arc = graph(3, {{0, 2}, {1, 2}}, {{0, 1}});
    const auto ct = enumerate_simple_cycles(one_arc);
    CHECK(cycle_weight(one_arc, ct[0]).nu() == 1);

    CHECK(apply_gauge(two_arcs, gauge_of({0, 5})) == bundle(2));
    CHECK(apply_gauge(graph(2, {{0, 1}}), gauge_of({0, 1})) == graph(2, {}, {{0, 1}}));
    CHECK(apply_gauge(k4(), GaugeAssignment::identity(4)) == k4());

    const auto a01 = graph(3, {{0, 2}, {1, 2}}, {{0, 1}});
    const auto a12 = graph(3, {{0, 1}, {0, 2}}, {{1, 2}});
    const auto a10 = graph(3, {{0, 2}, {1, 2}}, {{1, 0}});
    auto w = decide_switching_equivalence(a01, a12);
    CHECK(w.equivalent);
    CHECK_FALSE(w.converse_applied);
    w = decide_switching_equivalence(a01, a10);
    CHECK(w.equivalent);
    CHECK(w.converse_applied);
    CHECK_FALSE(verify_witness(cyclic_triangle(), k3(), EquivalenceWitness{true, GaugeAssignment::identity(3), false, ""}));
    CHECK(verify_witness(k3(), k3(), EquivalenceWitness{true, GaugeAssignment::identity(3), false, ""}));
}

TEST_CASE("equal essential vectors force equal weights on every cycle")
{
    for (const auto& g : {k3(), bundle(3), c4(), k4(), graph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}})}) {
        const auto fam = enumerate_mixed(g);
        const auto tree = spanning_tree(g);
        const auto cycles = enumerate_simple_cycles(g);
        std::map<EssentialVector, std::vector<std::size_t>> by_vector;
        for (std::size_t i = 0; i < fam.size(); ++i)
            by_vector[essential_vector(fam[i], tree)].push_back(i);
        for (const auto& [ev, members] : by_vector)
            for (std::size_t i : members)
                for (const auto& c : cycles)
                    CHECK(cycle_weight(fam[i], c) == cycle_weight(fam[members.front()], c));
    }
}
