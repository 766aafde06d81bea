#include "hmix/spectral.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>

#include "hmix/switching.hpp"

namespace hmix {

EisensteinMatrix hermitian_matrix(const MixedMultigraph& m)
{
    const int n = m.order();
    EisensteinMatrix h = EisensteinMatrix::Constant(n, n, EisensteinInt(0));
    for (const auto& [key, st] : m.pairs()) {
        // und + fwd·ω + bwd·ω̄ with ω̄ = 1 − ω
        EisensteinInt entry(BigInt(st.und + st.bwd), BigInt(st.fwd - st.bwd));
        h(key.hi, key.lo) = entry.conj();
        h(key.lo, key.hi) = std::move(entry);
    }
    return h;
}

CharPoly::CharPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs))
{
    if (c_.empty() || c_.front() != 1)
        throw Error("characteristic polynomial must be monic");
}

CharPoly CharPoly::negated_roots() const
{
    std::vector<BigInt> c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return CharPoly(std::move(c));
}

std::string CharPoly::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i)
        os << (i ? " " : "") << c_[i];
    return os.str();
}

CharPoly char_poly_det(const EisensteinMatrix& h)
{
    const auto coeffs = berkowitz(h);
    std::vector<BigInt> c;
    c.reserve(static_cast<std::size_t>(coeffs.size()));
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        if (!coeffs(i).is_real())
            throw ArithmeticError("coefficient c_" + std::to_string(i) + " = " + hmix::to_string(coeffs(i)) +
                                  " is not an integer");
        c.push_back(coeffs(i).a());
    }
    return CharPoly(std::move(c));
}

CharPoly char_poly(const MixedMultigraph& m)
{
    return char_poly_det(hermitian_matrix(m));
}

int SachsSubgraph::order() const
{
    int total = 2 * static_cast<int>(edges.size());
    for (const auto& c : cycles)
        total += static_cast<int>(c.length());
    return total;
}

namespace {

void check_sachs_size(const MixedMultigraph& m, const SachsLimits& limits)
{
    if (m.order() > limits.max_vertices)
        throw CapacityError("Sachs expansion refused: " + std::to_string(m.order()) + " vertices exceeds " +
                            std::to_string(limits.max_vertices));
}

std::uint32_t vertex_mask(const CycleDescriptor& c)
{
    std::uint32_t mask = 0;
    for (const auto& e : c.edges)
        mask |= 1u << e.from;
    return mask;
}

} // namespace

CharPoly char_poly_sachs(const MixedMultigraph& m, SachsLimits limits)
{
    check_sachs_size(m, limits);
    const int n = m.order();
    const auto cycles = enumerate_simple_cycles(m, {limits.max_vertices, limits.max_cycles});

    // Net contribution (−1)·ν of all components spanning exactly a given vertex set;
    // single edges have ν = 1.
    std::map<std::uint32_t, BigInt> weight;
    for (const auto& [key, st] : m.pairs())
        weight[(1u << key.lo) | (1u << key.hi)] -= st.multiplicity();
    for (const auto& c : cycles)
        weight[vertex_mask(c)] -= cycle_weight(m, c).nu();

    // Components grouped by lowest vertex.
    std::vector<std::vector<std::pair<std::uint32_t, BigInt>>> by_low(static_cast<std::size_t>(n));
    for (const auto& [mask, w] : weight)
        if (w != 0)
            by_low[static_cast<std::size_t>(std::countr_zero(mask))].emplace_back(mask, w);

    // f[S] = signed sum over Sachs subgraphs covering exactly S.
    const std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
    std::vector<BigInt> f(static_cast<std::size_t>(full) + 1, BigInt(0));
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    f[0] = 1;
    c[0] = 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        BigInt acc = 0;
        for (const auto& [mask, w] : by_low[static_cast<std::size_t>(std::countr_zero(s))])
            if ((mask & s) == mask && f[s ^ mask] != 0)
                acc += w * f[s ^ mask];
        if (acc != 0)
            c[static_cast<std::size_t>(std::popcount(s))] += acc;
        f[s] = std::move(acc);
    }
    return CharPoly(std::move(c));
}

std::vector<SachsSubgraph> sachs_subgraphs(const MixedMultigraph& m, int order, SachsLimits limits)
{
    check_sachs_size(m, limits);
    const int n = m.order();
    const auto cycles = enumerate_simple_cycles(m, {limits.max_vertices, limits.max_cycles});

    struct Component {
        std::uint32_t mask;
        std::optional<EdgeRef> edge;
        const CycleDescriptor* cycle;
    };
    std::vector<std::vector<Component>> by_low(static_cast<std::size_t>(n));
    for (const auto& [key, st] : m.pairs())
        for (int i = 0; i < st.multiplicity(); ++i)
            by_low[static_cast<std::size_t>(key.lo)].push_back(
                {(1u << key.lo) | (1u << key.hi), EdgeRef{key.lo, key.hi, i}, nullptr});
    for (const auto& c : cycles) {
        std::uint32_t mask = vertex_mask(c);
        by_low[static_cast<std::size_t>(std::countr_zero(mask))].push_back({mask, std::nullopt, &c});
    }

    std::vector<SachsSubgraph> out;
    SachsSubgraph current;
    std::function<void(int, std::uint32_t, int)> visit = [&](int v, std::uint32_t used, int size) {
        if (size == order) {
            out.push_back(current);
            return;
        }
        if (v >= n || size > order)
            return;
        if (used & (1u << v)) {
            visit(v + 1, used, size);
            return;
        }
        visit(v + 1, used, size);
        for (const auto& comp : by_low[static_cast<std::size_t>(v)]) {
            if (comp.mask & used)
                continue;
            const int add = std::popcount(comp.mask);
            if (size + add > order)
                continue;
            if (comp.edge)
                current.edges.push_back(*comp.edge);
            else
                current.cycles.push_back(*comp.cycle);
            visit(v + 1, used | comp.mask, size + add);
            if (comp.edge)
                current.edges.pop_back();
            else
                current.cycles.pop_back();
        }
    };
    visit(0, 0, 0);
    return out;
}

Eigen::VectorXd eigenvalues(const EisensteinMatrix& h, JacobiOptions opt)
{
    return hermitian_eigenvalues(to_complex(h), opt);
}

bool is_cospectral(const MixedMultigraph& m1, const MixedMultigraph& m2)
{
    return m1.order() == m2.order() && char_poly(m1) == char_poly(m2);
}

bool is_antispectral(const MixedMultigraph& m1, const MixedMultigraph& m2)
{
    if (m1.order() != m2.order())
        throw Error("antispectrality needs graphs of equal order");
    return char_poly(m2) == char_poly(m1).negated_roots();
}

bool cospectral_to_underlying(const MixedMultigraph& m, CycleEnumerationLimits limits)
{
    for (const auto& c : enumerate_simple_cycles(m, limits))
        if (cycle_weight(m, c).t.value() != 0)
            return false;
    return true;
}

bool antispectral_to_underlying(const MixedMultigraph& m, CycleEnumerationLimits limits)
{
    for (const auto& c : enumerate_simple_cycles(m, limits)) {
        const int want = c.length() % 2 == 0 ? 0 : 3;
        if (cycle_weight(m, c).t.value() != want)
            return false;
    }
    return true;
}

} // namespace hmix
