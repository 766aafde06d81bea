#include <cmath>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hmix/hmix.hpp"

namespace hmix::cli {

namespace {

constexpr int kMaxSachsVertices = 12;
constexpr int kMaxFloatVertices = 10;
constexpr int kMaxCycleVertices = 16;

// Monic polynomial with the given roots, highest power first.
std::vector<double> poly_from_roots(const Eigen::VectorXd& roots)
{
    std::vector<double> p{1.0};
    for (double r : roots) {
        p.push_back(0.0);
        for (std::size_t i = p.size() - 1; i > 0; --i)
            p[i] -= r * p[i - 1];
    }
    return p;
}

} // namespace

std::vector<std::string> invariant_failures(const MixedMultigraph& m)
{
    std::vector<std::string> fail;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok)
            fail.push_back(what);
    };
    const int n = m.order();

    const EisensteinMatrix h = hermitian_matrix(m);
    BigInt norm_sum = 0;
    for (int u = 0; u < n; ++u) {
        check(h(u, u) == EisensteinInt(0), "nonzero diagonal at " + std::to_string(u));
        for (int v = u + 1; v < n; ++v) {
            check(h(v, u) == h(u, v).conj(), "entry (" + std::to_string(v) + "," + std::to_string(u) +
                                                 ") is not the conjugate of its transpose");
            norm_sum += h(u, v).norm();
        }
    }

    const CharPoly phi = char_poly(m);
    check(phi[0] == 1, "c_0 != 1");
    if (n >= 1)
        check(phi[1] == 0, "c_1 != 0");
    if (n >= 2)
        check(phi[2] == -norm_sum, "c_2 != -sum of |N_uv|^2");
    if (n <= kMaxSachsVertices)
        check(char_poly_sachs(m) == phi, "Sachs expansion disagrees with determinant");

    if (n <= kMaxFloatVertices) {
        const Eigen::VectorXd ev = eigenvalues(h);
        const auto p = poly_from_roots(ev);
        for (int i = 0; i <= n; ++i)
            check(std::abs(p[i] - static_cast<double>(phi[i])) <= 1e-6,
                  "eigenvalues do not reconstruct c_" + std::to_string(i));
        check(std::abs(ev.sum()) <= 1e-9, "eigenvalues do not sum to 0");
        check(std::abs(ev.squaredNorm() - 2.0 * static_cast<double>(norm_sum)) <= 1e-8,
              "sum of squared eigenvalues != 2 sum |N_uv|^2");
    }

    const MixedMultigraph conv = converse(m);
    check(char_poly(conv) == phi, "converse is not cospectral");

    for (const PairKey& b : find_bridges(m)) {
        for (PairState st : {PairState{1, 0, 0}, PairState{0, 1, 0}, PairState{0, 0, 1}}) {
            MixedMultigraph flipped = m;
            flipped.set_pair(b, st);
            check(char_poly(flipped) == phi, "reorienting bridge {" + std::to_string(b.lo) + "," +
                                                 std::to_string(b.hi) + "} changes the spectrum");
        }
    }

    const MixedMultigraph g = underlying(m);
    const bool cycles_ok = n <= kMaxCycleVertices;
    if (cycles_ok) {
        check(cospectral_to_underlying(m) == is_cospectral(m, g),
              "cycle condition for cospectrality with the underlying graph disagrees with Φ");
        check(antispectral_to_underlying(m) == is_antispectral(g, m),
              "cycle condition for antispectrality with the underlying graph disagrees with Φ");
    }

    if (!m.connected())
        return fail;

    const SpanningTreeInfo tree = spanning_tree(g);
    check(essential_vector(conv, tree) == conj(essential_vector(m, tree)),
          "converse does not conjugate the essential vector");
    check(is_positive(m) == decide_switching_equivalence(g, m).equivalent,
          "positivity disagrees with equivalence to the underlying graph");
    if (cycles_ok)
        check(is_positive(m) == cospectral_to_underlying(m), "positivity disagrees with the all-cycles condition");

    const auto self = decide_switching_equivalence(m, m);
    check(self.equivalent && verify_witness(m, m, self), "graph is not equivalent to itself");
    const auto with_conv = decide_switching_equivalence(m, conv);
    check(with_conv.equivalent && verify_witness(m, conv, with_conv), "graph is not equivalent to its converse");

    const std::vector<CycleDescriptor> cycles = cycles_ok ? enumerate_simple_cycles(m) : std::vector<CycleDescriptor>{};
    for (Vertex v = 0; v < n; ++v) {
        for (int d = 1; d < 6; ++d) {
            GaugeAssignment gauge(n);
            gauge[v] = UnitExponent(d);
            if (!is_admissible(m, gauge))
                continue;
            const std::string tag = " (gauge " + to_string(gauge) + ")";
            const MixedMultigraph s = apply_gauge(m, gauge);
            check(char_poly(s) == phi, "switching changes the spectrum" + tag);
            const auto w = decide_switching_equivalence(m, s);
            check(w.equivalent && verify_witness(m, s, w), "switched graph not recognised as equivalent" + tag);
            check(switching_class_key(s) == switching_class_key(m), "switching changes the class key" + tag);
            for (const auto& c : cycles)
                if (cycle_weight(m, c) != cycle_weight(s, transport(m, gauge, c))) {
                    fail.push_back("switching changes a cycle weight" + tag);
                    break;
                }
        }
    }
    return fail;
}

} // namespace hmix::cli
