#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Jacobi>

#include "hmix/eisenstein.hpp"
#include "hmix/error.hpp"
#include "hmix/multigraph.hpp"

namespace hmix {

using EisensteinMatrix = Eigen::Matrix<EisensteinInt, Eigen::Dynamic, Eigen::Dynamic>;

/// N(M): entry (u,v) is e{u,v} + e(u,v)ω, or e{u,v} + e(v,u)ω̄.
EisensteinMatrix hermitian_matrix(const MixedMultigraph& m);

template <typename Derived>
Eigen::MatrixXcd to_complex(const Eigen::MatrixBase<Derived>& a)
{
    return a.unaryExpr([](const typename Derived::Scalar& x) { return to_complex(x); });
}

/// Coefficients c_0..c_n of det(λI − A) = Σ c_i λ^{n−i} over any commutative
/// ring, by Berkowitz's division-free recurrence. c_0 = 1.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> berkowitz(const Eigen::MatrixBase<Derived>& a)
{
    using Scalar = typename Derived::Scalar;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    eigen_assert(a.rows() == a.cols());
    const Eigen::Index n = a.rows();

    Vector poly(1);
    poly(0) = Scalar(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        // First column of the (k+2)×(k+1) Toeplitz factor for the leading (k+1)×(k+1) block.
        Vector col(k + 2);
        col(0) = Scalar(1);
        col(1) = -a(k, k);
        Vector v = a.col(k).head(k);
        for (Eigen::Index j = 0; j < k; ++j) {
            col(j + 2) = -a.row(k).head(k).transpose().cwiseProduct(v).sum();
            if (j + 1 < k)
                v = (a.topLeftCorner(k, k).lazyProduct(v)).eval();
        }
        Vector next(k + 2);
        for (Eigen::Index r = 0; r < k + 2; ++r) {
            Scalar acc(0);
            for (Eigen::Index c = 0; c <= std::min(r, k); ++c)
                acc += col(r - c) * poly(c);
            next(r) = acc;
        }
        poly = std::move(next);
    }
    return poly;
}

/// Integer coefficients c_0..c_n of Φ(M, λ) = Σ c_i λ^{n−i}.
class CharPoly {
public:
    CharPoly() : c_{BigInt(1)} {}
    explicit CharPoly(std::vector<BigInt> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
    const std::vector<BigInt>& coefficients() const { return c_; }

    /// Polynomial of the negated spectrum: c_i ↦ (−1)^i c_i.
    CharPoly negated_roots() const;

    /// "1 0 -3 -2"
    std::string to_string() const;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
    friend auto operator<=>(const CharPoly& x, const CharPoly& y)
    {
        if (x.c_.size() != y.c_.size())
            return x.c_.size() <=> y.c_.size();
        for (std::size_t i = 0; i < x.c_.size(); ++i)
            if (x.c_[i] != y.c_[i])
                return x.c_[i] < y.c_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    std::vector<BigInt> c_;
};

/// Exact Φ from the determinant route. Throws ArithmeticError if a
/// coefficient keeps an ω-component.
CharPoly char_poly_det(const EisensteinMatrix& h);
CharPoly char_poly(const MixedMultigraph& m);

/// A Sachs subgraph: vertex-disjoint single edges and cycles.
struct SachsSubgraph {
    std::vector<EdgeRef> edges;
    std::vector<CycleDescriptor> cycles;

    int components() const { return static_cast<int>(edges.size() + cycles.size()); }
    int order() const;
};

struct SachsLimits {
    int max_vertices = 12;
    std::size_t max_cycles = 1'000'000;
};

/// Exact Φ from c_i = Σ_S (−1)^{r(S)} Π_{C⊂S} ν(C). Throws CapacityError.
CharPoly char_poly_sachs(const MixedMultigraph& m, SachsLimits limits = {});

/// Every Sachs subgraph of the given order, explicitly. Exponential; for inspection.
std::vector<SachsSubgraph> sachs_subgraphs(const MixedMultigraph& m, int order, SachsLimits limits = {});

struct JacobiOptions {
    int max_sweeps = 100;
    /// Stop when the off-diagonal Frobenius norm falls below tolerance·n.
    double tolerance = 1e-12;
    /// Largest |Im| tolerated on the converged diagonal.
    double imaginary_residue = 1e-9;
};

/// Eigenvalues of a complex Hermitian matrix, ascending, by cyclic two-sided
/// Jacobi rotations. Throws ArithmeticError on non-convergence.
template <typename Derived>
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& h, JacobiOptions opt = {})
{
    Eigen::MatrixXcd a = h;
    const Eigen::Index n = a.rows();
    auto off_norm = [&] {
        double s = 0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                if (i != j)
                    s += std::norm(a(i, j));
        return std::sqrt(s);
    };
    const double target = opt.tolerance * static_cast<double>(std::max<Eigen::Index>(n, 1));
    int sweep = 0;
    while (off_norm() >= target) {
        if (sweep++ >= opt.max_sweeps)
            throw ArithmeticError("Jacobi iteration did not converge in " + std::to_string(opt.max_sweeps) +
                                  " sweeps");
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (a(p, q) == std::complex<double>(0))
                    continue;
                Eigen::JacobiRotation<std::complex<double>> rot;
                rot.makeJacobi(a, p, q);
                a.applyOnTheLeft(p, q, rot.adjoint());
                a.applyOnTheRight(p, q, rot);
            }
    }
    Eigen::VectorXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(a(i, i).imag()) >= opt.imaginary_residue)
            throw ArithmeticError("eigenvalue with imaginary residue " + std::to_string(a(i, i).imag()));
        out(i) = a(i, i).real();
    }
    std::sort(out.begin(), out.end());
    return out;
}

Eigen::VectorXd eigenvalues(const EisensteinMatrix& h, JacobiOptions opt = {});

bool is_cospectral(const MixedMultigraph& m1, const MixedMultigraph& m2);
/// The spectrum of m2 is the negated spectrum of m1. Throws Error on order mismatch.
bool is_antispectral(const MixedMultigraph& m1, const MixedMultigraph& m2);

/// Every simple cycle has weight 1.
bool cospectral_to_underlying(const MixedMultigraph& m, CycleEnumerationLimits limits = {});
/// Every even simple cycle has weight 1 and every odd one weight −1.
bool antispectral_to_underlying(const MixedMultigraph& m, CycleEnumerationLimits limits = {});

} // namespace hmix
