#pragma once

#include <complex>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace hmix {

/// Arbitrary-precision integer used for all exact quantities.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Exponent t of a sixth root of unity ω^t, kept reduced to 0..5.
class UnitExponent {
public:
    constexpr UnitExponent() = default;
    constexpr explicit UnitExponent(long long t) : t_(static_cast<int>(((t % 6) + 6) % 6)) {}

    constexpr int value() const { return t_; }

    constexpr UnitExponent operator+(UnitExponent o) const { return UnitExponent(t_ + o.t_); }
    constexpr UnitExponent operator-(UnitExponent o) const { return UnitExponent(t_ - o.t_); }
    constexpr UnitExponent operator-() const { return UnitExponent(-t_); }
    constexpr UnitExponent& operator+=(UnitExponent o) { return *this = *this + o; }

    /// ω^t conjugated is ω^{-t}.
    constexpr UnitExponent conj() const { return -*this; }

    constexpr bool is_real() const { return t_ == 0 || t_ == 3; }

    /// ν = ω^t + ω^{-t} = 2cos(tπ/3).
    constexpr int nu() const
    {
        constexpr int table[6] = {2, 1, -1, -2, -1, 1};
        return table[t_];
    }

    constexpr auto operator<=>(const UnitExponent&) const = default;

private:
    int t_ = 0;
};

/// An element a + bω of Z[ω], ω = 1/2 + (√3/2)i, reduced with ω² = ω − 1.
///
/// `Int` is any signed integer type; the library uses BigInt.
template <typename Int>
class Eisenstein {
public:
    Eisenstein() : a_(0), b_(0) {}
    template <std::integral I>
    Eisenstein(I a) : a_(a), b_(0) {}
    Eisenstein(Int a) : a_(std::move(a)), b_(0) {}
    Eisenstein(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {}

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    static Eisenstein unit(UnitExponent t)
    {
        switch (t.value()) {
        case 0: return {Int(1), Int(0)};
        case 1: return {Int(0), Int(1)};
        case 2: return {Int(-1), Int(1)};
        case 3: return {Int(-1), Int(0)};
        case 4: return {Int(0), Int(-1)};
        default: return {Int(1), Int(-1)};
        }
    }

    bool is_real() const { return b_ == 0; }

    /// ω̄ = 1 − ω, so (a, b) ↦ (a + b, −b).
    Eisenstein conj() const { return {a_ + b_, -b_}; }

    /// x·conj(x) = a² + ab + b².
    Int norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

    Eisenstein operator-() const { return {-a_, -b_}; }

    Eisenstein& operator+=(const Eisenstein& o)
    {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    Eisenstein& operator-=(const Eisenstein& o)
    {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    Eisenstein& operator*=(const Eisenstein& o) { return *this = *this * o; }

    friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
    friend Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }
    friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y)
    {
        Int bb = x.b_ * y.b_;
        return {x.a_ * y.a_ - bb, x.a_ * y.b_ + y.a_ * x.b_ + bb};
    }

    friend bool operator==(const Eisenstein& x, const Eisenstein& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Eisenstein& x)
    {
        os << x.a_;
        if (x.b_ != 0) {
            if (x.b_ > 0)
                os << '+';
            os << x.b_ << 'w';
        }
        return os;
    }

private:
    Int a_;
    Int b_;
};

using EisensteinInt = Eisenstein<BigInt>;

template <typename Int>
Eisenstein<Int> conj(const Eisenstein<Int>& x)
{
    return x.conj();
}

inline EisensteinInt unit_pow(long long t) { return EisensteinInt::unit(UnitExponent(t)); }

template <typename Int>
std::complex<double> to_complex(const Eisenstein<Int>& x)
{
    const double a = static_cast<double>(x.a());
    const double b = static_cast<double>(x.b());
    return {a + 0.5 * b, b * 0.86602540378443864676};
}

/// Renders as "a", "a+bw" or "a-bw".
std::string to_string(const EisensteinInt& x);

/// Parses the grammar produced by to_string. Throws ParseError.
EisensteinInt parse_eisenstein(std::string_view text);

} // namespace hmix

namespace Eigen {

template <typename Int>
struct NumTraits<hmix::Eisenstein<Int>> : GenericNumTraits<hmix::Eisenstein<Int>> {
    using Real = hmix::Eisenstein<Int>;
    using NonInteger = hmix::Eisenstein<Int>;
    using Literal = hmix::Eisenstein<Int>;
    using Nested = hmix::Eisenstein<Int>;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 32
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    static inline Real highest() { return Real(0); }
    static inline Real lowest() { return Real(0); }
};

} // namespace Eigen
