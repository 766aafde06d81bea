#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hmix/multigraph.hpp"
#include "hmix/spectral.hpp"
#include "hmix/switching.hpp"

namespace hmix {

struct CensusLimits {
    int max_multiplicity = 8;
    std::size_t max_states = 10'000'000;
    /// Worker threads for per-graph invariants; output does not depend on it.
    unsigned threads = 1;
};

/// ℳ(G): every digon-free orientation pattern of the undirected multigraph G,
/// pairs varying in key order with the last pair fastest; each pair runs
/// through und=μ, then (und=d, fwd=μ−d) for d = μ−1..0, then the same with bwd.
/// Throws Error for directed input, CapacityError beyond the limits.
std::vector<MixedMultigraph> enumerate_mixed(const MixedMultigraph& g, CensusLimits limits = {});

/// Π over pairs of (2μ + 1), without enumerating.
BigInt count_mixed(const MixedMultigraph& g);

/// m − n + 1. Throws DisconnectedError.
long long cyclomatic(const MixedMultigraph& g);

/// 6^k / 2 + 2^{k−1}. Throws Error for k < 1.
BigInt class_bound(long long k);

/// Partition of `members` (indices into the input) with its representative,
/// the least member by canonical serialization.
struct GraphClass {
    std::vector<std::size_t> members;
    std::size_t representative = 0;
};

/// Classes of switching equivalence, ordered by representative text.
std::vector<GraphClass> switching_classes(const std::vector<MixedMultigraph>& family, unsigned threads = 1);
/// Classes of equal characteristic polynomial, ordered by polynomial.
std::vector<GraphClass> cospectral_classes(const std::vector<MixedMultigraph>& family, unsigned threads = 1);

struct SwitchingClassSummary {
    std::string representative;
    std::string essential_vector;
    std::size_t size = 0;
    CharPoly charpoly;
};

struct CospectralClassSummary {
    CharPoly charpoly;
    std::size_t members = 0;
};

struct CensusReport {
    std::string underlying;
    int n = 0;
    long long m = 0;
    long long k = 0;
    std::size_t total = 0;
    std::size_t n_s = 0;
    std::size_t n_c = 0;
    /// Absent when k = 0.
    std::optional<BigInt> bound;
    /// Every switching class lies inside one cospectral class.
    bool refines = true;
    /// n_c ≤ n_s ≤ bound; true when k = 0.
    bool bound_holds = true;
    std::vector<SwitchingClassSummary> switching_classes;
    std::vector<CospectralClassSummary> cospectral_classes;

    bool ok() const { return refines && bound_holds; }
};

/// Throws DisconnectedError, CapacityError, Error for directed input.
CensusReport census_report(const MixedMultigraph& g, CensusLimits limits = {});

/// JSON with a fixed key order.
std::string to_json(const CensusReport& r, int indent = 2);

} // namespace hmix
