#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hmix/eisenstein.hpp"
#include "hmix/multigraph.hpp"

namespace hmix {

/// wt(C) = ω^t with t ≡ f − b (mod 6) along the chosen direction.
struct CycleWeight {
    UnitExponent t;

    int nu() const { return t.nu(); }
    CycleWeight conj() const { return {t.conj()}; }
    EisensteinInt value() const { return EisensteinInt::unit(t); }
    auto operator<=>(const CycleWeight&) const = default;
};

/// Fundamental-cycle weights in canonical non-tree-edge order.
using EssentialVector = std::vector<CycleWeight>;

EssentialVector conj(const EssentialVector& v);
/// Equal, or equal after conjugating every entry.
bool conjugate_equivalent(const EssentialVector& x, const EssentialVector& y);
/// "[w^0, w^3]"
std::string to_string(const EssentialVector& v);

/// Product of the per-edge factors 1, ω, ω̄. Throws Error if the walk does not chain.
EisensteinInt walk_weight(const MixedMultigraph& m, const std::vector<EdgeRef>& walk);

CycleWeight cycle_weight(const MixedMultigraph& m, const CycleDescriptor& c);

EssentialVector essential_vector(const MixedMultigraph& m, const SpanningTreeInfo& tree);
/// Uses the canonical tree of underlying(m).
EssentialVector essential_vector(const MixedMultigraph& m);

/// Diagonal D = diag(ω^{t_v}); vertex v lies in the partition class V_{ω^{t_v}}.
class GaugeAssignment {
public:
    GaugeAssignment() = default;
    explicit GaugeAssignment(int n) : t_(static_cast<std::size_t>(n)) {}
    explicit GaugeAssignment(std::vector<UnitExponent> t) : t_(std::move(t)) {}

    static GaugeAssignment identity(int n) { return GaugeAssignment(n); }

    int order() const { return static_cast<int>(t_.size()); }
    UnitExponent operator[](Vertex v) const { return t_.at(static_cast<std::size_t>(v)); }
    UnitExponent& operator[](Vertex v) { return t_.at(static_cast<std::size_t>(v)); }
    const std::vector<UnitExponent>& exponents() const { return t_; }

    /// Members of V_{ω^j}.
    std::vector<Vertex> partition_class(UnitExponent j) const;

    friend bool operator==(const GaugeAssignment&, const GaugeAssignment&) = default;

private:
    std::vector<UnitExponent> t_;
};

/// "0:0,1:1,2:5". Unlisted vertices get exponent 0. Throws ParseError.
GaugeAssignment parse_gauge(std::string_view text, int n);
std::string to_string(const GaugeAssignment& g);

/// Pair state after multiplying every label by ω^d (d = t_hi − t_lo), or
/// nullopt if some label leaves {1, ω, ω̄}.
std::optional<PairState> rotate_pair(PairState st, UnitExponent d);

struct AdmissibilityViolation {
    PairKey pair;
    /// Partition condition that fails: 1 (arc from V_j to V_{ωj}), 2 (edge
    /// between V_j and V_{ω³j}), 3 (non-arc between V_j and V_{ω⁴j}).
    int condition = 0;
    std::string message;
};

std::optional<AdmissibilityViolation> admissibility_violation(const MixedMultigraph& m, const GaugeAssignment& g);
bool is_admissible(const MixedMultigraph& m, const GaugeAssignment& g);

/// The graph whose matrix is D⁻¹ N(m) D. Throws InadmissibleGaugeError.
MixedMultigraph apply_gauge(const MixedMultigraph& m, const GaugeAssignment& g);

/// The edge of apply_gauge(m, g) that `e` becomes: its label is rotated and
/// it keeps its rank among the parallel copies sharing its label.
EdgeRef transport(const MixedMultigraph& m, const GaugeAssignment& g, const EdgeRef& e);
CycleDescriptor transport(const MixedMultigraph& m, const GaugeAssignment& g, const CycleDescriptor& c);

struct EquivalenceWitness {
    bool equivalent = false;
    GaugeAssignment gauge;
    bool converse_applied = false;
    /// Why the graphs are not equivalent, empty otherwise.
    std::string reason;
};

/// Decides whether m2 is a three-way switching of m1 or of converse(m1), and
/// builds the gauge by propagating along the canonical tree of the shared
/// underlying graph. Throws DisconnectedError.
EquivalenceWitness decide_switching_equivalence(const MixedMultigraph& m1, const MixedMultigraph& m2);

bool verify_witness(const MixedMultigraph& m1, const MixedMultigraph& m2, const EquivalenceWitness& w);

/// Every cycle has weight 1. Throws DisconnectedError.
bool is_positive(const MixedMultigraph& m);

/// Complete invariant of the gauge orbit of m among graphs over the same
/// underlying multigraph: per-pair label pattern plus the pair-level phase
/// sum around each fundamental cycle of the simple underlying graph.
struct SwitchingSignature {
    /// (count at the lower exponent, count at the upper exponent) of each
    /// pair's label window {ω^p, ω^{p+1}}, in pair order.
    std::vector<std::pair<int, int>> shapes;
    std::vector<UnitExponent> phases;
    auto operator<=>(const SwitchingSignature&) const = default;
};

SwitchingSignature switching_signature(const MixedMultigraph& m);
/// Smaller of the signatures of m and converse(m): equal keys ⇔ switching equivalent.
SwitchingSignature switching_class_key(const MixedMultigraph& m);

} // namespace hmix
