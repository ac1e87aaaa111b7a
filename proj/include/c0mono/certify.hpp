#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <variant>

#include "c0mono/gossez.hpp"
#include "c0mono/seqspace.hpp"

namespace c0mono {

class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptySample : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An identity the engine checks internally did not hold. Never expected;
/// surfaced by the suite runner as a failed suite.
class CertificateFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point (x, y) of graph(T): finitely supported y with sum_i y_i = 0 and x = -G(y).
class GraphPoint {
public:
    /// (0, 0).
    GraphPoint() = default;

    /// Builds (-G(y), y). Throws InvalidParameter if y is not in R(T).
    static GraphPoint from_y(EvConstSeq y);
    /// Accepts (x, y) only if x = -G(y) exactly and y is in R(T).
    static GraphPoint from_pair(const EvConstSeq& x, EvConstSeq y);

    [[nodiscard]] const EvConstSeq& x() const { return x_; }
    [[nodiscard]] const EvConstSeq& y() const { return y_; }

    friend bool operator==(const GraphPoint&, const GraphPoint&) = default;

private:
    GraphPoint(EvConstSeq x, EvConstSeq y) : x_(std::move(x)), y_(std::move(y)) {}

    EvConstSeq x_;
    EvConstSeq y_;
};

/// A point (x**, x*) of the Gossez closure of T lying outside graph(T):
///   x*  = tau * ytilde            (l1 component)
///   x** = -G(tau * ytilde) + e/tau (l-infinity component, nonzero tail)
class ExtensionPoint {
public:
    [[nodiscard]] const Rational& tau() const { return tau_; }
    [[nodiscard]] const EvConstSeq& ytilde() const { return ytilde_; }
    [[nodiscard]] const EvConstSeq& xstar() const { return xstar_; }
    [[nodiscard]] const EvConstSeq& xstarstar() const { return xstarstar_; }

    friend ExtensionPoint extension_point(const Rational& tau, const EvConstSeq& ytilde);

private:
    ExtensionPoint() = default;

    Rational tau_;
    EvConstSeq ytilde_;
    EvConstSeq xstar_;
    EvConstSeq xstarstar_;
};

/// Verdict: the candidate pair belongs to graph(T).
struct Member {
    friend bool operator==(const Member&, const Member&) = default;
};

/// Verdict: `witness` is a graph point with <x - witness.x, y - witness.y> = product < 0.
struct Violation {
    enum class Kind {
        /// x_{m+1} - x_m != y_{m+1} + y_m at index m; witness is (-lambda v^m, lambda u^m).
        recurrence_break,
        /// Recurrence holds but sum_i y_i != 0; witness is the origin.
        nonzero_sum,
    };

    GraphPoint witness;
    Rational product;
    Kind kind = Kind::recurrence_break;
    /// Index m of the broken recurrence (0 for nonzero_sum).
    std::size_t index = 0;
};

using WitnessVerdict = std::variant<Member, Violation>;

/// Deterministic source of random rational sequences and graph points.
///
/// Draws are reproducible for a given seed across platforms: only the raw
/// mt19937_64 output stream is used. Not thread-safe; give each worker its
/// own sampler with a seed from split_seed().
class GraphSampler {
public:
    explicit GraphSampler(std::uint64_t seed) : engine_(seed) {}

    /// Independent child seed for stream `stream` of `seed` (splitmix64 mixing).
    static std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// p/q with |p| <= bound, 1 <= q <= bound.
    Rational rational(std::int64_t bound);
    /// Nonzero p/q with 1 <= |p| <= bound, 1 <= q <= bound.
    Rational nonzero_rational(std::int64_t bound);
    /// Finitely supported sequence with support inside 1..support_max; about
    /// a quarter of the entries are zero.
    EvConstSeq sequence(std::size_t support_max, std::int64_t coeff_bound);
    /// Like sequence() but never the zero sequence.
    EvConstSeq nonzero_sequence(std::size_t support_max, std::int64_t coeff_bound);

    GraphPoint graph_point(std::size_t support_max, std::int64_t coeff_bound);

private:
    std::mt19937_64 engine_;
};

/// Draws y with support in 1..support_max, overwrites its last nonzero entry
/// so that sum_i y_i = 0, and returns (-G(y), y). Requires support_max >= 2.
GraphPoint random_graph_point(GraphSampler& sampler, std::size_t support_max, std::int64_t coeff_bound);

/// <p.x - q.x, p.y - q.y>. Zero for any two points of graph(T).
Rational monotone_product(const GraphPoint& p, const GraphPoint& q);

/// Throws InvalidParameter unless tau > 0, ytilde is finitely supported and <e, ytilde> > 0.
ExtensionPoint extension_point(const Rational& tau, const EvConstSeq& ytilde);

/// <x** - p.x, x* - p.y>, the Gossez-closure inequality term. Equals <e, ytilde> for every p.
Rational closure_margin(const ExtensionPoint& ep, const GraphPoint& p);

/// <x^tau1 - x^tau2, tau1 ytilde - tau2 ytilde> computed from the sequences.
///
/// Checks it against (tau1 - tau2)(1/tau1 - 1/tau2)<e, ytilde> and that it is
/// negative, throwing CertificateFailure otherwise. Throws InvalidParameter
/// for equal or nonpositive taus or <e, ytilde> <= 0.
Rational distinctness(const Rational& tau1, const Rational& tau2, const EvConstSeq& ytilde);

/// <p.x, x*> + <p.y, x**> - <p.x, p.y>.
Rational fitzpatrick_value(const ExtensionPoint& ep, const GraphPoint& p);

/// <x*, x**> minus the largest fitzpatrick_value over `sample`.
///
/// Throws EmptySample on an empty sample, and CertificateFailure when the
/// per-point values differ.
Rational fitzpatrick_gap(const ExtensionPoint& ep, std::span<const GraphPoint> sample);

/// Constructive maximality check for a candidate (x, y) in c0 x l1.
///
/// Returns Member when (x, y) is in graph(T). Otherwise returns a graph point
/// whose monotone product with (x, y) is negative: exactly -1 when the
/// difference recurrence breaks, -(sum y)^2 when only the sum condition fails.
/// Throws NonSummable on nonzero tails.
WitnessVerdict violation_witness(const EvConstSeq& x, const EvConstSeq& y);

}  // namespace c0mono
