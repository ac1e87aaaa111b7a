#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "c0mono/rational.hpp"

namespace c0mono {

/// Raised when a series over two non-summable sequences is requested.
class NonSummable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Eventually-constant rational sequence, indexed from 1.
///
/// Entry i is prefix[i-1] for i <= prefix.size() and tail otherwise. The
/// representation is canonical: the last prefix entry never equals the tail,
/// so two sequences are equal iff their (prefix, tail) pairs are equal.
///
/// A zero tail means finite support, which places the sequence in both c0 and
/// l1. A nonzero tail places it in l-infinity outside c0. Values are
/// immutable once built.
class EvConstSeq {
public:
    /// The zero sequence.
    EvConstSeq() = default;
    EvConstSeq(std::vector<Rational> prefix, Rational tail);

    static EvConstSeq zero() { return {}; }
    /// 1 at index k, 0 elsewhere. k >= 1.
    static EvConstSeq unit(std::size_t k);
    /// Every entry equal to c.
    static EvConstSeq constant(Rational c);

    [[nodiscard]] std::span<const Rational> prefix() const { return prefix_; }
    [[nodiscard]] const Rational& tail() const { return tail_; }
    [[nodiscard]] std::size_t prefix_length() const { return prefix_.size(); }

    /// Entry at 1-based index i.
    [[nodiscard]] const Rational& operator[](std::size_t i) const;

    [[nodiscard]] bool finitely_supported() const { return tail_.is_zero(); }
    [[nodiscard]] bool is_zero() const { return prefix_.empty() && tail_.is_zero(); }

    friend bool operator==(const EvConstSeq&, const EvConstSeq&) = default;

private:
    std::vector<Rational> prefix_;
    Rational tail_;
};

/// Same as the constructor; named form for call sites that build from raw entries.
EvConstSeq canonicalize(std::vector<Rational> prefix, Rational tail);

EvConstSeq add(const EvConstSeq& a, const EvConstSeq& b);
EvConstSeq subtract(const EvConstSeq& a, const EvConstSeq& b);
EvConstSeq scale(const Rational& c, const EvConstSeq& a);

inline EvConstSeq operator+(const EvConstSeq& a, const EvConstSeq& b) { return add(a, b); }
inline EvConstSeq operator-(const EvConstSeq& a, const EvConstSeq& b) { return subtract(a, b); }
inline EvConstSeq operator-(const EvConstSeq& a) { return scale(Rational(-1), a); }
inline EvConstSeq operator*(const Rational& c, const EvConstSeq& a) { return scale(c, a); }

/// Duality pairing sum_i x_i y_i between an l-infinity element and an l1 element.
///
/// At least one argument must be finitely supported; the sum then runs over
/// its support. Throws NonSummable when both tails are nonzero.
Rational pairing(const EvConstSeq& x, const EvConstSeq& y);

Rational sup_norm(const EvConstSeq& a);
/// Throws NonSummable on a nonzero tail.
Rational l1_norm(const EvConstSeq& a);
/// sum_i a_i. Throws NonSummable on a nonzero tail.
Rational total_sum(const EvConstSeq& a);

/// Last index carrying a nonzero entry, or 0 for the zero sequence. Requires a zero tail.
std::size_t support_end(const EvConstSeq& a);

std::string to_string(const EvConstSeq& a);

}  // namespace c0mono
