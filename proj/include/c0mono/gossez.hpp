#pragma once

#include <cstddef>
#include <optional>

#include "c0mono/seqspace.hpp"

namespace c0mono {

/// The Gossez operator G: l1 -> l-infinity,
///   G(y)_n = sum_{i>n} y_i - sum_{i<n} y_i.
///
/// The result's tail is -total_sum(y). Throws NonSummable if y has a nonzero tail.
EvConstSeq gossez_apply(const EvConstSeq& y);

/// Solves -G(y) = x for the unique finitely supported y, i.e. evaluates the
/// operator T(x) = {y in l1 : -G(y) = x} on c0.
///
/// Returns std::nullopt when x is outside dom(T). Throws NonSummable if x has
/// a nonzero tail.
std::optional<EvConstSeq> t_solve(const EvConstSeq& x);

/// u^m: -1 at index m, 1 at index m+1.
EvConstSeq unit_u(std::size_t m);
/// v^m = G(u^m): 1 at indices m and m+1.
EvConstSeq unit_v(std::size_t m);

/// Membership in R(T) = {y in l1 : sum_i y_i = 0}.
bool range_member(const EvConstSeq& y);

}  // namespace c0mono
