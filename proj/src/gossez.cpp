#include "c0mono/gossez.hpp"

#include <stdexcept>
#include <vector>

namespace c0mono {

EvConstSeq gossez_apply(const EvConstSeq& y) {
    if (!y.finitely_supported()) {
        throw NonSummable("G is only applied to finitely supported sequences");
    }
    const auto entries = y.prefix();
    const Rational total = total_sum(y);

    std::vector<Rational> out;
    out.reserve(entries.size());
    Rational before;  // sum_{i<n} y_i
    for (const auto& yn : entries) {
        const Rational after = total - before - yn;  // sum_{i>n} y_i
        out.push_back(after - before);
        before += yn;
    }
    return {std::move(out), -total};
}

std::optional<EvConstSeq> t_solve(const EvConstSeq& x) {
    if (!x.finitely_supported()) {
        throw NonSummable("T is only solved for finitely supported sequences");
    }
    const std::size_t n = x.prefix_length();

    // suffix[i-1] holds S_i = sum_{k>=i} y_k. Beyond the support of x every
    // S_i vanishes, so the backward recurrence S_i = -x_i - S_{i+1} starts
    // from S_{n+1} = 0.
    std::vector<Rational> suffix(n + 1);
    for (std::size_t i = n; i >= 1; --i) {
        suffix[i - 1] = -x[i] - suffix[i];
    }
    if (!suffix[0].is_zero()) {
        return std::nullopt;
    }

    std::vector<Rational> y;
    y.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        y.push_back(suffix[i - 1] - suffix[i]);
    }
    EvConstSeq solution(std::move(y), Rational(0));

    if (-gossez_apply(solution) != x) {
        throw std::logic_error("t_solve: backward recurrence disagrees with G");
    }
    return solution;
}

EvConstSeq unit_u(std::size_t m) {
    if (m == 0) {
        throw std::invalid_argument("unit_u: m starts at 1");
    }
    std::vector<Rational> prefix(m + 1, Rational(0));
    prefix[m - 1] = Rational(-1);
    prefix[m] = Rational(1);
    return {std::move(prefix), Rational(0)};
}

EvConstSeq unit_v(std::size_t m) {
    if (m == 0) {
        throw std::invalid_argument("unit_v: m starts at 1");
    }
    std::vector<Rational> prefix(m + 1, Rational(0));
    prefix[m - 1] = Rational(1);
    prefix[m] = Rational(1);
    return {std::move(prefix), Rational(0)};
}

bool range_member(const EvConstSeq& y) { return total_sum(y).is_zero(); }

}  // namespace c0mono
