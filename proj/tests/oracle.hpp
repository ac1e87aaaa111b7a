#pragma once

// Test-only reference computations. Everything here works on dense entry
// vectors read through operator[] and deliberately avoids the library's
// operator code paths (running sums, backward recurrence, canonical zipping).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "c0mono/rational.hpp"
#include "c0mono/seqspace.hpp"

namespace oracle {

using c0mono::EvConstSeq;
using c0mono::Rational;

inline std::vector<Rational> dense(const EvConstSeq& s, std::size_t horizon) {
    std::vector<Rational> out;
    out.reserve(horizon);
    for (std::size_t i = 1; i <= horizon; ++i) {
        out.push_back(s[i]);
    }
    return out;
}

/// G(y)_n straight from the defining double sum.
inline Rational gossez_entry(const std::vector<Rational>& y, std::size_t n) {
    Rational after;
    Rational before;
    for (std::size_t i = 1; i <= y.size(); ++i) {
        if (i > n) {
            after += y[i - 1];
        } else if (i < n) {
            before += y[i - 1];
        }
    }
    return after - before;
}

/// Entries 1..horizon of G(y) for finitely supported y.
inline std::vector<Rational> gossez_dense(const EvConstSeq& y, std::size_t horizon) {
    const auto yd = dense(y, y.prefix_length());
    std::vector<Rational> out;
    for (std::size_t n = 1; n <= horizon; ++n) {
        out.push_back(gossez_entry(yd, n));
    }
    return out;
}

/// sum_{i<=horizon} x_i y_i.
inline Rational pairing(const EvConstSeq& x, const EvConstSeq& y, std::size_t horizon) {
    Rational s;
    for (std::size_t i = 1; i <= horizon; ++i) {
        s += x[i] * y[i];
    }
    return s;
}

/// Solves -G(y) = x by Gaussian elimination over the rationals.
///
/// Unknowns y_1..y_n (n = support of x). Equations: -G(y)_i = x_i for
/// i = 1..n, plus the tail equation sum_i y_i = 0 (entry n+1 onward of -G(y)
/// equals sum_i y_i and must vanish). Returns nullopt if inconsistent.
inline std::optional<std::vector<Rational>> solve_t(const EvConstSeq& x) {
    const std::size_t n = x.prefix_length();
    const std::size_t rows = n + 1;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(n + 1));
    for (std::size_t i = 1; i <= n; ++i) {
        // -G(y)_i = sum_{k<i} y_k - sum_{k>i} y_k
        for (std::size_t k = 1; k <= n; ++k) {
            a[i - 1][k - 1] = k < i ? Rational(1) : (k > i ? Rational(-1) : Rational(0));
        }
        a[i - 1][n] = x[i];
    }
    for (std::size_t k = 1; k <= n; ++k) {
        a[n][k - 1] = Rational(1);
    }

    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < n && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[r]);
        const Rational inv = a[r][c].inverse();
        for (auto& v : a[r]) {
            v *= inv;
        }
        for (std::size_t q = 0; q < rows; ++q) {
            if (q != r && !a[q][c].is_zero()) {
                const Rational f = a[q][c];
                for (std::size_t j = 0; j <= n; ++j) {
                    a[q][j] -= f * a[r][j];
                }
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t q = r; q < rows; ++q) {
        if (!a[q][n].is_zero()) {
            return std::nullopt;
        }
    }
    std::vector<Rational> y(n);
    for (std::size_t q = 0; q < r; ++q) {
        y[pivot_col[q]] = a[q][n];
    }
    return y;
}

}  // namespace oracle
