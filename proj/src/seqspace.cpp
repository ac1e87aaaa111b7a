#include "c0mono/seqspace.hpp"

#include <algorithm>
#include <sstream>

namespace c0mono {

EvConstSeq::EvConstSeq(std::vector<Rational> prefix, Rational tail) : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    while (!prefix_.empty() && prefix_.back() == tail_) {
        prefix_.pop_back();
    }
}

EvConstSeq EvConstSeq::unit(std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("sequence indices start at 1");
    }
    std::vector<Rational> prefix(k, Rational(0));
    prefix.back() = Rational(1);
    return {std::move(prefix), Rational(0)};
}

EvConstSeq EvConstSeq::constant(Rational c) { return {{}, std::move(c)}; }

const Rational& EvConstSeq::operator[](std::size_t i) const {
    if (i == 0) {
        throw std::out_of_range("sequence indices start at 1");
    }
    return i <= prefix_.size() ? prefix_[i - 1] : tail_;
}

EvConstSeq canonicalize(std::vector<Rational> prefix, Rational tail) { return {std::move(prefix), std::move(tail)}; }

namespace {

template <typename Op>
EvConstSeq zip_with(const EvConstSeq& a, const EvConstSeq& b, Op op) {
    const std::size_t n = std::max(a.prefix_length(), b.prefix_length());
    std::vector<Rational> prefix;
    prefix.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        prefix.push_back(op(a[i], b[i]));
    }
    return {std::move(prefix), op(a.tail(), b.tail())};
}

}  // namespace

EvConstSeq add(const EvConstSeq& a, const EvConstSeq& b) {
    return zip_with(a, b, [](const Rational& l, const Rational& r) { return l + r; });
}

EvConstSeq subtract(const EvConstSeq& a, const EvConstSeq& b) {
    return zip_with(a, b, [](const Rational& l, const Rational& r) { return l - r; });
}

EvConstSeq scale(const Rational& c, const EvConstSeq& a) {
    if (c.is_zero()) {
        return EvConstSeq::zero();
    }
    std::vector<Rational> prefix;
    prefix.reserve(a.prefix_length());
    for (const auto& v : a.prefix()) {
        prefix.push_back(c * v);
    }
    return {std::move(prefix), c * a.tail()};
}

Rational pairing(const EvConstSeq& x, const EvConstSeq& y) {
    if (!x.finitely_supported() && !y.finitely_supported()) {
        throw NonSummable("pairing of two sequences with nonzero tails");
    }
    // Sum over the support of whichever side is finitely supported.
    const std::size_t n = y.finitely_supported() ? y.prefix_length() : x.prefix_length();
    Rational sum;
    for (std::size_t i = 1; i <= n; ++i) {
        sum += x[i] * y[i];
    }
    return sum;
}

Rational sup_norm(const EvConstSeq& a) {
    Rational best = a.tail().abs();
    for (const auto& v : a.prefix()) {
        best = std::max(best, v.abs());
    }
    return best;
}

Rational l1_norm(const EvConstSeq& a) {
    if (!a.finitely_supported()) {
        throw NonSummable("l1 norm of a sequence with nonzero tail");
    }
    Rational sum;
    for (const auto& v : a.prefix()) {
        sum += v.abs();
    }
    return sum;
}

Rational total_sum(const EvConstSeq& a) {
    if (!a.finitely_supported()) {
        throw NonSummable("sum of a sequence with nonzero tail");
    }
    Rational sum;
    for (const auto& v : a.prefix()) {
        sum += v;
    }
    return sum;
}

std::size_t support_end(const EvConstSeq& a) {
    if (!a.finitely_supported()) {
        throw NonSummable("support of a sequence with nonzero tail is infinite");
    }
    return a.prefix_length();
}

std::string to_string(const EvConstSeq& a) {
    std::ostringstream os;
    os << '(';
    for (const auto& v : a.prefix()) {
        os << v << ", ";
    }
    os << a.tail() << ", ...)";
    return os.str();
}

}  // namespace c0mono
