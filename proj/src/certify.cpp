#include "c0mono/certify.hpp"

#include <limits>
#include <vector>

namespace c0mono {

// ---------------------------------------------------------------------------
// GraphPoint

GraphPoint GraphPoint::from_y(EvConstSeq y) {
    if (!y.finitely_supported() || !range_member(y)) {
        throw InvalidParameter("graph point needs a finitely supported y with zero sum");
    }
    EvConstSeq x = -gossez_apply(y);
    return {std::move(x), std::move(y)};
}

GraphPoint GraphPoint::from_pair(const EvConstSeq& x, EvConstSeq y) {
    GraphPoint p = from_y(std::move(y));
    if (p.x_ != x) {
        throw InvalidParameter("x != -G(y)");
    }
    return p;
}

// ---------------------------------------------------------------------------
// GraphSampler

std::uint64_t GraphSampler::split_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::int64_t GraphSampler::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw std::invalid_argument("uniform: empty range");
    }
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) {  // full 64-bit range
        return static_cast<std::int64_t>(engine_());
    }
    // Rejection sampling keeps the draw unbiased and independent of the
    // standard library's distribution implementation.
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % span);
    std::uint64_t r = engine_();
    while (r >= limit) {
        r = engine_();
    }
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % span);
}

Rational GraphSampler::rational(std::int64_t bound) {
    const auto p = uniform(-bound, bound);
    const auto q = uniform(1, bound);
    return {p, q};
}

Rational GraphSampler::nonzero_rational(std::int64_t bound) {
    auto p = uniform(1, bound);
    if (uniform(0, 1) == 0) {
        p = -p;
    }
    const auto q = uniform(1, bound);
    return {p, q};
}

EvConstSeq GraphSampler::sequence(std::size_t support_max, std::int64_t coeff_bound) {
    const auto len = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(support_max)));
    std::vector<Rational> prefix;
    prefix.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        prefix.push_back(uniform(0, 3) == 0 ? Rational(0) : nonzero_rational(coeff_bound));
    }
    return {std::move(prefix), Rational(0)};
}

EvConstSeq GraphSampler::nonzero_sequence(std::size_t support_max, std::int64_t coeff_bound) {
    EvConstSeq s = sequence(support_max, coeff_bound);
    while (s.is_zero()) {
        s = sequence(support_max, coeff_bound);
    }
    return s;
}

GraphPoint GraphSampler::graph_point(std::size_t support_max, std::int64_t coeff_bound) {
    if (support_max < 2) {
        throw InvalidParameter("support_max must be at least 2");
    }
    const auto len = static_cast<std::size_t>(uniform(2, static_cast<std::int64_t>(support_max)));
    std::vector<Rational> y;
    y.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        y.push_back(uniform(0, 3) == 0 ? Rational(0) : nonzero_rational(coeff_bound));
    }
    std::size_t last = len;
    while (last > 0 && y[last - 1].is_zero()) {
        --last;
    }
    if (last > 0) {
        Rational others;
        for (std::size_t i = 0; i + 1 < last; ++i) {
            others += y[i];
        }
        y[last - 1] = -others;
    }
    return GraphPoint::from_y(EvConstSeq(std::move(y), Rational(0)));
}

GraphPoint random_graph_point(GraphSampler& sampler, std::size_t support_max, std::int64_t coeff_bound) {
    return sampler.graph_point(support_max, coeff_bound);
}

// ---------------------------------------------------------------------------
// Certificates

Rational monotone_product(const GraphPoint& p, const GraphPoint& q) { return pairing(p.x() - q.x(), p.y() - q.y()); }

ExtensionPoint extension_point(const Rational& tau, const EvConstSeq& ytilde) {
    if (tau.sign() <= 0) {
        throw InvalidParameter("tau must be positive, got " + tau.str());
    }
    if (!ytilde.finitely_supported()) {
        throw InvalidParameter("ytilde must be finitely supported");
    }
    const Rational mass = pairing(EvConstSeq::constant(Rational(1)), ytilde);
    if (mass.sign() <= 0) {
        throw InvalidParameter("<e, ytilde> must be positive, got " + mass.str());
    }
    ExtensionPoint ep;
    ep.tau_ = tau;
    ep.ytilde_ = ytilde;
    ep.xstar_ = tau * ytilde;
    ep.xstarstar_ = -gossez_apply(ep.xstar_) + EvConstSeq::constant(tau.inverse());
    return ep;
}

Rational closure_margin(const ExtensionPoint& ep, const GraphPoint& p) {
    return pairing(ep.xstarstar() - p.x(), ep.xstar() - p.y());
}

Rational distinctness(const Rational& tau1, const Rational& tau2, const EvConstSeq& ytilde) {
    if (tau1 == tau2) {
        throw InvalidParameter("distinctness needs two different taus");
    }
    const ExtensionPoint a = extension_point(tau1, ytilde);
    const ExtensionPoint b = extension_point(tau2, ytilde);
    const Rational product = pairing(a.xstarstar() - b.xstarstar(), a.xstar() - b.xstar());

    const Rational mass = pairing(EvConstSeq::constant(Rational(1)), ytilde);
    const Rational closed_form = (tau1 - tau2) * (tau1.inverse() - tau2.inverse()) * mass;
    if (product != closed_form) {
        throw CertificateFailure("distinctness product " + product.str() + " != closed form " + closed_form.str());
    }
    if (product.sign() >= 0) {
        throw CertificateFailure("distinctness product " + product.str() + " is not negative");
    }
    return product;
}

Rational fitzpatrick_value(const ExtensionPoint& ep, const GraphPoint& p) {
    return pairing(p.x(), ep.xstar()) + pairing(ep.xstarstar(), p.y()) - pairing(p.x(), p.y());
}

Rational fitzpatrick_gap(const ExtensionPoint& ep, std::span<const GraphPoint> sample) {
    if (sample.empty()) {
        throw EmptySample("fitzpatrick_gap needs at least one graph point");
    }
    const Rational first = fitzpatrick_value(ep, sample.front());
    Rational sup = first;
    for (const auto& p : sample.subspan(1)) {
        const Rational v = fitzpatrick_value(ep, p);
        if (v != first) {
            throw CertificateFailure("fitzpatrick value not constant: " + first.str() + " vs " + v.str());
        }
        sup = std::max(sup, v);
    }
    return pairing(ep.xstarstar(), ep.xstar()) - sup;
}

WitnessVerdict violation_witness(const EvConstSeq& x, const EvConstSeq& y) {
    const std::size_t n = std::max(support_end(x), support_end(y));
    const Rational xy = pairing(x, y);

    for (std::size_t m = 1; m <= n + 1; ++m) {
        if (x[m + 1] - x[m] == y[m + 1] + y[m]) {
            continue;
        }
        // <x + lambda v^m, y - lambda u^m> = <x,y> + lambda d since <v^m, u^m> = 0;
        // lambda is picked so that this equals -1.
        const Rational d = pairing(unit_v(m), y) - pairing(x, unit_u(m));
        const Rational lambda = -(xy + Rational(1)) / d;
        GraphPoint witness = GraphPoint::from_y(lambda * unit_u(m));
        Rational product = pairing(x - witness.x(), y - witness.y());
        if (product != Rational(-1)) {
            throw CertificateFailure("witness product " + product.str() + " != -1 at m = " + std::to_string(m));
        }
        return Violation{std::move(witness), std::move(product), Violation::Kind::recurrence_break, m};
    }

    const Rational sum = total_sum(y);
    if (!sum.is_zero()) {
        // Recurrence holds everywhere, so x = -G(y) - sum * e and <x, y> = -sum^2.
        if (xy != -(sum * sum)) {
            throw CertificateFailure("origin witness product " + xy.str() + " != -(sum y)^2");
        }
        return Violation{GraphPoint{}, xy, Violation::Kind::nonzero_sum, 0};
    }

    if (-gossez_apply(y) != x) {
        throw CertificateFailure("recurrence and zero sum hold but x != -G(y)");
    }
    return Member{};
}

}  // namespace c0mono
