#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>

#include "degsplit/rational.hpp"

namespace degsplit {

/// Where a vertex's pair partner sits relative to its out-neighborhood.
/// partner_in_nplus: the partner is an out-neighbor (its coin is spent: the
/// partner always lands on the opposite side).  partner_in_nminus: the
/// partner is not an out-neighbor, so all mixed pairs are free coins.
/// singleton: the vertex is the odd leftover; same free-coin arithmetic.
enum class partner_rel { partner_in_nplus, partner_in_nminus, singleton };

/// Per-vertex pairing statistics determining the exact bad-probability.
///
///   a  -- pairs fully inside N+(v): each contributes exactly 1 to X_v;
///   b  -- coins contributing Bernoulli(1/2) slots: pairs meeting N+(v) in
///         exactly one vertex (including v's own pair when the partner is an
///         out-neighbor, and a singleton out-neighbor when n is odd).
///
/// The degree identity d+ = 2a + b holds for every profile built from a real
/// (digraph, vertex, pairing) triple.
struct pair_profile {
    int a;
    int b;
    partner_rel rel;
    int dplus;

    pair_profile(int a_, int b_, partner_rel rel_) : a(a_), b(b_), rel(rel_), dplus(2 * a_ + b_) {
        if (a < 0 || b < 0) throw std::invalid_argument("pair_profile: negative pair count");
        if (rel == partner_rel::partner_in_nplus && b < 1)
            throw std::invalid_argument(
                "pair_profile: partner in N+ implies at least one mixed pair");
    }

    /// Number of independent fair coins feeding X_v.
    int free_coins() const { return rel == partner_rel::partner_in_nplus ? b - 1 : b; }
};

/// Bad-vertex threshold: either the relative form t = ceil((1/2 - eps) d+)
/// or an absolute target k (both-sides-at-least-k mode).
class bad_threshold {
  public:
    static bad_threshold relative(rational eps) {
        if (!(eps > 0 && eps < make_rational(1, 2)))
            throw std::invalid_argument("bad_threshold: eps must lie in (0, 1/2)");
        return bad_threshold(std::move(eps));
    }

    static bad_threshold absolute(int k) {
        if (k < 0) throw std::invalid_argument("bad_threshold: negative absolute target");
        return bad_threshold(k);
    }

    bool is_relative() const { return std::holds_alternative<rational>(spec_); }

    const rational& epsilon() const {
        if (!is_relative()) throw std::logic_error("bad_threshold: absolute mode has no epsilon");
        return std::get<rational>(spec_);
    }

    int absolute_target() const {
        if (is_relative()) throw std::logic_error("bad_threshold: relative mode has no k");
        return std::get<int>(spec_);
    }

    /// t for a vertex of out-degree dplus; exact integer arithmetic.
    int threshold_for(int dplus) const {
        if (dplus < 0) throw std::invalid_argument("bad_threshold: negative degree");
        if (!is_relative()) return std::get<int>(spec_);
        const rational& eps = std::get<rational>(spec_);
        const rational scaled = (make_rational(1, 2) - eps) * rational(dplus);
        return static_cast<int>(to_long_checked(ceil_rational(scaled), "bad_threshold"));
    }

  private:
    explicit bad_threshold(rational eps) : spec_(std::move(eps)) {}
    explicit bad_threshold(int k) : spec_(k) {}
    std::variant<rational, int> spec_;
};

/// Pr(Binomial(N, 1/2) <= k) as an exact rational: sum_{i=0..min(k,N)}
/// C(N,i) / 2^N.  Returns 1 when k >= N and 0 when k < 0.
inline rational binomial_tail(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial_tail: negative N");
    if (k < 0) return rational(0);
    if (k >= n) return rational(1);
    big_int sum = 0;
    big_int term = 1;  // C(n, 0)
    for (long i = 0;; ++i) {
        sum += term;
        if (i == k) break;
        // C(n, i+1) = C(n, i) * (n - i) / (i + 1)
        term *= static_cast<unsigned long>(n - i);
        mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(i + 1));
    }
    return make_rational(sum, pow2(static_cast<unsigned long>(n)));
}

/// Pr(X_v < t) for a vertex with the given profile.  Zero when a >= t: the a
/// forced contributions already reach the threshold.  Otherwise the tail of
/// the free-coin binomial:
///
///   partner in N+ : sum_{i=0..t-1-a} C(b-1, i) / 2^(b-1)
///   otherwise     : sum_{i=0..t-1-a} C(b,   i) / 2^b
inline rational prob_too_few(const pair_profile& p, int t) {
    if (p.a >= t) return rational(0);
    return binomial_tail(p.free_coins(), t - 1 - p.a);
}

/// Pr(X_v > d+ - t); zero when a >= t or the summation range is empty.
///
///   partner in N+ : sum_{i=0..t-2-a} C(b-1, i) / 2^(b-1)
///   otherwise     : sum_{i=0..t-1-a} C(b,   i) / 2^b
///
/// The upper index differs by one between the cases: with the partner in
/// N+(v), one out-neighbor is pinned to the opposite side, lowering the
/// maximum reachable X_v by one.
inline rational prob_too_many(const pair_profile& p, int t) {
    if (p.a >= t) return rational(0);
    const int upper =
        p.rel == partner_rel::partner_in_nplus ? t - 2 - p.a : t - 1 - p.a;
    return binomial_tail(p.free_coins(), upper);
}

/// The monotone envelope f(a, b) = sum_{i=0..t-1-a} C(b-1, i) (1/2)^(b-1).
/// Swapping an inside pair for two mixed pairs strictly increases f while
/// 2a + b > 2t, so f(0, d+) dominates every profile's bad probability.
inline rational monotone_f(int a, int b, int t) {
    if (a >= t) throw std::invalid_argument("monotone_f: requires a < t");
    if (b < 1) throw std::invalid_argument("monotone_f: requires b >= 1");
    return binomial_tail(b - 1, t - 1 - a);
}

/// One-sided exponential cap e^{-eps^2 (d+ - 1)} on the bad probability.
/// Valid only when d+ >= (2 + sqrt(2)) / eps; below that the Chernoff step
/// does not apply and no number is returned.
inline std::optional<double> chernoff_cap(int dplus, double eps) {
    if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("chernoff_cap: eps out of range");
    if (static_cast<double>(dplus) < (2.0 + std::sqrt(2.0)) / eps) return std::nullopt;
    return std::exp(-eps * eps * (static_cast<double>(dplus) - 1.0));
}

/// Least positive i with eps^2 (2^{i-1} - 1) >= (2i + 2) ln 2, i.e. with
/// e^{-eps^2 (2^{i-1} - 1)} <= 2^{-2i-2}.  Compared in log space.  Once the
/// inequality holds, the left side shrinks by at least e^{-eps^2 2^{i-1}} <=
/// 1/4 per step while the right side shrinks by exactly 1/4, so it holds for
/// every larger i; the next index is still verified explicitly.
inline int dyadic_bad_sum_index(double eps) {
    if (!(eps > 0.0 && eps < 0.5))
        throw std::invalid_argument("dyadic_bad_sum_index: eps out of range");
    const double ln2 = std::log(2.0);
    auto holds = [&](int i) {
        return eps * eps * (std::ldexp(1.0, i - 1) - 1.0) >= (2.0 * i + 2.0) * ln2;
    };
    for (int i = 1; i < 64; ++i) {
        if (holds(i)) {
            if (!holds(i + 1))
                throw std::logic_error("dyadic_bad_sum_index: monotone step failed");
            return i;
        }
    }
    throw std::overflow_error("dyadic_bad_sum_index: index exceeds 63 bits");
}

/// delta_0(eps) = max{ 2^{i0 - 1}, ceil((2 + sqrt(2)) / eps) }: the minimum
/// out-degree above which the dyadic bound makes E(bad count) < 1 and the
/// Chernoff cap is valid for every vertex.
inline std::uint64_t pairing_bisection_delta0(double eps) {
    const int i0 = dyadic_bad_sum_index(eps);
    const std::uint64_t dyadic = std::uint64_t{1} << (i0 - 1);
    const auto chernoff_gate =
        static_cast<std::uint64_t>(std::ceil((2.0 + std::sqrt(2.0)) / eps));
    return std::max(dyadic, chernoff_gate);
}

}  // namespace degsplit
