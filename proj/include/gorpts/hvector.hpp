#ifndef GORPTS_HVECTOR_HPP
#define GORPTS_HVECTOR_HPP

#include "gorpts/errors.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gorpts {

using HVector = std::vector<long long>;

inline long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact at every step
    }
    return r;
}

/// The unique expansion n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)
/// with n_i > n_{i-1} > ... > n_j >= j >= 1, found greedily. Returned
/// largest part first.
inline std::vector<long long> binomial_expansion(long long n, int i) {
    if (n < 1 || i < 1)
        throw std::invalid_argument("binomial_expansion: need n >= 1 and i >= 1");
    std::vector<long long> parts;
    while (n > 0 && i >= 1) {
        long long m = i;
        while (binom(m + 1, i) <= n) ++m;
        parts.push_back(m);
        n -= binom(m, i);
        --i;
    }
    if (n != 0)
        throw internal_error("binomial_expansion: greedy descent left a remainder");
    return parts;
}

/// Macaulay growth bound n^<i>: each C(n_k, k) in the expansion becomes
/// C(n_k + 1, k + 1). Zero when n = 0.
inline long long macaulay_bound(long long n, int i) {
    if (i < 1) throw std::invalid_argument("macaulay_bound: need i >= 1");
    if (n == 0) return 0;
    auto parts = binomial_expansion(n, i);
    long long bound = 0;
    for (std::size_t idx = 0; idx < parts.size(); ++idx)
        bound += binom(parts[idx] + 1, (i - static_cast<long long>(idx)) + 1);
    return bound;
}

/// Macaulay's criterion: nonnegative, starts at 1, consecutive growth at
/// most h_i^<i> from index 1 on (the step from h_0 to h_1 is free).
inline bool is_o_sequence(const std::vector<long long>& seq) {
    if (seq.empty()) return true;
    if (seq[0] != 1) return false;
    for (long long x : seq)
        if (x < 0) return false;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i)
        if (seq[i + 1] > macaulay_bound(seq[i], static_cast<int>(i))) return false;
    return true;
}

/// Symmetric, and the first difference up to the midpoint is an
/// O-sequence.
inline bool is_si_sequence(const HVector& h) {
    if (h.empty()) return false;
    const std::size_t s = h.size() - 1;
    for (std::size_t i = 0; i <= s; ++i)
        if (h[i] != h[s - i]) return false;
    const std::size_t t = s / 2;
    std::vector<long long> diff(t + 1);
    diff[0] = h[0];
    for (std::size_t i = 1; i <= t; ++i) {
        diff[i] = h[i] - h[i - 1];
        if (diff[i] < 0) return false;
    }
    return is_o_sequence(diff);
}

/// An admissible h-vector together with the derived data the point
/// construction consumes: s, the midpoint t, the first-difference sequence
/// a (h-vector of the embedded curve) and the complete-intersection
/// h-vector g.
struct SIProfile {
    HVector h;
    int s = 0;
    int t = 0;
    std::vector<long long> a; // a_0..a_t
    std::vector<long long> g; // g_0..g_{s+1}
};

namespace detail {

inline std::string seq_str(const std::vector<long long>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

} // namespace detail

/// Validates h and derives a and g. Error messages name the first violated
/// condition.
inline SIProfile make_profile(const HVector& h) {
    if (h.empty()) throw validation_error("h-vector is empty");
    for (long long x : h)
        if (x < 0) throw validation_error("h-vector has a negative entry");
    if (h[0] != 1) throw validation_error("h_0 must be 1");

    const int s = static_cast<int>(h.size()) - 1;
    const int t = s / 2;
    for (int i = 0; i <= s; ++i)
        if (h[i] != h[s - i])
            throw validation_error("h-vector is not symmetric (h_" + std::to_string(i) +
                                   " != h_" + std::to_string(s - i) + ")");
    std::vector<long long> a(t + 1);
    a[0] = 1;
    for (int i = 1; i <= t; ++i) {
        a[i] = h[i] - h[i - 1];
        if (a[i] < 0)
            throw validation_error("first difference is not an O-sequence (negative at index " +
                                   std::to_string(i) + ")");
    }
    if (!is_o_sequence(a))
        throw validation_error("first difference is not an O-sequence (Macaulay growth violated)");
    if (s < 1 || h[1] != 3)
        throw validation_error("codimension-3 requirement: h_1 must be 3");
    // Needed for the point index ranges to make sense.
    for (int i = 0; i <= t; ++i)
        if (a[i] > s - t + 1)
            throw validation_error("a_" + std::to_string(i) + " exceeds s-t+1");

    std::vector<long long> g(s + 2);
    for (int i = 0; i <= s + 1; ++i) {
        if (i <= t)
            g[i] = i + 1;
        else if (i <= s - t + 1)
            g[i] = t + 1;
        else
            g[i] = s - i + 2;
    }
    return SIProfile{h, s, t, std::move(a), std::move(g)};
}

/// h-vector b of the residual curve: b_i = g_{s+1-i} - a_{s+1-i} with a
/// read as zero past the midpoint. Also re-derives the first difference of
/// h as a_i + b_i - g_i and insists it matches.
inline std::vector<long long> residual_b(const SIProfile& p) {
    const int s = p.s;
    auto a_at = [&](int i) -> long long {
        return (i >= 0 && i <= p.t) ? p.a[i] : 0;
    };
    auto h_at = [&](int i) -> long long {
        return (i >= 0 && i <= s) ? p.h[i] : 0;
    };
    std::vector<long long> b(s + 2);
    for (int i = 0; i <= s + 1; ++i) b[i] = p.g[s + 1 - i] - a_at(s + 1 - i);
    for (int i = 0; i <= s + 1; ++i) {
        const long long d = a_at(i) + b[i] - p.g[i];
        if (d != h_at(i) - h_at(i - 1))
            throw internal_error("residual_b: a + b - g does not match the first difference of h");
    }
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

} // namespace gorpts

#endif
