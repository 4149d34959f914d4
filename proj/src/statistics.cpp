#include "reflat/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace reflat {

BigInt involution_number(std::uint64_t N) {
    BigInt a = 1, b = 1; // Z_{k-1}, Z_k for k = 1
    for (std::uint64_t k = 2; k <= N; ++k) {
        BigInt c = b + (k - 1) * a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

InvolutionStats involution_counts(std::uint64_t N) {
    InvolutionStats st;
    st.N = N;
    st.Z = involution_number(N);
    st.n_S.assign(N + 1, 0);
    // n_S for S = N, N-2, ...: n_{S-2} = n_S * S (S-1) / (2 k), k = (N-S)/2 + 1
    BigInt n = 1;
    st.n_S[N] = 1;
    for (std::uint64_t S = N; S >= 2; S -= 2) {
        const std::uint64_t k = (N - S) / 2 + 1;
        n = n * S * (S - 1) / (2 * k);
        st.n_S[S - 2] = n;
    }
    return st;
}

double expected_self_duals(std::uint64_t N, ExpectationMode mode, double *half_width) {
    if (N == 0)
        return 0;
    if (mode == ExpectationMode::Asymptotic) {
        const double r = std::sqrt(static_cast<double>(N));
        if (half_width)
            *half_width = 1.0 / static_cast<double>(N);
        return r - 0.5 + 1.0 / (3.0 * r);
    }
    if (N <= kExactLimit) {
        BigInt num = N * involution_number(N - 1);
        BigInt den = involution_number(N);
        // fixed-point quotient with 60 fractional bits
        BigInt q = (num << 60) / den;
        if (half_width)
            *half_width = std::ldexp(1.0, -60);
        return std::ldexp(static_cast<double>(q), -60);
    }
    // r_k = Z_{k-1} / Z_k. Each step rounds three times (relative error
    // <= u each) and the map r -> 1/(1 + (k-1) r) has slope (k-1) r_k^2, so
    // the propagated error obeys e_k <= (k-1) r_k^2 e_{k-1} + 3.01 u r_k.
    const long double u = std::numeric_limits<long double>::epsilon() / 2;
    long double r = 1, err = 0;
    for (std::uint64_t k = 2; k <= N; ++k) {
        const long double km1 = static_cast<long double>(k - 1);
        r = 1.0L / (1.0L + km1 * r);
        err = km1 * r * r * err + 3.01L * u * r;
    }
    const long double n = static_cast<long double>(N);
    if (half_width)
        *half_width = static_cast<double>(err * n * 1.01L);
    return static_cast<double>(r * n);
}

Estimates estimate_population(std::uint64_t p, std::uint64_t m, std::uint64_t s) {
    Estimates e;
    const double pd = static_cast<double>(p);
    if (m > 0)
        e.est_pairs = pd * pd / (2.0 * static_cast<double>(m));
    if (s > 0)
        e.est_self = (pd / static_cast<double>(s)) * (pd / static_cast<double>(s));
    return e;
}

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit)
            return x % n;
    }
}

SampleReport count_pairs(const ClassDatabase &db, std::vector<size_t> indices) {
    std::sort(indices.begin(), indices.end());
    SampleReport r;
    r.p = indices.size();
    for (size_t i : indices) {
        const size_t j = db.dual_index[i];
        if (j == i)
            ++r.s;
        else if (j > i && std::binary_search(indices.begin(), indices.end(), j))
            ++r.m;
    }
    r.est = estimate_population(r.p, r.m, r.s);
    r.indices = std::move(indices);
    return r;
}

SampleReport sample_and_estimate(const ClassDatabase &db, std::uint64_t p, std::uint64_t seed, SampleMode mode) {
    const size_t n = db.size();
    if (p > n)
        throw SampleTooLarge("sample of " + std::to_string(p) + " from " + std::to_string(n) + " records");
    std::mt19937_64 rng(seed);
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t{0});
    if (mode == SampleMode::Uniform) {
        for (size_t i = 0; i < p; ++i)
            std::swap(idx[i], idx[i + uniform_below(rng, n - i)]);
    } else {
        for (size_t i = n; i > 1; --i)
            std::swap(idx[i - 1], idx[uniform_below(rng, i)]);
        std::vector<size_t> npts(n);
        for (size_t i = 0; i < n; ++i)
            npts[i] = lattice_points(Polytope::hull(db.records[i].vertices(), db.dim)).size();
        std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return npts[a] < npts[b]; });
    }
    idx.resize(p);
    SampleReport r = count_pairs(db, std::move(idx));
    r.seed = seed;
    return r;
}

} // namespace reflat
