#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "reflat/database.hpp"

namespace reflat {

using BigInt = boost::multiprecision::cpp_int;

/// Involutions of an N-element set: Z_N in total, n_S with exactly S fixed
/// points (n_S = 0 unless S = N mod 2).
struct InvolutionStats {
    std::uint64_t N = 0;
    BigInt Z;
    std::vector<BigInt> n_S;
};

/// Z_N from Z_N = Z_{N-1} + (N-1) Z_{N-2}; n_S = N! / (S! 2^k k!), k = (N-S)/2.
InvolutionStats involution_counts(std::uint64_t N);
BigInt involution_number(std::uint64_t N);

enum class ExpectationMode { Exact, Asymptotic };

/// Expected number of fixed points of a uniform random involution,
/// <S> = N Z_{N-1} / Z_N. Exact mode uses big integers up to kExactLimit and
/// beyond that the iteration r_k = 1 / (1 + (k-1) r_{k-1}) for Z_{k-1}/Z_k in
/// long double with outward rounding; `half_width` (if given) receives the
/// enclosing interval's half width. Asymptotic mode is
/// sqrt(N) - 1/2 + 1/(3 sqrt(N)).
double expected_self_duals(std::uint64_t N, ExpectationMode mode, double *half_width = nullptr);
inline constexpr std::uint64_t kExactLimit = 20000;

struct Estimates {
    std::optional<double> est_pairs; // p^2 / (2m)
    std::optional<double> est_self;  // (p/s)^2
};

Estimates estimate_population(std::uint64_t p, std::uint64_t m, std::uint64_t s);

/// Uniform integer in [0, n) from a 64-bit engine, identical on every
/// platform (rejection sampling on the raw output).
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n);

enum class SampleMode { Uniform, OrderedByPoints };

struct SampleReport {
    std::uint64_t p = 0, m = 0, s = 0;
    Estimates est;
    std::uint64_t seed = 0;
    std::vector<size_t> indices; // sampled record indices, ascending
};

/// Sample p records without replacement: uniformly (partial Fisher-Yates
/// with mt19937_64), or the p records with the fewest lattice points (ties in
/// seeded random order). m counts dual pairs with both members sampled, s the
/// sampled self-dual records. Throws SampleTooLarge if p > |db|.
SampleReport sample_and_estimate(const ClassDatabase &db, std::uint64_t p, std::uint64_t seed,
                                 SampleMode mode = SampleMode::Uniform);

/// m and s of an arbitrary subset of record indices.
SampleReport count_pairs(const ClassDatabase &db, std::vector<size_t> indices);

} // namespace reflat
