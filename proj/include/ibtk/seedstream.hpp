#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace ibtk {

/// SplitMix64 finalizer (Steele, Lea & Flood 2014). Full-avalanche 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Hierarchical seed address: a master seed plus an ordered list of indices.
/// Equal (base, path) pairs always denote the same stream; the path makes the
/// address space free of call-order effects, so the same simulation index can
/// be re-requested at any point of an iterative run and yields the same draws.
///
/// Path index 0 under the root is reserved for observed samples, which keeps
/// them disjoint from every simulation stream by construction.
struct SeedId {
    std::uint64_t base = 0;
    std::vector<std::uint64_t> path;

    /// Order-sensitive digest of (base, path); the stream key.
    std::uint64_t digest() const noexcept {
        std::uint64_t d = mix64(base);
        for (std::uint64_t idx : path) d = mix64(d ^ mix64(idx));
        return d;
    }

    friend bool operator==(const SeedId&, const SeedId&) = default;
};

/// Pure function appending `indices` to the path. Satisfies the concatenation
/// law derive(derive(s,[a]),[b]) == derive(s,[a,b]).
SeedId derive_seed(const SeedId& s, std::span<const std::uint64_t> indices);
SeedId derive_seed(const SeedId& s, std::initializer_list<std::uint64_t> indices);

/// Seed of the h-th inner simulation in block j, h = 1..H. The mapping is
/// (j,h,H) -> derive(base, [1, h + j*H]) and does not depend on when or how
/// often it is requested (common random numbers across iterations).
/// Throws std::invalid_argument unless 1 <= h <= H.
SeedId seed_for_simulation(const SeedId& base, std::uint64_t j, std::uint64_t h,
                           std::uint64_t H);

/// Keyed counter generator: output_t = mix64(key ^ mix64(t)). Single-owner;
/// derive a fresh SeedId per concurrent task instead of sharing a stream.
class RandomStream {
  public:
    explicit RandomStream(const SeedId& id) noexcept : key_(id.digest()) {}

    std::uint64_t next_u64() noexcept {
        return mix64(key_ ^ mix64(counter_++ + 0x632be59bd9b4e019ULL));
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal (Box-Muller, no cached spare: two uniforms per draw).
    double normal();
    double normal(double mean, double sd) { return mean + sd * normal(); }

    /// Gamma(shape, scale), valid for every shape > 0 (Marsaglia-Tsang with
    /// the power boost for shape < 1).
    double gamma(double shape, double scale);

    /// Poisson(mean), mean >= 0. Inversion by multiplication for small means,
    /// PTRS transformed rejection (Hormann 1993) otherwise.
    long poisson(double mean);

    /// Bernoulli(p) as 0.0/1.0, p in [0, 1].
    double bernoulli(double p);

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

enum class DrawKind { Uniform, Normal, Gamma, Poisson, Bernoulli };

/// Distribution parameters; meaning depends on the kind:
///   Uniform(lo=a, hi=b), Normal(mean=a, sd=b), Gamma(shape=a, scale=b),
///   Poisson(mean=a), Bernoulli(p=a).
struct DrawParams {
    double a = 0.0;
    double b = 1.0;
};

/// Length-count block of variates, a pure function of (stream seed, kind,
/// params, count). Invalid parameters raise std::domain_error.
Eigen::VectorXd draw_block(RandomStream& stream, DrawKind kind, const DrawParams& params,
                           Eigen::Index count);

}  // namespace ibtk
