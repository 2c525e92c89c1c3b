#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace tissue {

/// Deterministic 64-bit PRNG (xoshiro256++ seeded via splitmix64).
/// All randomness in the library flows through this type so that seeded
/// results are bit-reproducible across platforms; std:: distributions are
/// implementation-defined and never used.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) { reseed(seed); }

    void reseed(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : state_) s = splitmix64(x);
        has_cached_gauss_ = false;
        cached_gauss_ = 0.0;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t uniform_below(std::uint64_t n) {
        // Debiased modulo via rejection.
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(uniform_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Standard normal via Box-Muller (explicit formula keeps the stream
    /// identical on every platform).
    double gauss() {
        if (has_cached_gauss_) {
            has_cached_gauss_ = false;
            return cached_gauss_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        cached_gauss_ = r * std::sin(theta);
        has_cached_gauss_ = true;
        return r * std::cos(theta);
    }

    /// Derive an independent child seed; used for per-epoch shuffles etc.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL + stream * 0xbf58476d1ce4e5b9ULL);
        splitmix64(x);
        return splitmix64(x);
    }

    struct State {
        std::array<std::uint64_t, 4> s;
        bool has_cached_gauss;
        double cached_gauss;
    };
    State state() const { return {state_, has_cached_gauss_, cached_gauss_}; }
    void set_state(const State& st) {
        state_ = st.s;
        has_cached_gauss_ = st.has_cached_gauss;
        cached_gauss_ = st.cached_gauss;
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
    bool has_cached_gauss_ = false;
    double cached_gauss_ = 0.0;
};

/// Fisher-Yates shuffle over indices [0, n); the fixed algorithm behind
/// every seeded shuffle in the library.
template <typename IndexVec>
void fisher_yates(IndexVec& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.uniform_below(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace tissue
