#pragma once

#include <cstdint>
#include <vector>
#include <cstdlib>
#include <string>
#include <thread>

namespace kl {

// Runtime knobs shared by the CLI and the verification suite. Everything that
// could introduce nondeterminism is pinned here: the only randomness in the
// whole library is the polynomial factorizer, which draws from a fixed-seed
// generator.
struct RunConfig {
    std::string cache_dir;          // "" means "use env / default"
    long long budget = 1000000000;  // multiply-add guard for naive table builds
    double tolerance_a = 10.0;      // moment tolerance = tolerance_a / sqrt(q)
    double tolerance_b = 3.0;       // KS tolerance = tolerance_b / sqrt(q-1)
    int threads = 0;                // 0 = auto (KL_THREADS or hardware)
    std::uint64_t seed = 0;
};

inline std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

inline std::string default_cache_dir() {
    return env_or("KL_CACHE_DIR", ".kl-cache");
}

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    std::string env = env_or("KL_THREADS", "");
    if (!env.empty()) {
        int n = std::atoi(env.c_str());
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace detail {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

// splitmix64: small, well-known, and fully specified, so seeded runs are
// reproducible across platforms (std::uniform_int_distribution is not).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed = 0) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n); slight modulo bias is irrelevant for test-case draws
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

}  // namespace kl
