#pragma once

#include <cstdint>
#include <random>

namespace cdrw {

// splitmix64 (Steele, Lea, Flood). Used both as a hash and to derive
// independent sub-stream seeds from a single user-facing 64-bit seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream tags keep sub-streams of one seed disjoint by purpose.
enum StreamTag : std::uint64_t {
    kGeneratorStream = 1,
    kPoolStream = 2,
    kTieBreakStream = 3,
    kRvpStream = 4,
    kCdstStream = 5,
    kCdstHashStream = 6,
    kEigenStream = 7,
    kHarnessStream = 8,
};

inline std::uint64_t mix_seed(std::uint64_t a) { return splitmix64(a); }

template <typename... Rest>
std::uint64_t mix_seed(std::uint64_t a, Rest... rest) {
    std::uint64_t h = splitmix64(a);
    ((h = splitmix64(h ^ splitmix64(static_cast<std::uint64_t>(rest)))), ...);
    return h;
}

// All randomized components run on mt19937_64 seeded through mix_seed, so a
// (seed, tag, ...) tuple pins the full stream.
inline std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

// 53-bit uniform in [0,1). Drawn directly from engine output to stay
// bit-reproducible across standard libraries.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). n must be positive.
inline std::uint64_t bounded_rand(std::mt19937_64& eng, std::uint64_t n) {
    return eng() % n;
}

}  // namespace cdrw
