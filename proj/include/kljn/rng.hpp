#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>

namespace kljn {

// Stateless 64-bit mixer. Used to derive independent per-loop seeds from one
// master seed so exchanges can run in any order (or in parallel) and still
// reproduce bit-for-bit.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b, std::uint64_t c) {
    std::uint64_t s = splitmix64(master ^ 0xA24BAED4963EE407ull);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    return splitmix64(s ^ c);
}

// Uniform on (0, 1]; never returns 0 so log() below is always finite.
inline double uniform01(std::mt19937_64& g) {
    return (static_cast<double>(g() >> 11) + 1.0) * 0x1.0p-53;
}

// Box-Muller transform. The standard library's normal_distribution is
// implementation-defined, so we roll our own to keep artifacts identical
// across standard libraries. Each call consumes exactly two engine draws
// and yields two independent standard normals.
inline std::pair<double, double> gaussian_pair(std::mt19937_64& g) {
    const double u1 = uniform01(g);
    const double u2 = uniform01(g);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
}

} // namespace kljn
