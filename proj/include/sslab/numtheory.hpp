#pragma once

#include <cstdint>
#include <optional>

#include "sslab/int128.hpp"
#include "sslab/rng.hpp"

namespace sslab {

// Primality for the full unsigned 64-bit range plus the moderate 128-bit
// values the solvers draw. Below 2^81 the fixed Miller-Rabin witness set
// {2,...,41} is a proven decider; above that a strong Lucas test is added
// (Baillie-PSW), which has no known counterexample.
bool is_prime(u128 n);

struct PrimeSample {
    u128 value = 0;
    uint64_t probes = 0;   // candidates tested before acceptance
    bool clamped = false;  // requested lower bound was below 2
};

// Uniform prime in [t, 2t]. t < 2 is clamped to 2 and flagged.
PrimeSample random_prime(u128 t, RandomSource& rng);

// Uniform prime in [lo, hi]; nullopt if the interval contains none.
std::optional<PrimeSample> uniform_prime_in(u128 lo, u128 hi, RandomSource& rng);

// x = a (mod p), x = b (mod q), 0 <= x < p*q. Throws unless gcd(p,q) == 1.
u128 crt_combine(u128 a, u128 p, u128 b, u128 q);

u128 gcd_u128(u128 a, u128 b);

u128 mulmod(u128 a, u128 b, u128 m);
u128 powmod(u128 base, u128 exp, u128 m);

}  // namespace sslab
