#pragma once

#include <cstdint>
#include <string>

#include "sidon/finite_field.hpp"
#include "sidon/integer_set.hpp"

namespace sidon::gen {

struct ConstructionRecord {
    IntegerSet set;
    std::string method;
    std::int64_t n = 0;    // interval constructions
    std::int64_t p = 0;    // field constructions
    std::int64_t ell = 0;  // thin constructions
    std::string generator;  // "(x,y)" for field constructions
    std::string reduction;  // defining relation of the field extension
    bool verified = false;  // the advertised property was checked on the output
};

// {1, 2, 4, ...} intersected with [n].
ConstructionRecord powers_of_two(std::int64_t n);

// Repeatedly adjoins the smallest x in [n] that keeps the set Sidon. The seed
// must be a Sidon subset of [n]. From an empty seed this reproduces the
// Mian-Chowla sequence 1, 2, 4, 8, 13, 21, ...
ConstructionRecord greedy_sidon(std::int64_t n, const IntegerSet& seed = IntegerSet());

// The p-element Sidon set {a in [p^2-1] : g^a - g lies in GF(p)} inside
// Z_{p^2-1}, g the smallest primitive element of GF(p^2).
ConstructionRecord bose_chowla(std::int64_t p);

// Reduction of the p-element set mod (p^2-1)/ell, canonical representatives
// in [1, M]. Requires ell | p - 1. The result is ell-thin in Z_M.
ConstructionRecord thin_from_bose_chowla(std::int64_t p, std::int64_t ell);

// Direct form of the same set: x in [M] such that g^(x + y*M) - g lies in
// GF(p) for some y in [ell]. Must agree with thin_from_bose_chowla.
ConstructionRecord thin_direct(std::int64_t p, std::int64_t ell);

}  // namespace sidon::gen
