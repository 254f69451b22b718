#pragma once

#include <cstdint>
#include <random>

#include "uqfm/algebra.hpp"
#include "uqfm/spectrum.hpp"

namespace uqfm {

/// Deterministic random source for property suites. Draws go through the
/// raw mt19937_64 stream (no distribution objects), so a fixed seed gives
/// identical values on every platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }
    long int_in(long lo, long hi); // inclusive
    bool coin() { return raw() & 1; }

    /// Random nonzero rational function: small numerator and denominator
    /// polynomials in q.
    FieldElem field_elem(int max_deg = 2, long max_coeff = 3, bool allow_zero = false);

    Monomial monomial(const AlgebraParams& p, int max_ladder = 3, int max_kh = 3);
    AlgElement element(const AlgebraParams& p, int max_terms = 3, int max_ladder = 2,
                       int max_kh = 2);
    MaxIdealPoint point(int m);

private:
    IntPoly poly(int max_deg, long max_coeff, bool nonzero);

    std::mt19937_64 engine_;
};

} // namespace uqfm
