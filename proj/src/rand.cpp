#include "uqfm/rand.hpp"

namespace uqfm {

long RandomSource::int_in(long lo, long hi) {
    return lo + static_cast<long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
}

IntPoly RandomSource::poly(int max_deg, long max_coeff, bool nonzero) {
    IntPoly p;
    int deg = static_cast<int>(int_in(0, max_deg));
    for (int e = 0; e <= deg; ++e) {
        long c = int_in(-max_coeff, max_coeff);
        p.add_term(e, BigInt(c));
    }
    if (nonzero && p.is_zero()) p.add_term(static_cast<long>(int_in(0, max_deg)), BigInt(1));
    return p;
}

FieldElem RandomSource::field_elem(int max_deg, long max_coeff, bool allow_zero) {
    IntPoly num = poly(max_deg, max_coeff, !allow_zero);
    IntPoly den = poly(max_deg, max_coeff, true);
    return FieldElem(num, den);
}

Monomial RandomSource::monomial(const AlgebraParams& p, int max_ladder, int max_kh) {
    Monomial m;
    m.a = static_cast<int>(int_in(0, max_ladder));
    m.b = static_cast<int>(int_in(0, max_ladder));
    m.i = static_cast<int>(int_in(-max_kh, max_kh));
    m.j = (p.variant == Variant::TwoParam) ? static_cast<int>(int_in(-max_kh, max_kh)) : 0;
    return m;
}

AlgElement RandomSource::element(const AlgebraParams& p, int max_terms, int max_ladder,
                                 int max_kh) {
    AlgElement x(p);
    int terms = static_cast<int>(int_in(1, max_terms));
    for (int t = 0; t < terms; ++t)
        x.add_term(monomial(p, max_ladder, max_kh), field_elem(1, 2, false));
    return x;
}

MaxIdealPoint RandomSource::point(int m) {
    MaxIdealPoint p;
    p.m = m;
    p.alpha = field_elem(2, 3, true);
    p.beta = field_elem(2, 3, false);
    p.gamma = field_elem(2, 3, false);
    return p;
}

} // namespace uqfm
