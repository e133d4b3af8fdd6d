#ifndef DJD_RNG_HPP
#define DJD_RNG_HPP

#include "djd/element.hpp"
#include "djd/presentation.hpp"

#include <cstdint>

namespace djd {

/// splitmix64: tiny, fully deterministic across platforms.  Verification
/// suites must produce byte-identical reports for a fixed seed, so we do not
/// rely on library distributions.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }
};

/// Degree-bounded fuzzing distribution: <= max_terms terms, each exponent in
/// [0, max_exp] ([-max_exp, max_exp] for invertible generators),
/// coefficients from {+-1, +-1/2, +-2}.
inline Element random_element(const Presentation& p, SplitMix64& rng, long max_terms = 4,
                              long max_exp = 2) {
    static const Scalar coeffs[6] = {Scalar(1),  Scalar(-1), frac(1, 2),
                                     frac(-1, 2), Scalar(2),  Scalar(-2)};
    Element e(p);
    const long terms = 1 + rng.below(max_terms);
    for (long t = 0; t < terms; ++t) {
        Monomial m(p.size());
        for (std::size_t g = 0; g < p.size(); ++g) {
            long ex = rng.below(max_exp + 1);
            if (p.gen(g).invertible && rng.below(2) == 1) ex = -ex;
            m.set_exp(g, ex);
        }
        e += Element::monomial(p, m, coeffs[rng.below(6)]);
    }
    return e;
}

} // namespace djd

#endif // DJD_RNG_HPP
