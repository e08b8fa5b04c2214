#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "multiassoc/error.hpp"

namespace multiassoc {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw Error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline int sign_of(const Rat& q) { return sgn(q); }

// Seeded generator of exact rationals, used wherever a "generic" value is
// needed. Numerators and denominators are bounded so matrix entries stay
// small; the default bound of 10^6 keeps genericity failures negligible
// while remaining reproducible from the seed.
class RatRng {
public:
    explicit RatRng(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen_);
    }

    Rat rational(long bound = 1'000'000) {
        long num = integer(-bound, bound);
        long den = integer(1, bound);
        return rat_of(num, den);
    }

    Rat positive_rational(long bound = 1'000'000) {
        long num = integer(1, bound);
        long den = integer(1, bound);
        return rat_of(num, den);
    }

    // Strictly increasing tuple of exact rationals.
    std::vector<Rat> increasing(std::size_t len, long bound = 1'000'000) {
        std::vector<Rat> out;
        out.reserve(len);
        Rat x = rational(bound);
        for (std::size_t i = 0; i < len; ++i) {
            out.push_back(x);
            x += positive_rational(bound);
        }
        return out;
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

} // namespace multiassoc
