#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>

namespace cobord {

using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_div(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int exact_div(const Int& a, const Int& b)
{
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int binomial(unsigned long n, unsigned long k)
{
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string int_str(const Int& v) { return v.get_str(); }

inline Int int_from_str(const std::string& s) { return Int(s); }

inline bool is_zero_vec(const std::vector<Int>& v)
{
    for (const Int& x : v)
        if (x != 0)
            return false;
    return true;
}

// Deterministic pseudo-random source for property tests and report sampling
// (splitmix64; stable across platforms, unlike <random> distributions).
struct SplitMix {
    unsigned long long state;
    explicit SplitMix(unsigned long long seed) : state(seed) {}
    unsigned long long next()
    {
        unsigned long long z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform-ish value in [0, bound)
    long below(long bound) { return long(next() % (unsigned long long)(bound)); }
    // small signed integer in [-mag, mag]
    long signed_small(long mag) { return below(2 * mag + 1) - mag; }
};

}  // namespace cobord
