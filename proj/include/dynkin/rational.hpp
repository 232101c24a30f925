#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dynkin {

// All arithmetic in this project is exact. Int/Rat are the only numeric
// types that appear in mathematical code; machine integers are reserved
// for indices and sizes.
using Int = mpz_class;
using Rat = mpq_class;

// GMP constructors take long, not long long; identical width here.
static_assert(sizeof(long) == sizeof(long long));
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }
inline Rat rat_frac(long long num, long long den) {
    Rat q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// Requires is_integral(q).
inline Int to_int(const Rat& q) { return q.get_num(); }

inline long long to_ll(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer too large for long long");
    return z.get_si();
}

// Largest integer <= p/q.
inline Int floor_rat(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// "p/q" or "p"; throws on malformed input.
Rat parse_rat(const std::string& s);

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

}  // namespace dynkin
