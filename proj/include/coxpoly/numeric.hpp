#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace coxpoly {

// Arbitrary-precision scalars. Every computation in this library is exact;
// there is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den)
{
    if (den == 0)
        throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int pow_int(const Int& base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// (-1)^k for k of either sign.
inline Int sign_pow(long k)
{
    return (k % 2 == 0) ? Int(1) : Int(-1);
}

// Errors caused by bad user input (CLI maps these to exit code 2).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidParameter : input_error {
    using input_error::input_error;
};

struct IndexOutOfRange : input_error {
    using input_error::input_error;
};

struct RangeError : input_error {
    using input_error::input_error;
};

struct DimensionMismatch : input_error {
    using input_error::input_error;
};

struct PreconditionViolated : input_error {
    using input_error::input_error;
};

}  // namespace coxpoly
