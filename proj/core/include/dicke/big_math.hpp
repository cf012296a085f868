#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dicke/errors.hpp"

namespace dicke {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// n! as an exact integer.
BigInt factorial(long n);

/// Exact binomial coefficient binom(a, b). By convention the value is 0
/// whenever b < 0 or b > a; a < 0 raises NegativeUpperIndex.
BigInt binomial(long a, long b);

/// Exact multinomial n! / (k_0! k_1! ... k_{d-1}!).
/// The counts must be nonnegative and sum to n.
BigInt multinomial(long n, const std::vector<int> &counts);

/// Coefficient list of the Gaussian (q-)binomial binom(a, b)_q, ordered by
/// ascending power of q. Size is b*(a-b)+1 for 0 <= b <= a, degree b*(a-b).
std::vector<BigInt> gaussian_binomial(int a, int b);

/// A nonnegative amplitude of the form sqrt(p/q) with p/q an exact rational
/// in lowest terms. All analytic amplitudes in this library have this shape,
/// so products and equality stay exact until the final float conversion.
class SqrtRational {
  public:
    SqrtRational() : squared_(0) {}

    /// The amplitude sqrt(r); r must be >= 0.
    explicit SqrtRational(BigRational r);

    /// sqrt(num/den).
    SqrtRational(const BigInt &num, const BigInt &den);

    const BigRational &squared() const { return squared_; }
    BigInt num() const { return numerator(squared_); }
    BigInt den() const { return denominator(squared_); }

    bool is_zero() const { return squared_ == 0; }

    /// Correctly-rounded-quality double of sqrt(p/q): the rational is widened
    /// to a 50-digit float before the square root, so the only rounding that
    /// matters is the final one to double.
    double to_double() const;

    SqrtRational operator*(const SqrtRational &other) const;
    bool operator==(const SqrtRational &other) const = default;

  private:
    BigRational squared_; // lowest terms, >= 0 (cpp_rational canonicalizes)
};

/// Exact double of a big rational via a 50-digit intermediate.
double rational_to_double(const BigRational &r);

} // namespace dicke
