#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "qkap/errors.hpp"

namespace qkap {

using Coeff = mpz_class;

// Dense polynomial in one variable q with exact integer coefficients.
// coeff(i) is the coefficient of q^i. Invariant: the stored vector is either
// empty (the zero polynomial) or ends in a nonzero coefficient.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Coeff> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly one();
    // c * q^e
    static IntPoly monomial(const Coeff& c, std::size_t e);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    // The zero polynomial has no degree.
    [[nodiscard]] std::size_t degree() const;
    // Reads 0 outside the stored range.
    [[nodiscard]] Coeff coeff(std::size_t i) const;
    [[nodiscard]] const std::vector<Coeff>& coeffs() const { return coeffs_; }
    // Value at q = 1: the plain coefficient sum.
    [[nodiscard]] Coeff at_one() const;

    IntPoly& operator+=(const IntPoly& r);
    IntPoly& operator-=(const IntPoly& r);
    IntPoly& operator*=(const IntPoly& r);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { a += b; return a; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { a -= b; return a; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    // Ascending exponent order, e.g. "1 + 2q + q^3 - q^5"; "0" when zero.
    [[nodiscard]] std::string to_string() const;

private:
    std::vector<Coeff> coeffs_;
    void strip_();
};

enum class BinOp { add, sub, mul };
IntPoly combine(const IntPoly& p, const IntPoly& r, BinOp op);

// p * q^r
IntPoly shift(const IntPoly& p, std::size_t r);

// Exact quotient p / d over the integers. Throws DivisionByZeroError when d
// is zero, NonDivisibleError when long division stalls on a leading
// coefficient or leaves a remainder.
IntPoly exact_div(const IntPoly& p, const IntPoly& d);

[[nodiscard]] bool is_nonnegative(const IntPoly& p);
// Lowest exponent holding a negative coefficient, if any.
[[nodiscard]] std::optional<std::size_t> first_negative_index(const IntPoly& p);

// Coefficient palindrome over exponents 0..degree. The zero polynomial has
// no degree, so this and the unimodality predicate reject it.
[[nodiscard]] bool is_symmetric(const IntPoly& p);

// A coefficient list is unimodal when it rises (weakly) to a peak and then
// falls (weakly). The violation witness is the first valley: the lowest
// index j whose value is strictly below some earlier and some later value.
[[nodiscard]] bool is_unimodal(const IntPoly& p);
[[nodiscard]] std::optional<std::size_t> unimodality_violation(const IntPoly& p);

}  // namespace qkap
