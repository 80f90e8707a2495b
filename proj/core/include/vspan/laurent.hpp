#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace vspan {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in one variable A with arbitrary-precision integer
// coefficients.  Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly monomial(BigInt coefficient, int exponent);

    bool is_zero() const { return terms_.empty(); }

    // Coefficient of A^exponent (zero if absent).
    const BigInt& coefficient(int exponent) const;

    // Degree queries throw DomainError on the zero polynomial.
    int max_degree() const;
    int min_degree() const;
    int span() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly& operator*=(const LaurentPoly& other);

    LaurentPoly pow(unsigned exponent) const;

    bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

    // Terms in ascending exponent order.
    const std::map<int, BigInt>& terms() const { return terms_; }

    // Canonical text form, terms ascending by exponent: "-A^-10 - A^-2",
    // "1 - A^-4 + A^2", "0".
    std::string to_string() const;

private:
    void prune(int exponent);

    std::map<int, BigInt> terms_;
};

} // namespace vspan
