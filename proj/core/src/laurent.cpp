#include "vspan/laurent.hpp"

#include "vspan/errors.hpp"

#include <sstream>
#include <utility>

namespace vspan {

LaurentPoly LaurentPoly::monomial(BigInt coefficient, int exponent) {
    LaurentPoly p;
    if (coefficient != 0)
        p.terms_.emplace(exponent, std::move(coefficient));
    return p;
}

const BigInt& LaurentPoly::coefficient(int exponent) const {
    static const BigInt kZero = 0;
    auto it = terms_.find(exponent);
    return it == terms_.end() ? kZero : it->second;
}

int LaurentPoly::max_degree() const {
    if (terms_.empty())
        throw DomainError("degree of the zero polynomial is undefined");
    return terms_.rbegin()->first;
}

int LaurentPoly::min_degree() const {
    if (terms_.empty())
        throw DomainError("degree of the zero polynomial is undefined");
    return terms_.begin()->first;
}

int LaurentPoly::span() const { return max_degree() - min_degree(); }

void LaurentPoly::prune(int exponent) {
    auto it = terms_.find(exponent);
    if (it != terms_.end() && it->second == 0)
        terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) {
        terms_[e] += c;
        prune(e);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) {
        terms_[e] -= c;
        prune(e);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly r = *this;
    r += other;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    LaurentPoly r = *this;
    r -= other;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_)
            r.terms_[e1 + e2] += c1 * c2;
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (it->second == 0)
            it = r.terms_.erase(it);
        else
            ++it;
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
    LaurentPoly result = one();
    LaurentPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        base *= base;
        exponent >>= 1u;
    }
    return result;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0)
            out << mag.str();
        if (e != 0) {
            out << "A";
            if (e != 1)
                out << "^" << e;
        }
    }
    return out.str();
}

} // namespace vspan
