#pragma once

// Dense polynomials over arbitrary-precision integers.
//
//   XPoly   element of Z[X], canonical (no trailing zero coefficients)
//   UPoly   element of Z[u]/(u^{cap+1}); every result is re-truncated
//   BiPoly  element of Z[u][X] stored as one UPoly per X-degree
//
// All three are value types; nothing mutates through a const reference, so
// instances can be shared read-only between threads.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace robdd {

using BigInt = mpz_class;

class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<BigInt> coeffs);
    XPoly(std::initializer_list<long> coeffs);

    static XPoly monomial(std::size_t degree, const BigInt& coeff = 1);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }
    std::span<const BigInt> coeffs() const { return coeffs_; }

    /// Coefficient of X^i; zero past the degree.
    const BigInt& operator[](std::size_t i) const;

    /// Horner evaluation.
    BigInt eval(const BigInt& x) const;

    /// Drops every term of degree > max_degree.
    XPoly truncated(std::size_t max_degree) const;

    XPoly& operator+=(const XPoly& other);
    XPoly& operator-=(const XPoly& other);
    /// this += scale * other, the inner step of extending a linear map.
    XPoly& add_scaled(const XPoly& other, const BigInt& scale);

    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const BigInt& s, const XPoly& a);
    friend bool operator==(const XPoly& a, const XPoly& b) = default;

    std::string to_string() const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;  // coeffs_[i] = [X^i]
};

class UPoly {
public:
    /// The zero polynomial modulo u^{cap+1}.
    explicit UPoly(std::size_t cap) : cap_(cap) {}
    UPoly(std::size_t cap, std::vector<BigInt> coeffs);
    UPoly(std::size_t cap, std::initializer_list<long> coeffs);

    std::size_t cap() const { return cap_; }
    /// -1 for zero.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }
    std::span<const BigInt> coeffs() const { return coeffs_; }
    const BigInt& operator[](std::size_t i) const;

    /// Value at u = 1, i.e. the sum of the coefficients.
    BigInt sum() const;
    BigInt eval(const BigInt& u) const;

    /// Multiplication by u^k, truncated.
    UPoly shifted(std::size_t k) const;
    /// Same polynomial viewed modulo u^{new_cap+1}.
    UPoly with_cap(std::size_t new_cap) const;

    UPoly& operator+=(const UPoly& other);
    UPoly& operator-=(const UPoly& other);
    UPoly& operator*=(const BigInt& scale);
    /// this += a * b (mod u^{cap+1}); all three caps must agree.
    UPoly& add_product(const UPoly& a, const UPoly& b);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const BigInt& s, UPoly a) { return a *= s; }
    friend bool operator==(const UPoly& a, const UPoly& b) = default;

    std::string to_string() const;

private:
    void normalize();
    void require_same_cap(const UPoly& other, const char* op) const;

    std::size_t cap_;
    std::vector<BigInt> coeffs_;  // size <= cap_ + 1, no trailing zeros
};

class BiPoly {
public:
    explicit BiPoly(std::size_t cap) : cap_(cap) {}

    std::size_t cap() const { return cap_; }
    /// -1 when every coefficient is zero.
    long x_degree() const { return static_cast<long>(by_x_degree_.size()) - 1; }
    long u_degree() const;
    bool is_zero() const { return by_x_degree_.empty(); }

    /// [X^j] as a polynomial in u; zero past the X-degree.
    UPoly coefficient(std::size_t j) const;
    std::span<const UPoly> by_x_degree() const { return by_x_degree_; }

    /// this += u^shift * p(X), truncated in u.
    BiPoly& add_term(std::size_t shift, const XPoly& p);

    friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

private:
    void normalize();

    std::size_t cap_;
    std::vector<UPoly> by_x_degree_;
};

/// Regroups sum_r u^r * p_r(X) by powers of X.
BiPoly bipoly_collect(std::span<const std::pair<std::size_t, XPoly>> terms, std::size_t cap);

}  // namespace robdd
