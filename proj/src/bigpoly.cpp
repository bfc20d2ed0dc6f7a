#include "robdd/bigpoly.hpp"

#include "robdd/errors.hpp"

#include <algorithm>
#include <sstream>

namespace robdd {

namespace {

const BigInt& zero_constant() {
    static const BigInt zero = 0;
    return zero;
}

void trim_trailing_zeros(std::vector<BigInt>& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

std::string render(std::span<const BigInt> c, const char* var) {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (sgn(c[i]) == 0) continue;
        BigInt mag = abs(c[i]);
        if (!first) out << (sgn(c[i]) < 0 ? " - " : " + ");
        else if (sgn(c[i]) < 0) out << "-";
        first = false;
        if (i == 0 || mag != 1) out << mag.get_str();
        if (i > 0) {
            if (mag != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace

// ---------------------------------------------------------------- XPoly

XPoly::XPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

XPoly::XPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

XPoly XPoly::monomial(std::size_t degree, const BigInt& coeff) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = coeff;
    return XPoly(std::move(c));
}

void XPoly::normalize() { trim_trailing_zeros(coeffs_); }

const BigInt& XPoly::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : zero_constant();
}

BigInt XPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

XPoly XPoly::truncated(std::size_t max_degree) const {
    if (coeffs_.size() <= max_degree + 1) return *this;
    return XPoly(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

XPoly& XPoly::operator+=(const XPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

XPoly& XPoly::add_scaled(const XPoly& other, const BigInt& scale) {
    if (sgn(scale) == 0 || other.is_zero()) return *this;
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        mpz_addmul(coeffs_[i].get_mpz_t(), other.coeffs_[i].get_mpz_t(), scale.get_mpz_t());
    normalize();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return XPoly(std::move(out));
}

XPoly operator*(const BigInt& s, const XPoly& a) {
    if (sgn(s) == 0) return {};
    std::vector<BigInt> out(a.coeffs_);
    for (auto& c : out) c *= s;
    return XPoly(std::move(out));
}

std::string XPoly::to_string() const { return render(coeffs_, "X"); }

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::size_t cap, std::vector<BigInt> coeffs) : cap_(cap), coeffs_(std::move(coeffs)) {
    normalize();
}

UPoly::UPoly(std::size_t cap, std::initializer_list<long> coeffs) : cap_(cap) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

void UPoly::normalize() {
    if (coeffs_.size() > cap_ + 1) coeffs_.resize(cap_ + 1);
    trim_trailing_zeros(coeffs_);
}

void UPoly::require_same_cap(const UPoly& other, const char* op) const {
    if (cap_ != other.cap_)
        throw contract_violation(std::string("UPoly ") + op + ": cap mismatch (" + std::to_string(cap_) +
                                 " vs " + std::to_string(other.cap_) + ")");
}

const BigInt& UPoly::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : zero_constant();
}

BigInt UPoly::sum() const {
    BigInt acc = 0;
    for (const auto& c : coeffs_) acc += c;
    return acc;
}

BigInt UPoly::eval(const BigInt& u) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= u;
        acc += coeffs_[i];
    }
    return acc;
}

UPoly UPoly::shifted(std::size_t k) const {
    if (is_zero() || k > cap_) return UPoly(cap_);
    std::vector<BigInt> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return UPoly(cap_, std::move(out));
}

UPoly UPoly::with_cap(std::size_t new_cap) const { return UPoly(new_cap, coeffs_); }

UPoly& UPoly::operator+=(const UPoly& other) {
    require_same_cap(other, "add");
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
    require_same_cap(other, "sub");
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

UPoly& UPoly::operator*=(const BigInt& scale) {
    if (sgn(scale) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scale;
    return *this;
}

UPoly& UPoly::add_product(const UPoly& a, const UPoly& b) {
    require_same_cap(a, "add_product");
    require_same_cap(b, "add_product");
    if (a.is_zero() || b.is_zero()) return *this;
    const std::size_t top = std::min(cap_, a.coeffs_.size() + b.coeffs_.size() - 2);
    if (coeffs_.size() < top + 1) coeffs_.resize(top + 1);
    for (std::size_t i = 0; i < a.coeffs_.size() && i <= top; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        const std::size_t jmax = std::min(b.coeffs_.size() - 1, top - i);
        for (std::size_t j = 0; j <= jmax; ++j)
            mpz_addmul(coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    normalize();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly out(a.cap_);
    out.add_product(a, b);
    return out;
}

std::string UPoly::to_string() const { return render(coeffs_, "u"); }

// ---------------------------------------------------------------- BiPoly

long BiPoly::u_degree() const {
    long d = -1;
    for (const auto& p : by_x_degree_) d = std::max(d, p.degree());
    return d;
}

UPoly BiPoly::coefficient(std::size_t j) const {
    return j < by_x_degree_.size() ? by_x_degree_[j] : UPoly(cap_);
}

BiPoly& BiPoly::add_term(std::size_t shift, const XPoly& p) {
    if (shift > cap_ || p.is_zero()) return *this;
    if (by_x_degree_.size() < p.size()) by_x_degree_.resize(p.size(), UPoly(cap_));
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (sgn(p[j]) == 0) continue;
        std::vector<BigInt> mono(shift + 1);
        mono[shift] = p[j];
        by_x_degree_[j] += UPoly(cap_, std::move(mono));
    }
    normalize();
    return *this;
}

void BiPoly::normalize() {
    while (!by_x_degree_.empty() && by_x_degree_.back().is_zero()) by_x_degree_.pop_back();
}

BiPoly bipoly_collect(std::span<const std::pair<std::size_t, XPoly>> terms, std::size_t cap) {
    BiPoly out(cap);
    for (const auto& [shift, p] : terms) out.add_term(shift, p);
    return out;
}

}  // namespace robdd
