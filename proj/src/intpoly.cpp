#include "qkap/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qkap {

IntPoly::IntPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    strip_();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    strip_();
}

IntPoly IntPoly::one() { return IntPoly{1}; }

IntPoly IntPoly::monomial(const Coeff& c, std::size_t e) {
    if (c == 0) return IntPoly{};
    std::vector<Coeff> v(e + 1);
    v[e] = c;
    return IntPoly(std::move(v));
}

void IntPoly::strip_() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPoly::degree() const {
    if (is_zero()) throw ZeroPolynomialError("degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

Coeff IntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Coeff(0);
}

Coeff IntPoly::at_one() const {
    Coeff s = 0;
    for (const Coeff& c : coeffs_) s += c;
    return s;
}

IntPoly& IntPoly::operator+=(const IntPoly& r) {
    if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size());
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
    strip_();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& r) {
    if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size());
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
    strip_();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                       b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& r) {
    *this = *this * r;
    return *this;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Coeff& c = coeffs_[i];
        if (c == 0) continue;
        Coeff mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) out << mag.get_str();
        if (i >= 1) {
            out << "q";
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

IntPoly combine(const IntPoly& p, const IntPoly& r, BinOp op) {
    switch (op) {
        case BinOp::add: return p + r;
        case BinOp::sub: return p - r;
        case BinOp::mul: return p * r;
    }
    throw Error("combine: bad operation");
}

IntPoly shift(const IntPoly& p, std::size_t r) {
    if (p.is_zero() || r == 0) return p;
    std::vector<Coeff> out(p.coeffs().size() + r);
    std::copy(p.coeffs().begin(), p.coeffs().end(), out.begin() + static_cast<long>(r));
    return IntPoly(std::move(out));
}

IntPoly exact_div(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw DivisionByZeroError("exact_div: divisor is zero");
    if (p.is_zero()) return IntPoly{};
    const std::size_t pd = p.degree(), dd = d.degree();
    if (pd < dd) {
        throw NonDivisibleError("exact_div: remainder " + p.to_string());
    }
    std::vector<Coeff> rem = p.coeffs();
    const std::vector<Coeff>& div = d.coeffs();
    std::vector<Coeff> quot(pd - dd + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Coeff& lead = rem[k + dd];
        if (lead == 0) continue;
        Coeff qk, r;
        mpz_tdiv_qr(qk.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), div[dd].get_mpz_t());
        if (r != 0) {
            throw NonDivisibleError("exact_div: long division stalls at exponent " +
                                    std::to_string(k + dd) + " (" + lead.get_str() +
                                    " not divisible by " + div[dd].get_str() + ")");
        }
        for (std::size_t i = 0; i <= dd; ++i) {
            mpz_submul(rem[k + i].get_mpz_t(), qk.get_mpz_t(), div[i].get_mpz_t());
        }
        quot[k] = std::move(qk);
    }
    IntPoly remainder(std::move(rem));
    if (!remainder.is_zero()) {
        throw NonDivisibleError("exact_div: remainder " + remainder.to_string());
    }
    return IntPoly(std::move(quot));
}

bool is_nonnegative(const IntPoly& p) { return !first_negative_index(p).has_value(); }

std::optional<std::size_t> first_negative_index(const IntPoly& p) {
    const auto& a = p.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0) return i;
    }
    return std::nullopt;
}

bool is_symmetric(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError("is_symmetric: zero polynomial");
    const auto& a = p.coeffs();
    const std::size_t d = a.size() - 1;
    for (std::size_t i = 0; 2 * i < d; ++i) {
        if (a[i] != a[d - i]) return false;
    }
    return true;
}

std::optional<std::size_t> unimodality_violation(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError("is_unimodal: zero polynomial");
    const auto& a = p.coeffs();
    const std::size_t n = a.size();
    if (n < 3) return std::nullopt;
    std::vector<Coeff> suffix_max(n);
    suffix_max[n - 1] = a[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        suffix_max[i] = std::max(a[i], suffix_max[i + 1]);
    }
    Coeff prefix_max = a[0];
    for (std::size_t j = 1; j + 1 < n; ++j) {
        if (prefix_max > a[j] && suffix_max[j + 1] > a[j]) return j;
        if (a[j] > prefix_max) prefix_max = a[j];
    }
    return std::nullopt;
}

bool is_unimodal(const IntPoly& p) { return !unimodality_violation(p).has_value(); }

}  // namespace qkap
