#include "affkm/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace affkm {

LaurentPolynomial LaurentPolynomial::term(std::string var, VarTablePtr params, int exp,
                                          RationalFunction coeff) {
    LaurentPolynomial l(std::move(var), std::move(params));
    l.add_term(exp, coeff);
    return l;
}

int LaurentPolynomial::min_exp() const {
    if (coeffs_.empty()) throw std::domain_error("LaurentPolynomial: zero has no exponents");
    return coeffs_.begin()->first;
}

int LaurentPolynomial::max_exp() const {
    if (coeffs_.empty()) throw std::domain_error("LaurentPolynomial: zero has no exponents");
    return coeffs_.rbegin()->first;
}

RationalFunction LaurentPolynomial::coeff(int e) const {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) return RationalFunction(Polynomial(params_, Scalar(0)));
    return it->second;
}

void LaurentPolynomial::add_term(int e, const RationalFunction &c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(var_, params_);
    for (const auto &[e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

static void check_compatible(const LaurentPolynomial &a, const LaurentPolynomial &b) {
    if (a.var() != b.var())
        throw std::invalid_argument("LaurentPolynomial: distinguished variable mismatch");
}

LaurentPolynomial operator+(const LaurentPolynomial &a, const LaurentPolynomial &b) {
    check_compatible(a, b);
    LaurentPolynomial r = a;
    for (const auto &[e, c] : b.coeffs_) r.add_term(e, c);
    return r;
}

LaurentPolynomial operator-(const LaurentPolynomial &a, const LaurentPolynomial &b) {
    return a + (-b);
}

LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b) {
    check_compatible(a, b);
    LaurentPolynomial r(a.var_, a.params_ ? a.params_ : b.params_);
    for (const auto &[ea, ca] : a.coeffs_)
        for (const auto &[eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const RationalFunction &c) const {
    LaurentPolynomial r(var_, params_);
    if (c.is_zero()) return r;
    for (const auto &[e, cc] : coeffs_) r.add_term(e, cc * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int m) const {
    LaurentPolynomial r(var_, params_);
    for (const auto &[e, c] : coeffs_) r.coeffs_.emplace(e + m, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
    LaurentPolynomial r(var_, params_);
    for (const auto &[e, c] : coeffs_) {
        if (e == 0) continue;
        r.add_term(e - 1, c.scaled(Scalar(e)));
    }
    return r;
}

bool operator==(const LaurentPolynomial &a, const LaurentPolynomial &b) {
    if (a.var_ != b.var_) return false;
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    auto ia = a.coeffs_.begin();
    auto ib = b.coeffs_.begin();
    for (; ia != a.coeffs_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second != ib->second) return false;
    }
    return true;
}

std::string LaurentPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e != 0) os << "*" << var_ << "^" << e;
    }
    return os.str();
}

} // namespace affkm
