#pragma once

// Rational functions as unreduced numerator/denominator pairs. Equality is
// cross-multiplication; no multivariate gcd anywhere. A cheap normalization
// (integer content, shared monomial content, denominator sign) keeps sizes
// under control without changing the represented value.

#include "affkm/polynomial.hpp"

#include <map>
#include <optional>
#include <string>

namespace affkm {

class RationalFunction {
  public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial num);
    RationalFunction(Polynomial num, Polynomial den);
    RationalFunction(VarTablePtr table, const Scalar &c)
        : RationalFunction(Polynomial(table, c)) {}

    static RationalFunction variable(const VarTablePtr &t, const std::string &n) {
        return RationalFunction(Polynomial::variable(t, n));
    }

    const Polynomial &num() const { return num_; }
    const Polynomial &den() const { return den_; }
    const VarTablePtr &table() const { return num_.table(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.is_constant(); }
    // Requires den constant; returns num/den as a Polynomial.
    Polynomial as_polynomial() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Scalar constant_value() const;

    RationalFunction operator-() const;
    RationalFunction &operator+=(const RationalFunction &o);
    RationalFunction &operator-=(const RationalFunction &o);
    RationalFunction &operator*=(const RationalFunction &o);
    RationalFunction &operator/=(const RationalFunction &o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction &b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction &b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction &b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction &b) { return a /= b; }

    RationalFunction scaled(const Scalar &c) const;
    RationalFunction inverse() const;
    RationalFunction pow(long e) const;

    // num1*den2 - num2*den1 == 0
    friend bool eq(const RationalFunction &a, const RationalFunction &b);
    friend bool operator==(const RationalFunction &a, const RationalFunction &b) { return eq(a, b); }
    friend bool operator!=(const RationalFunction &a, const RationalFunction &b) { return !eq(a, b); }

    RationalFunction derivative(std::size_t var) const;
    RationalFunction derivative(const std::string &var) const;

    RationalFunction embedded(const VarTablePtr &bigger) const {
        return RationalFunction(num_.embedded(bigger), den_.embedded(bigger));
    }

    std::string str() const;

  private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

// The scalar this rational function equals as a value, if any; works on
// unreduced pairs such as (c*p)/p.
std::optional<Scalar> rational_constant(const RationalFunction &r);

// Substitutes variables by rational functions (in a possibly different
// table); unmapped variables must exist in `target`.
Polynomial substituted_num(const Polynomial &p,
                           const std::map<std::string, RationalFunction> &bindings,
                           const VarTablePtr &target, Polynomial *den_out);
RationalFunction substitute(const Polynomial &p,
                            const std::map<std::string, RationalFunction> &bindings,
                            const VarTablePtr &target);
RationalFunction substitute(const RationalFunction &r,
                            const std::map<std::string, RationalFunction> &bindings,
                            const VarTablePtr &target);

} // namespace affkm
