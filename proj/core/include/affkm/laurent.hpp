#pragma once

// Laurent polynomials in one distinguished variable with rational-function
// coefficients in the remaining parameters. Finite support, exponents of
// either sign.

#include "affkm/rational.hpp"

#include <map>
#include <string>

namespace affkm {

class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    LaurentPolynomial(std::string var, VarTablePtr params)
        : var_(std::move(var)), params_(std::move(params)) {}

    static LaurentPolynomial term(std::string var, VarTablePtr params, int exp,
                                  RationalFunction coeff);
    static LaurentPolynomial constant(std::string var, VarTablePtr params, const Scalar &c) {
        return term(std::move(var), params, 0, RationalFunction(params, c));
    }

    const std::string &var() const { return var_; }
    const VarTablePtr &params() const { return params_; }
    const std::map<int, RationalFunction> &coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_monomial() const { return coeffs_.size() == 1; }
    int min_exp() const;
    int max_exp() const;
    RationalFunction coeff(int e) const;

    void add_term(int e, const RationalFunction &c);

    LaurentPolynomial operator-() const;
    friend LaurentPolynomial operator+(const LaurentPolynomial &a, const LaurentPolynomial &b);
    friend LaurentPolynomial operator-(const LaurentPolynomial &a, const LaurentPolynomial &b);
    friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b);

    LaurentPolynomial scaled(const RationalFunction &c) const;
    // multiplication by t^m
    LaurentPolynomial shifted(int m) const;
    // d/dt
    LaurentPolynomial derivative() const;
    // coefficient of t^-1
    RationalFunction residue() const { return coeff(-1); }

    friend bool operator==(const LaurentPolynomial &a, const LaurentPolynomial &b);
    friend bool operator!=(const LaurentPolynomial &a, const LaurentPolynomial &b) {
        return !(a == b);
    }

    std::string str() const;

  private:
    std::string var_;
    VarTablePtr params_;
    std::map<int, RationalFunction> coeffs_;
};

} // namespace affkm
