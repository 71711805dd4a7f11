#pragma once

// Sparse multivariate polynomials over exact rationals, canonical by
// construction: terms keyed by exponent vector in graded-lex order, zero
// coefficients never stored.

#include "affkm/scalar.hpp"
#include "affkm/vartable.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace affkm {

using Mono = std::vector<int32_t>;

int64_t mono_degree(const Mono &m);

// Graded-lex, largest first, so map iteration order matches serialization.
struct GrlexGreater {
    bool operator()(const Mono &a, const Mono &b) const;
};

class Polynomial {
  public:
    using TermMap = std::map<Mono, Scalar, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(VarTablePtr table) : table_(std::move(table)) {}
    Polynomial(VarTablePtr table, const Scalar &c);

    static Polynomial constant(VarTablePtr table, const Scalar &c) { return Polynomial(table, c); }
    static Polynomial variable(VarTablePtr table, const std::string &name);
    static Polynomial monomial(VarTablePtr table, const Mono &m, const Scalar &c);

    const VarTablePtr &table() const { return table_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The coefficient of the empty monomial; requires is_constant().
    Scalar constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    int64_t total_degree() const; // 0 for the zero polynomial

    void add_term(const Mono &m, const Scalar &c);

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);

    Polynomial scaled(const Scalar &c) const;
    Polynomial pow(long e) const; // e >= 0

    friend bool operator==(const Polynomial &a, const Polynomial &b);
    friend bool operator!=(const Polynomial &a, const Polynomial &b) { return !(a == b); }

    Polynomial derivative(std::size_t var) const;
    Polynomial derivative(const std::string &var) const;

    // Remaps this polynomial onto `bigger` (which must contain all variables
    // of the current table).
    Polynomial embedded(const VarTablePtr &bigger) const;

    // Exact quotient this/divisor, or nullopt when the division leaves a
    // remainder. Graded-lex long division.
    std::optional<Polynomial> divided_exact(const Polynomial &divisor) const;

    // Variables with a nonzero exponent somewhere.
    std::vector<std::size_t> support() const;

    // Per-variable minimum exponent over all terms (the monomial content).
    // Zero vector for the zero polynomial.
    Mono min_exponents() const;
    // Divides every term by t^m; every exponent must stay nonnegative.
    Polynomial shifted_down(const Mono &m) const;
    // gcd of coefficient numerators / lcm of denominators; 0 for zero poly.
    Scalar content() const;

    std::string str() const;

  private:
    VarTablePtr table_;
    TermMap terms_;
};

// Lifts `p` and `q` to a shared table when one embeds into the other;
// throws otherwise.
void align_tables(Polynomial &p, Polynomial &q);

} // namespace affkm
