#pragma once

// Differential operators with rational-function coefficients. Terms are
// (coefficient, derivative multi-index) pairs in canonical form; composition
// implements the Leibniz rule exactly.

#include "affkm/rational.hpp"

#include <map>

namespace affkm {

class DiffOp {
  public:
    using TermMap = std::map<Mono, RationalFunction, GrlexGreater>;

    DiffOp() = default;
    explicit DiffOp(VarTablePtr table) : table_(std::move(table)) {}

    static DiffOp zero(VarTablePtr table) { return DiffOp(std::move(table)); }
    static DiffOp multiplication(const RationalFunction &c);
    static DiffOp partial(const VarTablePtr &table, const std::string &var, int order = 1);

    const VarTablePtr &table() const { return table_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Mono &beta, const RationalFunction &c);

    DiffOp operator-() const;
    DiffOp &operator+=(const DiffOp &o);
    DiffOp &operator-=(const DiffOp &o);
    friend DiffOp operator+(DiffOp a, const DiffOp &b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp &b) { return a -= b; }

    DiffOp scaled(const RationalFunction &c) const;

    // Leibniz composition: (a*b)f = a(b(f)).
    friend DiffOp operator*(const DiffOp &a, const DiffOp &b);
    friend DiffOp commutator(const DiffOp &a, const DiffOp &b) { return a * b - b * a; }

    RationalFunction apply(const RationalFunction &f) const;

    friend bool operator==(const DiffOp &a, const DiffOp &b);
    friend bool operator!=(const DiffOp &a, const DiffOp &b) { return !(a == b); }

    // e.g. 3*x1 * D[x1,2] + D[t1,1]
    std::string str() const;

  private:
    VarTablePtr table_;
    TermMap terms_;
};

} // namespace affkm
