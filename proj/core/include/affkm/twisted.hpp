#pragma once

// Twisted functions: sums of (symbolic-power factors) x (rational function)
// x (monomial in formal jets of an unknown block function), together with a
// substitution record binding each formal argument to a rational function of
// the ambient variables. Differentiation is closed on this class, and linear
// jet relations can be eliminated exactly.

#include "affkm/diffop.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace affkm {

// Linear form c1*p1 + ... + cm*pm + c0 in named parameters.
class LinForm {
  public:
    LinForm() = default;
    explicit LinForm(const Scalar &c) : cst_(c) {}

    static LinForm parameter(const std::string &name, const Scalar &coeff = Scalar(1)) {
        LinForm f;
        f.coeffs_[name] = coeff;
        return f;
    }

    const Scalar &constant() const { return cst_; }
    const std::map<std::string, Scalar> &coeffs() const { return coeffs_; }

    bool is_zero() const { return cst_.is_zero() && coeffs_.empty(); }
    // the exponent value when no parameters remain
    std::optional<Scalar> constant_value() const {
        if (!coeffs_.empty()) return std::nullopt;
        return cst_;
    }

    LinForm operator-() const;
    LinForm &operator+=(const LinForm &o);
    friend LinForm operator+(LinForm a, const LinForm &b) { return a += b; }
    friend LinForm operator-(LinForm a, const LinForm &b) { return a += -b; }
    LinForm scaled(const Scalar &c) const;
    LinForm shifted(const Scalar &c) const;
    // replace a parameter by a scalar value
    LinForm bound(const std::string &name, const Scalar &value) const;

    friend bool operator==(const LinForm &a, const LinForm &b) {
        return a.cst_ == b.cst_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LinForm &a, const LinForm &b) { return !(a == b); }
    friend bool operator<(const LinForm &a, const LinForm &b);

    // as a polynomial in the ambient table (parameters are table variables)
    Polynomial as_polynomial(const VarTablePtr &table) const;

    std::string str() const;

  private:
    std::map<std::string, Scalar> coeffs_;
    Scalar cst_{0};
};

struct TwistedFactor {
    Polynomial base;
    LinForm exponent;
};

// Derivative multi-index over the formal arguments of the unknown function.
using JetKey = std::vector<int32_t>;
// Product of jet symbols, kept sorted.
using JetMono = std::vector<JetKey>;

// Formal arguments and their values as rational functions of the ambient
// variables. The first n_xi arguments are xi-type (cap 2), the rest t-type
// (cap 1).
class SubstitutionRecord {
  public:
    SubstitutionRecord(std::vector<std::string> args, std::vector<RationalFunction> values,
                       std::size_t n_xi, int cap_xi = 2, int cap_t = 1);

    std::size_t arity() const { return args_.size(); }
    std::size_t n_xi() const { return nxi_; }
    int cap_xi() const { return capxi_; }
    int cap_t() const { return capt_; }
    const std::string &arg(std::size_t i) const { return args_[i]; }
    const RationalFunction &value(std::size_t i) const { return values_[i]; }
    std::size_t arg_index(const std::string &name) const;

    bool within_cap(const JetKey &k) const;

    friend bool operator==(const SubstitutionRecord &a, const SubstitutionRecord &b);

  private:
    std::vector<std::string> args_;
    std::vector<RationalFunction> values_;
    std::size_t nxi_;
    int capxi_, capt_;
};

using RecordPtr = std::shared_ptr<const SubstitutionRecord>;

class TwistedFunction {
  public:
    struct Term {
        std::vector<TwistedFactor> factors;
        RationalFunction coeff;
        JetMono jets;
    };

    TwistedFunction() = default;
    TwistedFunction(VarTablePtr table, RecordPtr record)
        : table_(std::move(table)), record_(std::move(record)) {}

    static TwistedFunction zero(VarTablePtr table, RecordPtr record) {
        return TwistedFunction(std::move(table), std::move(record));
    }
    // the 0-jet of the unknown function
    static TwistedFunction unknown(VarTablePtr table, RecordPtr record);
    static TwistedFunction from_rational(VarTablePtr table, RecordPtr record,
                                         const RationalFunction &c);

    const VarTablePtr &table() const { return table_; }
    const RecordPtr &record() const { return record_; }
    const std::vector<Term> &terms() const { return terms_; }

    void add_term(Term t);
    // append without re-canonicalizing; caller finishes with canonicalize()
    void push_term_raw(Term t) { terms_.push_back(std::move(t)); }

    TwistedFunction operator-() const;
    TwistedFunction &operator+=(const TwistedFunction &o);
    TwistedFunction &operator-=(const TwistedFunction &o);
    friend TwistedFunction operator+(TwistedFunction a, const TwistedFunction &b) { return a += b; }
    friend TwistedFunction operator-(TwistedFunction a, const TwistedFunction &b) { return a -= b; }
    friend TwistedFunction operator*(const TwistedFunction &a, const TwistedFunction &b);

    TwistedFunction scaled(const RationalFunction &c) const;

    // exact d/d(var) including log-derivatives of factors and the chain rule
    // through the substitution record
    TwistedFunction derivative(const std::string &var) const;

    bool is_zero() const;

    // every term carries exactly one jet symbol
    bool jet_linear() const;

    std::string str() const;

    void canonicalize();

  private:
    VarTablePtr table_;
    RecordPtr record_;
    std::vector<Term> terms_;
};

TwistedFunction diffop_apply(const DiffOp &op, const TwistedFunction &f);

struct SubstitutionPlan {
    std::map<std::string, RationalFunction> vars; // values over `target`
    std::map<std::string, Scalar> params;         // exponent parameters to bind
    VarTablePtr target;                           // defaults to the source table
    RecordPtr new_record;                         // replacement record, optional
};

// Exact substitution; integer factor exponents are absorbed into the
// rational part. Throws when a factor base collapses to zero.
TwistedFunction substitute(const TwistedFunction &f, const SubstitutionPlan &plan);

class RelationSet {
  public:
    RelationSet() = default;
    explicit RelationSet(std::vector<TwistedFunction> relations);

    const std::vector<TwistedFunction> &relations() const { return rels_; }
    std::size_t size() const { return rels_.size(); }
    bool empty() const { return rels_.empty(); }

    // adds all formal xi-argument derivatives of every relation up to the
    // given total order
    RelationSet prolonged(int order) const;

  private:
    std::vector<TwistedFunction> rels_;
};

// Normal form of f modulo the linear span of the relation rows, after
// grounding the rows through f's substitution record. reduce(f, R) == 0 iff
// f lies in the span.
TwistedFunction reduce_modulo(const TwistedFunction &f, const RelationSet &rels);

std::string jet_str(const JetKey &k, const SubstitutionRecord &rec);

} // namespace affkm
