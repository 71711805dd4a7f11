#include "affkm/rational.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace affkm {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(num_.table(), Scalar(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    align_tables(num_, den_);
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(num_.table(), Scalar(1));
        return;
    }
    if (den_.is_constant()) {
        Scalar d = den_.constant_value();
        if (!d.is_one()) {
            num_ = num_.scaled(Scalar(1) / d);
            den_ = Polynomial(num_.table(), Scalar(1));
        }
        return;
    }
    // shared monomial content
    Mono mn = num_.min_exponents();
    Mono md = den_.min_exponents();
    Mono common(mn.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < common.size(); ++i) {
        common[i] = mn[i] < md[i] ? mn[i] : md[i];
        if (common[i] > 0) any = true;
    }
    if (any) {
        num_ = num_.shifted_down(common);
        den_ = den_.shifted_down(common);
    }
    // cancel whole-denominator divisibility and split-linear factors; every
    // pole this library produces is a product of variable differences, so
    // trial division by v_i - v_j keeps fractions in lowest terms without a
    // multivariate gcd
    if (!den_.is_constant()) {
        if (auto q = num_.divided_exact(den_)) {
            num_ = std::move(*q);
            den_ = Polynomial(num_.table(), Scalar(1));
        } else {
            auto vars = den_.support();
            for (std::size_t a = 0; a + 1 < vars.size(); ++a) {
                for (std::size_t b = a + 1; b < vars.size(); ++b) {
                    Mono ma(num_.table()->size(), 0), mb(num_.table()->size(), 0);
                    ma[vars[a]] = 1;
                    mb[vars[b]] = 1;
                    Polynomial binom(num_.table());
                    binom.add_term(ma, Scalar(1));
                    binom.add_term(mb, Scalar(-1));
                    while (true) {
                        auto qd = den_.divided_exact(binom);
                        if (!qd) break;
                        auto qn = num_.divided_exact(binom);
                        if (!qn) break;
                        den_ = std::move(*qd);
                        num_ = std::move(*qn);
                    }
                    if (den_.is_constant()) break;
                }
                if (den_.is_constant()) break;
            }
        }
    }
    if (den_.is_constant()) {
        Scalar d = den_.constant_value();
        if (!d.is_one()) {
            num_ = num_.scaled(Scalar(1) / d);
            den_ = Polynomial(num_.table(), Scalar(1));
        }
        return;
    }
    // make the denominator primitive with positive leading coefficient
    Scalar c = den_.content();
    if (den_.terms().begin()->second.sign() < 0) c = -c;
    if (!c.is_one()) {
        Scalar inv = Scalar(1) / c;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool RationalFunction::is_one() const { return num_ == den_; }

Polynomial RationalFunction::as_polynomial() const {
    if (!den_.is_constant())
        throw std::domain_error("RationalFunction: denominator not constant");
    Scalar d = den_.constant_value();
    return d.is_one() ? num_ : num_.scaled(Scalar(1) / d);
}

Scalar RationalFunction::constant_value() const {
    if (!is_constant()) throw std::domain_error("RationalFunction: not constant");
    if (num_.is_zero()) return Scalar(0);
    return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction &RationalFunction::operator+=(const RationalFunction &o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero())
        den_ = Polynomial(num_.table(), Scalar(1));
    else
        normalize();
    return *this;
}

RationalFunction &RationalFunction::operator-=(const RationalFunction &o) { return *this += -o; }

RationalFunction &RationalFunction::operator*=(const RationalFunction &o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        *this = RationalFunction(Polynomial(num_.table(), Scalar(0)));
        return *this;
    }
    // structural cross cancellations
    if (den_ == o.num_) {
        den_ = o.den_;
        align_tables(num_, den_);
        normalize();
        return *this;
    }
    if (num_ == o.den_) {
        num_ = o.num_;
        align_tables(num_, den_);
        normalize();
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction &RationalFunction::operator/=(const RationalFunction &o) {
    if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    RationalFunction inv(o.den_, o.num_);
    return *this *= inv;
}

RationalFunction RationalFunction::scaled(const Scalar &c) const {
    RationalFunction r = *this;
    r.num_ = r.num_.scaled(c);
    if (r.num_.is_zero()) r.den_ = Polynomial(r.num_.table(), Scalar(1));
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r(Polynomial(table(), Scalar(1)));
    RationalFunction base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

bool eq(const RationalFunction &a, const RationalFunction &b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
    Polynomial dn = num_.derivative(var);
    if (den_.is_constant()) return RationalFunction(std::move(dn), den_);
    Polynomial dd = den_.derivative(var);
    if (dd.is_zero()) return RationalFunction(std::move(dn), den_);
    return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
}

RationalFunction RationalFunction::derivative(const std::string &var) const {
    return derivative(num_.table()->index(var));
}

std::string RationalFunction::str() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::optional<Scalar> rational_constant(const RationalFunction &r) {
    if (r.is_zero()) return Scalar(0);
    const auto &ln = *r.num().terms().begin();
    const auto &ld = *r.den().terms().begin();
    if (ln.first != ld.first) return std::nullopt;
    Scalar c = ln.second / ld.second;
    if ((r.num() - r.den().scaled(c)).is_zero()) return c;
    return std::nullopt;
}

namespace {

// substitute mapped variables one at a time
RationalFunction substitute_impl(const Polynomial &p,
                                 const std::map<std::string, RationalFunction> &bindings,
                                 const VarTablePtr &target) {
    // find a mapped variable actually occurring in p
    const VarTablePtr &tab = p.table();
    std::size_t pick = tab->size();
    for (std::size_t i = 0; i < tab->size() && pick == tab->size(); ++i) {
        if (!bindings.count(tab->name(i))) continue;
        for (const auto &[m, c] : p.terms()) {
            (void)c;
            if (m[i] != 0) {
                pick = i;
                break;
            }
        }
    }
    if (pick == tab->size()) {
        // base case: rename remaining variables into the target table
        Polynomial r(target);
        Mono mt(target->size(), 0);
        for (const auto &[m, c] : p.terms()) {
            std::fill(mt.begin(), mt.end(), 0);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                mt[target->index(tab->name(i))] = m[i];
            }
            r.add_term(mt, c);
        }
        return RationalFunction(std::move(r));
    }
    // collect by the exponent of the picked variable
    std::map<int32_t, Polynomial> slices;
    for (const auto &[m, c] : p.terms()) {
        Mono rest = m;
        int32_t e = rest[pick];
        rest[pick] = 0;
        auto it = slices.find(e);
        if (it == slices.end()) it = slices.emplace(e, Polynomial(tab)).first;
        it->second.add_term(rest, c);
    }
    const RationalFunction &b = bindings.at(tab->name(pick));
    RationalFunction acc(Polynomial(target, Scalar(0)));
    for (const auto &[e, q] : slices) {
        RationalFunction part = substitute_impl(q, bindings, target);
        if (e != 0) part *= b.pow(e);
        acc += part;
    }
    return acc;
}

} // namespace

RationalFunction substitute(const Polynomial &p,
                            const std::map<std::string, RationalFunction> &bindings,
                            const VarTablePtr &target) {
    return substitute_impl(p, bindings, target);
}

RationalFunction substitute(const RationalFunction &r,
                            const std::map<std::string, RationalFunction> &bindings,
                            const VarTablePtr &target) {
    RationalFunction n = substitute(r.num(), bindings, target);
    RationalFunction d = substitute(r.den(), bindings, target);
    return n / d;
}

} // namespace affkm
