#include "affkm/diffop.hpp"
#include <functional>

#include <sstream>
#include <stdexcept>

namespace affkm {

DiffOp DiffOp::multiplication(const RationalFunction &c) {
    DiffOp d(c.table());
    d.add_term(Mono(c.table()->size(), 0), c);
    return d;
}

DiffOp DiffOp::partial(const VarTablePtr &table, const std::string &var, int order) {
    DiffOp d(table);
    Mono beta(table->size(), 0);
    beta[table->index(var)] = order;
    d.add_term(beta, RationalFunction(Polynomial(table, Scalar(1))));
    return d;
}

void DiffOp::add_term(const Mono &beta, const RationalFunction &c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(beta, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator-() const {
    DiffOp r(table_);
    for (const auto &[b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
}

DiffOp &DiffOp::operator+=(const DiffOp &o) {
    if (!table_) table_ = o.table_;
    for (const auto &[b, c] : o.terms_) add_term(b, c);
    return *this;
}

DiffOp &DiffOp::operator-=(const DiffOp &o) { return *this += -o; }

DiffOp DiffOp::scaled(const RationalFunction &c) const {
    DiffOp r(table_);
    if (c.is_zero()) return r;
    for (const auto &[b, cc] : terms_) r.add_term(b, cc * c);
    return r;
}

namespace {

// enumerate gamma <= beta together with the multi-index binomial coefficient
void for_each_sub_multiindex(const Mono &beta,
                             const std::function<void(const Mono &, const Scalar &)> &fn) {
    Mono gamma(beta.size(), 0);
    // iterative odometer over the box [0,beta]
    Scalar binom(1);
    auto binom_of = [&](const Mono &g) {
        Scalar b(1);
        for (std::size_t i = 0; i < beta.size(); ++i) {
            // C(beta_i, g_i)
            long n = beta[i], k = g[i];
            Scalar c(1);
            for (long j = 0; j < k; ++j) c = c * Scalar(n - j) / Scalar(j + 1);
            b *= c;
        }
        return b;
    };
    while (true) {
        fn(gamma, binom_of(gamma));
        std::size_t i = 0;
        while (i < beta.size()) {
            if (gamma[i] < beta[i]) {
                ++gamma[i];
                break;
            }
            gamma[i] = 0;
            ++i;
        }
        if (i == beta.size()) break;
    }
    (void)binom;
}

RationalFunction iterated_partial(const RationalFunction &f, const Mono &beta) {
    RationalFunction r = f;
    for (std::size_t v = 0; v < beta.size(); ++v)
        for (int32_t k = 0; k < beta[v]; ++k) r = r.derivative(v);
    return r;
}

} // namespace

DiffOp operator*(const DiffOp &a, const DiffOp &b) {
    VarTablePtr tab = a.table_ ? a.table_ : b.table_;
    DiffOp r(tab);
    for (const auto &[b1, c1] : a.terms_) {
        for (const auto &[b2, c2] : b.terms_) {
            // d^b1 (c2 d^b2 f) = sum_{g <= b1} C(b1,g) (d^{b1-g} c2) d^{g+b2} f
            for_each_sub_multiindex(b1, [&](const Mono &g, const Scalar &binom) {
                Mono rest(b1.size());
                for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = b1[i] - g[i];
                RationalFunction dc2 = iterated_partial(c2, rest);
                if (dc2.is_zero()) return;
                Mono out(g.size());
                for (std::size_t i = 0; i < out.size(); ++i) out[i] = g[i] + b2[i];
                r.add_term(out, c1 * dc2.scaled(binom));
            });
        }
    }
    return r;
}

RationalFunction DiffOp::apply(const RationalFunction &f) const {
    RationalFunction acc(Polynomial(table_ ? table_ : f.table(), Scalar(0)));
    for (const auto &[b, c] : terms_) acc += c * iterated_partial(f, b);
    return acc;
}

bool operator==(const DiffOp &a, const DiffOp &b) {
    // canonical term maps; rational coefficients compare by cross multiplication
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second != ib->second) return false;
    }
    return ia == a.terms_.end() && ib == b.terms_.end();
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[b, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] != 0) os << "*D[" << table_->name(i) << "," << b[i] << "]";
    }
    return os.str();
}

} // namespace affkm
