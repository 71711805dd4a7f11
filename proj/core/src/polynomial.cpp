#include "affkm/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace affkm {

int64_t mono_degree(const Mono &m) {
    int64_t d = 0;
    for (int32_t e : m) d += e;
    return d;
}

bool GrlexGreater::operator()(const Mono &a, const Mono &b) const {
    int64_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    // lex: the first differing exponent decides, larger first
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return a.size() > b.size();
}

Polynomial::Polynomial(VarTablePtr table, const Scalar &c) : table_(std::move(table)) {
    if (!c.is_zero()) terms_.emplace(Mono(table_->size(), 0), c);
}

Polynomial Polynomial::variable(VarTablePtr table, const std::string &name) {
    Mono m(table->size(), 0);
    m[table->index(name)] = 1;
    return monomial(std::move(table), m, Scalar(1));
}

Polynomial Polynomial::monomial(VarTablePtr table, const Mono &m, const Scalar &c) {
    if (m.size() != table->size())
        throw std::invalid_argument("Polynomial: exponent vector length mismatch");
    Polynomial p(std::move(table));
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

Scalar Polynomial::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw std::domain_error("Polynomial: not constant");
    return terms_.begin()->second;
}

int64_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : mono_degree(terms_.begin()->first);
}

void Polynomial::add_term(const Mono &m, const Scalar &c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(table_);
    for (const auto &[m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
    Polynomial rhs = o;
    Polynomial lhs = *this;
    align_tables(lhs, rhs);
    for (const auto &[m, c] : rhs.terms_) lhs.add_term(m, c);
    *this = std::move(lhs);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) { return *this += -o; }

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    Polynomial x = a, y = b;
    align_tables(x, y);
    Polynomial r(x.table_);
    Mono m(x.table_ ? x.table_->size() : 0, 0);
    for (const auto &[ma, ca] : x.terms_) {
        for (const auto &[mb, cb] : y.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Scalar &c) const {
    Polynomial r(table_);
    if (c.is_zero()) return r;
    for (const auto &[m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Polynomial Polynomial::pow(long e) const {
    if (e < 0) throw std::invalid_argument("Polynomial: negative power");
    Polynomial r(table_, Scalar(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

bool operator==(const Polynomial &a, const Polynomial &b) {
    if (same_table(a.table_, b.table_)) return a.terms_ == b.terms_;
    Polynomial x = a, y = b;
    align_tables(x, y);
    return x.terms_ == y.terms_;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(table_);
    for (const auto &[m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono d = m;
        d[var] -= 1;
        r.add_term(d, c * Scalar(m[var]));
    }
    return r;
}

Polynomial Polynomial::derivative(const std::string &var) const {
    return derivative(table_->index(var));
}

Polynomial Polynomial::embedded(const VarTablePtr &bigger) const {
    if (same_table(table_, bigger)) return *this;
    if (!table_->embeds_into(*bigger))
        throw std::invalid_argument("Polynomial: variable table does not embed");
    std::vector<std::size_t> remap(table_->size());
    for (std::size_t i = 0; i < table_->size(); ++i) remap[i] = bigger->index(table_->name(i));
    Polynomial r(bigger);
    Mono m(bigger->size(), 0);
    for (const auto &[mo, c] : terms_) {
        std::fill(m.begin(), m.end(), 0);
        for (std::size_t i = 0; i < mo.size(); ++i) m[remap[i]] = mo[i];
        r.terms_.emplace(m, c);
    }
    return r;
}

std::optional<Polynomial> Polynomial::divided_exact(const Polynomial &divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (divisor.is_constant()) {
        Scalar c = divisor.constant_value();
        return scaled(Scalar(1) / c);
    }
    Polynomial rem = *this;
    Polynomial quot(table_);
    const auto &dlt = *divisor.terms().begin();
    while (!rem.is_zero()) {
        const auto &rlt = *rem.terms().begin();
        Mono q(rlt.first.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = rlt.first[i] - dlt.first[i];
            if (q[i] < 0) return std::nullopt;
        }
        Scalar c = rlt.second / dlt.second;
        quot.add_term(q, c);
        rem -= divisor * Polynomial::monomial(rem.table(), q, c);
    }
    return quot;
}

std::vector<std::size_t> Polynomial::support() const {
    const std::size_t n = table_ ? table_->size() : 0;
    std::vector<bool> seen(n, false);
    for (const auto &[m, c] : terms_) {
        (void)c;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] != 0) seen[i] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

Mono Polynomial::min_exponents() const {
    const std::size_t n = table_ ? table_->size() : 0;
    Mono m(n, 0);
    bool first = true;
    for (const auto &[mo, c] : terms_) {
        (void)c;
        if (first) {
            m = mo;
            first = false;
        } else {
            for (std::size_t i = 0; i < n; ++i)
                if (mo[i] < m[i]) m[i] = mo[i];
        }
    }
    return m;
}

Polynomial Polynomial::shifted_down(const Mono &m) const {
    Polynomial r(table_);
    for (const auto &[mo, c] : terms_) {
        Mono d = mo;
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] -= m[i];
            if (d[i] < 0) throw std::invalid_argument("Polynomial: shift below zero");
        }
        r.terms_.emplace(d, c);
    }
    return r;
}

Scalar Polynomial::content() const {
    Scalar g(0);
    for (const auto &[m, c] : terms_) {
        (void)m;
        g = g.is_zero() ? (c.sign() < 0 ? -c : c) : Scalar::num_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

void align_tables(Polynomial &p, Polynomial &q) {
    if (same_table(p.table(), q.table())) return;
    if (!p.table() || p.table()->size() == 0) {
        p = Polynomial(q.table(), p.is_zero() ? Scalar(0) : p.constant_value());
        return;
    }
    if (!q.table() || q.table()->size() == 0) {
        q = Polynomial(p.table(), q.is_zero() ? Scalar(0) : q.constant_value());
        return;
    }
    if (p.table()->embeds_into(*q.table())) {
        p = p.embedded(q.table());
        return;
    }
    if (q.table()->embeds_into(*p.table())) {
        q = q.embedded(p.table());
        return;
    }
    throw std::invalid_argument("Polynomial: incompatible variable tables");
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        Scalar a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_vars = mono_degree(m) != 0;
        if (!has_vars || !a.is_one()) {
            os << a.str();
            if (has_vars) os << "*";
        }
        bool firstv = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << table_->name(i);
            if (m[i] != 1) os << "^" << m[i];
        }
    }
    return os.str();
}

} // namespace affkm
