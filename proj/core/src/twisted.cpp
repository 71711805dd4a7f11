#include "affkm/twisted.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affkm {

// ---------------------------------------------------------------- LinForm

LinForm LinForm::operator-() const {
    LinForm r;
    r.cst_ = -cst_;
    for (const auto &[n, c] : coeffs_) r.coeffs_.emplace(n, -c);
    return r;
}

LinForm &LinForm::operator+=(const LinForm &o) {
    cst_ += o.cst_;
    for (const auto &[n, c] : o.coeffs_) {
        auto [it, fresh] = coeffs_.emplace(n, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

LinForm LinForm::scaled(const Scalar &c) const {
    LinForm r;
    if (c.is_zero()) return r;
    r.cst_ = cst_ * c;
    for (const auto &[n, cc] : coeffs_) r.coeffs_.emplace(n, cc * c);
    return r;
}

LinForm LinForm::shifted(const Scalar &c) const {
    LinForm r = *this;
    r.cst_ += c;
    return r;
}

LinForm LinForm::bound(const std::string &name, const Scalar &value) const {
    LinForm r = *this;
    auto it = r.coeffs_.find(name);
    if (it != r.coeffs_.end()) {
        r.cst_ += it->second * value;
        r.coeffs_.erase(it);
    }
    return r;
}

bool operator<(const LinForm &a, const LinForm &b) {
    if (a.cst_ != b.cst_) return a.cst_ < b.cst_;
    return a.coeffs_ < b.coeffs_;
}

Polynomial LinForm::as_polynomial(const VarTablePtr &table) const {
    Polynomial p(table, cst_);
    for (const auto &[n, c] : coeffs_)
        p += Polynomial::variable(table, n).scaled(c);
    return p;
}

std::string LinForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto &[n, c] : coeffs_) {
        if (!first) os << "+";
        first = false;
        if (!c.is_one()) os << c.str() << "*";
        os << n;
    }
    if (!cst_.is_zero() || first) {
        if (!first && cst_.sign() >= 0) os << "+";
        os << cst_.str();
    }
    return os.str();
}

// ---------------------------------------------------- SubstitutionRecord

SubstitutionRecord::SubstitutionRecord(std::vector<std::string> args,
                                       std::vector<RationalFunction> values, std::size_t n_xi,
                                       int cap_xi, int cap_t)
    : args_(std::move(args)), values_(std::move(values)), nxi_(n_xi), capxi_(cap_xi),
      capt_(cap_t) {
    if (args_.size() != values_.size())
        throw std::invalid_argument("SubstitutionRecord: args/values mismatch");
    if (nxi_ > args_.size())
        throw std::invalid_argument("SubstitutionRecord: xi count exceeds arity");
}

std::size_t SubstitutionRecord::arg_index(const std::string &name) const {
    for (std::size_t i = 0; i < args_.size(); ++i)
        if (args_[i] == name) return i;
    throw std::invalid_argument("SubstitutionRecord: unknown argument '" + name + "'");
}

bool SubstitutionRecord::within_cap(const JetKey &k) const {
    int xi = 0, tt = 0;
    for (std::size_t i = 0; i < k.size(); ++i)
        (i < nxi_ ? xi : tt) += k[i];
    return xi <= capxi_ && tt <= capt_;
}

bool operator==(const SubstitutionRecord &a, const SubstitutionRecord &b) {
    if (a.args_ != b.args_ || a.nxi_ != b.nxi_) return false;
    for (std::size_t i = 0; i < a.values_.size(); ++i)
        if (a.values_[i] != b.values_[i]) return false;
    return true;
}

// ------------------------------------------------------- TwistedFunction

TwistedFunction TwistedFunction::unknown(VarTablePtr table, RecordPtr record) {
    TwistedFunction f(table, record);
    Term t;
    t.coeff = RationalFunction(Polynomial(f.table_, Scalar(1)));
    t.jets.push_back(JetKey(record ? record->arity() : 0, 0));
    f.terms_.push_back(std::move(t));
    return f;
}

TwistedFunction TwistedFunction::from_rational(VarTablePtr table, RecordPtr record,
                                               const RationalFunction &c) {
    TwistedFunction f(std::move(table), std::move(record));
    Term t;
    t.coeff = c;
    f.add_term(std::move(t));
    return f;
}

void TwistedFunction::add_term(Term t) {
    terms_.push_back(std::move(t));
    canonicalize();
}

namespace {

std::string factor_sig(const std::vector<TwistedFactor> &fs) {
    std::string s;
    for (const auto &f : fs) {
        s += "(";
        s += f.base.str();
        s += ")^(";
        s += f.exponent.str();
        s += ");";
    }
    return s;
}

struct TermKey {
    std::string sig;
    JetMono jets;
    bool operator<(const TermKey &o) const {
        if (sig != o.sig) return sig < o.sig;
        return jets < o.jets;
    }
};

} // namespace

void TwistedFunction::canonicalize() {
    std::map<TermKey, Term> acc;
    for (auto &t : terms_) {
        if (t.coeff.is_zero()) continue;
        // merge factors with equal bases; absorb constant integer exponents
        std::map<std::string, TwistedFactor> merged;
        for (auto &f : t.factors) {
            if (f.base.is_zero())
                throw std::domain_error("TwistedFunction: zero factor base");
            if (f.exponent.is_zero()) continue;
            std::string key = f.base.str();
            auto [it, fresh] = merged.emplace(key, f);
            if (!fresh) it->second.exponent += f.exponent;
        }
        std::vector<TwistedFactor> kept;
        RationalFunction coeff = t.coeff;
        for (auto &[key, f] : merged) {
            (void)key;
            if (f.exponent.is_zero()) continue;
            auto cv = f.exponent.constant_value();
            if (cv && cv->is_integer()) {
                long n = cv->as_long();
                if (n >= 0)
                    coeff *= RationalFunction(f.base.pow(n));
                else
                    coeff *= RationalFunction(Polynomial(table_, Scalar(1)), f.base.pow(-n));
            } else {
                kept.push_back(std::move(f));
            }
        }
        if (coeff.is_zero()) continue;
        std::sort(t.jets.begin(), t.jets.end());
        TermKey k{factor_sig(kept), t.jets};
        auto [it, fresh] = acc.emplace(k, Term{std::move(kept), coeff, t.jets});
        if (!fresh) {
            it->second.coeff += coeff;
        }
    }
    terms_.clear();
    for (auto &[k, t] : acc) {
        (void)k;
        if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
    }
}

TwistedFunction TwistedFunction::operator-() const {
    TwistedFunction r = *this;
    for (auto &t : r.terms_) t.coeff = -t.coeff;
    return r;
}

static void check_same_record(const TwistedFunction &a, const TwistedFunction &b) {
    const RecordPtr &ra = a.record(), &rb = b.record();
    if (ra == rb) return;
    if (ra && rb && *ra == *rb) return;
    throw std::invalid_argument("TwistedFunction: substitution records differ");
}

TwistedFunction &TwistedFunction::operator+=(const TwistedFunction &o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty() && !table_) {
        *this = o;
        return *this;
    }
    check_same_record(*this, o);
    for (const auto &t : o.terms_) terms_.push_back(t);
    canonicalize();
    return *this;
}

TwistedFunction &TwistedFunction::operator-=(const TwistedFunction &o) { return *this += -o; }

TwistedFunction operator*(const TwistedFunction &a, const TwistedFunction &b) {
    check_same_record(a, b);
    TwistedFunction r(a.table_ ? a.table_ : b.table_, a.record_ ? a.record_ : b.record_);
    for (const auto &ta : a.terms_) {
        for (const auto &tb : b.terms_) {
            TwistedFunction::Term t;
            t.factors = ta.factors;
            t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
            t.coeff = ta.coeff * tb.coeff;
            t.jets = ta.jets;
            t.jets.insert(t.jets.end(), tb.jets.begin(), tb.jets.end());
            r.terms_.push_back(std::move(t));
        }
    }
    r.canonicalize();
    return r;
}

TwistedFunction TwistedFunction::scaled(const RationalFunction &c) const {
    TwistedFunction r = *this;
    for (auto &t : r.terms_) t.coeff *= c;
    r.canonicalize();
    return r;
}

TwistedFunction TwistedFunction::derivative(const std::string &var) const {
    std::size_t v = table_->index(var);
    TwistedFunction r(table_, record_);
    for (const auto &t : terms_) {
        // log-derivatives of the symbolic-power factors
        for (std::size_t i = 0; i < t.factors.size(); ++i) {
            Polynomial db = t.factors[i].base.derivative(v);
            if (db.is_zero()) continue;
            Term nt = t;
            Polynomial gamma = t.factors[i].exponent.as_polynomial(table_);
            nt.coeff = t.coeff * RationalFunction(gamma * db, t.factors[i].base);
            r.terms_.push_back(std::move(nt));
        }
        // rational part
        RationalFunction dc = t.coeff.derivative(v);
        if (!dc.is_zero()) {
            Term nt = t;
            nt.coeff = dc;
            r.terms_.push_back(std::move(nt));
        }
        // chain rule through the substitution record on each jet symbol
        for (std::size_t p = 0; p < t.jets.size(); ++p) {
            for (std::size_t a = 0; record_ && a < record_->arity(); ++a) {
                RationalFunction dval = record_->value(a).derivative(v);
                if (dval.is_zero()) continue;
                Term nt = t;
                nt.jets[p][a] += 1;
                if (!record_->within_cap(nt.jets[p]))
                    throw std::domain_error("TwistedFunction: jet cap exceeded");
                nt.coeff = t.coeff * dval;
                r.terms_.push_back(std::move(nt));
            }
        }
    }
    r.canonicalize();
    return r;
}

bool TwistedFunction::is_zero() const { return terms_.empty(); }

bool TwistedFunction::jet_linear() const {
    for (const auto &t : terms_)
        if (t.jets.size() != 1) return false;
    return true;
}

std::string jet_str(const JetKey &k, const SubstitutionRecord &rec) {
    std::ostringstream os;
    os << "Psi[";
    bool first = true;
    for (std::size_t i = 0; i < k.size(); ++i) {
        for (int32_t j = 0; j < k[i]; ++j) {
            if (!first) os << ",";
            first = false;
            os << rec.arg(i);
        }
    }
    os << "]";
    return os.str();
}

std::string TwistedFunction::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.str() << ")";
        for (const auto &f : t.factors)
            os << "*(" << f.base.str() << ")^(" << f.exponent.str() << ")";
        for (const auto &j : t.jets) {
            os << "*";
            if (record_)
                os << jet_str(j, *record_);
            else
                os << "Psi[?]";
        }
    }
    return os.str();
}

TwistedFunction diffop_apply(const DiffOp &op, const TwistedFunction &f) {
    TwistedFunction acc = TwistedFunction::zero(f.table(), f.record());
    for (const auto &[beta, c] : op.terms()) {
        TwistedFunction g = f;
        for (std::size_t v = 0; v < beta.size(); ++v)
            for (int32_t i = 0; i < beta[v]; ++i) g = g.derivative(op.table()->name(v));
        acc += g.scaled(c);
    }
    return acc;
}

TwistedFunction substitute(const TwistedFunction &f, const SubstitutionPlan &plan) {
    VarTablePtr target = plan.target ? plan.target : f.table();
    // parameter bindings act on variables too
    std::map<std::string, RationalFunction> vars = plan.vars;
    for (const auto &[p, v] : plan.params)
        vars.emplace(p, RationalFunction(Polynomial(target, v)));

    RecordPtr record = plan.new_record;
    if (!record && f.record()) {
        std::vector<std::string> args;
        std::vector<RationalFunction> values;
        for (std::size_t i = 0; i < f.record()->arity(); ++i) {
            args.push_back(f.record()->arg(i));
            values.push_back(substitute(f.record()->value(i), vars, target));
        }
        record = std::make_shared<SubstitutionRecord>(std::move(args), std::move(values),
                                                      f.record()->n_xi(), f.record()->cap_xi(),
                                                      f.record()->cap_t());
    }

    TwistedFunction r(target, record);
    std::vector<TwistedFunction::Term> out;
    for (const auto &t : f.terms()) {
        TwistedFunction::Term nt;
        nt.coeff = substitute(t.coeff, vars, target);
        nt.jets = t.jets;
        for (const auto &fac : t.factors) {
            LinForm expnt = fac.exponent;
            for (const auto &[p, v] : plan.params) expnt = expnt.bound(p, v);
            RationalFunction val = substitute(fac.base, vars, target);
            if (val.is_zero())
                throw std::domain_error("substitute: factor base became zero");
            nt.factors.push_back(TwistedFactor{val.num(), expnt});
            if (!val.den().is_constant() || !val.den().constant_value().is_one())
                nt.factors.push_back(TwistedFactor{val.den(), -expnt});
        }
        out.push_back(std::move(nt));
    }
    for (auto &t : out) r.push_term_raw(std::move(t));
    r.canonicalize();
    return r;
}

// ----------------------------------------------------------- RelationSet

RelationSet::RelationSet(std::vector<TwistedFunction> relations) : rels_(std::move(relations)) {
    for (const auto &r : rels_) {
        if (r.is_zero()) continue;
        if (!r.jet_linear())
            throw std::invalid_argument("RelationSet: relation not linear in jet symbols");
        for (const auto &t : r.terms())
            if (!t.factors.empty())
                throw std::invalid_argument("RelationSet: relation carries twisted factors");
    }
}

RelationSet RelationSet::prolonged(int order) const {
    std::vector<TwistedFunction> out = rels_;
    std::vector<TwistedFunction> frontier = rels_;
    for (int d = 0; d < order; ++d) {
        std::vector<TwistedFunction> next;
        for (const auto &r : frontier) {
            if (!r.record()) continue;
            for (std::size_t a = 0; a < r.record()->n_xi(); ++a) {
                TwistedFunction dr = r.derivative(r.record()->arg(a));
                if (!dr.is_zero()) next.push_back(dr);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return RelationSet(std::move(out));
}

// --------------------------------------------------------- reduce_modulo

namespace {

// (total order, then lexicographic with the earlier argument dominating)
struct JetRankGreater {
    bool operator()(const JetKey &a, const JetKey &b) const {
        int64_t ta = 0, tb = 0;
        for (auto v : a) ta += v;
        for (auto v : b) tb += v;
        if (ta != tb) return ta > tb;
        const std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return a.size() > b.size();
    }
};

using Row = std::map<JetKey, RationalFunction, JetRankGreater>;

// dst := dst - c * src
void row_axpy(Row &dst, const RationalFunction &c, const Row &src) {
    for (const auto &[k, v] : src) {
        RationalFunction add = c * v;
        auto it = dst.find(k);
        if (it == dst.end()) {
            add = -add;
            if (!add.is_zero()) dst.emplace(k, std::move(add));
        } else {
            it->second -= add;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

} // namespace

TwistedFunction reduce_modulo(const TwistedFunction &f, const RelationSet &rels) {
    // ground the relation rows through f's substitution record
    if (!f.record()) throw std::invalid_argument("reduce_modulo: function has no record");
    SubstitutionPlan plan;
    plan.target = f.table();
    plan.new_record = f.record();
    for (std::size_t i = 0; i < f.record()->arity(); ++i) {
        // the relation rings use the formal argument names as variables
        plan.vars[f.record()->arg(i)] = f.record()->value(i);
    }

    std::map<JetKey, Row, JetRankGreater> pivots;
    for (const auto &rel : rels.relations()) {
        if (rel.is_zero()) continue;
        TwistedFunction g = substitute(rel, plan);
        Row row;
        for (const auto &t : g.terms()) {
            auto it = row.find(t.jets[0]);
            if (it == row.end())
                row.emplace(t.jets[0], t.coeff);
            else {
                it->second += t.coeff;
                if (it->second.is_zero()) row.erase(it);
            }
        }
        // forward-eliminate against existing pivots
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = row.begin(); it != row.end(); ++it) {
                auto pv = pivots.find(it->first);
                if (pv != pivots.end()) {
                    RationalFunction c = it->second;
                    row.erase(it);
                    row_axpy(row, c, pv->second);
                    // the pivot cell of pv->second is 1, so the erase plus
                    // axpy removed the cell exactly
                    changed = true;
                    break;
                }
            }
        }
        if (row.empty()) continue; // dependent relation
        // normalize to pivot coefficient 1 and store
        JetKey pivot = row.begin()->first;
        RationalFunction lead = row.begin()->second;
        Row stored;
        for (auto &[k, v] : row)
            if (!(k == pivot)) stored.emplace(k, v / lead);
        // back-substitute into previously stored rows
        for (auto &[pk, prow] : pivots) {
            (void)pk;
            auto hit = prow.find(pivot);
            if (hit != prow.end()) {
                RationalFunction c = hit->second;
                prow.erase(hit);
                row_axpy(prow, c, stored);
            }
        }
        pivots.emplace(std::move(pivot), std::move(stored));
    }

    // reduce every factor-signature group of f
    TwistedFunction out(f.table(), f.record());
    std::map<std::string, std::pair<std::vector<TwistedFactor>, Row>> groups;
    std::vector<TwistedFunction::Term> passthrough;
    for (const auto &t : f.terms()) {
        if (t.jets.empty()) {
            passthrough.push_back(t);
            continue;
        }
        if (t.jets.size() != 1)
            throw std::domain_error("reduce_modulo: jets are not linear");
        std::string sig;
        for (const auto &fac : t.factors)
            sig += "(" + fac.base.str() + ")^(" + fac.exponent.str() + ");";
        auto [it, fresh] = groups.emplace(sig, std::make_pair(t.factors, Row{}));
        auto rit = it->second.second.find(t.jets[0]);
        if (rit == it->second.second.end())
            it->second.second.emplace(t.jets[0], t.coeff);
        else {
            rit->second += t.coeff;
            if (rit->second.is_zero()) it->second.second.erase(rit);
        }
        (void)fresh;
    }
    for (auto &[sig, group] : groups) {
        (void)sig;
        Row &row = group.second;
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = row.begin(); it != row.end(); ++it) {
                auto pv = pivots.find(it->first);
                if (pv != pivots.end()) {
                    RationalFunction c = it->second;
                    row.erase(it);
                    row_axpy(row, c, pv->second);
                    changed = true;
                    break;
                }
            }
        }
        for (auto &[k, v] : row) {
            TwistedFunction::Term t;
            t.factors = group.first;
            t.coeff = v;
            t.jets.push_back(k);
            out.push_term_raw(std::move(t));
        }
    }
    for (auto &t : passthrough) out.push_term_raw(std::move(t));
    out.canonicalize();
    return out;
}

} // namespace affkm
