#include "affkm/module_state.hpp"
#include <functional>

#include <sstream>
#include <stdexcept>

namespace affkm {

bool annihilates(Gen a, long m, long ell) {
    // Ad(t^{-lambda}) a_m = a_{m - deg(a) ell} must annihilate the untwisted
    // vacuum; Cartan modes annihilate for m > 0 and act by a scalar at m = 0.
    switch (a) {
    case Gen::E: return m >= ell;
    case Gen::F: return m >= -ell;
    case Gen::H: return m > 0 || (m == 0 && ell == 0);
    }
    return false;
}

bool ModulePolicy::kills(Gen a, long m) const {
    if (kind == BoundaryKind::TwistedVacuum) return annihilates(a, m, twist);
    // Verma-induced: t g(O) kills the Verma part; f_0 kills the lowest
    // weight vector; e_0 creates; h_0 acts by the scalar
    if (m > 0) return true;
    if (m == 0) return a == Gen::F;
    return false;
}

long ModulePolicy::h0_scalar_times_k() const {
    // h_0 |0>^lambda = -kappa(lambda, h) k |0>^lambda with kappa(lambda,h) = twist,
    // and the Verma lowest weight is -k kappa(lambda,-) at twist 1
    return kind == BoundaryKind::TwistedVacuum ? -twist : -1;
}

long ModulePolicy::max_survival_mode() const {
    if (kind == BoundaryKind::TwistedVacuum) return twist < 0 ? -twist : twist;
    return 0;
}

ModuleState::ModuleState(VarTablePtr ktab, ModulePolicy policy)
    : ktab_(std::move(ktab)), policy_(policy) {}

ModuleState ModuleState::vacuum(VarTablePtr ktab, ModulePolicy policy) {
    ModuleState v(std::move(ktab), policy);
    v.terms_.emplace(Word{}, RationalFunction(Polynomial(v.ktab_, Scalar(1))));
    return v;
}

void ModuleState::add_word(const Word &w, const RationalFunction &c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ModuleState ModuleState::operator-() const {
    ModuleState r(ktab_, policy_);
    for (const auto &[w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

ModuleState &ModuleState::operator+=(const ModuleState &o) {
    if (!ktab_) *this = ModuleState(o.ktab_, o.policy_);
    if (!(policy_ == o.policy_))
        throw std::invalid_argument("ModuleState: mixing states of different modules");
    for (const auto &[w, c] : o.terms_) add_word(w, c);
    return *this;
}

ModuleState &ModuleState::operator-=(const ModuleState &o) { return *this += -o; }

ModuleState ModuleState::scaled(const RationalFunction &c) const {
    ModuleState r(ktab_, policy_);
    if (c.is_zero()) return r;
    for (const auto &[w, cc] : terms_) r.add_word(w, cc * c);
    return r;
}

namespace {

// canonical order: modes decreasing left to right, e < h < f at equal mode
bool sits_left(Gen a, long m, const Letter &first) {
    if (m != first.mode) return m > first.mode;
    return static_cast<uint8_t>(a) <= first.gen;
}

} // namespace

ModuleState ModuleState::apply(Gen a, long mode) const {
    RationalFunction kvar = RationalFunction::variable(ktab_, "k");
    RationalFunction one(Polynomial(ktab_, Scalar(1)));

    // canonical form of x_m w, for one canonical word w
    std::function<ModuleState(Gen, long, const Word &)> go = [&](Gen x, long m,
                                                                 const Word &w) {
        ModuleState res(ktab_, policy_);
        if (w.empty()) {
            if (x == Gen::H && m == 0 && policy_.h0_scalar_times_k() != 0) {
                res.add_word(Word{}, kvar.scaled(Scalar(policy_.h0_scalar_times_k())));
                return res;
            }
            if (policy_.kills(x, m)) return res;
            res.add_word(Word{Letter{static_cast<uint8_t>(x), static_cast<int32_t>(m)}}, one);
            return res;
        }
        // only genuine creation operators become PBW letters; annihilating
        // and scalar modes must commute through to the cyclic vector
        bool is_letter = !policy_.kills(x, m) && !(x == Gen::H && m == 0);
        if (is_letter && sits_left(x, m, w.front())) {
            Word nw;
            nw.reserve(w.size() + 1);
            nw.push_back(Letter{static_cast<uint8_t>(x), static_cast<int32_t>(m)});
            nw.insert(nw.end(), w.begin(), w.end());
            res.add_word(nw, one);
            return res;
        }
        Gen b = static_cast<Gen>(w.front().gen);
        long n = w.front().mode;
        Word rest(w.begin() + 1, w.end());
        // x_m b_n rest = b_n (x_m rest) + [x_m, b_n] rest
        ModuleState s1 = go(x, m, rest);
        for (const auto &[iw, ic] : s1.terms()) res += go(b, n, iw).scaled(ic);
        auto [coef, g] = gen_bracket(x, b);
        if (coef != 0) res += go(g, m + n, rest).scaled(RationalFunction(Polynomial(ktab_, Scalar(coef))));
        if (m + n == 0) {
            long kap = m * gen_kappa(x, b);
            // central term of the bracket: k acts by the level variable
            if (kap != 0) res.add_word(rest, kvar.scaled(Scalar(kap)));
        }
        return res;
    };

    ModuleState out(ktab_, policy_);
    for (const auto &[w, c] : terms_) out += go(a, mode, w).scaled(c);
    return out;
}

ModuleState ModuleState::apply(const ModeElement &x) const {
    ModuleState out(ktab_, policy_);
    for (const auto &[key, c] : x.terms()) {
        Gen a = static_cast<Gen>(key.first);
        out += apply(a, key.second).scaled(c);
    }
    if (!x.central_part().is_zero())
        out += scaled(x.central_part() * RationalFunction::variable(ktab_, "k"));
    return out;
}

ModuleState ModuleState::apply_word(const Word &w) const {
    ModuleState cur = *this;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        cur = cur.apply(static_cast<Gen>(it->gen), it->mode);
    return cur;
}

long ModuleState::creation_bound() const {
    long worst = 0;
    for (const auto &[w, c] : terms_) {
        (void)c;
        long sneg = 0;
        for (const auto &l : w)
            if (l.mode < 0) sneg += l.mode;
        if (-sneg > worst) worst = -sneg;
    }
    return policy_.max_survival_mode() + worst;
}

bool operator==(const ModuleState &a, const ModuleState &b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first)) return false;
        if (ia->second != ib->second) return false;
    }
    return true;
}

std::string ModuleState::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*";
        for (const auto &l : w)
            os << gen_name(static_cast<Gen>(l.gen)) << "[" << l.mode << "]*";
        if (policy_.kind == BoundaryKind::TwistedVacuum) {
            os << "vac";
            if (policy_.twist != 0) os << "(lambda=" << Scalar(policy_.twist, 2).str() << "*acheck)";
        } else {
            os << "lowest(-k)";
        }
    }
    return os.str();
}

} // namespace affkm
