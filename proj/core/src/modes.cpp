#include "affkm/modes.hpp"

#include <sstream>
#include <stdexcept>

namespace affkm {

const char *gen_name(Gen g) {
    switch (g) {
    case Gen::E: return "e";
    case Gen::H: return "h";
    case Gen::F: return "f";
    }
    return "?";
}

int gen_degree(Gen g) { return g == Gen::E ? 1 : (g == Gen::F ? -1 : 0); }
int gen_weight(Gen g) { return 2 * gen_degree(g); }

std::pair<long, Gen> gen_bracket(Gen a, Gen b) {
    if (a == b) return {0, Gen::H};
    if (a == Gen::E && b == Gen::F) return {1, Gen::H};
    if (a == Gen::F && b == Gen::E) return {-1, Gen::H};
    if (a == Gen::H && b == Gen::E) return {2, Gen::E};
    if (a == Gen::E && b == Gen::H) return {-2, Gen::E};
    if (a == Gen::H && b == Gen::F) return {-2, Gen::F};
    if (a == Gen::F && b == Gen::H) return {2, Gen::F};
    return {0, Gen::H};
}

long gen_kappa(Gen a, Gen b) {
    if (a == Gen::H && b == Gen::H) return 2;
    if ((a == Gen::E && b == Gen::F) || (a == Gen::F && b == Gen::E)) return 1;
    return 0;
}

const std::vector<SugawaraPair> &sugawara_pairs() {
    static const std::vector<SugawaraPair> pairs{
        {Gen::E, Gen::F, Scalar(1)},
        {Gen::H, Gen::H, Scalar(1, 2)},
        {Gen::F, Gen::E, Scalar(1)},
    };
    return pairs;
}

ModeElement::ModeElement(VarTablePtr ktab)
    : ktab_(std::move(ktab)), central_(Polynomial(ktab_, Scalar(0))) {}

ModeElement ModeElement::single(VarTablePtr ktab, Gen a, long mode, const Scalar &c) {
    ModeElement x(std::move(ktab));
    x.add(a, mode, RationalFunction(Polynomial(x.ktab_, c)));
    return x;
}

ModeElement ModeElement::central(VarTablePtr ktab, const RationalFunction &c) {
    ModeElement x(std::move(ktab));
    x.central_ += c;
    return x;
}

bool ModeElement::is_zero() const { return terms_.empty() && central_.is_zero(); }

void ModeElement::add(Gen a, long mode, const RationalFunction &c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(static_cast<int>(a), mode);
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void ModeElement::add_central(const RationalFunction &c) { central_ += c; }

ModeElement ModeElement::operator-() const {
    ModeElement r(ktab_);
    for (const auto &[k, c] : terms_) r.terms_.emplace(k, -c);
    r.central_ = -central_;
    return r;
}

ModeElement &ModeElement::operator+=(const ModeElement &o) {
    if (!ktab_) *this = ModeElement(o.ktab_);
    for (const auto &[k, c] : o.terms_) add(static_cast<Gen>(k.first), k.second, c);
    central_ += o.central_;
    return *this;
}

ModeElement &ModeElement::operator-=(const ModeElement &o) { return *this += -o; }

ModeElement ModeElement::scaled(const RationalFunction &c) const {
    ModeElement r(ktab_);
    if (c.is_zero()) return r;
    for (const auto &[k, cc] : terms_) r.add(static_cast<Gen>(k.first), k.second, cc * c);
    r.central_ = central_ * c;
    return r;
}

ModeElement bracket_modes(const ModeElement &x, const ModeElement &y) {
    ModeElement r(x.ktab_ ? x.ktab_ : y.ktab_);
    for (const auto &[ka, ca] : x.terms_) {
        Gen a = static_cast<Gen>(ka.first);
        long m = ka.second;
        for (const auto &[kb, cb] : y.terms_) {
            Gen b = static_cast<Gen>(kb.first);
            long n = kb.second;
            auto [coef, g] = gen_bracket(a, b);
            RationalFunction prod = ca * cb;
            if (coef != 0) r.add(g, m + n, prod.scaled(Scalar(coef)));
            if (m + n == 0) {
                long kap = gen_kappa(a, b);
                if (kap != 0) r.add_central(prod.scaled(Scalar(m * kap)));
            }
        }
    }
    return r;
}

ModeElement ModeElement::spectral_flow(long ell) const {
    ModeElement r(ktab_);
    for (const auto &[k, c] : terms_) {
        Gen a = static_cast<Gen>(k.first);
        long m = k.second;
        r.add(a, m + gen_degree(a) * ell, c);
        if (a == Gen::H && m == 0) r.add_central(c.scaled(Scalar(ell))); // kappa(lambda,h) = ell
    }
    r.central_ += central_;
    return r;
}

bool operator==(const ModeElement &a, const ModeElement &b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second != ib->second) return false;
    }
    return a.central_ == b.central_;
}

std::string ModeElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << gen_name(static_cast<Gen>(k.first)) << "[" << k.second
           << "]";
    }
    if (!central_.is_zero()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << central_.str() << ")*K";
    }
    return first ? "0" : os.str();
}

ModeElement mode_element_from_matrix(const VarTablePtr &ktab, const LaurentMatrix2 &m) {
    if (!m.trace().is_zero())
        throw std::invalid_argument("mode_element_from_matrix: matrix has nonzero trace");
    ModeElement r(ktab);
    for (const auto &[e, c] : m.entry(0, 1).coeffs()) r.add(Gen::E, e, c);
    for (const auto &[e, c] : m.entry(1, 0).coeffs()) r.add(Gen::F, e, c);
    for (const auto &[e, c] : m.entry(0, 0).coeffs()) r.add(Gen::H, e, c);
    return r;
}

LaurentMatrix2 gen_realization(const VarTablePtr &ktab, const std::string &var, Gen g,
                               long mode) {
    LaurentMatrix2 x;
    for (auto &p : x.e) p = LaurentPolynomial(var, ktab);
    RationalFunction one(Polynomial(ktab, Scalar(1)));
    switch (g) {
    case Gen::E: x.entry(0, 1).add_term(static_cast<int>(mode), one); break;
    case Gen::F: x.entry(1, 0).add_term(static_cast<int>(mode), one); break;
    case Gen::H:
        x.entry(0, 0).add_term(static_cast<int>(mode), one);
        x.entry(1, 1).add_term(static_cast<int>(mode), -one);
        break;
    }
    return x;
}

ModeElement ad_loop(const LoopElement &g, const ModeElement &x) {
    const VarTablePtr &ktab = x.ktab();
    const std::string &var = g.matrix().var();
    ModeElement out(ktab);
    out.add_central(x.central_part());
    if (x.terms().empty()) return out;

    LaurentMatrix2 gm = g.matrix().plain();
    LaurentMatrix2 ginv = g.matrix().inverse().plain();
    // central correction density: C(t) = g^{-1} dg/dt
    LaurentMatrix2 cmat = ginv * g.matrix().derivative();

    for (const auto &[k, coef] : x.terms()) {
        Gen gen = static_cast<Gen>(k.first);
        long mode = k.second;
        LaurentMatrix2 real = gen_realization(ktab, var, gen, mode);
        LaurentMatrix2 conj = gm * real * ginv;
        if (!conj.trace().is_zero())
            throw std::logic_error("ad_loop: conjugation produced a trace");
        ModeElement piece = mode_element_from_matrix(ktab, conj);
        // central correction res_0 kappa(g^{-1}dg, a_m) = res_0 tr(C a) t^m
        piece.add_central((cmat * real).trace().residue());
        out += piece.scaled(coef);
    }
    return out;
}

} // namespace affkm
