// Differential operators, twisted functions, jets, and linear reduction.

#include "doctest.h"

#include "affkm/twisted.hpp"

#include <random>

using namespace affkm;

namespace {

RationalFunction rf(const Polynomial &p) { return RationalFunction(p); }

DiffOp rho_e(const VarTablePtr &t, const std::string &x) { return DiffOp::partial(t, x); }
DiffOp rho_h(const VarTablePtr &t, const std::string &x, const RationalFunction &w) {
    DiffOp d = DiffOp::partial(t, x).scaled(rf(Polynomial::variable(t, x)).scaled(Scalar(-2)));
    d += DiffOp::multiplication(w);
    return d;
}
DiffOp rho_f(const VarTablePtr &t, const std::string &x, const RationalFunction &w) {
    Polynomial xv = Polynomial::variable(t, x);
    DiffOp d = DiffOp::partial(t, x).scaled(rf(-(xv * xv)));
    d += DiffOp::multiplication(w * rf(xv));
    return d;
}

} // namespace

TEST_CASE("compose satisfies the Leibniz base case") {
    auto t = VarTable::make({"x"});
    DiffOp dx = DiffOp::partial(t, "x");
    DiffOp mx = DiffOp::multiplication(rf(Polynomial::variable(t, "x")));
    DiffOp c = dx * mx; // x*d/dx + 1
    DiffOp expect = mx * dx + DiffOp::multiplication(rf(Polynomial(t, Scalar(1))));
    CHECK(c == expect);
}

TEST_CASE("first-order realization closes into sl2 brackets") {
    auto t = VarTable::make({"y", "chi"});
    RationalFunction chi = rf(Polynomial::variable(t, "chi"));
    DiffOp e = rho_e(t, "y");
    DiffOp h = rho_h(t, "y", chi);
    DiffOp f = rho_f(t, "y", chi);
    CHECK(commutator(e, f) == h);
    CHECK(commutator(h, e) == e.scaled(rf(Polynomial(t, Scalar(2)))));
    CHECK(commutator(h, f) == f.scaled(rf(Polynomial(t, Scalar(-2)))));
}

TEST_CASE("compose is associative on random small operators") {
    std::mt19937 rng(5);
    auto t = VarTable::make({"x", "y"});
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<int> ord(0, 2);
    auto rand_op = [&]() {
        DiffOp d(t);
        for (int i = 0; i < 2; ++i) {
            Mono beta(2, 0);
            beta[0] = ord(rng);
            beta[1] = ord(rng) ? 1 : 0;
            Mono mono(2, 0);
            mono[0] = ord(rng);
            Polynomial c(t);
            c.add_term(mono, Scalar(coef(rng)));
            if (c.is_zero()) c = Polynomial(t, Scalar(1));
            d.add_term(beta, rf(c));
        }
        return d;
    };
    for (int i = 0; i < 20; ++i) {
        DiffOp a = rand_op(), b = rand_op(), c = rand_op();
        CHECK((a * b) * c == a * (b * c));
    }
    // spot-check composition against application
    auto x = rf(Polynomial::variable(t, "x")), y = rf(Polynomial::variable(t, "y"));
    DiffOp a = rand_op(), b = rand_op();
    RationalFunction probe = x * x * y + y.scaled(Scalar(3));
    CHECK((a * b).apply(probe) == a.apply(b.apply(probe)));
}

namespace {

// two-point ambient space with the Hecke substitution xi1 = -(t1-t2)/(x1-x2)
struct OnePointSetup {
    VarTablePtr amb = VarTable::make({"x1", "x2", "t1", "t2", "chi1", "k"});
    RecordPtr rec;
    OnePointSetup() {
        Polynomial x1 = Polynomial::variable(amb, "x1"), x2 = Polynomial::variable(amb, "x2");
        Polynomial t1 = Polynomial::variable(amb, "t1"), t2 = Polynomial::variable(amb, "t2");
        RationalFunction xi1(-(t1 - t2), x1 - x2);
        rec = std::make_shared<SubstitutionRecord>(
            std::vector<std::string>{"xi1", "ft1"},
            std::vector<RationalFunction>{xi1, RationalFunction(t1)}, 1);
    }
};

} // namespace

TEST_CASE("factor power rule and jet chain rule") {
    OnePointSetup s;
    Polynomial x1 = Polynomial::variable(s.amb, "x1"), x2 = Polynomial::variable(s.amb, "x2");
    Polynomial t1 = Polynomial::variable(s.amb, "t1"), t2 = Polynomial::variable(s.amb, "t2");

    // d/dx1 (x1-x2)^chi = chi * 1/(x1-x2) * (x1-x2)^chi
    TwistedFunction f(s.amb, s.rec);
    TwistedFunction::Term term;
    term.factors.push_back(TwistedFactor{x1 - x2, LinForm::parameter("chi1")});
    term.coeff = rf(Polynomial(s.amb, Scalar(1)));
    f.add_term(term);
    TwistedFunction df = f.derivative("x1");
    REQUIRE(df.terms().size() == 1);
    CHECK(df.terms()[0].factors.size() == 1);
    CHECK(df.terms()[0].coeff ==
          RationalFunction(Polynomial::variable(s.amb, "chi1"), x1 - x2));

    // d/dt1 (t1-t2)^k = k * 1/(t1-t2) * (t1-t2)^k
    TwistedFunction g(s.amb, s.rec);
    TwistedFunction::Term gt;
    gt.factors.push_back(TwistedFactor{t1 - t2, LinForm::parameter("k")});
    gt.coeff = rf(Polynomial(s.amb, Scalar(1)));
    g.add_term(gt);
    TwistedFunction dg = g.derivative("t1");
    REQUIRE(dg.terms().size() == 1);
    CHECK(dg.terms()[0].coeff == RationalFunction(Polynomial::variable(s.amb, "k"), t1 - t2));

    // d/dx1 Psi(xi1; t1) = (t1-t2)/(x1-x2)^2 * Psi_xi1
    TwistedFunction psi = TwistedFunction::unknown(s.amb, s.rec);
    TwistedFunction dpsi = psi.derivative("x1");
    REQUIRE(dpsi.terms().size() == 1);
    CHECK(dpsi.terms()[0].jets[0] == JetKey{1, 0});
    CHECK(dpsi.terms()[0].coeff == RationalFunction(t1 - t2, (x1 - x2) * (x1 - x2)));
}

TEST_CASE("substitution absorbs integer exponents and rejects zero bases") {
    OnePointSetup s;
    Polynomial x1 = Polynomial::variable(s.amb, "x1"), x2 = Polynomial::variable(s.amb, "x2");
    TwistedFunction f(s.amb, s.rec);
    TwistedFunction::Term term;
    term.factors.push_back(TwistedFactor{x1 - x2, LinForm::parameter("chi1")});
    term.coeff = rf(Polynomial(s.amb, Scalar(1)));
    f.add_term(term);

    SubstitutionPlan chi2;
    chi2.params["chi1"] = Scalar(2);
    TwistedFunction g = substitute(f, chi2);
    REQUIRE(g.terms().size() == 1);
    CHECK(g.terms()[0].factors.empty());
    CHECK(g.terms()[0].coeff == rf((x1 - x2) * (x1 - x2)));

    SubstitutionPlan collapse;
    collapse.vars["x1"] = rf(x2);
    CHECK_THROWS_AS(substitute(f, collapse), std::domain_error);

    // k := -2 kills a (k+2) coefficient
    TwistedFunction h = TwistedFunction::from_rational(
        s.amb, s.rec, rf(Polynomial::variable(s.amb, "k") + Polynomial(s.amb, Scalar(2))));
    SubstitutionPlan crit;
    crit.params["k"] = Scalar(-2);
    CHECK(substitute(h, crit).is_zero());
}

namespace {

// formal two-point Ward machinery used by the reduction tests
struct FormalWard {
    VarTablePtr ft = VarTable::make({"xi1", "xi2", "t1", "t2", "chi1", "chi2", "k"});
    RecordPtr rec;
    TwistedFunction psi;
    std::vector<TwistedFunction> ward;

    FormalWard() {
        std::vector<std::string> args{"xi1", "xi2", "t1", "t2"};
        std::vector<RationalFunction> vals;
        for (const auto &a : args) vals.push_back(RationalFunction::variable(ft, a));
        rec = std::make_shared<SubstitutionRecord>(args, vals, 2);
        psi = TwistedFunction::unknown(ft, rec);
        for (int kind = 0; kind < 3; ++kind) {
            TwistedFunction r = TwistedFunction::zero(ft, rec);
            for (int i = 1; i <= 2; ++i) {
                std::string xi = "xi" + std::to_string(i);
                std::string chi = "chi" + std::to_string(i);
                RationalFunction xiv = RationalFunction::variable(ft, xi);
                RationalFunction chiv = RationalFunction::variable(ft, chi);
                TwistedFunction dpsi = psi.derivative(xi);
                if (kind == 0) r += dpsi;
                if (kind == 1) r += dpsi.scaled(xiv.scaled(Scalar(-2))) + psi.scaled(chiv.scaled(Scalar(2)));
                if (kind == 2)
                    r += dpsi.scaled(-(xiv * xiv)) + psi.scaled(chiv * xiv.scaled(Scalar(2)));
            }
            ward.push_back(r);
        }
    }
};

} // namespace

TEST_CASE("reduce_modulo eliminates the Ward relations") {
    FormalWard w;
    RelationSet all(w.ward);

    // a relation reduces to zero against itself
    CHECK(reduce_modulo(w.ward[0], RelationSet({w.ward[0]})).is_zero());
    // the h-type combination dies against the full set
    CHECK(reduce_modulo(w.ward[1], all).is_zero());
    // and not against an unrelated subset
    CHECK_FALSE(reduce_modulo(w.ward[1], RelationSet({w.ward[0]})).is_zero());

    // prolonged relation reduces to zero against the prolonged set
    RelationSet pro = all.prolonged(1);
    TwistedFunction d1 = w.ward[2].derivative("xi1");
    CHECK(reduce_modulo(d1, pro).is_zero());
    // counting: 3 relations x (1 + N xi-derivatives), N = 2
    CHECK(pro.size() == 9);
    CHECK(RelationSet(std::vector<TwistedFunction>{}).prolonged(1).size() == 0);
}

TEST_CASE("reduce_modulo is idempotent and sound on a manufactured solution") {
    FormalWard w;
    RelationSet pro = RelationSet(w.ward).prolonged(1);

    // something that does not reduce to zero stays fixed after reduction
    TwistedFunction probe =
        w.psi.derivative("xi1").scaled(RationalFunction::variable(w.ft, "t1"));
    TwistedFunction red = reduce_modulo(probe, pro);
    TwistedFunction red2 = reduce_modulo(red, pro);
    CHECK((red - red2).is_zero());

    // soundness: psi0 = (xi1-xi2)^2 solves the Ward system at chi1=chi2=1;
    // any combination reducing to 0 must vanish on psi0
    Polynomial xi1 = Polynomial::variable(w.ft, "xi1"), xi2 = Polynomial::variable(w.ft, "xi2");
    Polynomial psi0 = (xi1 - xi2) * (xi1 - xi2);
    auto eval_on_psi0 = [&](const TwistedFunction &f) {
        RationalFunction acc(Polynomial(w.ft, Scalar(0)));
        SubstitutionPlan fix;
        fix.params["chi1"] = Scalar(1);
        fix.params["chi2"] = Scalar(1);
        TwistedFunction g = substitute(f, fix);
        for (const auto &t : g.terms()) {
            REQUIRE(t.factors.empty());
            RationalFunction v = t.coeff;
            for (const auto &jet : t.jets) {
                Polynomial d = psi0;
                for (std::size_t a = 0; a < jet.size(); ++a)
                    for (int32_t i = 0; i < jet[a]; ++i)
                        d = d.derivative(w.rec->arg(a));
                v *= rf(d);
            }
            acc += v;
        }
        return acc;
    };
    // each Ward relation itself vanishes on psi0
    for (const auto &r : w.ward) CHECK(eval_on_psi0(r).is_zero());
    // a combination of relations with rational coefficients reduces to zero
    TwistedFunction comb =
        w.ward[0].scaled(RationalFunction::variable(w.ft, "xi1")) + w.ward[1];
    CHECK(reduce_modulo(comb, pro).is_zero());
    CHECK(eval_on_psi0(comb).is_zero());
}

TEST_CASE("additivity and Leibniz for twisted functions") {
    OnePointSetup s;
    std::mt19937 rng(17);
    Polynomial x1 = Polynomial::variable(s.amb, "x1"), x2 = Polynomial::variable(s.amb, "x2");
    Polynomial t1 = Polynomial::variable(s.amb, "t1");
    std::uniform_int_distribution<long> coef(-3, 3);

    auto rand_tf = [&](bool with_jet) {
        TwistedFunction f(s.amb, s.rec);
        TwistedFunction::Term t;
        t.factors.push_back(TwistedFactor{x1 - x2, LinForm::parameter("chi1", Scalar(coef(rng) ? coef(rng) : 1))});
        Polynomial c(s.amb, Scalar(coef(rng)));
        t.coeff = rf(c.is_zero() ? Polynomial(s.amb, Scalar(1)) : c) *
                  rf(t1).pow(std::abs(coef(rng)) % 2);
        if (with_jet) t.jets.push_back(JetKey{1, 0});
        f.add_term(t);
        return f;
    };

    DiffOp d = DiffOp::partial(s.amb, "x1");
    for (int i = 0; i < 10; ++i) {
        TwistedFunction F = rand_tf(true), G = rand_tf(false);
        // D(F+G) = D(F) + D(G)
        CHECK((diffop_apply(d, F + G) - diffop_apply(d, F) - diffop_apply(d, G)).is_zero());
        // first-order Leibniz on products
        TwistedFunction lhs = diffop_apply(d, F * G);
        TwistedFunction rhs = diffop_apply(d, F) * G + F * diffop_apply(d, G);
        CHECK((lhs - rhs).is_zero());
    }
}
