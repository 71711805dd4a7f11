// Ward/KZ operators, the Casimir, the Hecke transform, and the transport of
// the block systems from N to N+1 points.

#include "doctest.h"

#include "affkm/kz.hpp"

using namespace affkm;

namespace {

RationalFunction rv(const VarTablePtr &t, const std::string &n) {
    return RationalFunction::variable(t, n);
}
RationalFunction rc(const VarTablePtr &t, long n, long d = 1) {
    return RationalFunction(Polynomial(t, Scalar(n, d)));
}

} // namespace

TEST_CASE("rho realization and brackets") {
    auto t = VarTable::make({"x1", "chi"});
    RationalFunction w = rv(t, "chi").scaled(Scalar(2));
    DiffOp e = rho_op(t, Gen::E, 1, w);
    DiffOp h = rho_op(t, Gen::H, 1, w);
    DiffOp f = rho_op(t, Gen::F, 1, w);
    CHECK(e == DiffOp::partial(t, "x1"));
    CHECK(h.apply(rc(t, 1)) == w);
    CHECK(commutator(e, f) == h);
    CHECK(commutator(h, e) == e.scaled(rc(t, 2)));
}

TEST_CASE("casimir symmetry, eigenvalue, and invariance") {
    auto t = VarTable::make({"x1", "x2", "chi1", "chi2"});
    RationalFunction w1 = rv(t, "chi1").scaled(Scalar(2));
    RationalFunction w2 = rv(t, "chi2").scaled(Scalar(2));
    DiffOp om12 = casimir_omega(t, 1, 2, w1, w2);
    DiffOp om21 = casimir_omega(t, 2, 1, w2, w1);
    CHECK(om12 == om21);

    // on constants: 2 chi_1 chi_2
    CHECK(om12.apply(rc(t, 1)) ==
          rv(t, "chi1") * rv(t, "chi2") * rc(t, 2));

    // [Omega_12, rho^1(g) + rho^2(g)] = 0
    for (Gen g : {Gen::E, Gen::H, Gen::F}) {
        DiffOp diag = rho_op(t, g, 1, w1) + rho_op(t, g, 2, w2);
        CHECK(commutator(om12, diag).is_zero());
    }

    // eigenvalue on (x1-x2)^{2chi} at equal weights, computed directly
    auto tc = VarTable::make({"x1", "x2"});
    Polynomial dx = Polynomial::variable(tc, "x1") - Polynomial::variable(tc, "x2");
    for (long twochi : {1L, 2L, 3L}) {
        RationalFunction w = rc(tc, twochi);
        DiffOp om = casimir_omega(tc, 1, 2, w, w);
        RationalFunction pow = RationalFunction(dx).pow(twochi);
        RationalFunction eig = om.apply(pow) / pow;
        // c(chi) = -2 chi (chi + 1) with 2chi = twochi
        Scalar chi(twochi, 2);
        Scalar expect = Scalar(-2) * chi * (chi + Scalar(1));
        CHECK(eig == rc(tc, 1).scaled(expect));
    }
}

TEST_CASE("ward operators kill simple invariants") {
    auto t = VarTable::make({"x1", "x2", "t1", "t2", "chi"});
    RationalFunction w = rv(t, "chi").scaled(Scalar(2));
    Polynomial dx = Polynomial::variable(t, "x1") - Polynomial::variable(t, "x2");
    auto ops = ward_ops(t, 2, {w, w});
    // translation invariance
    CHECK(ops[0].apply(RationalFunction(dx)).is_zero());
    // homogeneity at chi = 1/2 on (x1-x2)
    auto opsc = ward_ops(t, 2, {rc(t, 1), rc(t, 1)});
    CHECK(opsc[1].apply(RationalFunction(dx)).is_zero());

    // extended t-type operator acts by t1 - t2 on x1 - x2
    auto ext = ward_ops_extended(t, 2, {w, w}, rv(t, "chi"));
    CHECK(ext[2].apply(RationalFunction(dx)) ==
          RationalFunction(Polynomial::variable(t, "t1") - Polynomial::variable(t, "t2")));
}

TEST_CASE("kz operator shape") {
    BlockSpace s1(1);
    // N=1: empty Omega sum, the operator is (k+2) d/dt1
    DiffOp op = kz_op(s1.ambient(), 1, 1, s1.ambient_weights(1), s1.level_ambient());
    DiffOp expect = DiffOp::partial(s1.ambient(), "t1")
                        .scaled(s1.level_ambient() + rc(s1.ambient(), 2));
    CHECK(op == expect);
}

TEST_CASE("hecke transform structure and derivative") {
    BlockSpace s(1);
    TwistedFunction ups = s.hecke_transform();
    REQUIRE(ups.terms().size() == 1);
    CHECK(ups.terms()[0].factors.size() == 2);
    CHECK(ups.terms()[0].jets.size() == 1);

    // d/dx1 Upsilon = prefactor*(2chi1/(x1-x2))*Psi
    //               + prefactor*(t1-t2)/(x1-x2)^2 * Psi_xi1
    TwistedFunction d = ups.derivative("x1");
    REQUIRE(d.terms().size() == 2);
    const VarTablePtr &t = s.ambient();
    Polynomial dx = Polynomial::variable(t, "x1") - Polynomial::variable(t, "x2");
    Polynomial dt = Polynomial::variable(t, "t1") - Polynomial::variable(t, "t2");
    for (const auto &term : d.terms()) {
        REQUIRE(term.jets.size() == 1);
        if (term.jets[0] == JetKey{0, 0}) {
            CHECK(term.coeff ==
                  RationalFunction(Polynomial::variable(t, "chi1").scaled(Scalar(2)), dx));
        } else {
            CHECK(term.jets[0] == JetKey{1, 0});
            CHECK(term.coeff == RationalFunction(dt, dx * dx));
        }
    }
}

TEST_CASE("ward transport at N=1 and N=2 with symbolic weights") {
    for (int n : {1, 2}) {
        BlockSpace s(n);
        TransportReport rep = ward_transport(s);
        CAPTURE(n);
        for (const auto &r : rep.identities) {
            CAPTURE(r.name);
            CHECK(r.zero);
        }
        CHECK(rep.verified());
    }
}

TEST_CASE("kz transport at N=1 and N=2 with symbolic weights") {
    for (int n : {1, 2}) {
        BlockSpace s(n);
        for (int i = 1; i <= n; ++i) {
            TransportReport rep = kz_transport(s, i);
            CAPTURE(n);
            CAPTURE(i);
            CHECK(rep.verified());
        }
    }
}

TEST_CASE("symbolic distinct weights trivialize the two-point system") {
    // for N = 2 and chi1 != chi2 the Ward relations force Psi = 0, so every
    // first-order residual reduces to zero; the reductions are only
    // meaningful with equal weights or at N >= 3
    BlockSpace s(2);
    TransportMutation flip;
    flip.flip_xi_sign = true;
    CHECK(ward_transport(s, flip).verified());
}

TEST_CASE("mutations are detected on the nontrivial system") {
    BlockSpace s(2, /*equal_weights=*/true);
    CHECK(ward_transport(s).verified());
    CHECK(kz_transport(s, 1).verified());

    TransportMutation flip;
    flip.flip_xi_sign = true;
    CHECK_FALSE(ward_transport(s, flip).verified());

    TransportMutation shift;
    shift.shift_prefactor = true;
    CHECK_FALSE(ward_transport(s, shift).verified());

    TransportMutation weight;
    weight.shift_extra_weight = true;
    CHECK_FALSE(ward_transport(s, weight).verified());
    CHECK_FALSE(kz_transport(s, 1, weight).verified());
    CHECK_FALSE(kz_transport(s, 1, flip).verified());
}

TEST_CASE("two point solution end to end") {
    TwoPointReport rep = two_point_solution(Scalar(1, 2), Scalar(1));
    CHECK(rep.casimir_eigenvalue == Scalar(-3, 2));
    CHECK(rep.two_point_system);
    CHECK(rep.three_point_system);
    CHECK(rep.verified());

    CHECK_THROWS_AS(two_point_solution(Scalar(1), Scalar(-2)), std::invalid_argument);
}
