#include "affkm/kz.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace affkm {

namespace {

double seconds_since(const std::chrono::steady_clock::time_point &t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RationalFunction rf_var(const VarTablePtr &t, const std::string &n) {
    return RationalFunction::variable(t, n);
}

RationalFunction rf_const(const VarTablePtr &t, const Scalar &c) {
    return RationalFunction(Polynomial(t, c));
}

} // namespace

DiffOp rho_op(const VarTablePtr &table, Gen gen, int i, const RationalFunction &w) {
    std::string x = "x" + std::to_string(i);
    switch (gen) {
    case Gen::E: return DiffOp::partial(table, x);
    case Gen::H: {
        DiffOp d = DiffOp::partial(table, x).scaled(rf_var(table, x).scaled(Scalar(-2)));
        d += DiffOp::multiplication(w);
        return d;
    }
    case Gen::F: {
        RationalFunction xv = rf_var(table, x);
        DiffOp d = DiffOp::partial(table, x).scaled(-(xv * xv));
        d += DiffOp::multiplication(w * xv);
        return d;
    }
    }
    throw std::logic_error("rho_op: bad generator");
}

DiffOp casimir_omega(const VarTablePtr &table, int i, int j, const RationalFunction &wi,
                     const RationalFunction &wj) {
    if (i == j) throw std::invalid_argument("casimir_omega: needs two distinct points");
    DiffOp ef = rho_op(table, Gen::E, i, wi) * rho_op(table, Gen::F, j, wj);
    DiffOp fe = rho_op(table, Gen::F, i, wi) * rho_op(table, Gen::E, j, wj);
    DiffOp hh = rho_op(table, Gen::H, i, wi) * rho_op(table, Gen::H, j, wj);
    return ef + fe + hh.scaled(rf_const(table, Scalar(1, 2)));
}

std::array<DiffOp, 3> ward_ops(const VarTablePtr &table, int m,
                               const std::vector<RationalFunction> &weights) {
    std::array<DiffOp, 3> ops{DiffOp(table), DiffOp(table), DiffOp(table)};
    for (int i = 1; i <= m; ++i) {
        ops[0] += rho_op(table, Gen::E, i, weights[i - 1]);
        ops[1] += rho_op(table, Gen::H, i, weights[i - 1]);
        ops[2] += rho_op(table, Gen::F, i, weights[i - 1]);
    }
    return ops;
}

std::array<DiffOp, 3> ward_ops_extended(const VarTablePtr &table, int m,
                                        const std::vector<RationalFunction> &weights,
                                        const RationalFunction &k) {
    std::array<DiffOp, 3> ops{DiffOp(table), DiffOp(table), DiffOp(table)};
    for (int i = 1; i <= m; ++i) {
        ops[0] += rho_op(table, Gen::E, i, weights[i - 1]);
        ops[1] += rho_op(table, Gen::H, i, weights[i - 1]);
        // the invariance algebra contributes t e in place of f
        ops[2] += DiffOp::partial(table, "x" + std::to_string(i))
                      .scaled(rf_var(table, "t" + std::to_string(i)));
    }
    ops[1] -= DiffOp::multiplication(k);
    return ops;
}

DiffOp kz_op(const VarTablePtr &table, int i, int m,
             const std::vector<RationalFunction> &weights, const RationalFunction &k) {
    DiffOp d = DiffOp::partial(table, "t" + std::to_string(i))
                   .scaled(k + rf_const(table, Scalar(2)));
    RationalFunction ti = rf_var(table, "t" + std::to_string(i));
    for (int j = 1; j <= m; ++j) {
        if (j == i) continue;
        RationalFunction tj = rf_var(table, "t" + std::to_string(j));
        DiffOp omega = casimir_omega(table, i, j, weights[i - 1], weights[j - 1]);
        d -= omega.scaled((ti - tj).inverse());
    }
    return d;
}

BlockSpace::BlockSpace(int n, bool equal_weights) : n_(n), equal_weights_(equal_weights) {
    if (n < 1) throw std::invalid_argument("BlockSpace: need at least one point");
    std::vector<std::string> amb, formal;
    for (int i = 1; i <= n + 1; ++i) amb.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n + 1; ++i) amb.push_back("t" + std::to_string(i));
    for (int i = 1; i <= (equal_weights ? 1 : n); ++i) amb.push_back("chi" + std::to_string(i));
    amb.push_back("k");
    for (int i = 1; i <= n; ++i) formal.push_back("xi" + std::to_string(i));
    for (int i = 1; i <= n; ++i) formal.push_back("t" + std::to_string(i));
    for (int i = 1; i <= (equal_weights ? 1 : n); ++i) formal.push_back("chi" + std::to_string(i));
    formal.push_back("k");
    ambient_ = VarTable::make(std::move(amb));
    formal_ = VarTable::make(std::move(formal));
}

RationalFunction BlockSpace::ambient_weight(int i) const {
    if (i == n_ + 1) return rf_var(ambient_, "k"); // 2 chi_{N+1} with chi_{N+1} = k/2
    return rf_var(ambient_, chivar(i)).scaled(Scalar(2));
}

RationalFunction BlockSpace::formal_weight(int i) const {
    return rf_var(formal_, chivar(i)).scaled(Scalar(2));
}

RationalFunction BlockSpace::level_ambient() const { return rf_var(ambient_, "k"); }

std::vector<RationalFunction> BlockSpace::ambient_weights(int m) const {
    std::vector<RationalFunction> w;
    for (int i = 1; i <= m; ++i) w.push_back(ambient_weight(i));
    return w;
}

RecordPtr BlockSpace::hecke_record(bool flip_xi_sign) const {
    std::vector<std::string> args;
    std::vector<RationalFunction> values;
    Polynomial xN = Polynomial::variable(ambient_, xvar(n_ + 1));
    Polynomial tN = Polynomial::variable(ambient_, tvar(n_ + 1));
    for (int i = 1; i <= n_; ++i) {
        args.push_back(xivar(i));
        Polynomial xi = Polynomial::variable(ambient_, xvar(i));
        Polynomial ti = Polynomial::variable(ambient_, tvar(i));
        Polynomial num = ti - tN;
        // the mutation flips the sign of xi_1 only; flipping every xi_i is a
        // symmetry of the block system and would be invisible
        if (!(flip_xi_sign && i == 1)) num = -num;
        values.emplace_back(num, xi - xN);
    }
    for (int i = 1; i <= n_; ++i) {
        args.push_back(tvar(i));
        values.push_back(rf_var(ambient_, tvar(i)));
    }
    return std::make_shared<SubstitutionRecord>(std::move(args), std::move(values),
                                                static_cast<std::size_t>(n_));
}

TwistedFunction BlockSpace::hecke_transform(bool flip_xi_sign, bool shift_prefactor) const {
    RecordPtr rec = hecke_record(flip_xi_sign);
    TwistedFunction ups = TwistedFunction::unknown(ambient_, rec);
    TwistedFunction::Term term = ups.terms()[0];
    for (int i = 1; i <= n_; ++i) {
        Polynomial dx = Polynomial::variable(ambient_, xvar(i)) -
                        Polynomial::variable(ambient_, xvar(n_ + 1));
        Polynomial dt = Polynomial::variable(ambient_, tvar(i)) -
                        Polynomial::variable(ambient_, tvar(n_ + 1));
        LinForm two_chi = LinForm::parameter(chivar(i), Scalar(2));
        if (shift_prefactor && i == 1) two_chi = two_chi.shifted(Scalar(1));
        term.factors.push_back(TwistedFactor{dx, two_chi});
        term.factors.push_back(TwistedFactor{dt, LinForm::parameter(chivar(i), Scalar(-1))});
    }
    TwistedFunction out = TwistedFunction::zero(ambient_, rec);
    out.add_term(term);
    return out;
}

namespace {

RecordPtr formal_identity_record(const BlockSpace &s, int cap_xi) {
    std::vector<std::string> args;
    std::vector<RationalFunction> values;
    for (int i = 1; i <= s.n(); ++i) {
        args.push_back(s.xivar(i));
        values.push_back(RationalFunction::variable(s.formal(), s.xivar(i)));
    }
    for (int i = 1; i <= s.n(); ++i) {
        args.push_back(s.tvar(i));
        values.push_back(RationalFunction::variable(s.formal(), s.tvar(i)));
    }
    return std::make_shared<SubstitutionRecord>(std::move(args), std::move(values),
                                                static_cast<std::size_t>(s.n()), cap_xi, 1);
}

// rho acting in the formal xi variables
DiffOp formal_rho(const BlockSpace &s, Gen gen, int i) {
    const VarTablePtr &t = s.formal();
    RationalFunction w = rf_var(t, s.chivar(i)).scaled(Scalar(2));
    std::string xi = s.xivar(i);
    switch (gen) {
    case Gen::E: return DiffOp::partial(t, xi);
    case Gen::H: {
        DiffOp d = DiffOp::partial(t, xi).scaled(rf_var(t, xi).scaled(Scalar(-2)));
        d += DiffOp::multiplication(w);
        return d;
    }
    case Gen::F: {
        RationalFunction xv = rf_var(t, xi);
        DiffOp d = DiffOp::partial(t, xi).scaled(-(xv * xv));
        d += DiffOp::multiplication(w * xv);
        return d;
    }
    }
    throw std::logic_error("formal_rho: bad generator");
}

} // namespace

RelationSet BlockSpace::ward_relations() const {
    RecordPtr rec = formal_identity_record(*this, 3);
    TwistedFunction psi = TwistedFunction::unknown(formal_, rec);
    std::vector<TwistedFunction> rels;
    for (Gen g : {Gen::E, Gen::H, Gen::F}) {
        TwistedFunction r = TwistedFunction::zero(formal_, rec);
        for (int i = 1; i <= n_; ++i) r += diffop_apply(formal_rho(*this, g, i), psi);
        rels.push_back(std::move(r));
    }
    return RelationSet(std::move(rels));
}

RelationSet BlockSpace::kz_relations() const {
    RecordPtr rec = formal_identity_record(*this, 3);
    TwistedFunction psi = TwistedFunction::unknown(formal_, rec);
    std::vector<TwistedFunction> rels;
    for (int i = 1; i <= n_; ++i) {
        TwistedFunction r =
            psi.derivative(tvar(i)).scaled(rf_var(formal_, "k") + rf_const(formal_, Scalar(2)));
        RationalFunction ti = rf_var(formal_, tvar(i));
        for (int j = 1; j <= n_; ++j) {
            if (j == i) continue;
            RationalFunction tj = rf_var(formal_, tvar(j));
            DiffOp ef = formal_rho(*this, Gen::E, i) * formal_rho(*this, Gen::F, j);
            DiffOp fe = formal_rho(*this, Gen::F, i) * formal_rho(*this, Gen::E, j);
            DiffOp hh = formal_rho(*this, Gen::H, i) * formal_rho(*this, Gen::H, j);
            DiffOp omega = ef + fe + hh.scaled(rf_const(formal_, Scalar(1, 2)));
            r -= diffop_apply(omega, psi).scaled((ti - tj).inverse());
        }
        rels.push_back(std::move(r));
    }
    return RelationSet(std::move(rels));
}

namespace {

std::vector<RationalFunction> transport_weights(const BlockSpace &s,
                                                const TransportMutation &mut) {
    std::vector<RationalFunction> w = s.ambient_weights(s.n() + 1);
    if (mut.shift_extra_weight)
        w[s.n()] += rf_const(s.ambient(), Scalar(2)); // chi_{N+1} = k/2 + 1
    return w;
}

} // namespace

TransportReport ward_transport(const BlockSpace &space, const TransportMutation &mutation) {
    TransportReport rep;
    rep.case_name = "ward-transport N=" + std::to_string(space.n());
    rep.prolongation_order = 1;

    RelationSet rels = space.ward_relations().prolonged(1);
    rep.relations_used = static_cast<long>(rels.size());
    TwistedFunction ups =
        space.hecke_transform(mutation.flip_xi_sign, mutation.shift_prefactor);

    std::vector<RationalFunction> weights = transport_weights(space, mutation);
    auto ops = ward_ops_extended(space.ambient(), space.n() + 1, weights,
                                 space.level_ambient());
    const char *names[3] = {"ward-e", "ward-h", "ward-t"};
    for (int i = 0; i < 3; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        TwistedFunction residual = reduce_modulo(diffop_apply(ops[i], ups), rels);
        IdentityResult r;
        r.name = names[i];
        r.zero = residual.is_zero();
        if (!r.zero) r.residual = residual.str();
        r.seconds = seconds_since(t0);
        rep.identities.push_back(std::move(r));
    }
    return rep;
}

TransportReport kz_transport(const BlockSpace &space, int i, const TransportMutation &mutation) {
    if (i < 1 || i > space.n()) throw std::invalid_argument("kz_transport: point out of range");
    TransportReport rep;
    rep.case_name = "kz-transport N=" + std::to_string(space.n()) + " i=" + std::to_string(i);
    rep.prolongation_order = 1;

    std::vector<TwistedFunction> rows = space.ward_relations().prolonged(1).relations();
    RelationSet kz = space.kz_relations();
    for (const auto &r : kz.relations()) rows.push_back(r);
    RelationSet rels(rows);
    rep.relations_used = static_cast<long>(rels.size());

    TwistedFunction ups =
        space.hecke_transform(mutation.flip_xi_sign, mutation.shift_prefactor);
    std::vector<RationalFunction> weights = transport_weights(space, mutation);
    DiffOp op = kz_op(space.ambient(), i, space.n() + 1, weights, space.level_ambient());

    auto t0 = std::chrono::steady_clock::now();
    TwistedFunction residual = reduce_modulo(diffop_apply(op, ups), rels);
    if (!residual.is_zero() && !mutation.any()) {
        // one more prolongation round before reporting failure
        std::vector<TwistedFunction> deeper = rows;
        for (const auto &r : kz.prolonged(1).relations()) deeper.push_back(r);
        RelationSet rels2(deeper);
        rep.relations_used = static_cast<long>(rels2.size());
        rep.prolongation_order = 2;
        residual = reduce_modulo(diffop_apply(op, ups), rels2);
    }
    IdentityResult r;
    r.name = "kz-" + std::to_string(i);
    r.zero = residual.is_zero();
    if (!r.zero) r.residual = residual.str();
    r.seconds = seconds_since(t0);
    rep.identities.push_back(std::move(r));
    return rep;
}

// ------------------------------------------------------------- two point

TwoPointReport two_point_solution(const Scalar &chi, const Scalar &level) {
    if (level == Scalar(-2))
        throw std::invalid_argument("two_point_solution: the level k = -2 is critical");
    TwoPointReport rep;
    rep.chi = chi;
    rep.level = level;

    Scalar two_chi = chi * Scalar(2);
    if (!two_chi.is_nonneg_integer())
        throw std::invalid_argument("two_point_solution: 2*chi must be a nonnegative integer");

    VarTablePtr tab2 = VarTable::make({"x1", "x2", "t1", "t2"});
    Polynomial x1 = Polynomial::variable(tab2, "x1"), x2 = Polynomial::variable(tab2, "x2");
    Polynomial t1 = Polynomial::variable(tab2, "t1"), t2 = Polynomial::variable(tab2, "t2");
    RecordPtr norec = std::make_shared<SubstitutionRecord>(std::vector<std::string>{},
                                                           std::vector<RationalFunction>{}, 0);

    // Casimir eigenvalue on (x1-x2)^{2 chi} from the operator itself
    RationalFunction w = rf_const(tab2, two_chi);
    DiffOp omega = casimir_omega(tab2, 1, 2, w, w);
    RationalFunction xpow = RationalFunction(x1 - x2).pow(two_chi.as_long());
    RationalFunction eig = omega.apply(xpow) / xpow;
    auto cval = rational_constant(eig);
    if (!cval)
        throw std::logic_error("two_point_solution: eigenvalue is not constant");
    Scalar c = *cval;
    rep.casimir_eigenvalue = c;

    // Psi_2 = (x1-x2)^{2chi} (t1-t2)^{c/(k+2)}
    Scalar gamma = c / (level + Scalar(2));
    TwistedFunction psi2 = TwistedFunction::zero(tab2, norec);
    {
        TwistedFunction::Term term;
        term.coeff = xpow;
        term.factors.push_back(TwistedFactor{t1 - t2, LinForm(gamma)});
        psi2.add_term(term);
    }

    // two-point Ward and KZ identities by direct application
    bool ok2 = true;
    {
        std::vector<RationalFunction> ws{w, w};
        auto wards = ward_ops(tab2, 2, ws);
        const char *names[3] = {"2pt-ward-e", "2pt-ward-h", "2pt-ward-f"};
        for (int i = 0; i < 3; ++i) {
            auto t0 = std::chrono::steady_clock::now();
            TwistedFunction res = diffop_apply(wards[i], psi2);
            IdentityResult r;
            r.name = names[i];
            r.zero = res.is_zero();
            if (!r.zero) r.residual = res.str();
            r.seconds = seconds_since(t0);
            ok2 = ok2 && r.zero;
            rep.identities.push_back(std::move(r));
        }
        RationalFunction kc = rf_const(tab2, level);
        for (int i = 1; i <= 2; ++i) {
            auto t0 = std::chrono::steady_clock::now();
            TwistedFunction res = diffop_apply(kz_op(tab2, i, 2, ws, kc), psi2);
            IdentityResult r;
            r.name = "2pt-kz-" + std::to_string(i);
            r.zero = res.is_zero();
            if (!r.zero) r.residual = res.str();
            r.seconds = seconds_since(t0);
            ok2 = ok2 && r.zero;
            rep.identities.push_back(std::move(r));
        }
    }
    rep.two_point_system = ok2;

    // Hecke transform with the concrete Psi_2 substituted, on three points
    VarTablePtr tab3 = VarTable::make({"x1", "x2", "x3", "t1", "t2", "t3"});
    RecordPtr norec3 = std::make_shared<SubstitutionRecord>(std::vector<std::string>{},
                                                            std::vector<RationalFunction>{}, 0);
    Polynomial y1 = Polynomial::variable(tab3, "x1"), y2 = Polynomial::variable(tab3, "x2");
    Polynomial y3 = Polynomial::variable(tab3, "x3");
    Polynomial s1 = Polynomial::variable(tab3, "t1"), s2 = Polynomial::variable(tab3, "t2");
    Polynomial s3 = Polynomial::variable(tab3, "t3");

    SubstitutionPlan plan;
    plan.target = tab3;
    plan.new_record = norec3;
    plan.vars["x1"] = RationalFunction(-(s1 - s3), y1 - y3);
    plan.vars["x2"] = RationalFunction(-(s2 - s3), y2 - y3);
    TwistedFunction psi_xi = substitute(psi2, plan);

    TwistedFunction prefactor = TwistedFunction::zero(tab3, norec3);
    {
        TwistedFunction::Term term;
        term.coeff = rf_const(tab3, Scalar(1));
        term.factors.push_back(TwistedFactor{y1 - y3, LinForm(two_chi)});
        term.factors.push_back(TwistedFactor{y2 - y3, LinForm(two_chi)});
        term.factors.push_back(TwistedFactor{s1 - s3, LinForm(-chi)});
        term.factors.push_back(TwistedFactor{s2 - s3, LinForm(-chi)});
        prefactor.add_term(term);
    }
    TwistedFunction ups = prefactor * psi_xi;

    bool ok3 = true;
    {
        RationalFunction kc = rf_const(tab3, level);
        std::vector<RationalFunction> ws{rf_const(tab3, two_chi), rf_const(tab3, two_chi), kc};
        auto ext = ward_ops_extended(tab3, 3, ws, kc);
        const char *names[3] = {"3pt-ward-e", "3pt-ward-h", "3pt-ward-t"};
        for (int i = 0; i < 3; ++i) {
            auto t0 = std::chrono::steady_clock::now();
            TwistedFunction res = diffop_apply(ext[i], ups);
            IdentityResult r;
            r.name = names[i];
            r.zero = res.is_zero();
            if (!r.zero) r.residual = res.str();
            r.seconds = seconds_since(t0);
            ok3 = ok3 && r.zero;
            rep.identities.push_back(std::move(r));
        }
        for (int i = 1; i <= 2; ++i) {
            auto t0 = std::chrono::steady_clock::now();
            TwistedFunction res = diffop_apply(kz_op(tab3, i, 3, ws, kc), ups);
            IdentityResult r;
            r.name = "3pt-kz-" + std::to_string(i);
            r.zero = res.is_zero();
            if (!r.zero) r.residual = res.str();
            r.seconds = seconds_since(t0);
            ok3 = ok3 && r.zero;
            rep.identities.push_back(std::move(r));
        }
    }
    rep.three_point_system = ok3;
    return rep;
}

} // namespace affkm
