#include "affkm/loop_element.hpp"

#include <sstream>
#include <stdexcept>

namespace affkm {

namespace {

LaurentPolynomial lp_zero(const std::string &var, const VarTablePtr &params) {
    return LaurentPolynomial(var, params);
}

LaurentPolynomial lp_const(const std::string &var, const VarTablePtr &params, const Scalar &c) {
    return LaurentPolynomial::term(var, params, 0, RationalFunction(Polynomial(params, c)));
}

LaurentPolynomial lp_term(const std::string &var, const VarTablePtr &params, int e,
                          const RationalFunction &c) {
    return LaurentPolynomial::term(var, params, e, c);
}

} // namespace

LoopElement LoopElement::identity(GroupFlavor flavor, const std::string &var,
                                  const VarTablePtr &params) {
    return LoopElement(ProjectiveLaurentMatrix::identity(flavor, var, params), {});
}

LoopElement LoopElement::exp_nilpotent(GroupFlavor flavor, const std::string &var,
                                       const VarTablePtr &params, bool positive_root,
                                       const RationalFunction &a, int mode) {
    auto one = lp_const(var, params, Scalar(1));
    auto zero = lp_zero(var, params);
    auto at = lp_term(var, params, mode, a);
    ProjectiveLaurentMatrix m = positive_root
                                    ? ProjectiveLaurentMatrix(flavor, one, at, zero, one)
                                    : ProjectiveLaurentMatrix(flavor, one, zero, at, one);
    Gen g{positive_root ? GenKind::ExpNilpotentPos : GenKind::ExpNilpotentNeg, a, mode,
          Scalar(0)};
    return LoopElement(std::move(m), {g});
}

LoopElement LoopElement::t_coweight(GroupFlavor flavor, const std::string &var,
                                    const VarTablePtr &params, const Scalar &alpha_pairing) {
    auto zero = lp_zero(var, params);
    auto one_rf = RationalFunction(Polynomial(params, Scalar(1)));
    ProjectiveLaurentMatrix m = [&] {
        if (flavor == GroupFlavor::SL2) {
            if (!alpha_pairing.is_integer() || (alpha_pairing.as_long() % 2) != 0)
                throw std::invalid_argument("t_coweight: SL2 needs an even pairing");
            long half = alpha_pairing.as_long() / 2;
            return ProjectiveLaurentMatrix(flavor,
                                           lp_term(var, params, static_cast<int>(half), one_rf),
                                           zero, zero,
                                           lp_term(var, params, static_cast<int>(-half), one_rf));
        }
        if (!alpha_pairing.is_integer())
            throw std::invalid_argument("t_coweight: PGL2 needs an integer pairing");
        // diag(t^m, 1), projectively diag(t^{m/2}, t^{-m/2})
        long m = alpha_pairing.as_long();
        return ProjectiveLaurentMatrix(flavor, lp_term(var, params, static_cast<int>(m), one_rf),
                                       zero, zero, lp_const(var, params, Scalar(1)));
    }();
    Gen g{GenKind::TCoweight, RationalFunction(Polynomial(params, Scalar(0))), 0, alpha_pairing};
    return LoopElement(std::move(m), {g});
}

LoopElement LoopElement::weyl(GroupFlavor flavor, const std::string &var,
                              const VarTablePtr &params) {
    auto zero = lp_zero(var, params);
    ProjectiveLaurentMatrix m(flavor, zero, lp_const(var, params, Scalar(1)),
                              lp_const(var, params, Scalar(-1)), zero);
    Gen g{GenKind::Weyl, RationalFunction(Polynomial(params, Scalar(0))), 0, Scalar(0)};
    return LoopElement(std::move(m), {g});
}

LoopElement LoopElement::cartan(GroupFlavor flavor, const std::string &var,
                                const VarTablePtr &params, const RationalFunction &a) {
    if (a.is_zero()) throw std::invalid_argument("cartan: zero value");
    auto zero = lp_zero(var, params);
    ProjectiveLaurentMatrix m(flavor, lp_term(var, params, 0, a), zero, zero,
                              lp_term(var, params, 0, a.inverse()));
    Gen g{GenKind::Cartan, a, 0, Scalar(0)};
    return LoopElement(std::move(m), {g});
}

LoopElement operator*(const LoopElement &g, const LoopElement &h) {
    std::vector<LoopElement::Gen> w = g.word_;
    w.insert(w.end(), h.word_.begin(), h.word_.end());
    return LoopElement(g.matrix_ * h.matrix_, std::move(w));
}

std::string LoopElement::str() const {
    if (word_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto &g : word_) {
        if (!first) os << "*";
        first = false;
        switch (g.kind) {
        case GenKind::ExpNilpotentPos:
            os << "exp((" << g.coeff.str() << ")*e*t^" << g.mode << ")";
            break;
        case GenKind::ExpNilpotentNeg:
            os << "exp((" << g.coeff.str() << ")*f*t^" << g.mode << ")";
            break;
        case GenKind::TCoweight:
            os << "t^{" << g.pairing.str() << "/2*acheck}";
            break;
        case GenKind::Weyl:
            os << "w";
            break;
        case GenKind::Cartan:
            os << "(" << g.coeff.str() << ")^acheck";
            break;
        }
    }
    return os.str();
}

LoopElement birkhoff_input(GroupFlavor flavor, const std::string &var, const VarTablePtr &params,
                           const RationalFunction &a, const Scalar &alpha_mu,
                           const Scalar &alpha_lambda, long j) {
    long p = alpha_mu.as_long();
    LoopElement u = LoopElement::exp_nilpotent(flavor, var, params, true, a,
                                               static_cast<int>(j + p));
    LoopElement tmid = LoopElement::t_coweight(flavor, var, params, alpha_mu + alpha_lambda);
    return u * tmid;
}

BirkhoffFactorization birkhoff_factorize(GroupFlavor flavor, const std::string &var,
                                         const VarTablePtr &params, const RationalFunction &a,
                                         const Scalar &alpha_mu, const Scalar &alpha_lambda,
                                         long j) {
    if (a.is_zero()) throw std::invalid_argument("birkhoff_factorize: coefficient a must be nonzero");
    if (!alpha_mu.is_integer() || !alpha_lambda.is_integer())
        throw std::invalid_argument("birkhoff_factorize: pairings must be integers");
    long p = alpha_mu.as_long();
    long q = alpha_lambda.as_long();

    LoopElement id = LoopElement::identity(flavor, var, params);
    if (j >= q) {
        // t^{mu+lambda} exp(a e t^{j-q}) with the unipotent already regular at 0
        LoopElement right = LoopElement::exp_nilpotent(flavor, var, params, true, a,
                                                       static_cast<int>(j - q));
        return BirkhoffFactorization{id, alpha_mu + alpha_lambda, right};
    }
    if (j <= -p) {
        // exp(a e t^{j+p}) is already regular at infinity
        LoopElement left = LoopElement::exp_nilpotent(flavor, var, params, true, a,
                                                      static_cast<int>(j + p));
        return BirkhoffFactorization{left, alpha_mu + alpha_lambda, id};
    }
    // generic regime -alpha(mu) < j < alpha(lambda):
    //   A = w exp(-a^{-1} e t^{-j-p}),  nu with alpha(nu) = q - p - 2j,
    //   B = exp(a f t^{q-j}) a^{-acheck}
    LoopElement left = LoopElement::weyl(flavor, var, params) *
                       LoopElement::exp_nilpotent(flavor, var, params, true, -a.inverse(),
                                                  static_cast<int>(-j - p));
    LoopElement right = LoopElement::exp_nilpotent(flavor, var, params, false, a,
                                                   static_cast<int>(q - j)) *
                        LoopElement::cartan(flavor, var, params, a.inverse());
    Scalar nu = alpha_lambda - alpha_mu - Scalar(2 * j);
    return BirkhoffFactorization{left, nu, right};
}

bool verify_factorization(GroupFlavor flavor, const std::string &var, const VarTablePtr &params,
                          const RationalFunction &a, const Scalar &alpha_mu,
                          const Scalar &alpha_lambda, long j, const BirkhoffFactorization &fac) {
    LoopElement input = birkhoff_input(flavor, var, params, a, alpha_mu, alpha_lambda, j);
    LoopElement mid = LoopElement::t_coweight(flavor, var, params, fac.nu_pairing);
    LoopElement product = fac.left * mid * fac.right;
    if (product.matrix() != input.matrix()) return false;
    if (!fac.left.matrix().regular_at(MatrixPoint::Infinity)) return false;
    if (!fac.right.matrix().regular_at(MatrixPoint::Zero)) return false;
    // middle exponent matches the Hecke class up to Weyl sign
    if (alpha_mu.sign() >= 0 && alpha_lambda.sign() >= 0 && j >= 0 &&
        Scalar(j) < alpha_lambda) {
        RootDatumPtr rd = RootDatum::sl2();
        Coweight mu = Coweight::rank1(rd, alpha_mu);
        Coweight lam = Coweight::rank1(rd, alpha_lambda);
        Coweight nu = hecke_class(mu, lam, rd->simple(0), j);
        Scalar expect = nu.simple_pairing(0);
        Scalar got = fac.nu_pairing.sign() < 0 ? -fac.nu_pairing : fac.nu_pairing;
        if (got != expect) return false;
    }
    return true;
}

} // namespace affkm
