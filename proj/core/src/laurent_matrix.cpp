#include "affkm/laurent_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace affkm {

ProjectiveLaurentMatrix::ProjectiveLaurentMatrix(GroupFlavor flavor, LaurentPolynomial a,
                                                 LaurentPolynomial b, LaurentPolynomial c,
                                                 LaurentPolynomial d)
    : flavor_(flavor), e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    check_determinant();
}

ProjectiveLaurentMatrix ProjectiveLaurentMatrix::identity(GroupFlavor flavor,
                                                          const std::string &var,
                                                          const VarTablePtr &params) {
    LaurentPolynomial one = LaurentPolynomial::constant(var, params, Scalar(1));
    LaurentPolynomial zero(var, params);
    return ProjectiveLaurentMatrix(flavor, one, zero, zero, one);
}

const VarTablePtr &ProjectiveLaurentMatrix::params() const {
    for (const auto &x : e_)
        if (x.params()) return x.params();
    return e_[0].params();
}

LaurentPolynomial ProjectiveLaurentMatrix::det() const {
    return e_[0] * e_[3] - e_[1] * e_[2];
}

void ProjectiveLaurentMatrix::check_determinant() const {
    LaurentPolynomial d = det();
    if (d.is_zero() || !d.is_monomial())
        throw std::invalid_argument(
            "ProjectiveLaurentMatrix: determinant is not a unit monomial");
}

ProjectiveLaurentMatrix ProjectiveLaurentMatrix::inverse() const {
    LaurentPolynomial d = det();
    int m = d.min_exp();
    RationalFunction c = d.coeff(m).inverse();
    // adjugate / det
    return ProjectiveLaurentMatrix(flavor_, e_[3].scaled(c).shifted(-m),
                                   (-e_[1]).scaled(c).shifted(-m),
                                   (-e_[2]).scaled(c).shifted(-m),
                                   e_[0].scaled(c).shifted(-m));
}

LaurentMatrix2 ProjectiveLaurentMatrix::derivative() const {
    LaurentMatrix2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = e_[i].derivative();
    return r;
}

LaurentMatrix2 ProjectiveLaurentMatrix::plain() const {
    LaurentMatrix2 r;
    r.e = e_;
    return r;
}

ProjectiveLaurentMatrix ProjectiveLaurentMatrix::scaled(const RationalFunction &c,
                                                        int shift) const {
    ProjectiveLaurentMatrix r = *this;
    for (auto &x : r.e_) x = x.scaled(c).shifted(shift);
    return r;
}

ProjectiveLaurentMatrix operator*(const ProjectiveLaurentMatrix &m1,
                                  const ProjectiveLaurentMatrix &m2) {
    if (m1.flavor_ != m2.flavor_)
        throw std::invalid_argument("ProjectiveLaurentMatrix: flavor mismatch");
    return ProjectiveLaurentMatrix(m1.flavor_,
                                   m1.e_[0] * m2.e_[0] + m1.e_[1] * m2.e_[2],
                                   m1.e_[0] * m2.e_[1] + m1.e_[1] * m2.e_[3],
                                   m1.e_[2] * m2.e_[0] + m1.e_[3] * m2.e_[2],
                                   m1.e_[2] * m2.e_[1] + m1.e_[3] * m2.e_[3]);
}

bool operator==(const ProjectiveLaurentMatrix &a, const ProjectiveLaurentMatrix &b) {
    if (a.flavor_ != b.flavor_) return false;
    if (a.flavor_ == GroupFlavor::SL2) {
        for (int i = 0; i < 4; ++i)
            if (a.e_[i] != b.e_[i]) return false;
        return true;
    }
    // PGL2: find the common monomial rescaling from the first jointly
    // nonzero entry, then compare entrywise.
    int pivot = -1;
    for (int i = 0; i < 4; ++i) {
        bool za = a.e_[i].is_zero(), zb = b.e_[i].is_zero();
        if (za != zb) return false;
        if (!za && pivot < 0) pivot = i;
    }
    if (pivot < 0) return true; // both zero matrices (cannot happen: det unit)
    int shift = a.e_[pivot].min_exp() - b.e_[pivot].min_exp();
    RationalFunction c = a.e_[pivot].coeff(a.e_[pivot].min_exp()) /
                         b.e_[pivot].coeff(b.e_[pivot].min_exp());
    for (int i = 0; i < 4; ++i)
        if (a.e_[i] != b.e_[i].scaled(c).shifted(shift)) return false;
    return true;
}

bool ProjectiveLaurentMatrix::regular_at(MatrixPoint p) const {
    // extremal exponent over the nonzero entries
    bool any = false;
    int ext = 0;
    for (const auto &x : e_) {
        if (x.is_zero()) continue;
        int v = (p == MatrixPoint::Zero) ? x.min_exp() : x.max_exp();
        if (!any) {
            ext = v;
            any = true;
        } else {
            ext = (p == MatrixPoint::Zero) ? std::min(ext, v) : std::max(ext, v);
        }
    }
    if (!any) return false;
    int shift = 0;
    if (flavor_ == GroupFlavor::PGL2) {
        shift = -ext;
    } else {
        if (p == MatrixPoint::Zero && ext < 0) return false;
        if (p == MatrixPoint::Infinity && ext > 0) return false;
    }
    // after rescaling, every exponent must be >= 0 (zero) or <= 0 (infinity)
    std::array<RationalFunction, 4> value;
    for (int i = 0; i < 4; ++i) {
        if (e_[i].is_zero()) {
            value[i] = RationalFunction(Polynomial(params(), Scalar(0)));
            continue;
        }
        int lim = (p == MatrixPoint::Zero) ? e_[i].min_exp() + shift
                                           : e_[i].max_exp() + shift;
        if (p == MatrixPoint::Zero && lim < 0) return false;
        if (p == MatrixPoint::Infinity && lim > 0) return false;
        value[i] = e_[i].coeff(-shift); // t^0 coefficient of the rescaled entry
    }
    RationalFunction dv = value[0] * value[3] - value[1] * value[2];
    return !dv.is_zero();
}

std::string ProjectiveLaurentMatrix::str() const {
    std::ostringstream os;
    os << "[[" << e_[0].str() << ", " << e_[1].str() << "], [" << e_[2].str() << ", "
       << e_[3].str() << "]]";
    return os.str();
}

} // namespace affkm
