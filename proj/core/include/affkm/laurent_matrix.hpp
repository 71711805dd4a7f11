#pragma once

// 2x2 matrices over Laurent polynomials with unit-monomial determinant:
// loop-group elements for SL2/PGL2. PGL2 equality is modulo a common
// monomial rescaling of all entries; SL2 equality is entrywise.

#include "affkm/laurent.hpp"

#include <array>
#include <optional>

namespace affkm {

enum class GroupFlavor { SL2, PGL2 };

enum class MatrixPoint { Zero, Infinity };

// Plain 2x2 Laurent matrix without the unit-determinant invariant, for
// Lie-algebra realizations and derivative densities.
struct LaurentMatrix2 {
    std::array<LaurentPolynomial, 4> e;

    const LaurentPolynomial &entry(int r, int c) const { return e[2 * r + c]; }
    LaurentPolynomial &entry(int r, int c) { return e[2 * r + c]; }

    friend LaurentMatrix2 operator*(const LaurentMatrix2 &a, const LaurentMatrix2 &b) {
        LaurentMatrix2 r;
        r.e = {a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
               a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]};
        return r;
    }
    LaurentPolynomial trace() const { return e[0] + e[3]; }
    LaurentMatrix2 shifted(int m) const {
        LaurentMatrix2 r = *this;
        for (auto &x : r.e) x = x.shifted(m);
        return r;
    }
};

class ProjectiveLaurentMatrix {
  public:
    // entries row-major: a b / c d
    ProjectiveLaurentMatrix(GroupFlavor flavor, LaurentPolynomial a, LaurentPolynomial b,
                            LaurentPolynomial c, LaurentPolynomial d);

    static ProjectiveLaurentMatrix identity(GroupFlavor flavor, const std::string &var,
                                            const VarTablePtr &params);

    GroupFlavor flavor() const { return flavor_; }
    const LaurentPolynomial &entry(int r, int c) const { return e_[2 * r + c]; }
    const std::string &var() const { return e_[0].var(); }
    const VarTablePtr &params() const;

    LaurentPolynomial det() const;
    ProjectiveLaurentMatrix inverse() const;
    // entrywise d/dt, which is no longer a group element
    LaurentMatrix2 derivative() const;
    LaurentMatrix2 plain() const;
    ProjectiveLaurentMatrix scaled(const RationalFunction &c, int shift) const;

    friend ProjectiveLaurentMatrix operator*(const ProjectiveLaurentMatrix &m1,
                                             const ProjectiveLaurentMatrix &m2);

    friend bool operator==(const ProjectiveLaurentMatrix &a, const ProjectiveLaurentMatrix &b);
    friend bool operator!=(const ProjectiveLaurentMatrix &a, const ProjectiveLaurentMatrix &b) {
        return !(a == b);
    }

    // Regular at the point after an allowed projective rescaling, and
    // invertible there. SL2 permits no rescaling.
    bool regular_at(MatrixPoint p) const;

    std::string str() const;

  private:
    void check_determinant() const;

    GroupFlavor flavor_;
    std::array<LaurentPolynomial, 4> e_;
};

} // namespace affkm
