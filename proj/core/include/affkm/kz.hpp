#pragma once

// The PGL2/P1 block machinery: first-order realization of sl2 on each
// marked point, Ward and KZ operators, the two-point Casimir, the Hecke
// coordinate transform Psi -> Upsilon, and the symbolic verification that
// the (N+1)-point Ward/KZ systems reduce to the N-point ones.

#include "affkm/modes.hpp"
#include "affkm/twisted.hpp"

#include <array>
#include <string>
#include <vector>

namespace affkm {

// First-order realization on the i-th point with weight w (the operator
// triple is d/dx, -2x d/dx + w, -x^2 d/dx + w x).
DiffOp rho_op(const VarTablePtr &table, Gen gen, int i, const RationalFunction &w);

// Two-point Casimir e(i)f(j) + f(i)e(j) + (1/2) h(i)h(j), expanded through
// composition; symmetric in (i, j).
DiffOp casimir_omega(const VarTablePtr &table, int i, int j, const RationalFunction &wi,
                     const RationalFunction &wj);

// The three global-invariance operators on points 1..m with weights w_i.
std::array<DiffOp, 3> ward_ops(const VarTablePtr &table, int m,
                               const std::vector<RationalFunction> &weights);

// The (N+1)-point operators for the twisted insertion: sum of d/dx_i, the
// Cartan operator with weights (2chi_1,...,2chi_N,k) shifted by -k, and
// sum of t_i d/dx_i.
std::array<DiffOp, 3> ward_ops_extended(const VarTablePtr &table, int m,
                                        const std::vector<RationalFunction> &weights,
                                        const RationalFunction &k);

// (k+2) d/dt_i - sum_{j != i, j <= m} Omega_ij / (t_i - t_j)
DiffOp kz_op(const VarTablePtr &table, int i, int m,
             const std::vector<RationalFunction> &weights, const RationalFunction &k);

// Symbolic N-point setup: ambient variables x1..x_{N+1}, t1..t_{N+1},
// parameters chi1..chiN, k; formal ring xi1..xiN, t1..tN over the same
// parameters.
class BlockSpace {
  public:
    // equal_weights identifies every chi_i with chi1, which keeps the
    // N-point Ward system nontrivial at small N
    explicit BlockSpace(int n, bool equal_weights = false);

    int n() const { return n_; }
    const VarTablePtr &ambient() const { return ambient_; }
    const VarTablePtr &formal() const { return formal_; }

    std::string xvar(int i) const { return "x" + std::to_string(i); }
    std::string tvar(int i) const { return "t" + std::to_string(i); }
    std::string xivar(int i) const { return "xi" + std::to_string(i); }
    std::string chivar(int i) const { return "chi" + std::to_string(equal_weights_ ? 1 : i); }

    RationalFunction ambient_weight(int i) const;      // 2 chi_i, or k at i = N+1
    RationalFunction formal_weight(int i) const;       // 2 chi_i in the formal ring
    RationalFunction level_ambient() const;            // k
    std::vector<RationalFunction> ambient_weights(int m) const;

    // substitution record xi_i = -(t_i - t_{N+1})/(x_i - x_{N+1}); the sign
    // flips for the mutation test
    RecordPtr hecke_record(bool flip_xi_sign = false) const;

    // Upsilon = prod_i ((x_i - x_{N+1})^2/(t_i - t_{N+1}))^{chi_i} Psi(xi; t),
    // optionally with the prefactor exponent of point 1 shifted by one
    TwistedFunction hecke_transform(bool flip_xi_sign = false,
                                    bool shift_prefactor = false) const;

    // N-point Ward identities as jet relations in the formal ring
    RelationSet ward_relations() const;
    // N-point KZ equations as jet relations
    RelationSet kz_relations() const;

  private:
    int n_;
    bool equal_weights_ = false;
    VarTablePtr ambient_;
    VarTablePtr formal_;
};

struct IdentityResult {
    std::string name;
    bool zero = false;
    std::string residual; // canonical text, empty when zero
    double seconds = 0.0;
};

struct TransportReport {
    std::string case_name;
    long relations_used = 0;
    int prolongation_order = 0;
    std::vector<IdentityResult> identities;
    bool verified() const {
        if (identities.empty()) return false;
        for (const auto &r : identities)
            if (!r.zero) return false;
        return true;
    }
};

struct TransportMutation {
    bool flip_xi_sign = false;
    bool shift_prefactor = false;
    bool shift_extra_weight = false; // chi_{N+1} = k/2 + 1
    bool any() const { return flip_xi_sign || shift_prefactor || shift_extra_weight; }
};

// Applies the three (N+1)-point Ward operators to Upsilon and reduces each
// residual modulo the prolonged N-point Ward relations.
TransportReport ward_transport(const BlockSpace &space,
                               const TransportMutation &mutation = {});

// Reduces the (N+1)-point KZ residual at point i modulo the N-point
// Ward+KZ relation set.
TransportReport kz_transport(const BlockSpace &space, int i,
                             const TransportMutation &mutation = {});

struct TwoPointReport {
    Scalar chi;
    Scalar level;
    Scalar casimir_eigenvalue;
    bool two_point_system = false;  // Psi_2 solves the 2-point Ward + KZ system
    bool three_point_system = false; // its Hecke transform solves the 3-point system
    std::vector<IdentityResult> identities;
    bool verified() const { return two_point_system && three_point_system; }
};

// Explicit solution Psi_2 = (x1-x2)^{2 chi} (t1-t2)^{c(chi)/(k+2)} and the
// end-to-end concrete check of its Hecke transform, by direct evaluation.
TwoPointReport two_point_solution(const Scalar &chi, const Scalar &level);

} // namespace affkm
