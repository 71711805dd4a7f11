#pragma once

// Rank-1 loop-group elements: symbolic generator words together with their
// 2x2 Laurent-matrix realization, and the Birkhoff factorization of
// exp(a e t^{j+alpha(mu)}) t^{mu+lambda} into (regular at oo) t^nu
// (regular at 0) with machine-checked regularity.

#include "affkm/laurent_matrix.hpp"
#include "affkm/root_datum.hpp"

#include <vector>

namespace affkm {

class LoopElement {
  public:
    enum class GenKind { ExpNilpotentPos, ExpNilpotentNeg, TCoweight, Weyl, Cartan };
    struct Gen {
        GenKind kind;
        RationalFunction coeff; // nilpotent coefficient or Cartan value
        int mode = 0;           // t-power of the nilpotent generator
        Scalar pairing;         // alpha(lambda) for TCoweight
    };

    static LoopElement identity(GroupFlavor flavor, const std::string &var,
                                const VarTablePtr &params);
    // exp(a e t^j) for +, exp(a f t^j) for -
    static LoopElement exp_nilpotent(GroupFlavor flavor, const std::string &var,
                                     const VarTablePtr &params, bool positive_root,
                                     const RationalFunction &a, int mode);
    static LoopElement t_coweight(GroupFlavor flavor, const std::string &var,
                                  const VarTablePtr &params, const Scalar &alpha_pairing);
    static LoopElement weyl(GroupFlavor flavor, const std::string &var,
                            const VarTablePtr &params);
    // a^{alpha_vee} = diag(a, 1/a)
    static LoopElement cartan(GroupFlavor flavor, const std::string &var,
                              const VarTablePtr &params, const RationalFunction &a);

    const ProjectiveLaurentMatrix &matrix() const { return matrix_; }
    const std::vector<Gen> &word() const { return word_; }
    GroupFlavor flavor() const { return matrix_.flavor(); }

    friend LoopElement operator*(const LoopElement &g, const LoopElement &h);

    std::string str() const;

  private:
    LoopElement(ProjectiveLaurentMatrix m, std::vector<Gen> w)
        : matrix_(std::move(m)), word_(std::move(w)) {}

    ProjectiveLaurentMatrix matrix_;
    std::vector<Gen> word_;
};

struct BirkhoffFactorization {
    LoopElement left;   // regular at infinity
    Scalar nu_pairing;  // alpha(nu) of the middle coweight factor
    LoopElement right;  // regular at zero
};

// Hecke parameter data for the rank-1 factorization: coefficient a != 0,
// pairings p = alpha(mu), q = alpha(lambda), and mode j.
BirkhoffFactorization birkhoff_factorize(GroupFlavor flavor, const std::string &var,
                                         const VarTablePtr &params, const RationalFunction &a,
                                         const Scalar &alpha_mu, const Scalar &alpha_lambda,
                                         long j);

// The loop element being factorized.
LoopElement birkhoff_input(GroupFlavor flavor, const std::string &var, const VarTablePtr &params,
                           const RationalFunction &a, const Scalar &alpha_mu,
                           const Scalar &alpha_lambda, long j);

// Product equality (projective for PGL2), regularity of both factors, and
// middle-exponent match with hecke_class up to Weyl sign (checked whenever
// 0 <= j < alpha(lambda) and the pairings are dominant).
bool verify_factorization(GroupFlavor flavor, const std::string &var, const VarTablePtr &params,
                          const RationalFunction &a, const Scalar &alpha_mu,
                          const Scalar &alpha_lambda, long j, const BirkhoffFactorization &fac);

} // namespace affkm
