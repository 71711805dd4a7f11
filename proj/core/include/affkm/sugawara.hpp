#pragma once

// Segal-Sugawara operators acting on module states, with a certified
// truncation of the mode sum, and the machine verification of their
// conjugation laws and of the minuscule twisted-vacuum presentation.

#include "affkm/module_state.hpp"

#include <functional>
#include <string>

namespace affkm {

// S_n v, exact over Q(k). The sum is truncated at the provable creation
// bound of v and the first two discarded terms on each side are checked to
// act by zero; the bound is extended if the check ever fails.
ModuleState sugawara_apply(long n, const ModuleState &v);

// Sugawara sum with every mode factor conjugated through `conj`, truncated
// with an extra margin for the mode shifts the conjugation introduces.
ModuleState sugawara_apply_conjugated(long n, const ModuleState &v,
                                      const std::function<ModeElement(Gen, long)> &conj,
                                      long shift_margin);

// central charge c_k = k dim(g)/(k + h_vee) = 3k/(k+2)
RationalFunction central_charge(const VarTablePtr &ktab);

// Ad(g) S_n v = (S_n + t^{n+1} (dg/dt) g^{-1}) v for g = exp(a x t^j), j >= 1
bool verify_conjugation_nilpotent(const Scalar &a, Gen x, long j, long n,
                                  const ModuleState &v);

// Ad(t^lambda) S_n v = (S_n + lambda_n + delta_{n,0} (k/2) kappa(lambda,lambda)) v
// for the rank-1 coweight with alpha(lambda) = ell
bool verify_conjugation_coweight(long ell, long n, const ModuleState &v);

struct MinusculeReport {
    bool lowering_kills_vacuum = false;   // e_{-alpha} |0>^lambda = 0
    bool cartan_scalar = false;           // h_0 |0>^lambda = -kappa(lambda,h) k |0>^lambda
    bool positive_part_kills = false;     // t g(O) |0>^lambda = 0
    bool singular_vector = false;         // the kernel generator is singular in M
    bool graded_dimensions_match = false; // V^lambda vs M_{-lambda*}/N per bigrade
    std::vector<std::string> details;
    bool ok() const {
        return lowering_kills_vacuum && cartan_scalar && positive_part_kills &&
               singular_vector && graded_dimensions_match;
    }
};

// Brute-force comparison of the twisted vacuum at the PGL2 minuscule
// coweight with the Verma-induced quotient, bigrade by bigrade up to energy
// depth `depth`.
MinusculeReport verify_minuscule_presentation(const VarTablePtr &ktab, long depth);

} // namespace affkm
