#pragma once

// sl2 mode arithmetic for the affine algebra: basis {e, h, f} with
// [e,f] = h, [h,e] = 2e, [h,f] = -2f, kappa(e,f) = 1, kappa(h,h) = 2.
// ModeElement is a finite combination of a (x) t^m plus a central term; the
// bracket carries the level cocycle m delta_{m+n,0} kappa(a,b) k.

#include "affkm/loop_element.hpp"
#include "affkm/rational.hpp"

#include <cstdint>
#include <map>

namespace affkm {

enum class Gen : uint8_t { E = 0, H = 1, F = 2 };

const char *gen_name(Gen g);

// root degree in units of alpha: e -> +1, h -> 0, f -> -1
int gen_degree(Gen g);
// h_0-weight: twice the degree
int gen_weight(Gen g);

// [a,b] as (coefficient, generator); zero coefficient when the bracket dies
std::pair<long, Gen> gen_bracket(Gen a, Gen b);
long gen_kappa(Gen a, Gen b);

struct SugawaraPair {
    Gen first;
    Gen second;
    Scalar scale;
};
// dual-basis pairs (I_j, I^j) entering the Sugawara sum: (e,f,1), (h,h,1/2), (f,e,1)
const std::vector<SugawaraPair> &sugawara_pairs();

class ModeElement {
  public:
    ModeElement() = default;
    explicit ModeElement(VarTablePtr ktab);

    static ModeElement single(VarTablePtr ktab, Gen a, long mode,
                              const Scalar &c = Scalar(1));
    static ModeElement central(VarTablePtr ktab, const RationalFunction &c);

    const VarTablePtr &ktab() const { return ktab_; }
    const std::map<std::pair<int, long>, RationalFunction> &terms() const { return terms_; }
    const RationalFunction &central_part() const { return central_; }
    bool is_zero() const;

    void add(Gen a, long mode, const RationalFunction &c);
    void add_central(const RationalFunction &c);

    ModeElement operator-() const;
    ModeElement &operator+=(const ModeElement &o);
    ModeElement &operator-=(const ModeElement &o);
    friend ModeElement operator+(ModeElement a, const ModeElement &b) { return a += b; }
    friend ModeElement operator-(ModeElement a, const ModeElement &b) { return a -= b; }
    ModeElement scaled(const RationalFunction &c) const;

    // [a_m, b_n] = [a,b]_{m+n} + m delta_{m+n,0} kappa(a,b) k
    friend ModeElement bracket_modes(const ModeElement &x, const ModeElement &y);

    // Ad(t^lambda) for a rank-1 coweight with alpha(lambda) = ell:
    // root modes shift by the degree, Cartan picks up the central correction.
    ModeElement spectral_flow(long ell) const;

    friend bool operator==(const ModeElement &a, const ModeElement &b);
    friend bool operator!=(const ModeElement &a, const ModeElement &b) { return !(a == b); }

    std::string str() const;

  private:
    VarTablePtr ktab_;
    std::map<std::pair<int, long>, RationalFunction> terms_;
    RationalFunction central_;
};

// Loop part of a traceless 2x2 Laurent matrix as a ModeElement (no central
// term). Throws when the matrix has a trace.
ModeElement mode_element_from_matrix(const VarTablePtr &ktab, const LaurentMatrix2 &m);

// 2x2 realization of a t^mode
LaurentMatrix2 gen_realization(const VarTablePtr &ktab, const std::string &var, Gen g,
                               long mode);

// Ad(g)(x) = (matrix conjugation) + res_0 kappa(g^{-1} dg/dt, x) k, extended
// by Ad(g)k = k.
ModeElement ad_loop(const LoopElement &g, const ModeElement &x);

} // namespace affkm
