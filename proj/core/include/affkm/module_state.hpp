#pragma once

// States of (twisted) vacuum modules and the Verma-induced module, as exact
// linear combinations of canonically ordered PBW words applied to the cyclic
// vector. The boundary policy encodes which modes annihilate the cyclic
// vector and the h_0 scalar.

#include "affkm/modes.hpp"

#include <map>
#include <vector>

namespace affkm {

enum class BoundaryKind {
    TwistedVacuum, // |0>^lambda, twist = alpha(lambda)
    VermaInduced,  // induced from the sl2 Verma of lowest weight -k
};

struct ModulePolicy {
    BoundaryKind kind = BoundaryKind::TwistedVacuum;
    long twist = 0;

    // a_m kills the cyclic vector
    bool kills(Gen a, long m) const;
    // coefficient of k in the h_0 scalar on the cyclic vector
    long h0_scalar_times_k() const;
    // largest mode at which any generator can act without annihilating
    long max_survival_mode() const;

    friend bool operator==(const ModulePolicy &a, const ModulePolicy &b) {
        return a.kind == b.kind && a.twist == b.twist;
    }
};

struct Letter {
    uint8_t gen;
    int32_t mode;
    friend bool operator<(const Letter &a, const Letter &b) {
        if (a.mode != b.mode) return a.mode < b.mode;
        return a.gen < b.gen;
    }
    friend bool operator==(const Letter &a, const Letter &b) {
        return a.gen == b.gen && a.mode == b.mode;
    }
};
using Word = std::vector<Letter>;

class ModuleState {
  public:
    ModuleState() = default;
    ModuleState(VarTablePtr ktab, ModulePolicy policy);

    static ModuleState vacuum(VarTablePtr ktab, ModulePolicy policy);

    const VarTablePtr &ktab() const { return ktab_; }
    const ModulePolicy &policy() const { return policy_; }
    const std::map<Word, RationalFunction> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_word(const Word &w, const RationalFunction &c);

    ModuleState operator-() const;
    ModuleState &operator+=(const ModuleState &o);
    ModuleState &operator-=(const ModuleState &o);
    friend ModuleState operator+(ModuleState a, const ModuleState &b) { return a += b; }
    friend ModuleState operator-(ModuleState a, const ModuleState &b) { return a -= b; }
    ModuleState scaled(const RationalFunction &c) const;

    // exact PBW straightening of a_m applied to this state
    ModuleState apply(Gen a, long mode) const;
    // X v with the central term acting as multiplication by the level k
    ModuleState apply(const ModeElement &x) const;
    // letters applied right to left: word = a^1 ... a^r acts as a^1(...a^r(v))
    ModuleState apply_word(const Word &w) const;

    // provable bound: a_m (this) = 0 for every generator once m exceeds it
    long creation_bound() const;

    friend bool operator==(const ModuleState &a, const ModuleState &b);
    friend bool operator!=(const ModuleState &a, const ModuleState &b) { return !(a == b); }

    std::string str() const;

  private:
    VarTablePtr ktab_;
    ModulePolicy policy_;
    std::map<Word, RationalFunction> terms_;
};

// true iff a_m |0>^lambda = 0 for the twisted vacuum of twist ell
bool annihilates(Gen a, long m, long ell);

} // namespace affkm
