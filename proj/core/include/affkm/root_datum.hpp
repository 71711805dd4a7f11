#pragma once

// Root data and coweights. Coweights are stored by their pairings with the
// simple roots (coordinates in the fundamental-coweight basis), which makes
// dominance and reflections immediate. The invariant form is normalized so
// the maximal root has square length 2.

#include "affkm/scalar.hpp"

#include <memory>
#include <string>
#include <vector>

namespace affkm {

class RootDatum;
using RootDatumPtr = std::shared_ptr<const RootDatum>;

// A root together with its coroot, in simple-root / simple-coroot coordinates.
struct RootPair {
    std::vector<long> root;   // alpha = sum root[i] * alpha_i
    std::vector<long> coroot; // alpha_vee = sum coroot[i] * alpha_i_vee
};

class RootDatum {
  public:
    // cartan[i][j] = alpha_i(alpha_j_vee)
    static RootDatumPtr make(std::vector<std::vector<long>> cartan);
    static RootDatumPtr sl2();
    static RootDatumPtr simply_laced_A(int rank); // type A Cartan matrix

    std::size_t rank() const { return cartan_.size(); }
    long cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
    const std::vector<RootPair> &positive_roots() const { return positive_; }
    const RootPair &simple(std::size_t i) const { return positive_[simple_index_[i]]; }
    const RootPair &highest_root() const { return positive_[highest_index_]; }
    long dual_coxeter_number() const { return h_check_; }
    // dimension of the Lie algebra: rank + number of roots
    std::size_t dim() const { return rank() + 2 * positive_.size(); }

    // alpha(lambda) for alpha given in simple-root coordinates
    static Scalar pairing(const std::vector<long> &root, const std::vector<Scalar> &coords);

  private:
    explicit RootDatum(std::vector<std::vector<long>> cartan);

    std::vector<std::vector<long>> cartan_;
    std::vector<RootPair> positive_;
    std::vector<std::size_t> simple_index_;
    std::size_t highest_index_ = 0;
    long h_check_ = 0;
};

class Coweight {
  public:
    Coweight() = default;
    Coweight(RootDatumPtr datum, std::vector<Scalar> pairings);

    static Coweight zero(RootDatumPtr datum);
    // rank-1 coweight with a given alpha-pairing
    static Coweight rank1(RootDatumPtr datum, const Scalar &alpha_pairing);

    const RootDatumPtr &datum() const { return datum_; }
    // alpha_i(lambda)
    const Scalar &simple_pairing(std::size_t i) const { return coords_[i]; }
    Scalar pairing(const RootPair &alpha) const {
        return RootDatum::pairing(alpha.root, coords_);
    }

    bool is_zero() const;
    bool is_dominant() const;

    Coweight operator+(const Coweight &o) const;
    Coweight operator-(const Coweight &o) const;
    // lambda - c * alpha_vee
    Coweight minus_coroot(const RootPair &alpha, const Scalar &c) const;
    Coweight reflected(std::size_t simple) const;
    friend bool operator==(const Coweight &a, const Coweight &b) {
        return a.coords_ == b.coords_;
    }

    // normalized kappa on the coweight space; rank-1 only
    static Scalar kappa_rank1(const Scalar &alpha_pairing_1, const Scalar &alpha_pairing_2) {
        return alpha_pairing_1 * alpha_pairing_2 / Scalar(2);
    }

    std::string str() const;

  private:
    RootDatumPtr datum_;
    std::vector<Scalar> coords_;
};

// (dominant representative, simple reflections applied in order)
std::pair<Coweight, std::vector<std::size_t>> dominant_rep(const Coweight &lambda);

// Dominant representative of mu + lambda - (j + alpha(mu)) alpha_vee.
// Requires mu, lambda dominant and 0 <= j < alpha(lambda).
Coweight hecke_class(const Coweight &mu, const Coweight &lambda, const RootPair &alpha, long j);

} // namespace affkm
