#include "affkm/root_datum.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affkm {

RootDatum::RootDatum(std::vector<std::vector<long>> cartan) : cartan_(std::move(cartan)) {
    const std::size_t n = cartan_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (cartan_[i].size() != n)
            throw std::invalid_argument("RootDatum: Cartan matrix not square");
        if (cartan_[i][i] != 2)
            throw std::invalid_argument("RootDatum: Cartan diagonal must be 2");
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && cartan_[i][j] > 0)
                throw std::invalid_argument("RootDatum: off-diagonal entries must be <= 0");
    }
    // generate the root system by closing the simple roots under reflections
    auto pairing_with_coroot = [&](const std::vector<long> &root, std::size_t j) {
        long p = 0;
        for (std::size_t i = 0; i < n; ++i) p += root[i] * cartan_[i][j];
        return p;
    };
    auto coroot_pairing = [&](const std::vector<long> &coroot, std::size_t j) {
        // alpha_j(sum c_i alpha_i_vee)
        long p = 0;
        for (std::size_t i = 0; i < n; ++i) p += coroot[i] * cartan_[j][i];
        return p;
    };
    std::set<std::vector<long>> seen;
    std::vector<RootPair> all;
    for (std::size_t i = 0; i < n; ++i) {
        RootPair r;
        r.root.assign(n, 0);
        r.coroot.assign(n, 0);
        r.root[i] = 1;
        r.coroot[i] = 1;
        all.push_back(r);
        seen.insert(r.root);
    }
    for (std::size_t head = 0; head < all.size(); ++head) {
        if (all.size() > 10000) throw std::runtime_error("RootDatum: root system too large");
        RootPair cur = all[head];
        for (std::size_t j = 0; j < n; ++j) {
            RootPair ref = cur;
            long pr = pairing_with_coroot(cur.root, j);
            long pc = coroot_pairing(cur.coroot, j);
            ref.root[j] -= pr; // s_j(alpha) = alpha - alpha(alpha_j_vee) alpha_j
            ref.coroot[j] -= pc;
            if (seen.insert(ref.root).second) all.push_back(ref);
        }
    }
    simple_index_.assign(n, 0);
    for (const auto &r : all) {
        bool pos = true;
        for (long c : r.root)
            if (c < 0) pos = false;
        if (!pos) continue;
        positive_.push_back(r);
    }
    std::sort(positive_.begin(), positive_.end(), [](const RootPair &a, const RootPair &b) {
        return a.root < b.root;
    });
    long best_height = -1;
    for (std::size_t i = 0; i < positive_.size(); ++i) {
        long h = 0, nz = 0, idx = -1;
        for (std::size_t j = 0; j < n; ++j) {
            h += positive_[i].root[j];
            if (positive_[i].root[j] != 0) {
                ++nz;
                idx = static_cast<long>(j);
            }
        }
        if (nz == 1 && positive_[i].root[idx] == 1) simple_index_[idx] = i;
        if (h > best_height) {
            best_height = h;
            highest_index_ = i;
        }
    }
    // h_vee = 1 + height of the highest root's coroot
    long ch = 0;
    for (long c : positive_[highest_index_].coroot) ch += c;
    h_check_ = 1 + ch;
}

RootDatumPtr RootDatum::make(std::vector<std::vector<long>> cartan) {
    return RootDatumPtr(new RootDatum(std::move(cartan)));
}

RootDatumPtr RootDatum::sl2() { return make({{2}}); }

RootDatumPtr RootDatum::simply_laced_A(int rank) {
    std::vector<std::vector<long>> c(rank, std::vector<long>(rank, 0));
    for (int i = 0; i < rank; ++i) {
        c[i][i] = 2;
        if (i + 1 < rank) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    return make(std::move(c));
}

Scalar RootDatum::pairing(const std::vector<long> &root, const std::vector<Scalar> &coords) {
    Scalar p(0);
    for (std::size_t i = 0; i < root.size(); ++i) p += coords[i] * Scalar(root[i]);
    return p;
}

Coweight::Coweight(RootDatumPtr datum, std::vector<Scalar> pairings)
    : datum_(std::move(datum)), coords_(std::move(pairings)) {
    if (coords_.size() != datum_->rank())
        throw std::invalid_argument("Coweight: coordinate count mismatch");
}

Coweight Coweight::zero(RootDatumPtr datum) {
    std::vector<Scalar> c(datum->rank(), Scalar(0));
    return Coweight(std::move(datum), std::move(c));
}

Coweight Coweight::rank1(RootDatumPtr datum, const Scalar &alpha_pairing) {
    if (datum->rank() != 1) throw std::invalid_argument("Coweight: rank-1 constructor");
    return Coweight(std::move(datum), {alpha_pairing});
}

bool Coweight::is_zero() const {
    for (const auto &c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool Coweight::is_dominant() const {
    for (const auto &c : coords_)
        if (c.sign() < 0) return false;
    return true;
}

Coweight Coweight::operator+(const Coweight &o) const {
    std::vector<Scalar> c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return Coweight(datum_, std::move(c));
}

Coweight Coweight::operator-(const Coweight &o) const {
    std::vector<Scalar> c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return Coweight(datum_, std::move(c));
}

Coweight Coweight::minus_coroot(const RootPair &alpha, const Scalar &c) const {
    std::vector<Scalar> out = coords_;
    for (std::size_t i = 0; i < out.size(); ++i) {
        // alpha_i(alpha_vee) with alpha_vee in simple-coroot coordinates
        long p = 0;
        for (std::size_t k = 0; k < out.size(); ++k)
            p += alpha.coroot[k] * datum_->cartan(i, k);
        out[i] -= c * Scalar(p);
    }
    return Coweight(datum_, std::move(out));
}

Coweight Coweight::reflected(std::size_t simple) const {
    // s_i(lambda) = lambda - alpha_i(lambda) alpha_i_vee
    return minus_coroot(datum_->simple(simple), coords_[simple]);
}

std::string Coweight::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ",";
        os << coords_[i].str();
    }
    os << ")";
    return os.str();
}

std::pair<Coweight, std::vector<std::size_t>> dominant_rep(const Coweight &lambda) {
    Coweight cur = lambda;
    std::vector<std::size_t> word;
    for (std::size_t guard = 0; guard < 100000; ++guard) {
        std::size_t neg = cur.datum()->rank();
        for (std::size_t i = 0; i < cur.datum()->rank(); ++i) {
            if (cur.simple_pairing(i).sign() < 0) {
                neg = i;
                break;
            }
        }
        if (neg == cur.datum()->rank()) return {cur, word};
        cur = cur.reflected(neg);
        word.push_back(neg);
    }
    throw std::runtime_error("dominant_rep: reflection loop did not terminate");
}

Coweight hecke_class(const Coweight &mu, const Coweight &lambda, const RootPair &alpha, long j) {
    if (!mu.is_dominant() || !lambda.is_dominant())
        throw std::invalid_argument("hecke_class: coweights must be dominant");
    Scalar al = lambda.pairing(alpha);
    if (j < 0 || !(Scalar(j) < al))
        throw std::invalid_argument("hecke_class: need 0 <= j < alpha(lambda)");
    Scalar c = Scalar(j) + mu.pairing(alpha);
    Coweight raw = (mu + lambda).minus_coroot(alpha, c);
    return dominant_rep(raw).first;
}

} // namespace affkm
