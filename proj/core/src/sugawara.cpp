#include "affkm/sugawara.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affkm {

namespace {

RationalFunction sugawara_prefactor(const VarTablePtr &ktab) {
    // 1/(2(k + h_vee)) with h_vee = 2
    Polynomial den = Polynomial::variable(ktab, "k").scaled(Scalar(2)) +
                     Polynomial(ktab, Scalar(4));
    return RationalFunction(Polynomial(ktab, Scalar(1)), den);
}

// one summand of the normally ordered sum, conjugated factor by factor
ModuleState sugawara_term(long n, long m, const ModuleState &v,
                          const std::function<ModeElement(Gen, long)> &conj) {
    ModuleState acc(v.ktab(), v.policy());
    for (const auto &pair : sugawara_pairs()) {
        ModuleState t = (m >= 0)
                            ? v.apply(conj(pair.first, m)).apply(conj(pair.second, n - m))
                            : v.apply(conj(pair.second, n - m)).apply(conj(pair.first, m));
        acc += t.scaled(RationalFunction(Polynomial(v.ktab(), pair.scale)));
    }
    return acc;
}

ModuleState sugawara_sum(long n, const ModuleState &v,
                         const std::function<ModeElement(Gen, long)> &conj,
                         long shift_margin) {
    if (v.is_zero()) return v;
    long bound = v.creation_bound() + shift_margin;
    long hi = std::max(bound, 0L);
    long lo = std::min(n - bound, 0L);

    // certified truncation: the two adjacent discarded terms on each side
    // must act by zero, else the window is widened
    for (int guard = 0; guard < 64; ++guard) {
        bool ok = sugawara_term(n, hi + 1, v, conj).is_zero() &&
                  sugawara_term(n, hi + 2, v, conj).is_zero() &&
                  sugawara_term(n, lo - 1, v, conj).is_zero() &&
                  sugawara_term(n, lo - 2, v, conj).is_zero();
        if (ok) break;
        hi += 2;
        lo -= 2;
        if (guard == 63) throw std::runtime_error("sugawara_sum: truncation failed to certify");
    }

    ModuleState acc(v.ktab(), v.policy());
    for (long m = 0; m <= hi; ++m) acc += sugawara_term(n, m, v, conj);
    for (long m = lo; m <= -1; ++m) acc += sugawara_term(n, m, v, conj);
    return acc.scaled(sugawara_prefactor(v.ktab()));
}

std::function<ModeElement(Gen, long)> plain_modes(const VarTablePtr &ktab) {
    return [ktab](Gen a, long m) { return ModeElement::single(ktab, a, m); };
}

} // namespace

ModuleState sugawara_apply(long n, const ModuleState &v) {
    return sugawara_sum(n, v, plain_modes(v.ktab()), 0);
}

ModuleState sugawara_apply_conjugated(long n, const ModuleState &v,
                                      const std::function<ModeElement(Gen, long)> &conj,
                                      long shift_margin) {
    return sugawara_sum(n, v, conj, shift_margin);
}

RationalFunction central_charge(const VarTablePtr &ktab) {
    Polynomial k = Polynomial::variable(ktab, "k");
    return RationalFunction(k.scaled(Scalar(3)), k + Polynomial(ktab, Scalar(2)));
}

bool verify_conjugation_nilpotent(const Scalar &a, Gen x, long j, long n,
                                  const ModuleState &v) {
    if (j < 1) throw std::invalid_argument("verify_conjugation_nilpotent: need j >= 1");
    if (x == Gen::H)
        throw std::invalid_argument("verify_conjugation_nilpotent: generator must be nilpotent");
    const VarTablePtr &ktab = v.ktab();
    RationalFunction ar(Polynomial(ktab, a));

    if (a.is_zero()) {
        // g is the identity; both sides are S_n v
        return true;
    }
    LoopElement g = LoopElement::exp_nilpotent(GroupFlavor::SL2, "t", ktab, x == Gen::E, ar,
                                               static_cast<int>(j));

    auto conj = [&](Gen b, long m) { return ad_loop(g, ModeElement::single(ktab, b, m)); };
    ModuleState lhs = sugawara_apply_conjugated(n, v, conj, 2 * j);

    // correction t^{n+1} (dg/dt) g^{-1}
    LaurentMatrix2 corr =
        (g.matrix().derivative() * g.matrix().inverse().plain()).shifted(static_cast<int>(n + 1));
    ModeElement corr_mode = mode_element_from_matrix(ktab, corr);
    ModuleState rhs = sugawara_apply(n, v) + v.apply(corr_mode);
    return lhs == rhs;
}

bool verify_conjugation_coweight(long ell, long n, const ModuleState &v) {
    const VarTablePtr &ktab = v.ktab();
    auto conj = [&](Gen b, long m) {
        return ModeElement::single(ktab, b, m).spectral_flow(ell);
    };
    ModuleState lhs = sugawara_apply_conjugated(n, v, conj, std::abs(ell));

    // lambda_n = t^n lambda = (ell/2) h_n; kappa(lambda,lambda) = ell^2/2
    ModuleState rhs = sugawara_apply(n, v);
    rhs += v.apply(Gen::H, n).scaled(RationalFunction(Polynomial(ktab, Scalar(ell, 2))));
    if (n == 0) {
        RationalFunction half_kappa =
            RationalFunction::variable(ktab, "k").scaled(Scalar(ell * ell, 4));
        rhs += v.scaled(half_kappa);
    }
    return lhs == rhs;
}

// ------------------------------------------------------------- minuscule

namespace {

struct Bigrade {
    long s; // energy: sum of -mode
    long w; // h_0 weight shift
    bool operator<(const Bigrade &o) const { return std::tie(s, w) < std::tie(o.s, o.w); }
};

long letter_s(const Letter &l) { return -static_cast<long>(l.mode); }
long letter_w(const Letter &l) { return gen_weight(static_cast<Gen>(l.gen)); }

// enumerate canonical PBW words from the allowed letter list (sorted left to
// right canonically) whose total (s,w) we bucket later; bounded by max_len
// letters and per-word predicate on partial sums
void enumerate_words(const std::vector<Letter> &alphabet, std::size_t start, Word &cur,
                     long max_energy_like, const std::function<long(const Letter &)> &cost,
                     const std::function<void(const Word &)> &emit) {
    emit(cur);
    for (std::size_t i = start; i < alphabet.size(); ++i) {
        long c = cost(alphabet[i]);
        if (c > max_energy_like) continue;
        cur.push_back(alphabet[i]);
        enumerate_words(alphabet, i, cur, max_energy_like - c, cost, emit);
        cur.pop_back();
    }
}

// rank of a list of states per bigrade, by Gaussian elimination over Q(k)
long rank_of(std::vector<ModuleState> states) {
    std::map<Word, std::size_t> pivot_of; // word -> index into pivots
    std::vector<ModuleState> pivots;
    long rank = 0;
    for (auto &st : states) {
        ModuleState cur = st;
        bool changed = true;
        while (changed && !cur.is_zero()) {
            changed = false;
            const auto &[w, c] = *cur.terms().begin();
            auto it = pivot_of.find(w);
            if (it != pivot_of.end()) {
                cur -= pivots[it->second].scaled(c);
                changed = true;
            }
        }
        if (cur.is_zero()) continue;
        const auto &[w, c] = *cur.terms().begin();
        ModuleState normalized = cur.scaled(c.inverse());
        pivot_of.emplace(w, pivots.size());
        pivots.push_back(std::move(normalized));
        ++rank;
    }
    return rank;
}

} // namespace

MinusculeReport verify_minuscule_presentation(const VarTablePtr &ktab, long depth) {
    MinusculeReport rep;
    if (depth < 0) throw std::invalid_argument("verify_minuscule_presentation: depth >= 0");

    const long ell = 1; // alpha(lambda) for the PGL2 minuscule coweight
    ModuleState vac =
        ModuleState::vacuum(ktab, ModulePolicy{BoundaryKind::TwistedVacuum, ell});
    ModuleState lowest =
        ModuleState::vacuum(ktab, ModulePolicy{BoundaryKind::VermaInduced, 1});

    // (i) e_{-alpha} |0>^lambda = 0: the lowering generator at mode 0
    rep.lowering_kills_vacuum = vac.apply(Gen::F, 0).is_zero();

    // (ii) h_0 |0>^lambda = -kappa(lambda,h) k |0>^lambda, kappa = ell
    {
        ModuleState expect = vac.scaled(
            RationalFunction::variable(ktab, "k").scaled(Scalar(-ell)));
        rep.cartan_scalar = (vac.apply(Gen::H, 0) == expect);
    }

    // (iii) t g(O) kills the twisted vacuum
    {
        bool ok = true;
        for (long m = 1; m <= depth + 2; ++m)
            for (Gen g : {Gen::E, Gen::H, Gen::F}) ok = ok && vac.apply(g, m).is_zero();
        rep.positive_part_kills = ok;
    }

    // the kernel generator g0 = f_{-1} |v> is singular: killed by t g(O) and
    // by f_0, so U(ghat) g0 = U(neg) U(e_0) g0 and the spanning set below is
    // complete
    ModuleState g0 = lowest.apply(Gen::F, -1);
    {
        bool ok = !g0.is_zero();
        for (Gen g : {Gen::E, Gen::H, Gen::F}) ok = ok && g0.apply(g, 1).is_zero();
        ok = ok && g0.apply(Gen::F, 0).is_zero();
        rep.singular_vector = ok;
    }

    // bigraded dimensions: V^lambda versus M/N on the window D <= depth,
    // s <= 2*depth + 2, with D = s + w/2
    bool dims_ok = true;
    {
        const long smax = 2 * depth + 2;
        // twisted-vacuum side: letters e_{<=0}, h_{<=-1}, f_{<=-2} with
        // energy grade D(letter) = deg(lambda-shift) - mode in [1, depth]
        std::vector<Letter> valph;
        for (long d = 1; d <= depth; ++d) {
            valph.push_back(Letter{static_cast<uint8_t>(Gen::E), static_cast<int32_t>(1 - d)});
            valph.push_back(Letter{static_cast<uint8_t>(Gen::H), static_cast<int32_t>(-d)});
            valph.push_back(Letter{static_cast<uint8_t>(Gen::F), static_cast<int32_t>(-1 - d)});
        }
        std::map<Bigrade, long> vdim;
        {
            Word cur;
            auto dcost = [ell](const Letter &l) {
                return gen_degree(static_cast<Gen>(l.gen)) * ell - l.mode;
            };
            enumerate_words(valph, 0, cur, depth, dcost, [&](const Word &w) {
                long s = 0, wt = 0;
                for (const auto &l : w) {
                    s += letter_s(l);
                    wt += letter_w(l);
                }
                vdim[Bigrade{s, wt}] += 1;
            });
        }

        // Verma-induced side: words in negative modes times e_0 powers
        std::vector<Letter> malph;
        for (long s = 1; s <= smax; ++s)
            for (Gen g : {Gen::E, Gen::H, Gen::F})
                malph.push_back(Letter{static_cast<uint8_t>(g), static_cast<int32_t>(-s)});
        std::map<Bigrade, std::vector<Word>> mbasis;
        {
            Word cur;
            auto scost = [](const Letter &l) { return letter_s(l); };
            enumerate_words(malph, 0, cur, smax, scost, [&](const Word &w) {
                long s = 0, wt = 0;
                for (const auto &l : w) {
                    s += letter_s(l);
                    wt += letter_w(l);
                }
                mbasis[Bigrade{s, wt}].push_back(w);
            });
        }
        auto mdim = [&](long s, long w) {
            long dim = 0;
            // words u with s(u) = s and w(u) + 2p = w, p >= 0
            for (long p = 0; 2 * p <= w + 2 * smax + 2; ++p) {
                auto it = mbasis.find(Bigrade{s, w - 2 * p});
                if (it != mbasis.end()) dim += static_cast<long>(it->second.size());
            }
            return dim;
        };

        // N spanning vectors at a bigrade: u_- e_0^p g0
        auto nrank = [&](long s, long w) {
            std::vector<ModuleState> span;
            for (long p = 0; 2 * p <= w + 2 * smax + 4; ++p) {
                // bigrade of e_0^p g0 is (1, 2p - 2)
                long su = s - 1, wu = w - (2 * p - 2);
                if (su < 0) continue;
                auto it = mbasis.find(Bigrade{su, wu});
                if (it == mbasis.end() && !(su == 0 && wu == 0)) continue;
                ModuleState seed = g0;
                for (long i = 0; i < p; ++i) seed = seed.apply(Gen::E, 0);
                if (seed.is_zero()) continue;
                if (su == 0 && wu == 0) {
                    span.push_back(seed);
                    continue;
                }
                if (it == mbasis.end()) continue;
                for (const auto &u : it->second) {
                    if (u.empty()) continue; // already covered by the empty word
                    ModuleState vec = seed.apply_word(u);
                    if (!vec.is_zero()) span.push_back(vec);
                }
            }
            return rank_of(std::move(span));
        };

        std::ostringstream detail;
        std::set<Bigrade> grades;
        for (const auto &[g, d] : vdim) {
            (void)d;
            grades.insert(g);
        }
        for (long s = 0; s <= smax; ++s)
            for (long D = 0; D <= depth; ++D) grades.insert(Bigrade{s, 2 * (D - s)});
        for (const auto &g : grades) {
            long dv = 0;
            auto it = vdim.find(g);
            if (it != vdim.end()) dv = it->second;
            long dm = mdim(g.s, g.w);
            long dn = nrank(g.s, g.w);
            if (dm - dn != dv) {
                dims_ok = false;
                detail << "bigrade (s=" << g.s << ", w=" << g.w << "): twisted " << dv
                       << " vs quotient " << dm << "-" << dn << "\n";
            }
        }
        if (!dims_ok) rep.details.push_back(detail.str());
        rep.details.push_back("bigrade window: s <= " + std::to_string(smax) +
                              ", energy depth <= " + std::to_string(depth));
    }
    rep.graded_dimensions_match = dims_ok;
    return rep;
}

} // namespace affkm
