#pragma once

// Exact rational scalars. Thin value wrapper around GMP's mpq_class so the
// rest of the library never sees raw GMP types. Always canonical: lowest
// terms, positive denominator.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace affkm {

class Scalar {
  public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}
    Scalar(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
        v_.canonicalize();
    }
    explicit Scalar(const mpq_class &q) : v_(q) { v_.canonicalize(); }

    // Parses "p" or "p/q".
    static Scalar parse(const std::string &s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Scalar: cannot parse '" + s + "'");
        q.canonicalize();
        return Scalar(q);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonneg_integer() const { return is_integer() && sgn(v_) >= 0; }
    int sign() const { return sgn(v_); }

    // Requires is_integer() and fit in long.
    long as_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw std::domain_error("Scalar: not a machine integer");
        return v_.get_num().get_si();
    }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }
    Scalar &operator+=(const Scalar &o) { v_ += o.v_; return *this; }
    Scalar &operator-=(const Scalar &o) { v_ -= o.v_; return *this; }
    Scalar &operator*=(const Scalar &o) { v_ *= o.v_; return *this; }
    Scalar &operator/=(const Scalar &o) {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

    friend bool operator==(const Scalar &a, const Scalar &b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar &a, const Scalar &b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar &a, const Scalar &b) { return a.v_ < b.v_; }

    Scalar pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("Scalar: 0^negative");
            Scalar inv(mpq_class(1 / v_));
            return inv.pow(-e);
        }
        mpq_class r(1);
        mpq_class base = v_;
        long n = e;
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return Scalar(r);
    }

    // gcd of |numerators|, used for content stripping.
    static Scalar num_gcd(const Scalar &a, const Scalar &b) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.v_.get_num().get_mpz_t(), b.v_.get_num().get_mpz_t());
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), a.v_.get_den().get_mpz_t(), b.v_.get_den().get_mpz_t());
        return Scalar(mpq_class(g, l));
    }

    // "p/q" with "/1" omitted.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpq_class &raw() const { return v_; }

  private:
    mpq_class v_;
};

} // namespace affkm
