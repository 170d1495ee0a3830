#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qc {

using Int = mpz_class;
using Rat = mpq_class;

class GoldenRat;

/// Element a + tau*b of Z[tau], tau = (1+sqrt5)/2, tau^2 = tau + 1.
class GoldenInt {
public:
    GoldenInt() : a_(0), b_(0) {}
    GoldenInt(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {}
    explicit GoldenInt(long n) : a_(n), b_(0) {}

    static GoldenInt zero() { return GoldenInt(); }
    static GoldenInt one() { return GoldenInt(1, 0); }
    static GoldenInt tau() { return GoldenInt(0, 1); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    GoldenInt operator+(const GoldenInt& o) const { return {a_ + o.a_, b_ + o.b_}; }
    GoldenInt operator-(const GoldenInt& o) const { return {a_ - o.a_, b_ - o.b_}; }
    GoldenInt operator-() const { return {-a_, -b_}; }
    GoldenInt operator*(const GoldenInt& o) const {
        // (a+tau b)(c+tau d) = ac+bd + tau(ad+bc+bd)
        return {a_ * o.a_ + b_ * o.b_, a_ * o.b_ + b_ * o.a_ + b_ * o.b_};
    }
    GoldenInt& operator+=(const GoldenInt& o) { a_ += o.a_; b_ += o.b_; return *this; }
    GoldenInt& operator-=(const GoldenInt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    GoldenInt& operator*=(const GoldenInt& o) { *this = *this * o; return *this; }

    bool operator==(const GoldenInt& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const GoldenInt& o) const { return !(*this == o); }
    /// Lexicographic order on (a, b); a container key, not the real order.
    bool operator<(const GoldenInt& o) const {
        int c = cmp(a_, o.a_);
        if (c != 0) return c < 0;
        return cmp(b_, o.b_) < 0;
    }

    /// Galois conjugation tau -> 1 - tau: (a + tau b)* = (a+b) - tau b.
    GoldenInt star() const { return {a_ + b_, -b_}; }

    GoldenInt pow(unsigned k) const {
        GoldenInt r = one(), base = *this;
        while (k) {
            if (k & 1u) r *= base;
            base *= base;
            k >>= 1u;
        }
        return r;
    }

    bool both_even() const { return mpz_even_p(a_.get_mpz_t()) && mpz_even_p(b_.get_mpz_t()); }
    /// Exact division by 2; throws if a or b is odd.
    GoldenInt half() const {
        if (!both_even()) throw std::runtime_error("GoldenInt::half: odd coefficient");
        return {a_ / 2, b_ / 2};
    }

    GoldenRat to_rat() const;
    double approx() const;

    /// Canonical text form "a+b*tau" (e.g. "2-3*tau", "0+0*tau").
    std::string str() const;
    static std::optional<GoldenInt> parse(const std::string& s);

private:
    Int a_, b_;
};

inline GoldenInt operator*(const Int& n, const GoldenInt& x) { return GoldenInt(n * x.a(), n * x.b()); }

/// Element p + q*sqrt5 of Q(sqrt5), stored in the tau-free basis.
class GoldenRat {
public:
    GoldenRat() : p_(0), q_(0) {}
    GoldenRat(Rat p, Rat q) : p_(std::move(p)), q_(std::move(q)) { canon(); }
    explicit GoldenRat(long n) : p_(n), q_(0) {}
    explicit GoldenRat(const Rat& p) : p_(p), q_(0) { canon(); }

    static GoldenRat zero() { return GoldenRat(); }
    static GoldenRat one() { return GoldenRat(1); }
    static GoldenRat sqrt5() { return {Rat(0), Rat(1)}; }
    static GoldenRat tau() { return {Rat(1, 2), Rat(1, 2)}; }

    const Rat& p() const { return p_; }
    const Rat& q() const { return q_; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_rational() const { return q_ == 0; }

    GoldenRat operator+(const GoldenRat& o) const { return {p_ + o.p_, q_ + o.q_}; }
    GoldenRat operator-(const GoldenRat& o) const { return {p_ - o.p_, q_ - o.q_}; }
    GoldenRat operator-() const { return {-p_, -q_}; }
    GoldenRat operator*(const GoldenRat& o) const {
        return {p_ * o.p_ + 5 * q_ * o.q_, p_ * o.q_ + q_ * o.p_};
    }
    GoldenRat& operator+=(const GoldenRat& o) { p_ += o.p_; q_ += o.q_; canon(); return *this; }
    GoldenRat& operator-=(const GoldenRat& o) { p_ -= o.p_; q_ -= o.q_; canon(); return *this; }
    GoldenRat& operator*=(const GoldenRat& o) { *this = *this * o; return *this; }

    /// Multiplicative inverse; exists iff the value is nonzero (p^2 != 5q^2).
    GoldenRat inverse() const {
        Rat n = p_ * p_ - 5 * q_ * q_;
        if (n == 0) throw std::domain_error("GoldenRat::inverse of zero");
        return {p_ / n, -q_ / n};
    }
    GoldenRat operator/(const GoldenRat& o) const { return *this * o.inverse(); }

    bool operator==(const GoldenRat& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const GoldenRat& o) const { return !(*this == o); }

    /// Galois conjugation sqrt5 -> -sqrt5 (tau -> 1-tau).
    GoldenRat star() const { return {p_, -q_}; }

    /// Exact sign of the real value p + q*sqrt5.
    int sign() const;

    /// Exact real-order comparisons.
    bool operator<(const GoldenRat& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const GoldenRat& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const GoldenRat& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const GoldenRat& o) const { return (*this - o).sign() >= 0; }

    GoldenRat abs() const { return sign() < 0 ? -*this : *this; }

    /// Exact floor of the real value.
    Int floor() const;
    Int ceil() const { return -(-*this).floor(); }

    double approx() const;

    /// Canonical text form "p+q*sqrt5" with exact rational literals.
    std::string str() const;
    static std::optional<GoldenRat> parse(const std::string& s);

private:
    void canon() { p_.canonicalize(); q_.canonicalize(); }
    Rat p_, q_;
};

inline int golden_sign(const GoldenRat& x) { return x.sign(); }
inline int golden_compare(const GoldenRat& l, const GoldenRat& r) { return (l - r).sign(); }

/// kappa = tau / sqrt(4 + 2 tau); kappa^2 = (5 + sqrt5)/20 lies in Q(sqrt5).
GoldenRat kappa_squared();

/// Value base * kappa^kappa_power with kappa_power in {0, 1}.
struct KappaScaledRat {
    GoldenRat base;
    int kappa_power = 0;

    static KappaScaledRat plain(GoldenRat v) { return {std::move(v), 0}; }
    static KappaScaledRat kappa_times(GoldenRat v) { return {std::move(v), 1}; }

    /// Product; kappa^2 collapses back into the Q(sqrt5) base.
    KappaScaledRat times(const KappaScaledRat& o) const {
        int pw = kappa_power + o.kappa_power;
        GoldenRat b = base * o.base;
        if (pw == 2) return {b * kappa_squared(), 0};
        return {b, pw};
    }
};

/// Exact ordering of l against r = base * kappa^{0 or 1}: -1, 0, +1.
int kappa_compare(const GoldenRat& l, const KappaScaledRat& r);

/// Exact floor of sqrt(x) for x >= 0 (largest n with n^2 <= x).
Int floor_sqrt(const GoldenRat& x);

}  // namespace qc
