#include "qc/golden.hpp"

#include <cctype>
#include <sstream>

namespace qc {

GoldenRat GoldenInt::to_rat() const {
    // a + tau b = (a + b/2) + (b/2) sqrt5
    return {Rat(a_) + Rat(b_) / 2, Rat(b_) / 2};
}

double GoldenInt::approx() const { return to_rat().approx(); }

namespace {

std::string int_str(const Int& n) { return n.get_str(); }
std::string rat_str(const Rat& r) { return r.get_str(); }

// Renders "<lead><+|-><mag>*<sym>" with the sign of the second term folded in.
std::string two_term(const std::string& lead, bool neg, const std::string& mag, const char* sym) {
    std::string out = lead;
    out += neg ? "-" : "+";
    out += mag;
    out += "*";
    out += sym;
    return out;
}

// Splits "lead(+|-)mag*sym"; the leading term may itself start with '-'.
bool split_two_term(const std::string& s, const char* sym, std::string& lead, std::string& second) {
    std::string star = std::string("*") + sym;
    auto pos = s.rfind(star);
    if (pos == std::string::npos || pos + star.size() != s.size()) return false;
    std::string body = s.substr(0, pos);
    // find the sign separating the terms: last '+' or '-' not at position 0
    // and not part of an exponent/numerator (plain integers/rationals only here).
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            lead = body.substr(0, i);
            second = body.substr(i);  // keeps the sign
            return true;
        }
    }
    return false;
}

std::string strip_plus(const std::string& s) {
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
}

bool parse_int(const std::string& raw, Int& out) {
    std::string s = strip_plus(raw);
    if (s.empty()) return false;
    try {
        out = Int(s);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

bool parse_rat(const std::string& raw, Rat& out) {
    std::string s = strip_plus(raw);
    if (s.empty()) return false;
    try {
        out = Rat(s);
        out.canonicalize();
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

}  // namespace

std::string GoldenInt::str() const {
    bool neg = b_ < 0;
    Int mag = neg ? Int(-b_) : b_;
    return two_term(int_str(a_), neg, int_str(mag), "tau");
}

std::optional<GoldenInt> GoldenInt::parse(const std::string& s) {
    std::string lead, second;
    if (!split_two_term(s, "tau", lead, second)) return std::nullopt;
    Int a, b;
    if (!parse_int(lead, a) || !parse_int(second, b)) return std::nullopt;
    return GoldenInt(a, b);
}

int GoldenRat::sign() const {
    int sp = sgn(p_), sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // opposite signs: compare p^2 against 5 q^2; equality impossible unless zero
    int c = cmp(p_ * p_, 5 * q_ * q_);
    if (c == 0) throw std::logic_error("GoldenRat: p^2 == 5q^2 with p,q nonzero");
    return c > 0 ? sp : sq;
}

Int GoldenRat::floor() const {
    if (q_ == 0) {
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), p_.get_num_mpz_t(), p_.get_den_mpz_t());
        return f;
    }
    // seed from a float estimate, then verify exactly and walk if needed
    mpf_class est(0, 256);
    mpf_class s5(0, 256);
    mpf_sqrt_ui(s5.get_mpf_t(), 5);
    est = mpf_class(p_, 256) + mpf_class(q_, 256) * s5;
    mpf_class fl = ::floor(est);
    Int n;
    mpz_set_f(n.get_mpz_t(), fl.get_mpf_t());
    while ((*this - GoldenRat(Rat(n))).sign() < 0) n -= 1;
    while ((*this - GoldenRat(Rat(n + 1))).sign() >= 0) n += 1;
    return n;
}

double GoldenRat::approx() const {
    mpf_class s5(0, 128);
    mpf_sqrt_ui(s5.get_mpf_t(), 5);
    mpf_class v = mpf_class(p_, 128) + mpf_class(q_, 128) * s5;
    return v.get_d();
}

std::string GoldenRat::str() const {
    bool neg = sgn(q_) < 0;
    Rat mag = neg ? Rat(-q_) : q_;
    return two_term(rat_str(p_), neg, rat_str(mag), "sqrt5");
}

std::optional<GoldenRat> GoldenRat::parse(const std::string& s) {
    std::string lead, second;
    if (!split_two_term(s, "sqrt5", lead, second)) return std::nullopt;
    Rat p, q;
    if (!parse_rat(lead, p) || !parse_rat(second, q)) return std::nullopt;
    return GoldenRat(p, q);
}

GoldenRat kappa_squared() {
    // tau^2 / (4 + 2 tau) = (5 + sqrt5) / 20
    return {Rat(1, 4), Rat(1, 20)};
}

int kappa_compare(const GoldenRat& l, const KappaScaledRat& r) {
    if (r.kappa_power == 0) return golden_compare(l, r.base);
    int sl = l.sign(), sr = r.base.sign();  // kappa > 0
    if (sl != sr) return sl < sr ? -1 : 1;
    if (sl == 0) return 0;
    // same nonzero sign: compare l^2 vs kappa^2 base^2, flip for negatives
    int c = golden_compare(l * l, kappa_squared() * r.base * r.base);
    return sl > 0 ? c : -c;
}

Int floor_sqrt(const GoldenRat& x) {
    if (x.sign() < 0) throw std::domain_error("floor_sqrt of negative value");
    mpf_class est(0, 256);
    mpf_class s5(0, 256);
    mpf_sqrt_ui(s5.get_mpf_t(), 5);
    est = mpf_class(x.p(), 256) + mpf_class(x.q(), 256) * s5;
    if (est < 0) est = 0;
    mpf_sqrt(est.get_mpf_t(), est.get_mpf_t());
    Int n;
    mpz_set_f(n.get_mpz_t(), est.get_mpf_t());
    if (n < 0) n = 0;
    auto sq = [](const Int& k) { return GoldenRat(Rat(k * k)); };
    while (n > 0 && (x - sq(n)).sign() < 0) n -= 1;
    while ((x - sq(n + 1)).sign() >= 0) n += 1;
    return n;
}

}  // namespace qc
