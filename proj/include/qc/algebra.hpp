#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qc/quasiadd.hpp"
#include "qc/scheme.hpp"

namespace qc {

/// Finite formal linear combination of generators L_x with exact rational
/// coefficients; zero coefficients are never stored, so equal elements have
/// identical representations.
class AlgebraElement {
public:
    AlgebraElement() = default;
    static AlgebraElement generator(const QcPoint& p) {
        AlgebraElement e;
        e.terms_[p.coords] = 1;
        return e;
    }

    const std::map<Coords, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const Coords& x) const {
        auto it = terms_.find(x);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    AlgebraElement& add_term(const Coords& x, const Rat& c) {
        Rat& slot = terms_[x];
        slot += c;
        if (slot == 0) terms_.erase(x);
        return *this;
    }
    AlgebraElement operator+(const AlgebraElement& o) const {
        AlgebraElement r = *this;
        for (const auto& [x, c] : o.terms_) r.add_term(x, c);
        return r;
    }
    AlgebraElement operator-(const AlgebraElement& o) const {
        AlgebraElement r = *this;
        for (const auto& [x, c] : o.terms_) r.add_term(x, -c);
        return r;
    }
    AlgebraElement scaled(const Rat& c) const {
        AlgebraElement r;
        if (c == 0) return r;
        for (const auto& [x, v] : terms_) r.terms_[x] = v * c;
        return r;
    }
    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<Coords, Rat> terms_;
};

/// Bilinear extension of L_x o L_y = 1/2 (L_{x|-y} + L_{y|-x}). Every support
/// point of the result is re-certified against the scheme's window; a failure
/// throws (it signals a non-convex or corrupted window).
AlgebraElement jordan_product(const Scheme& s, const AlgebraElement& a, const AlgebraElement& b);

/// Commutativity and (a o b) o (a o a) = a o (b o (a o a)), both exact.
bool jordan_identity_check(const Scheme& s, const AlgebraElement& a, const AlgebraElement& b);

/// (x |- y) + (y |- x) = x + y.
bool sum_conservation_check(const Coords& x, const Coords& y);

struct UnitProbeReport {
    long batch_size = 0;
    std::vector<Coords> fixers;  // x with L_x o L_0 = L_0; must be {0}
    bool ok = false;
    std::string scope = "evidence on batch";
};
/// Over the batch, L_x o L_0 = L_0 must hold for x = 0 only.
UnitProbeReport unit_probe(const Scheme& s, const std::vector<QcPoint>& pts);

struct GrowthProbeReport {
    long requested = 0;
    long distinct = 0;
    bool closed_form_agrees = false;
    bool ok = false;
};
/// Chain L_{x|-y}, L_{(x|-y)|-y}, ...: k_max distinct support points,
/// certified by the closed form.
GrowthProbeReport subalgebra_growth_probe(const Scheme& s, const QcPoint& x, const QcPoint& y,
                                          long k_max);

struct IdealProbeReport {
    long batch_size = 0;
    long span_rank = 0;
    std::optional<Coords> unreachable;  // batch generator outside the span
    bool proper_on_batch = false;
    std::string scope = "evidence on batch";
};
/// Rank of {L_g o L_p : p in batch} over exact rationals, with a batch
/// generator certified outside the span when the ideal is proper on batch.
IdealProbeReport ideal_probe(const Scheme& s, const QcPoint& generator,
                             const std::vector<QcPoint>& pts);

/// One-dimensional unitization J + K.
struct UnitizedElement {
    AlgebraElement body;
    Rat scalar = 0;

    static UnitizedElement unit() { return {AlgebraElement(), Rat(1)}; }
    static UnitizedElement embed(const AlgebraElement& a) { return {a, Rat(0)}; }
    bool operator==(const UnitizedElement& o) const {
        return scalar == o.scalar && body == o.body;
    }
};
/// (x + alpha) * (y + beta) = x o y + alpha y + beta x + alpha beta.
UnitizedElement unitized_product(const Scheme& s, const UnitizedElement& a,
                                 const UnitizedElement& b);

/// Commutative scalar ring of the scheme's lattice (Z[tau] for the chain,
/// Z[tau][xi^2] for the tiling). Quaternionic lattices have no commutative
/// scalar ring and are rejected.
bool witt_scalars_commutative(SchemeKind k);
Coords scalar_one(const Scheme& s);
Coords scalar_mul(const Scheme& s, const Coords& a, const Coords& b);

/// Sparse combination with coefficients in the lattice scalar ring.
class WittElement {
public:
    WittElement() = default;
    static WittElement generator(const Scheme& s, const Coords& x);

    const std::map<Coords, Coords>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    WittElement& add_term(const Coords& x, const Coords& coeff);
    WittElement operator+(const WittElement& o) const;
    WittElement operator-(const WittElement& o) const;
    bool operator==(const WittElement& o) const { return terms_ == o.terms_; }

private:
    std::map<Coords, Coords> terms_;
};

/// [L_x, L_y] = (x - y) chi(x* + y*) L_{x+y}, extended bilinearly. With
/// `windowed` false the characteristic function is identically one (the ring
/// bracket).
WittElement witt_bracket(const Scheme& s, const WittElement& a, const WittElement& b,
                         bool windowed = true);

/// Jacobi sum [x,[y,z]] + [y,[z,x]] + [z,[x,y]] for generator triples.
WittElement jacobi_sum(const Scheme& s, const Coords& x, const Coords& y, const Coords& z,
                       bool windowed);

struct AcceptabilityReport {
    long triples = 0;
    std::vector<std::array<VecR, 3>> violations;
    bool ok() const { return violations.empty(); }
};
/// chi(x+y+z) = 1 and chi(x+y) = 1 must imply chi(x+z) = 1 over all ordered
/// sample triples; samples are inner points inside the window.
AcceptabilityReport acceptability_check(const ConvexWindow& w, const std::vector<VecR>& samples);

/// A physical/inner pair of exact linear isometries.
struct PairedIsometry {
    std::string name;
    MatR phys;
    MatR inner;
};

PairedIsometry isometry_identity(const Scheme& s);
/// x -> -x on both sides.
PairedIsometry isometry_negation(const Scheme& s);
/// Multiplication by the primitive tenth... fifth root on the tiling scheme:
/// physical rotation by 72 degrees, inner by 144.
PairedIsometry isometry_penrose_fivefold();
/// The five icosahedral isometries of the correspondence table
/// (index 0..4: the i, j, k, omega, v rows), physical side, with the Galois
/// conjugate acting on the inner space.
PairedIsometry isometry_icosahedral(int row);

/// Induced map on lattice coordinates; nullopt when the image leaves the
/// coordinate lattice.
std::optional<Coords> apply_isometry(const Scheme& s, const PairedIsometry& iso, const Coords& c);

struct SymmetryReport {
    bool window_invariant = false;
    bool lattice_ok = true;
    bool core_bijection = false;
    long pairs = 0;
    std::vector<std::string> violations;
    bool hypothesis_failure() const { return !window_invariant; }
    bool ok() const { return window_invariant && lattice_ok && core_bijection && violations.empty(); }
};
/// Verifies rho(Omega) = Omega on the facet set, maps the batch through rho,
/// checks the radius core is a bijection and rho(x|-y) = rho(x)|-rho(y) on
/// all pairs. A non-invariant window is reported as hypothesis failure.
SymmetryReport symmetry_transfer_check(const Scheme& s, const PairedIsometry& iso,
                                       const std::vector<QcPoint>& pts);

/// Integral labeling of the palindromic chain algebra: indices n with
/// L_n o L_m = 1/2 (L_{n'-m'+2n-m} + L_{m'-n'+2m-n}).
std::pair<long, long> fibonacci_label_product(long n, long m);

}  // namespace qc
