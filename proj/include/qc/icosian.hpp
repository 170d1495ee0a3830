#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qc/golden.hpp"
#include "qc/linalg.hpp"

namespace qc {

/// Quaternion with components in (1/2)Z[tau], stored as doubled GoldenInt
/// coordinates: the component value at slot k is doubled(k)/2. Ring elements
/// written in the integer basis (a+tau b) + (c+tau d)i + ... have even
/// doubled coordinates and convert to/from Z^8 exactly.
class Icosian {
public:
    Icosian() = default;
    static Icosian from_doubled(GoldenInt r, GoldenInt i, GoldenInt j, GoldenInt k) {
        Icosian x;
        x.c_ = {std::move(r), std::move(i), std::move(j), std::move(k)};
        return x;
    }
    static Icosian from_z8(const std::array<Int, 8>& z) {
        return from_doubled({2 * z[0], 2 * z[1]}, {2 * z[2], 2 * z[3]}, {2 * z[4], 2 * z[5]},
                            {2 * z[6], 2 * z[7]});
    }
    /// Unit quaternions 1, i, j, k for slot = 0..3.
    static Icosian unit(int slot) {
        Icosian x;
        x.c_[slot] = GoldenInt(2, 0);
        return x;
    }
    static Icosian real(const GoldenInt& t) {
        Icosian x;
        x.c_[0] = GoldenInt(2 * t.a(), 2 * t.b());
        return x;
    }

    const GoldenInt& doubled(int slot) const { return c_[slot]; }
    std::array<Int, 8> doubled_z8() const {
        return {c_[0].a(), c_[0].b(), c_[1].a(), c_[1].b(),
                c_[2].a(), c_[2].b(), c_[3].a(), c_[3].b()};
    }
    /// Integer-basis coordinates (a,b,...,h); throws if any component is a
    /// strict half.
    std::array<Int, 8> to_z8() const {
        std::array<Int, 8> z;
        for (int k = 0; k < 4; ++k) {
            GoldenInt h = c_[k].half();
            z[2 * k] = h.a();
            z[2 * k + 1] = h.b();
        }
        return z;
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_pure() const { return c_[0].is_zero(); }

    Icosian operator+(const Icosian& o) const {
        Icosian r;
        for (int k = 0; k < 4; ++k) r.c_[k] = c_[k] + o.c_[k];
        return r;
    }
    Icosian operator-(const Icosian& o) const {
        Icosian r;
        for (int k = 0; k < 4; ++k) r.c_[k] = c_[k] - o.c_[k];
        return r;
    }
    Icosian operator-() const {
        Icosian r;
        for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
        return r;
    }
    /// Scalar multiplication by an element of Z[tau] (exact, no halving).
    friend Icosian operator*(const GoldenInt& t, const Icosian& x) {
        Icosian r;
        for (int k = 0; k < 4; ++k) r.c_[k] = t * x.c_[k];
        return r;
    }

    /// Hamilton product. The quarter-coordinates of the raw product must
    /// collapse back to halves; a failure signals operands outside the ring.
    Icosian operator*(const Icosian& o) const;

    Icosian conj() const {
        Icosian r;
        r.c_[0] = c_[0];
        for (int k = 1; k < 4; ++k) r.c_[k] = -c_[k];
        return r;
    }
    Icosian star() const {
        Icosian r;
        for (int k = 0; k < 4; ++k) r.c_[k] = c_[k].star();
        return r;
    }

    bool operator==(const Icosian& o) const { return c_ == o.c_; }
    bool operator!=(const Icosian& o) const { return !(*this == o); }
    bool operator<(const Icosian& o) const { return c_ < o.c_; }

    /// n(x) = x conj(x), a real value in Q(sqrt5).
    GoldenRat quaternionic_norm() const;
    /// n_E(x) = p + q where n(x) = p + q*sqrt5; integral on the icosian ring.
    Rat euclidean_norm() const;

    /// True component values as a 4-vector over Q(sqrt5).
    VecR to_vec() const {
        VecR v(4);
        GoldenRat half(Rat(1, 2));
        for (int k = 0; k < 4; ++k) v[k] = c_[k].to_rat() * half;
        return v;
    }

    std::string str() const;

private:
    std::array<GoldenInt, 4> c_{};
};

inline GoldenRat quaternionic_norm(const Icosian& x) { return x.quaternionic_norm(); }
inline Rat euclidean_norm(const Icosian& x) { return x.euclidean_norm(); }

/// Permutation of {1..5}, stored 0-indexed.
struct Perm5 {
    std::array<int, 5> img{0, 1, 2, 3, 4};

    static Perm5 identity() { return {}; }
    bool is_identity() const { return *this == identity(); }
    /// Left-to-right composition: (a.then(b))(x) = b(a(x)). The table's
    /// correspondence is a homomorphism under this reading.
    Perm5 then(const Perm5& b) const {
        Perm5 r;
        for (int i = 0; i < 5; ++i) r.img[i] = b.img[img[i]];
        return r;
    }
    bool operator==(const Perm5& o) const { return img == o.img; }
    bool operator!=(const Perm5& o) const { return !(*this == o); }

    /// Cycle notation on {1..5}, e.g. "(2,3)(4,5)"; "()" for the identity.
    std::string cycles() const;
    static Perm5 from_cycles(const std::string& s);
};

struct IcosianGroupTable {
    std::vector<Icosian> elements;                 // exactly 120, canonically sorted
    std::vector<std::vector<int>> product_index;   // product_index[i][j] = index of e_i * e_j
    std::vector<Perm5> a5_image;

    int index_of(const Icosian& x) const;
};

/// Expands the 600-cell vertex set, verifies cardinality and closure, and
/// extends the five pinned A5 images to the whole group. Throws on any
/// inconsistency.
IcosianGroupTable build_icosian_group();

/// A Z-sublattice of the doubled-Z^8 coordinate space, kept in row HNF.
class IcosianLattice {
public:
    static IcosianLattice from_generators(const std::vector<std::array<Int, 8>>& gens);
    /// Z-span of the 120 icosian group elements (the icosian ring).
    static const IcosianLattice& ring();
    /// Elements of the ring with zero real part.
    static const IcosianLattice& pure();

    bool contains(const Icosian& x) const { return contains(x.doubled_z8()); }
    bool contains(const std::array<Int, 8>& v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    /// Product of the pivot entries (covolume in doubled coordinates).
    Int pivot_product() const;
    const std::vector<std::array<Int, 8>>& basis() const { return rows_; }

private:
    std::vector<std::array<Int, 8>> rows_;  // row HNF
    std::vector<int> pivot_col_;
};

/// Physical and inner projections of an E8 lattice vector given by its eight
/// integer coefficients; both land in the doubled-coordinate quaternions,
/// the parallel image inside the icosian ring.
Icosian e8_project_parallel(const std::array<Int, 8>& c);
Icosian e8_project_perp(const std::array<Int, 8>& c);
/// Inverse of the parallel projection on the ring; nullopt if x is not an
/// integral image.
std::optional<std::array<Int, 8>> e8_coefficients(const Icosian& x);

}  // namespace qc
