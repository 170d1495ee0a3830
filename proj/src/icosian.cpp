#include "qc/icosian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qc {

Icosian Icosian::operator*(const Icosian& o) const {
    const GoldenInt &a = c_[0], &b = c_[1], &c = c_[2], &d = c_[3];
    const GoldenInt &e = o.c_[0], &f = o.c_[1], &g = o.c_[2], &h = o.c_[3];
    std::array<GoldenInt, 4> raw = {
        a * e - b * f - c * g - d * h,
        a * f + b * e + c * h - d * g,
        a * g - b * h + c * e + d * f,
        a * h + b * g - c * f + d * e,
    };
    Icosian r;
    for (int k = 0; k < 4; ++k) r.c_[k] = raw[k].half();
    return r;
}

GoldenRat Icosian::quaternionic_norm() const {
    GoldenInt s;
    for (int k = 0; k < 4; ++k) s += c_[k] * c_[k];
    return s.to_rat() * GoldenRat(Rat(1, 4));
}

Rat Icosian::euclidean_norm() const {
    GoldenRat n = quaternionic_norm();
    return n.p() + n.q();
}

std::string Icosian::str() const {
    std::string s = "(";
    GoldenRat half(Rat(1, 2));
    for (int k = 0; k < 4; ++k) {
        if (k) s += ";";
        s += (c_[k].to_rat() * half).str();
    }
    return s + ")";
}

std::string Perm5::cycles() const {
    std::array<bool, 5> seen{};
    std::string out;
    for (int i = 0; i < 5; ++i) {
        if (seen[i] || img[i] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ",";
            out += std::to_string(j + 1);
            first = false;
            j = img[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Perm5 Perm5::from_cycles(const std::string& s) {
    Perm5 p;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("Perm5: expected '('");
        std::size_t close = s.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("Perm5: missing ')'");
        std::string body = s.substr(i + 1, close - i - 1);
        std::vector<int> cyc;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) cyc.push_back(std::stoi(tok) - 1);
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) p.img[cyc[k]] = cyc[(k + 1) % cyc.size()];
        i = close + 1;
    }
    return p;
}

int IcosianGroupTable::index_of(const Icosian& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || !(*it == x)) return -1;
    return static_cast<int>(it - elements.begin());
}

namespace {

const std::array<std::array<int, 4>, 12> kEvenPerms = {{
    {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 3, 2, 0},
    {2, 0, 1, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0},
}};

// Doubled coordinates of the 600-cell vertex families.
std::vector<Icosian> expand_600cell() {
    std::vector<Icosian> out;
    const GoldenInt two(2, 0), one(1, 0), zero(0, 0);
    const GoldenInt inv_tau(-1, 1);  // doubled (1/tau)/2 = tau - 1
    const GoldenInt tau(0, 1);

    // (+-1, 0, 0, 0) and all permutations
    for (int pos = 0; pos < 4; ++pos)
        for (int s : {1, -1}) {
            std::array<GoldenInt, 4> c{zero, zero, zero, zero};
            c[pos] = s > 0 ? two : -two;
            out.push_back(Icosian::from_doubled(c[0], c[1], c[2], c[3]));
        }
    // 1/2 (+-1, +-1, +-1, +-1)
    for (int m = 0; m < 16; ++m) {
        std::array<GoldenInt, 4> c;
        for (int k = 0; k < 4; ++k) c[k] = (m >> k) & 1 ? -one : one;
        out.push_back(Icosian::from_doubled(c[0], c[1], c[2], c[3]));
    }
    // 1/2 (0, +-1, +-1/tau, +-tau) and all even permutations
    const std::array<GoldenInt, 4> base = {zero, one, inv_tau, tau};
    for (const auto& perm : kEvenPerms)
        for (int m = 0; m < 8; ++m) {
            std::array<GoldenInt, 4> c;
            int bit = 0;
            for (int k = 0; k < 4; ++k) {
                GoldenInt v = base[perm[k]];
                if (!v.is_zero() && ((m >> bit++) & 1)) v = -v;
                c[k] = v;
            }
            out.push_back(Icosian::from_doubled(c[0], c[1], c[2], c[3]));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

IcosianGroupTable build_icosian_group() {
    IcosianGroupTable t;
    t.elements = expand_600cell();
    if (t.elements.size() != 120)
        throw std::runtime_error("icosian group: expected 120 vertices, got " +
                                 std::to_string(t.elements.size()));
    for (const auto& x : t.elements)
        if (x.quaternionic_norm() != GoldenRat::one())
            throw std::runtime_error("icosian group: non-unit element " + x.str());

    const int n = 120;
    t.product_index.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = t.index_of(t.elements[i] * t.elements[j]);
            if (k < 0)
                throw std::runtime_error("icosian group: product escapes the vertex set");
            t.product_index[i][j] = k;
        }

    // Pinned generator images; extended by breadth-first closure.
    struct Gen {
        Icosian x;
        Perm5 img;
    };
    const GoldenInt one(1, 0), tau(0, 1), inv_tau(-1, 1);
    std::vector<Gen> gens = {
        {Icosian::unit(1), Perm5::from_cycles("(2,3)(4,5)")},
        {Icosian::unit(2), Perm5::from_cycles("(2,4)(5,3)")},
        {Icosian::unit(3), Perm5::from_cycles("(2,5)(3,4)")},
        {Icosian::from_doubled(-one, one, one, one), Perm5::from_cycles("(3,4,5)")},
        {Icosian::from_doubled(GoldenInt(), one, -inv_tau, tau), Perm5::from_cycles("(1,3)(4,5)")},
    };

    std::vector<bool> known(n, false);
    t.a5_image.assign(n, Perm5::identity());
    int id = t.index_of(Icosian::unit(0));
    if (id < 0) throw std::runtime_error("icosian group: missing identity");
    known[id] = true;
    std::vector<int> frontier = {id};
    int reached = 1;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int i : frontier)
            for (const auto& g : gens) {
                int gi = t.index_of(g.x);
                if (gi < 0) throw std::runtime_error("icosian group: generator not a vertex");
                int k = t.product_index[i][gi];
                Perm5 img = t.a5_image[i].then(g.img);
                if (!known[k]) {
                    known[k] = true;
                    t.a5_image[k] = img;
                    next.push_back(k);
                    ++reached;
                } else if (t.a5_image[k] != img) {
                    throw std::runtime_error("icosian group: A5 images are inconsistent");
                }
            }
        frontier = std::move(next);
    }
    if (reached != n) throw std::runtime_error("icosian group: generators do not reach all elements");

    int kernel = 0;
    for (int i = 0; i < n; ++i)
        if (t.a5_image[i].is_identity()) ++kernel;
    if (kernel != 2) throw std::runtime_error("icosian group: A5 kernel is not {1,-1}");
    return t;
}

IcosianLattice IcosianLattice::from_generators(const std::vector<std::array<Int, 8>>& gens) {
    std::vector<std::array<Int, 8>> rows = gens;
    IcosianLattice lat;
    int pivot_row = 0;
    for (int col = 0; col < 8; ++col) {
        // clear column `col` below pivot_row by gcd reduction
        while (true) {
            int best = -1;
            for (std::size_t r = pivot_row; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (best < 0 || cmp(abs(rows[r][col]), abs(rows[best][col])) < 0)
                    best = static_cast<int>(r);
            }
            if (best < 0) break;
            std::swap(rows[pivot_row], rows[best]);
            bool clean = true;
            for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                Int q = rows[r][col] / rows[pivot_row][col];  // truncated is fine
                for (int j = 0; j < 8; ++j) rows[r][j] -= q * rows[pivot_row][j];
                if (rows[r][col] != 0) clean = false;
            }
            if (clean) {
                if (rows[pivot_row][col] < 0)
                    for (int j = 0; j < 8; ++j) rows[pivot_row][j] = -rows[pivot_row][j];
                lat.pivot_col_.push_back(col);
                ++pivot_row;
                break;
            }
        }
    }
    rows.resize(pivot_row);
    // reduce entries above pivots for a canonical form
    for (int r = pivot_row - 1; r >= 0; --r) {
        int c = lat.pivot_col_[r];
        for (int up = 0; up < r; ++up) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[up][c].get_mpz_t(), rows[r][c].get_mpz_t());
            if (q != 0)
                for (int j = 0; j < 8; ++j) rows[up][j] -= q * rows[r][j];
        }
    }
    lat.rows_ = std::move(rows);
    return lat;
}

bool IcosianLattice::contains(const std::array<Int, 8>& v) const {
    std::array<Int, 8> w = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        int c = pivot_col_[r];
        if (w[c] == 0) continue;
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w[c].get_mpz_t(), rows_[r][c].get_mpz_t());
        if (rem != 0) return false;
        for (int j = 0; j < 8; ++j) w[j] -= q * rows_[r][j];
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

Int IcosianLattice::pivot_product() const {
    Int p = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) p *= rows_[r][pivot_col_[r]];
    return p;
}

const IcosianLattice& IcosianLattice::ring() {
    static const IcosianLattice lat = [] {
        auto group = expand_600cell();
        std::vector<std::array<Int, 8>> gens;
        gens.reserve(group.size());
        for (const auto& g : group) gens.push_back(g.doubled_z8());
        IcosianLattice l = from_generators(gens);
        if (l.rank() != 8) throw std::runtime_error("icosian ring: rank != 8");
        return l;
    }();
    return lat;
}

const IcosianLattice& IcosianLattice::pure() {
    static const IcosianLattice lat = [] {
        // Rows of the ring HNF with pivot column >= 2 have zero real part and
        // span exactly the pure sublattice.
        const IcosianLattice& r = ring();
        std::vector<std::array<Int, 8>> gens;
        for (std::size_t i = 0; i < r.rows_.size(); ++i)
            if (r.pivot_col_[i] >= 2) gens.push_back(r.rows_[i]);
        IcosianLattice l = from_generators(gens);
        if (l.rank() != 6) throw std::runtime_error("pure icosians: rank != 6");
        return l;
    }();
    return lat;
}

namespace {

std::array<Icosian, 4> e8_basis_vectors() {
    const GoldenInt zero, one(1, 0), tau(0, 1), inv_tau(-1, 1);
    return {
        Icosian::from_doubled(inv_tau, -tau, zero, -one),
        Icosian::from_doubled(zero, inv_tau, -tau, one),
        Icosian::from_doubled(zero, one, inv_tau, -tau),
        Icosian::from_doubled(zero, -one, inv_tau, tau),
    };
}

// Coefficient pairing (c1+tau c7, c2+tau c6, c3+tau c5, c8+tau c4), 1-indexed.
std::array<GoldenInt, 4> parallel_coefficients(const std::array<Int, 8>& c) {
    return {GoldenInt(c[0], c[6]), GoldenInt(c[1], c[5]), GoldenInt(c[2], c[4]),
            GoldenInt(c[7], c[3])};
}

}  // namespace

Icosian e8_project_parallel(const std::array<Int, 8>& c) {
    auto a = e8_basis_vectors();
    auto w = parallel_coefficients(c);
    Icosian r;
    for (int k = 0; k < 4; ++k) r = r + w[k] * a[k];
    return r;
}

Icosian e8_project_perp(const std::array<Int, 8>& c) {
    auto a = e8_basis_vectors();
    // c_i - (1/tau) c_j = (c_i - c_j) + tau c_j since 1/tau = tau - 1
    std::array<GoldenInt, 4> w = {
        GoldenInt(c[0] + c[6], -c[6]), GoldenInt(c[1] + c[5], -c[5]),
        GoldenInt(c[2] + c[4], -c[4]), GoldenInt(c[7] + c[3], -c[3])};
    Icosian r;
    for (int k = 0; k < 4; ++k) r = r + w[k] * a[k].star();
    return r;
}

std::optional<std::array<Int, 8>> e8_coefficients(const Icosian& x) {
    // Solve M c = doubled_z8(x) over Q, demanding integrality.
    static const MatR m_inv = [] {
        MatR m(8, VecR(8));
        for (int j = 0; j < 8; ++j) {
            std::array<Int, 8> e{};
            e[j] = 1;
            auto col = e8_project_parallel(e).doubled_z8();
            for (int i = 0; i < 8; ++i) m[i][j] = GoldenRat(Rat(col[i]));
        }
        // invert by solving against the identity
        MatR inv(8, VecR(8));
        for (int j = 0; j < 8; ++j) {
            VecR rhs(8);
            rhs[j] = GoldenRat::one();
            VecR sol = mat_solve(m, rhs);
            for (int i = 0; i < 8; ++i) inv[i][j] = sol[i];
        }
        return inv;
    }();
    auto d = x.doubled_z8();
    VecR rhs(8);
    for (int i = 0; i < 8; ++i) rhs[i] = GoldenRat(Rat(d[i]));
    VecR sol = mat_vec(m_inv, rhs);
    std::array<Int, 8> out;
    for (int i = 0; i < 8; ++i) {
        if (!sol[i].is_rational()) return std::nullopt;
        Rat v = sol[i].p();
        if (v.get_den() != 1) return std::nullopt;
        out[i] = v.get_num();
    }
    return out;
}

}  // namespace qc
