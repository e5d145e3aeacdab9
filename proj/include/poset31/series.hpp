#pragma once

// Exact truncated power series over arbitrary-precision rationals in three
// variables: x (exponential, counts labeled vertices), z (ordinary, marks
// all-seeing vertices), t (ordinary, marks height). Coefficients are stored
// densely up to per-variable bounds; every operation returns the exact
// coefficients of the untruncated result wherever the exponents fit the
// bounds. No floating point anywhere.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "poset31/rational.hpp"

namespace poset31 {

struct Bounds {
    int nx = 16, nz = 16, nt = 16;
    bool operator==(const Bounds&) const = default;
    int cells() const { return (nx + 1) * (nz + 1) * (nt + 1); }
};

class TruncatedSeries {
public:
    TruncatedSeries() : TruncatedSeries(Bounds{}) {}
    explicit TruncatedSeries(Bounds b) : b_(b), c_(b.cells()) {}

    const Bounds& bounds() const { return b_; }

    const Rat& coeff(int i, int j = 0, int k = 0) const {
        check_exponents(i, j, k);
        return c_[idx(i, j, k)];
    }
    void set_coeff(int i, int j, int k, Rat v) {
        check_exponents(i, j, k);
        c_[idx(i, j, k)] = std::move(v);
    }

    static TruncatedSeries zero(Bounds b) { return TruncatedSeries(b); }
    static TruncatedSeries one(Bounds b) { return monomial(b, 1, 0, 0, 0); }
    static TruncatedSeries monomial(Bounds b, Rat c, int i, int j = 0, int k = 0) {
        TruncatedSeries s(b);
        s.set_coeff(i, j, k, std::move(c));
        return s;
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const TruncatedSeries& o) const { return b_ == o.b_ && c_ == o.c_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_bounds(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_bounds(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        a += b;
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        a -= b;
        return a;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries r(b_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    TruncatedSeries scaled(const Rat& f) const {
        TruncatedSeries r(b_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * f;
        return r;
    }

    struct Term {
        int i, j, k;
        Rat c;
    };

    // Nonzero terms in lexicographic (i, j, k) order.
    std::vector<Term> terms() const {
        std::vector<Term> out;
        for (int i = 0; i <= b_.nx; ++i)
            for (int j = 0; j <= b_.nz; ++j)
                for (int k = 0; k <= b_.nt; ++k) {
                    const Rat& v = c_[idx(i, j, k)];
                    if (v != 0) out.push_back({i, j, k, v});
                }
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_bounds(b);
        TruncatedSeries r(a.b_);
        auto ta = a.terms();
        auto tb = b.terms();
        for (const auto& u : ta)
            for (const auto& v : tb) {
                int i = u.i + v.i, j = u.j + v.j, k = u.k + v.k;
                if (i > a.b_.nx || j > a.b_.nz || k > a.b_.nt) continue;
                r.c_[r.idx(i, j, k)] += u.c * v.c;
            }
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    // Multiplicative inverse by coefficient recurrence; the constant
    // coefficient must be nonzero.
    TruncatedSeries invert() const {
        const Rat& c0 = c_[0];
        if (c0 == 0) throw std::invalid_argument("invert: zero constant term");
        TruncatedSeries r(b_);
        auto ts = terms();
        // ts.front() is the constant term; the recurrence convolves the rest
        std::vector<Term> tail(ts.begin() + 1, ts.end());
        for (int i = 0; i <= b_.nx; ++i)
            for (int j = 0; j <= b_.nz; ++j)
                for (int k = 0; k <= b_.nt; ++k) {
                    Rat acc = (i == 0 && j == 0 && k == 0) ? Rat(1) : Rat(0);
                    for (const auto& s : tail) {
                        if (s.i > i || s.j > j || s.k > k) continue;
                        acc -= s.c * r.c_[r.idx(i - s.i, j - s.j, k - s.k)];
                    }
                    r.c_[r.idx(i, j, k)] = acc / c0;
                }
        return r;
    }

    // z := R, where R has zero constant term and depends on x only.
    // Evaluated by Horner over the z-layers.
    TruncatedSeries subst_z(const TruncatedSeries& r) const {
        check_bounds(r);
        if (r.coeff(0, 0, 0) != 0)
            throw std::invalid_argument("subst_z: substitute must have zero constant term");
        for (const auto& t : r.terms())
            if (t.j != 0 || t.k != 0)
                throw std::invalid_argument("subst_z: substitute must depend on x only");
        TruncatedSeries acc = z_layer(b_.nz);
        for (int j = b_.nz - 1; j >= 0; --j) acc = acc * r + z_layer(j);
        return acc;
    }

    // t := 1 (sums the t-layers).
    TruncatedSeries subst_t_one() const {
        TruncatedSeries r(b_);
        for (int i = 0; i <= b_.nx; ++i)
            for (int j = 0; j <= b_.nz; ++j) {
                Rat acc = 0;
                for (int k = 0; k <= b_.nt; ++k) acc += c_[idx(i, j, k)];
                r.c_[r.idx(i, j, 0)] = std::move(acc);
            }
        return r;
    }

    // Zeroes every coefficient whose t-exponent is below the threshold.
    TruncatedSeries drop_t_layers_below(int k_min) const {
        TruncatedSeries r = *this;
        for (int i = 0; i <= b_.nx; ++i)
            for (int j = 0; j <= b_.nz; ++j)
                for (int k = 0; k < k_min && k <= b_.nt; ++k)
                    r.c_[r.idx(i, j, k)] = 0;
        return r;
    }

    TruncatedSeries restricted(Bounds small) const {
        if (small.nx > b_.nx || small.nz > b_.nz || small.nt > b_.nt)
            throw std::invalid_argument("restricted: bounds must shrink");
        TruncatedSeries r(small);
        for (int i = 0; i <= small.nx; ++i)
            for (int j = 0; j <= small.nz; ++j)
                for (int k = 0; k <= small.nt; ++k)
                    r.c_[r.idx(i, j, k)] = c_[idx(i, j, k)];
        return r;
    }

    bool depends_on_z() const {
        for (const auto& t : terms())
            if (t.j != 0) return true;
        return false;
    }
    bool depends_on_t() const {
        for (const auto& t : terms())
            if (t.k != 0) return true;
        return false;
    }

    // Smallest x-exponent with a nonzero coefficient; bounds().nx + 1 for 0.
    int x_valuation() const {
        for (int i = 0; i <= b_.nx; ++i)
            for (int j = 0; j <= b_.nz; ++j)
                for (int k = 0; k <= b_.nt; ++k)
                    if (c_[idx(i, j, k)] != 0) return i;
        return b_.nx + 1;
    }
    int t_valuation() const {
        int v = b_.nt + 1;
        for (const auto& t : terms()) v = std::min(v, t.k);
        return v;
    }

    // Golden-test dump: one "i j k numerator denominator" line per nonzero
    // coefficient, lexicographic exponent order, decimal strings.
    std::string dump() const {
        std::string out;
        for (const auto& t : terms()) {
            out += std::to_string(t.i) + " " + std::to_string(t.j) + " " + std::to_string(t.k) +
                   " " + numerator(t.c).str() + " " + denominator(t.c).str() + "\n";
        }
        return out;
    }

private:
    Bounds b_;
    std::vector<Rat> c_;

    size_t idx(int i, int j, int k) const {
        return (size_t(i) * (b_.nz + 1) + j) * (b_.nt + 1) + k;
    }
    void check_exponents(int i, int j, int k) const {
        if (i < 0 || i > b_.nx || j < 0 || j > b_.nz || k < 0 || k > b_.nt)
            throw std::invalid_argument("exponent out of bounds");
    }
    void check_bounds(const TruncatedSeries& o) const {
        if (!(b_ == o.b_)) throw std::invalid_argument("series bounds mismatch");
    }
    // Coefficient of z^j as a series in x, t.
    TruncatedSeries z_layer(int j) const {
        TruncatedSeries r(b_);
        for (int i = 0; i <= b_.nx; ++i)
            for (int k = 0; k <= b_.nt; ++k)
                r.c_[r.idx(i, 0, k)] = c_[idx(i, j, k)];
        return r;
    }
};

// e^{cx} truncated: sum c^i x^i / i!.
inline TruncatedSeries exp_x(Bounds b, int c) {
    TruncatedSeries s(b);
    Rat term = 1;
    for (int i = 0; i <= b.nx; ++i) {
        s.set_coeff(i, 0, 0, term);
        term = term * c / (i + 1);
    }
    return s;
}

// Psi(x) = sum_{m,n >= 0} 2^{mn} x^{m+n} / (m! n!): the bipartite-graph EGF
// kernel. psi_n = sum_{i=0}^{n} 2^{i(n-i)} / (i! (n-i)!).
inline TruncatedSeries psi_series(Bounds b) {
    TruncatedSeries s(b);
    for (int n = 0; n <= b.nx; ++n) {
        Rat acc = 0;
        for (int i = 0; i <= n; ++i)
            acc += Rat(pow2(i * (n - i))) / Rat(factorial(i) * factorial(n - i));
        s.set_coeff(n, 0, 0, acc);
    }
    return s;
}

// n! . [x^n] S for a series with no remaining z or t dependence. A
// non-integer result signals an upstream formula error.
inline Int egf_count(const TruncatedSeries& s, int n) {
    if (n < 0 || n > s.bounds().nx) throw std::invalid_argument("egf_count: order out of bounds");
    if (s.depends_on_z() || s.depends_on_t())
        throw std::invalid_argument("egf_count: series still depends on z or t");
    Rat v = s.coeff(n, 0, 0) * Rat(factorial(n));
    if (denominator(v) != 1) throw std::runtime_error("egf_count: non-integer count");
    return numerator(v);
}

struct SeriesMatrix {
    Bounds b;
    std::array<TruncatedSeries, 16> e;

    explicit SeriesMatrix(Bounds bnds) : b(bnds) { e.fill(TruncatedSeries(bnds)); }
    TruncatedSeries& at(int r, int c) { return e[r * 4 + c]; }
    const TruncatedSeries& at(int r, int c) const { return e[r * 4 + c]; }

    static SeriesMatrix identity(Bounds bnds) {
        SeriesMatrix m(bnds);
        for (int i = 0; i < 4; ++i) m.at(i, i) = TruncatedSeries::one(bnds);
        return m;
    }
    bool is_zero() const {
        for (const auto& s : e)
            if (!s.is_zero()) return false;
        return true;
    }
};

inline SeriesMatrix mat_mul(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (!(a.b == b.b)) throw std::invalid_argument("matrix bounds mismatch");
    SeriesMatrix r(a.b);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            TruncatedSeries acc(a.b);
            for (int k = 0; k < 4; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

inline SeriesMatrix mat_add(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (!(a.b == b.b)) throw std::invalid_argument("matrix bounds mismatch");
    SeriesMatrix r(a.b);
    for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

// (I - M)^{-1} as the truncated Neumann series sum_{p<=P} M^p with
// P = floor(nx/2) (each entry has x-valuation >= 2) or P = nt when the
// entries carry an explicit factor of t.
inline SeriesMatrix mat_neumann_inverse(const SeriesMatrix& m, bool with_t) {
    for (const auto& s : m.e) {
        if (with_t) {
            if (!s.is_zero() && s.t_valuation() < 1)
                throw std::invalid_argument("neumann inverse: entry lacks a t factor");
        } else {
            if (s.x_valuation() < 2)
                throw std::invalid_argument("neumann inverse: entry has x-valuation < 2");
        }
    }
    int steps = with_t ? m.b.nt : m.b.nx / 2;
    SeriesMatrix acc = SeriesMatrix::identity(m.b);
    SeriesMatrix power = SeriesMatrix::identity(m.b);
    for (int p = 1; p <= steps; ++p) {
        power = mat_mul(power, m);
        if (power.is_zero()) break;
        acc = mat_add(acc, power);
    }
    return acc;
}

using SeriesVec = std::array<TruncatedSeries, 4>;

inline TruncatedSeries row_mat_col(const SeriesVec& row, const SeriesMatrix& m,
                                   const SeriesVec& col) {
    SeriesVec mid;
    for (int i = 0; i < 4; ++i) {
        TruncatedSeries acc(m.b);
        for (int j = 0; j < 4; ++j) acc += m.at(i, j) * col[j];
        mid[i] = std::move(acc);
    }
    TruncatedSeries out(m.b);
    for (int i = 0; i < 4; ++i) out += row[i] * mid[i];
    return out;
}

}  // namespace poset31
