#pragma once

// Growth diagnostics: exact psi_n, the theta-constant predictions for its
// even/odd subsequences, and the ratios of the actual poset counts against
// n! psi_n. High-precision values are fixed-point over big integers; nothing
// here touches floating point.

#include <string>
#include <vector>

#include "poset31/genfun.hpp"
#include "poset31/rational.hpp"

namespace poset31 {

// Fixed-point decimal: value = mantissa / 10^40.
class Fixed {
public:
    static constexpr int kDigits = 40;

    Fixed() = default;
    static Fixed from_mantissa(Int m) {
        Fixed f;
        f.m_ = std::move(m);
        return f;
    }
    static Fixed from_rational(const Rat& r) {
        return from_mantissa(numerator(r) * scale() / denominator(r));
    }
    static Fixed from_int(long long v) { return from_mantissa(Int(v) * scale()); }

    static Int scale() {
        static const Int s = ipow(10, kDigits);
        return s;
    }

    const Int& mantissa() const { return m_; }
    Fixed operator+(const Fixed& o) const { return from_mantissa(m_ + o.m_); }
    Fixed operator-(const Fixed& o) const { return from_mantissa(m_ - o.m_); }
    Fixed operator*(const Fixed& o) const { return from_mantissa(m_ * o.m_ / scale()); }
    Fixed operator/(const Fixed& o) const { return from_mantissa(m_ * scale() / o.m_); }
    Fixed mul_rational(const Rat& r) const {
        return from_mantissa(m_ * numerator(r) / denominator(r));
    }
    bool operator<(const Fixed& o) const { return m_ < o.m_; }
    bool operator>(const Fixed& o) const { return m_ > o.m_; }
    Fixed abs_diff(const Fixed& o) const {
        return from_mantissa(m_ > o.m_ ? m_ - o.m_ : o.m_ - m_);
    }

    std::string to_string(int digits = kDigits) const {
        Int ip = m_ / scale(), fp = m_ % scale();
        bool neg = m_ < 0;
        if (neg) {
            ip = -ip;
            fp = -fp;
        }
        std::string frac = fp.str();
        frac.insert(frac.begin(), kDigits - frac.size(), '0');
        if (digits < kDigits) frac.resize(digits);
        return (neg ? "-" : "") + ip.str() + "." + frac;
    }

private:
    Int m_ = 0;
};

// psi_n = sum_{i=0}^n 2^{i(n-i)} / (i! (n-i)!).
inline Rat psi_exact(int n) {
    if (n < 0) throw std::invalid_argument("psi_exact: negative index");
    Rat acc = 0;
    for (int i = 0; i <= n; ++i)
        acc += Rat(pow2(i * (n - i))) / Rat(factorial(i) * factorial(n - i));
    return acc;
}

struct ThetaConstants {
    Fixed c1, c2;
    Fixed tail_bound;  // 2 * 2^{-terms^2}
    int terms = 0;
};

// c1 = sum_{i in Z} 2^{-i^2} and c2 = 2^{1/4} theta_2(0, 1/2)
//    = 2 sum_{k >= 0} 2^{-k(k+1)}  (the quarter power cancels exactly).
// Partial sums over |i| <= terms; the tail decays super-exponentially.
inline ThetaConstants theta_constants(int terms) {
    if (terms < 1) throw std::invalid_argument("theta_constants: terms must be positive");
    Rat c1 = 1, c2 = 0;
    for (int i = 1; i <= terms; ++i) c1 += Rat(2) / Rat(pow2(i * i));
    for (int k = 0; k <= terms; ++k) c2 += Rat(2) / Rat(pow2(k * (k + 1)));
    ThetaConstants out;
    out.c1 = Fixed::from_rational(c1);
    out.c2 = Fixed::from_rational(c2);
    long long e = (long long)terms * terms;
    out.tail_bound = e - 1 >= 4 * Fixed::kDigits
                         ? Fixed()
                         : Fixed::from_rational(Rat(2) / Rat(pow2((int)e)));
    out.terms = terms;
    return out;
}

struct AsymptoticRow {
    int n = 0;
    Rat psi;
    Fixed predicted;     // theta-constant prediction for psi_n
    Fixed ratio_psi;     // psi_n / predicted
    Rat ratio_strong;    // g_n / (n! psi_n), exact
    Rat ratio_weak;      // w_n / (n! psi_n), exact
};

struct AsymptoticReport {
    ThetaConstants theta;
    std::vector<AsymptoticRow> rows;
};

// Prediction psi_{2k} ~ c1 2^{k^2} / (k!)^2, psi_{2k+1} ~ c2 2^{k(k+1)} / (k! (k+1)!).
inline Fixed psi_predicted(int n, const ThetaConstants& theta) {
    int k = n / 2;
    if (n % 2 == 0)
        return theta.c1.mul_rational(Rat(pow2(k * k)) / Rat(factorial(k) * factorial(k)));
    return theta.c2.mul_rational(Rat(pow2(k * (k + 1))) /
                                 Rat(factorial(k) * factorial(k + 1)));
}

inline AsymptoticReport ratio_report(int max_n, int terms = 16) {
    AsymptoticReport rep;
    rep.theta = theta_constants(terms);
    Bounds b{max_n, max_n, max_n};
    auto strong = strong_gf(true, Bounds{max_n, max_n, 0});
    auto weak = weak_gf(true, b).subst_t_one();
    for (int n = 0; n <= max_n; ++n) {
        AsymptoticRow row;
        row.n = n;
        row.psi = psi_exact(n);
        row.predicted = psi_predicted(n, rep.theta);
        row.ratio_psi = Fixed::from_rational(row.psi) / row.predicted;
        Rat scale = Rat(factorial(n)) * row.psi;
        row.ratio_strong = Rat(egf_count(strong, n)) / scale;
        row.ratio_weak = Rat(egf_count(weak, n)) / scale;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace poset31
