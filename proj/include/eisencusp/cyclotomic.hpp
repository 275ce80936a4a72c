/*
   Copyright 2026 the eisencusp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EISENCUSP_CYCLOTOMIC_HPP
#define EISENCUSP_CYCLOTOMIC_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"

namespace eisencusp {

namespace detail {

// Exact division of integer polynomials, used only to build Phi_n from x^n - 1.
inline std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    long dn = static_cast<long>(num.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    std::vector<Integer> quot(dn - dd + 1, Integer(0));
    for (long i = dn; i >= dd; --i) {
        if (num[i] == 0) continue;
        Integer q = num[i] / den[dd];
        quot[i - dd] = q;
        for (long j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
    }
    return quot;
}

inline const std::vector<Integer>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<Integer>> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // x^n - 1 divided by all lower cyclotomics
    std::function<const std::vector<Integer>&(long)> get = [&](long m) -> const std::vector<Integer>& {
        auto jt = memo.find(m);
        if (jt != memo.end()) return jt->second;
        std::vector<Integer> num(m + 1, Integer(0));
        num[0] = -1;
        num[m] = 1;
        for (long d : divisors(m))
            if (d != m) num = poly_div_exact(num, get(d));
        return memo.emplace(m, std::move(num)).first->second;
    };
    return get(n);
}

// Per-conductor data: Phi_n plus reduction rows x^e mod Phi_n.
struct CycloContext {
    long n = 1;
    long phi = 1;
    std::vector<Integer> phi_poly;                 // degree phi, monic
    std::vector<std::vector<Integer>> power_row;   // x^e for 0 <= e < max(n, 2*phi-1)

    explicit CycloContext(long n_) : n(n_), phi(euler_phi(n_)), phi_poly(cyclotomic_polynomial(n_)) {
        long rows = std::max(n, 2 * phi - 1);
        power_row.assign(rows, std::vector<Integer>(phi, Integer(0)));
        for (long e = 0; e < std::min(rows, phi); ++e) power_row[e][e] = 1;
        for (long e = phi; e < rows; ++e) {
            // x^e = x * x^{e-1}, then reduce the overflow term via
            // x^phi = -(phi_poly[0] + ... + phi_poly[phi-1] x^{phi-1}).
            const auto& prev = power_row[e - 1];
            auto& cur = power_row[e];
            Integer top = prev[phi - 1];
            for (long j = phi - 1; j >= 1; --j) cur[j] = prev[j - 1];
            cur[0] = 0;
            if (top != 0)
                for (long j = 0; j < phi; ++j) cur[j] -= top * phi_poly[j];
        }
    }
};

inline const CycloContext& cyclo_context(long n) {
    static std::unordered_map<long, std::unique_ptr<CycloContext>> cache;
    static std::shared_mutex mtx;
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    std::unique_lock lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<CycloContext>(n)).first;
    return *it->second;
}

} // namespace detail

/// Exact element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}
/// modulo Phi_n.  Always fully reduced, so equality is coordinate-wise.
class CyclotomicNumber {
  public:
    CyclotomicNumber() : n_(1), c_(1, Rational(0)) {}

    explicit CyclotomicNumber(const Rational& r) : n_(1), c_(1, r) {}
    explicit CyclotomicNumber(long v) : n_(1), c_(1, Rational(v)) {}
    explicit CyclotomicNumber(const Integer& v) : n_(1), c_(1, Rational(v)) {}

    CyclotomicNumber(long conductor, std::vector<Rational> coords) : n_(conductor), c_(std::move(coords)) {
        if (static_cast<long>(c_.size()) != detail::cyclo_context(n_).phi)
            throw std::domain_error("CyclotomicNumber: wrong coordinate length");
    }

    static CyclotomicNumber zero() { return CyclotomicNumber(); }
    static CyclotomicNumber one() { return CyclotomicNumber(Rational(1)); }

    /// zeta_n^e
    static CyclotomicNumber root_of_unity(long n, long e) {
        const auto& ctx = detail::cyclo_context(n);
        e = mod_reduce(e, n);
        std::vector<Rational> c(ctx.phi, Rational(0));
        for (long j = 0; j < ctx.phi; ++j) c[j] = Rational(ctx.power_row[e][j]);
        CyclotomicNumber out(n, std::move(c));
        return out;
    }

    long conductor() const { return n_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& r : c_)
            if (!rat_is_zero(r)) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t j = 1; j < c_.size(); ++j)
            if (!rat_is_zero(c_[j])) return false;
        return true;
    }

    Rational rational_part() const { return c_[0]; }

    /// Image under Q(zeta_n) -> Q(zeta_m) for n | m (zeta_n -> zeta_m^{m/n}).
    CyclotomicNumber lifted_to(long m) const {
        if (m == n_) return *this;
        if (m % n_ != 0)
            throw ConductorMismatch("cannot lift conductor " + std::to_string(n_) + " into " + std::to_string(m));
        const auto& ctx = detail::cyclo_context(m);
        long step = m / n_;
        std::vector<Rational> out(ctx.phi, Rational(0));
        for (long j = 0; j < static_cast<long>(c_.size()); ++j) {
            if (rat_is_zero(c_[j])) continue;
            const auto& r = ctx.power_row[j * step];
            for (long t = 0; t < ctx.phi; ++t)
                if (r[t] != 0) out[t] += c_[j] * Rational(r[t]);
        }
        return CyclotomicNumber(m, std::move(out));
    }

    /// Galois twist zeta -> zeta^e, gcd(e, n) = 1.
    CyclotomicNumber galois(long e) const {
        e = mod_reduce(e, n_);
        if (n_ == 1) return *this;
        if (gcd_long(e, n_) != 1)
            throw InvalidGaloisExponent("exponent " + std::to_string(e) + " not coprime to conductor " + std::to_string(n_));
        const auto& ctx = detail::cyclo_context(n_);
        std::vector<Rational> out(ctx.phi, Rational(0));
        for (long j = 0; j < ctx.phi; ++j) {
            if (rat_is_zero(c_[j])) continue;
            const auto& r = ctx.power_row[(j * e) % n_];
            for (long t = 0; t < ctx.phi; ++t)
                if (r[t] != 0) out[t] += c_[j] * Rational(r[t]);
        }
        return CyclotomicNumber(n_, std::move(out));
    }

    /// Complex conjugation (zeta -> zeta^{-1}).
    CyclotomicNumber conj() const { return galois(-1); }

    /// Exact restriction to Q(zeta_m), m | n; throws ConductorMismatch if the
    /// element does not lie in the subfield.
    CyclotomicNumber restricted_to(long m) const;

    friend CyclotomicNumber operator-(const CyclotomicNumber& a) {
        std::vector<Rational> c(a.c_);
        for (auto& r : c) r = -r;
        return CyclotomicNumber(a.n_, std::move(c));
    }

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        long m = lcm_long(a.n_, b.n_);
        CyclotomicNumber x = a.lifted_to(m), y = b.lifted_to(m);
        for (size_t j = 0; j < x.c_.size(); ++j) x.c_[j] += y.c_[j];
        return x;
    }

    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        long m = lcm_long(a.n_, b.n_);
        CyclotomicNumber x = a.lifted_to(m), y = b.lifted_to(m);
        const auto& ctx = detail::cyclo_context(m);
        long phi = ctx.phi;
        std::vector<Rational> conv(2 * phi - 1, Rational(0));
        for (long i = 0; i < phi; ++i) {
            if (rat_is_zero(x.c_[i])) continue;
            for (long j = 0; j < phi; ++j) {
                if (rat_is_zero(y.c_[j])) continue;
                conv[i + j] += x.c_[i] * y.c_[j];
            }
        }
        std::vector<Rational> out(conv.begin(), conv.begin() + phi);
        for (long e = phi; e < 2 * phi - 1; ++e) {
            if (rat_is_zero(conv[e])) continue;
            const auto& row = ctx.power_row[e];
            for (long t = 0; t < phi; ++t)
                if (row[t] != 0) out[t] += conv[e] * Rational(row[t]);
        }
        return CyclotomicNumber(m, std::move(out));
    }

    friend CyclotomicNumber operator*(const Rational& s, const CyclotomicNumber& a) {
        std::vector<Rational> c(a.c_);
        for (auto& r : c) r *= s;
        return CyclotomicNumber(a.n_, std::move(c));
    }

    CyclotomicNumber& operator+=(const CyclotomicNumber& b) { return *this = *this + b; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& b) { return *this = *this - b; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& b) { return *this = *this * b; }

    /// Multiplicative inverse via extended Euclid in Q[x] against Phi_n.
    CyclotomicNumber inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
        if (is_rational()) return CyclotomicNumber(Rational(1) / c_[0]).lifted_to(n_);
        const auto& ctx = detail::cyclo_context(n_);
        // r0 = Phi_n, r1 = this; maintain t-coefficients with r_i = t_i * this (mod Phi_n).
        std::vector<Rational> r0(ctx.phi_poly.size());
        for (size_t j = 0; j < ctx.phi_poly.size(); ++j) r0[j] = Rational(ctx.phi_poly[j]);
        std::vector<Rational> r1(c_);
        trim(r1);
        std::vector<Rational> t0{}, t1{Rational(1)};
        while (!r1.empty()) {
            auto [q, rem] = poly_divmod(r0, r1);
            std::vector<Rational> t2 = poly_sub(t0, poly_mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 is a nonzero constant gcd (Phi_n irreducible, element nonzero)
        if (r0.size() != 1)
            throw std::logic_error("cyclotomic inverse: gcd not constant");
        Rational scale = Rational(1) / r0[0];
        std::vector<Rational> inv(ctx.phi, Rational(0));
        for (size_t j = 0; j < t0.size(); ++j) inv[j] = t0[j] * scale;
        return CyclotomicNumber(n_, std::move(inv));
    }

    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b.inverse(); }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        long m = lcm_long(a.n_, b.n_);
        return a.lifted_to(m).c_ == b.lifted_to(m).c_;
    }
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    /// Numerical evaluation; precision_bits honored up to 52 (binary64
    /// coordinate conversion inside a long double accumulation).
    std::complex<double> to_complex(long precision_bits = 52) const {
        (void)precision_bits;
        long double re = 0, im = 0;
        const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
        for (long j = 0; j < static_cast<long>(c_.size()); ++j) {
            if (rat_is_zero(c_[j])) continue;
            long double v = static_cast<long double>(c_[j].get_d());
            long double ang = tau * static_cast<long double>(j) / static_cast<long double>(n_);
            re += v * std::cos(ang);
            im += v * std::sin(ang);
        }
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    /// Max of |num|, |den| over coordinates; pivot-selection heuristic.
    Integer coordinate_height() const {
        Integer h = 0;
        for (const auto& r : c_) {
            Integer a = abs(r.get_num());
            if (a > h) h = a;
            if (r.get_den() > h) h = r.get_den();
        }
        return h;
    }

  private:
    long n_;
    std::vector<Rational> c_;

    static void trim(std::vector<Rational>& p) {
        while (!p.empty() && rat_is_zero(p.back())) p.pop_back();
    }

    static std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (rat_is_zero(a[i])) continue;
            for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        }
        trim(out);
        return out;
    }

    static std::vector<Rational> poly_sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> out(std::max(a.size(), b.size()), Rational(0));
        for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
        trim(out);
        return out;
    }

    static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(std::vector<Rational> num,
                                                                               const std::vector<Rational>& den) {
        std::vector<Rational> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
        while (num.size() >= den.size()) {
            Rational q = num.back() / den.back();
            size_t shift = num.size() - den.size();
            quot[shift] = q;
            for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= q * den[j];
            num.pop_back();
            trim(num);
        }
        return {std::move(quot), std::move(num)};
    }
};

inline CyclotomicNumber CyclotomicNumber::restricted_to(long m) const {
    if (m == n_) return *this;
    if (n_ % m != 0)
        throw ConductorMismatch("restriction target " + std::to_string(m) + " does not divide " + std::to_string(n_));
    const auto& big = detail::cyclo_context(n_);
    long phi_m = detail::cyclo_context(m).phi;
    long step = n_ / m;
    // Solve sum_i x_i zeta_n^{i step} = this; the unknowns are the small-field
    // power-basis coordinates.  System is big.phi equations, phi_m unknowns.
    std::vector<std::vector<Rational>> a(big.phi, std::vector<Rational>(phi_m + 1, Rational(0)));
    for (long i = 0; i < phi_m; ++i)
        for (long t = 0; t < big.phi; ++t) a[t][i] = Rational(big.power_row[i * step][t]);
    for (long t = 0; t < big.phi; ++t) a[t][phi_m] = c_[t];
    long row = 0;
    std::vector<long> piv_col;
    for (long col = 0; col < phi_m && row < big.phi; ++col) {
        long pr = -1;
        for (long t = row; t < big.phi; ++t)
            if (!rat_is_zero(a[t][col])) { pr = t; break; }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        Rational inv = Rational(1) / a[row][col];
        for (long j = col; j <= phi_m; ++j) a[row][j] *= inv;
        for (long t = 0; t < big.phi; ++t) {
            if (t == row || rat_is_zero(a[t][col])) continue;
            Rational f = a[t][col];
            for (long j = col; j <= phi_m; ++j) a[t][j] -= f * a[row][j];
        }
        piv_col.push_back(col);
        ++row;
    }
    for (long t = row; t < big.phi; ++t)
        if (!rat_is_zero(a[t][phi_m]))
            throw ConductorMismatch("element does not lie in Q(zeta_" + std::to_string(m) + ")");
    std::vector<Rational> x(phi_m, Rational(0));
    for (long i = 0; i < static_cast<long>(piv_col.size()); ++i) x[piv_col[i]] = a[i][phi_m];
    return CyclotomicNumber(m, std::move(x));
}

/// Embedding followed by a Galois twist, per the embed_and_galois contract.
inline CyclotomicNumber embed_and_galois(const CyclotomicNumber& a, long target_conductor, long galois_exponent) {
    if (target_conductor % a.conductor() != 0)
        throw ConductorMismatch("conductor " + std::to_string(a.conductor()) + " does not divide target " +
                                std::to_string(target_conductor));
    CyclotomicNumber lifted = a.lifted_to(target_conductor);
    long e = mod_reduce(galois_exponent, target_conductor);
    if (target_conductor > 1 && gcd_long(e, target_conductor) != 1)
        throw InvalidGaloisExponent("galois exponent not coprime to conductor");
    return target_conductor == 1 ? lifted : lifted.galois(e);
}

} // namespace eisencusp

#endif
