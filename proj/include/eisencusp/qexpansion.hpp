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

#ifndef EISENCUSP_QEXPANSION_HPP
#define EISENCUSP_QEXPANSION_HPP

#include <complex>
#include <map>
#include <optional>

#include "cyclotomic.hpp"

namespace eisencusp {

/// Truncated Puiseux series: exponents in (1/width) Z>=0, coefficients in
/// Q(zeta_conductor).  Key m holds the coefficient of q^{m/width}.  All keys
/// satisfy 0 <= m < truncation; absent keys below truncation are exact zeros.
/// Truncation bookkeeping is pessimistic (min rule) and travels with the value.
class QExpansion {
  public:
    QExpansion() : width_(1), conductor_(1), trunc_(0) {}

    QExpansion(long width, long conductor, long truncation) : width_(width), conductor_(conductor), trunc_(truncation) {
        if (width < 1 || conductor < 1 || truncation < 0)
            throw std::domain_error("QExpansion: bad shape parameters");
    }

    static QExpansion constant(const CyclotomicNumber& c, long truncation) {
        QExpansion f(1, c.conductor(), truncation);
        f.set_coeff(0, c);
        return f;
    }

    long width() const { return width_; }
    long conductor() const { return conductor_; }
    long truncation() const { return trunc_; }
    const std::map<long, CyclotomicNumber>& coeffs() const { return c_; }

    CyclotomicNumber coeff(long m) const {
        auto it = c_.find(m);
        return it == c_.end() ? CyclotomicNumber::zero() : it->second;
    }

    void set_coeff(long m, const CyclotomicNumber& v) {
        if (m < 0 || m >= trunc_) throw std::domain_error("QExpansion::set_coeff: key outside [0, truncation)");
        if (v.is_zero()) { c_.erase(m); return; }
        if (conductor_ % v.conductor() != 0) conductor_ = lcm_long(conductor_, v.conductor());
        c_[m] = v.lifted_to(conductor_);
    }

    bool is_zero() const { return c_.empty(); }

    /// Smallest exponent key with a nonzero coefficient, or truncation if none.
    long order() const { return c_.empty() ? trunc_ : c_.begin()->first; }

    QExpansion lifted_to_width(long w) const {
        if (w == width_) return *this;
        if (w % width_ != 0) throw std::domain_error("width lift must be to a multiple");
        long s = w / width_;
        QExpansion out(w, conductor_, trunc_ * s);
        for (const auto& [m, v] : c_) out.c_[m * s] = v;
        return out;
    }

    QExpansion truncated(long t) const {
        QExpansion out(width_, conductor_, std::min(t, trunc_));
        for (const auto& [m, v] : c_) {
            if (m >= out.trunc_) break;
            out.c_[m] = v;
        }
        return out;
    }

    /// Reduce width to the smallest one representing the support.
    QExpansion width_normalized() const {
        long g = width_;
        for (const auto& [m, v] : c_) g = gcd_long(g, m);
        if (g <= 1) return *this;
        QExpansion out(width_ / g, conductor_, (trunc_ + g - 1) / g);
        for (const auto& [m, v] : c_) out.c_[m / g] = v;
        return out;
    }

    friend QExpansion operator+(const QExpansion& f, const QExpansion& g) {
        long w = lcm_long(f.width_, g.width_);
        QExpansion a = f.lifted_to_width(w), b = g.lifted_to_width(w);
        QExpansion out(w, lcm_long(a.conductor_, b.conductor_), std::min(a.trunc_, b.trunc_));
        for (const auto& [m, v] : a.c_)
            if (m < out.trunc_) out.set_coeff(m, v);
        for (const auto& [m, v] : b.c_)
            if (m < out.trunc_) out.set_coeff(m, out.coeff(m) + v);
        return out;
    }

    friend QExpansion operator-(const QExpansion& f) {
        QExpansion out(f.width_, f.conductor_, f.trunc_);
        for (const auto& [m, v] : f.c_) out.c_[m] = -v;
        return out;
    }

    friend QExpansion operator-(const QExpansion& f, const QExpansion& g) { return f + (-g); }

    friend QExpansion operator*(const CyclotomicNumber& s, const QExpansion& f) {
        if (s.is_zero()) return QExpansion(f.width_, f.conductor_, f.trunc_);
        QExpansion out(f.width_, lcm_long(f.conductor_, s.conductor()), f.trunc_);
        for (const auto& [m, v] : f.c_) out.set_coeff(m, s * v);
        return out;
    }

    friend QExpansion operator*(const Rational& s, const QExpansion& f) { return CyclotomicNumber(s) * f; }

    /// Exact Cauchy product below the min of the (width-lifted) truncations.
    friend QExpansion operator*(const QExpansion& f, const QExpansion& g) {
        long w = lcm_long(f.width_, g.width_);
        QExpansion a = f.lifted_to_width(w), b = g.lifted_to_width(w);
        QExpansion out(w, lcm_long(a.conductor_, b.conductor_), std::min(a.trunc_, b.trunc_));
        for (const auto& [i, u] : a.c_) {
            if (i >= out.trunc_) break;
            for (const auto& [j, v] : b.c_) {
                if (i + j >= out.trunc_) break;
                auto key = i + j;
                auto prod = u * v;
                auto it = out.c_.find(key);
                if (it == out.c_.end()) {
                    if (!prod.is_zero()) out.c_[key] = prod.lifted_to(out.conductor_);
                } else {
                    it->second += prod;
                    if (it->second.is_zero()) out.c_.erase(it);
                }
            }
        }
        return out;
    }

    QExpansion& operator+=(const QExpansion& g) { return *this = *this + g; }
    QExpansion& operator-=(const QExpansion& g) { return *this = *this - g; }
    QExpansion& operator*=(const QExpansion& g) { return *this = *this * g; }

    /// Coefficient-wise zeta -> zeta^{-1}; realizes f^c on expansions.
    QExpansion conjugated() const {
        QExpansion out(width_, conductor_, trunc_);
        for (const auto& [m, v] : c_) out.c_[m] = v.conj();
        return out;
    }

    /// f(tau) -> f((a tau + b)/d) on expansions:
    /// q^{m/w} -> zeta_{dw}^{bm} q^{am/(dw)}.  Width normalizes to dw/gcd(a, dw);
    /// the caller supplies any automorphy prefactor separately.
    QExpansion substituted(long a, long b, long c, long d) const {
        if (c != 0) throw InvalidSubstitutionMatrix("substitution matrix must be upper triangular");
        if (a <= 0 || d <= 0) throw InvalidSubstitutionMatrix("substitution matrix needs positive diagonal");
        long w0 = d * width_;
        long g = gcd_long(a, w0);
        long new_width = w0 / g;
        long stride = a / g;
        bool phases = mod_reduce(b, w0) != 0;
        long n = phases ? lcm_long(conductor_, w0) : conductor_;
        QExpansion out(new_width, n, stride * trunc_);
        for (const auto& [m, v] : c_) {
            CyclotomicNumber coeff = phases ? CyclotomicNumber::root_of_unity(w0, b * m) * v : v;
            out.set_coeff(stride * m, coeff);
        }
        return out;
    }

    /// Numerical evaluation at tau (Im tau > 0) with a tail-size estimate from
    /// the last retained coefficient magnitudes.
    std::pair<std::complex<double>, double> eval(std::complex<double> tau, long precision_bits = 52) const {
        if (tau.imag() <= 0) throw std::domain_error("series evaluation requires Im tau > 0");
        const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
        std::complex<long double> itau(tau.real(), tau.imag());
        std::complex<long double> logq = std::complex<long double>(0, 1) * two_pi * itau / static_cast<long double>(width_);
        std::complex<long double> acc(0, 0);
        long double absq = std::exp(-two_pi * static_cast<long double>(tau.imag()) / static_cast<long double>(width_));
        long double max_tail_mag = 0;
        long tail_from = trunc_ - std::max<long>(1, trunc_ / 5);
        for (const auto& [m, v] : c_) {
            auto cv = v.to_complex(precision_bits);
            std::complex<long double> term = std::complex<long double>(cv.real(), cv.imag()) *
                                             std::exp(logq * static_cast<long double>(m));
            acc += term;
            if (m >= tail_from) max_tail_mag = std::max(max_tail_mag, (long double)std::abs(cv));
        }
        if (max_tail_mag == 0) max_tail_mag = 1;
        long double tail = 2.0L * max_tail_mag * std::pow(absq, (long double)trunc_) / (1.0L - absq);
        return {std::complex<double>((double)acc.real(), (double)acc.imag()), (double)tail};
    }

    /// True when f and g have identical coefficients for all exponents < t/width.
    friend bool agree_below(const QExpansion& f, const QExpansion& g, long t_in_common_width) {
        long w = lcm_long(f.width_, g.width_);
        QExpansion d = f.lifted_to_width(w) - g.lifted_to_width(w);
        if (d.trunc_ < t_in_common_width) return false;
        return d.order() >= t_in_common_width;
    }

  private:
    long width_;
    long conductor_;
    long trunc_;
    std::map<long, CyclotomicNumber> c_;
};

} // namespace eisencusp

#endif
