#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lenslift {

/// One-variable integer Laurent polynomial with exact arithmetic.
///
/// Coefficients are 64-bit and every operation is overflow-checked; an
/// overflow throws instead of silently wrapping, so results are either
/// exact or absent. The variable is anonymous -- bracket code reads it
/// as A, Burau/Alexander code reads it as t.
class Laurent {
public:
    using Exp = std::int64_t;
    using Coeff = std::int64_t;

    Laurent() = default;

    static Laurent zero() { return Laurent{}; }

    static Laurent constant(Coeff c) { return monomial(0, c); }

    static Laurent monomial(Exp e, Coeff c) {
        Laurent r;
        if (c != 0) r.terms_[e] = c;
        return r;
    }

    /// The loop value delta = -A^2 - A^-2.
    static Laurent circle() {
        Laurent r;
        r.terms_[2] = -1;
        r.terms_[-2] = -1;
        return r;
    }

    bool is_zero() const { return terms_.empty(); }

    const std::map<Exp, Coeff>& terms() const { return terms_; }

    Exp lowest_exp() const {
        if (is_zero()) throw std::logic_error("lowest_exp of zero polynomial");
        return terms_.begin()->first;
    }

    Exp highest_exp() const {
        if (is_zero()) throw std::logic_error("highest_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    Coeff coeff(Exp e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(Exp e, Coeff c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    Laurent operator-(const Laurent& o) const {
        Laurent r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, checked_neg(c));
        return r;
    }

    Laurent operator-() const {
        Laurent r;
        for (auto& [e, c] : terms_) r.terms_[e] = checked_neg(c);
        return r;
    }

    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_)
                r.add_term(checked_add(e1, e2), checked_mul(c1, c2));
        return r;
    }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }

    /// Total order used for canonical choices; compares the ascending
    /// (exponent, coefficient) term lists lexicographically.
    bool operator<(const Laurent& o) const {
        auto a = terms_.begin(), b = o.terms_.begin();
        for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
            if (a->first != b->first) return a->first < b->first;
            if (a->second != b->second) return a->second < b->second;
        }
        return a == terms_.end() && b != o.terms_.end();
    }

    /// Substitute x -> x^-1.
    Laurent mirrored() const {
        Laurent r;
        for (auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    /// Multiply by x^k.
    Laurent shifted(Exp k) const {
        Laurent r;
        for (auto& [e, c] : terms_) r.terms_[checked_add(e, k)] = c;
        return r;
    }

    Laurent scaled(Coeff s) const {
        Laurent r;
        if (s == 0) return r;
        for (auto& [e, c] : terms_) r.terms_[e] = checked_mul(c, s);
        return r;
    }

    Laurent pow(std::int64_t n) const {
        if (n < 0) throw std::invalid_argument("negative polynomial power");
        Laurent r = constant(1);
        Laurent base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    /// Exact quotient; throws std::domain_error when the division
    /// leaves a remainder. Division by zero is domain_error too.
    Laurent exact_div(const Laurent& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        if (is_zero()) return Laurent{};
        Laurent num = *this;
        Laurent q;
        const Exp dlead = d.highest_exp();
        const Coeff dc = d.terms_.rbegin()->second;
        // In an exact division the quotient's lowest exponent is
        // num.low - d.low; falling below it means there is a remainder.
        const Exp qe_floor = lowest_exp() - d.lowest_exp();
        while (!num.is_zero()) {
            const Exp nlead = num.highest_exp();
            const Coeff nc = num.terms_.rbegin()->second;
            const Exp qe = nlead - dlead;
            if (nc % dc != 0 || qe < qe_floor)
                throw std::domain_error("inexact polynomial division");
            const Coeff qc = nc / dc;
            q.add_term(qe, qc);
            num = num - d * monomial(qe, qc);
        }
        return q;
    }

    /// Canonical text form: ascending exponents, "c*A^e" terms joined
    /// by " + ". The zero polynomial prints as "0".
    std::string str(const std::string& var = "A") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            if (!first) os << " + ";
            os << c << "*" << var << "^" << e;
            first = false;
        }
        return os.str();
    }

    static Coeff checked_add(Coeff a, Coeff b) {
        Coeff r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("Laurent coefficient overflow (add)");
        return r;
    }

    static Coeff checked_mul(Coeff a, Coeff b) {
        Coeff r;
        if (__builtin_mul_overflow(a, b, &r))
            throw std::overflow_error("Laurent coefficient overflow (mul)");
        return r;
    }

    static Coeff checked_neg(Coeff a) {
        Coeff r;
        if (__builtin_sub_overflow(Coeff{0}, a, &r))
            throw std::overflow_error("Laurent coefficient overflow (neg)");
        return r;
    }

private:
    std::map<Exp, Coeff> terms_;
};

} // namespace lenslift
