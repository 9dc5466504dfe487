#pragma once

// Integer Laurent polynomials in one variable t.

#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace legendrid {

namespace detail {
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in polynomial arithmetic");
    return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in polynomial arithmetic");
    return r;
}
inline std::int64_t gcd_int(std::int64_t a, std::int64_t b) {
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}
} // namespace detail

class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    LaurentPolynomial(std::int64_t c) { // NOLINT: implicit constant
        if (c != 0)
            coeffs_ = {c};
    }

    /// c * t^e
    static LaurentPolynomial monomial(std::int64_t c, int e) {
        LaurentPolynomial p(c);
        p.low_ = e;
        return p;
    }

    static LaurentPolynomial from_terms(const std::map<int, std::int64_t> &terms) {
        LaurentPolynomial p;
        for (auto [e, c] : terms)
            p += monomial(c, e);
        return p;
    }

    /// Coefficients listed from t^low upwards.
    static LaurentPolynomial from_coeffs(int low, std::vector<std::int64_t> coeffs) {
        LaurentPolynomial p;
        p.low_ = low;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int low() const noexcept { return low_; }
    int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    int span() const noexcept { return is_zero() ? -1 : high() - low(); }

    std::int64_t coeff(int e) const {
        if (is_zero() || e < low_ || e > high())
            return 0;
        return coeffs_[static_cast<std::size_t>(e - low_)];
    }
    std::int64_t leading() const { return is_zero() ? 0 : coeffs_.back(); }

    /// (exponent, coefficient) pairs with nonzero coefficient, ascending.
    std::vector<std::pair<int, std::int64_t>> terms() const {
        std::vector<std::pair<int, std::int64_t>> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
        return out;
    }

    LaurentPolynomial shifted(int k) const {
        LaurentPolynomial p = *this;
        if (!p.is_zero())
            p.low_ += k;
        return p;
    }

    /// p(t) -> p(1/t)
    LaurentPolynomial inverted() const {
        if (is_zero())
            return {};
        std::vector<std::int64_t> c(coeffs_.rbegin(), coeffs_.rend());
        return from_coeffs(-high(), std::move(c));
    }

    std::int64_t eval(std::int64_t t) const {
        if (t == 0)
            throw std::domain_error("cannot evaluate a Laurent polynomial at 0");
        if (is_zero())
            return 0;
        if (low_ < 0 && t != 1 && t != -1)
            throw std::domain_error("negative powers evaluate to non-integers");
        std::int64_t acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = detail::checked_add(detail::checked_mul(acc, t), *it);
        std::int64_t scale = 1;
        const int e = low_ < 0 ? -low_ : low_;
        for (int i = 0; i < e; ++i)
            scale = detail::checked_mul(scale, t);
        return low_ < 0 ? acc * scale /* t = +-1: t^-k == t^k */ : detail::checked_mul(acc, scale);
    }

    std::int64_t content() const {
        std::int64_t g = 0;
        for (auto c : coeffs_)
            g = detail::gcd_int(g, c);
        return g;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial p = *this;
        for (auto &c : p.coeffs_)
            c = -c;
        return p;
    }

    LaurentPolynomial &operator+=(const LaurentPolynomial &o) {
        if (o.is_zero())
            return *this;
        if (is_zero())
            return *this = o;
        const int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
        std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
        for (int e = low_; e <= high(); ++e)
            c[static_cast<std::size_t>(e - lo)] = coeff(e);
        for (int e = o.low_; e <= o.high(); ++e)
            c[static_cast<std::size_t>(e - lo)] = detail::checked_add(c[static_cast<std::size_t>(e - lo)], o.coeff(e));
        low_ = lo;
        coeffs_ = std::move(c);
        trim();
        return *this;
    }
    LaurentPolynomial &operator-=(const LaurentPolynomial &o) { return *this += -o; }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b) { return a -= b; }

    friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = detail::checked_add(c[i + j], detail::checked_mul(a.coeffs_[i], b.coeffs_[j]));
        }
        return from_coeffs(a.low_ + b.low_, std::move(c));
    }
    LaurentPolynomial &operator*=(const LaurentPolynomial &o) { return *this = *this * o; }

    bool operator==(const LaurentPolynomial &o) const {
        return (is_zero() && o.is_zero()) || (low_ == o.low_ && coeffs_ == o.coeffs_);
    }

    /// Exact division; throws std::domain_error when b does not divide a.
    friend LaurentPolynomial divexact(const LaurentPolynomial &a, const LaurentPolynomial &b) {
        if (b.is_zero())
            throw std::domain_error("division by zero polynomial");
        if (a.is_zero())
            return {};
        std::vector<std::int64_t> rem = a.coeffs_;
        const std::size_t db = b.coeffs_.size() - 1;
        if (rem.size() < b.coeffs_.size())
            throw std::domain_error("inexact polynomial division");
        std::vector<std::int64_t> q(rem.size() - db, 0);
        for (std::size_t i = q.size(); i-- > 0;) {
            const std::int64_t top = rem[i + db];
            if (top % b.coeffs_.back() != 0)
                throw std::domain_error("inexact polynomial division");
            const std::int64_t f = top / b.coeffs_.back();
            q[i] = f;
            if (f == 0)
                continue;
            for (std::size_t j = 0; j <= db; ++j)
                rem[i + j] = detail::checked_add(rem[i + j], -detail::checked_mul(f, b.coeffs_[j]));
        }
        for (auto r : rem)
            if (r != 0)
                throw std::domain_error("inexact polynomial division");
        return from_coeffs(a.low_ - b.low_, std::move(q));
    }

    /// Primitive part with positive leading coefficient.
    LaurentPolynomial primitive() const {
        if (is_zero())
            return {};
        auto c = content();
        if (leading() < 0)
            c = -c;
        LaurentPolynomial p = *this;
        for (auto &v : p.coeffs_)
            v /= c;
        return p;
    }

    /// Greatest common divisor in Z[t, 1/t], returned with lowest exponent 0
    /// and positive leading coefficient. Units +-t^k are ignored.
    friend LaurentPolynomial gcd(LaurentPolynomial a, LaurentPolynomial b) {
        if (a.is_zero())
            return b.is_zero() ? LaurentPolynomial{} : b.shifted(-b.low()).primitive() * LaurentPolynomial(b.content());
        if (b.is_zero())
            return gcd(b, a);
        a = a.shifted(-a.low());
        b = b.shifted(-b.low());
        const std::int64_t g = detail::gcd_int(a.content(), b.content());
        a = a.primitive();
        b = b.primitive();
        if (a.span() < b.span())
            std::swap(a, b);
        while (!b.is_zero()) {
            auto r = pseudo_remainder(a, b);
            a = std::move(b);
            b = r.is_zero() ? r : r.primitive();
        }
        return a.primitive() * LaurentPolynomial(g);
    }

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const auto c = coeffs_[i];
            if (c == 0)
                continue;
            const int e = low_ + static_cast<int>(i);
            const auto mag = c < 0 ? -c : c;
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            if (e == 0 || mag != 1)
                os << mag;
            if (e != 0)
                os << "t" << (e != 1 ? "^" + std::to_string(e) : "");
        }
        return os.str();
    }

  private:
    static LaurentPolynomial pseudo_remainder(LaurentPolynomial a, const LaurentPolynomial &b) {
        // both with low() == 0
        const std::int64_t lb = b.leading();
        while (!a.is_zero() && a.high() >= b.high()) {
            const int shift = a.high() - b.high();
            const std::int64_t la = a.leading();
            const std::int64_t g = detail::gcd_int(la, lb);
            a = a * LaurentPolynomial(lb / g) - (b * LaurentPolynomial(la / g)).shifted(shift);
            if (!a.is_zero())
                a = a.primitive().shifted(0);
        }
        return a;
    }

    void trim() {
        std::size_t b = 0;
        while (b < coeffs_.size() && coeffs_[b] == 0)
            ++b;
        if (b == coeffs_.size()) {
            coeffs_.clear();
            low_ = 0;
            return;
        }
        std::size_t e = coeffs_.size();
        while (coeffs_[e - 1] == 0)
            --e;
        coeffs_ = std::vector<std::int64_t>(coeffs_.begin() + static_cast<std::ptrdiff_t>(b),
                                            coeffs_.begin() + static_cast<std::ptrdiff_t>(e));
        low_ += static_cast<int>(b);
    }

    int low_ = 0;
    std::vector<std::int64_t> coeffs_;
};

inline std::ostream &operator<<(std::ostream &os, const LaurentPolynomial &p) { return os << p.to_string(); }

/// Symmetric representative of p up to units +-t^k: exponents centred on 0
/// (lowest exponent -floor(span/2)), sign chosen so that p(1) = 1 when p(1)
/// is nonzero, otherwise so that the top coefficient is positive.
inline LaurentPolynomial normalize_alexander(const LaurentPolynomial &p) {
    if (p.is_zero())
        return p;
    auto q = p.shifted(-p.low() - p.span() / 2);
    const auto v = q.eval(1);
    if (v < 0 || (v == 0 && q.leading() < 0))
        q = -q;
    return q;
}

/// p(t) == p(1/t)
inline bool is_symmetric(const LaurentPolynomial &p) { return p == p.inverted(); }

} // namespace legendrid
