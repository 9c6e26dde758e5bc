#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals for packing geometry.
 *
 * A thin value type over GMP's mpq_class. Every value is kept canonical
 * (lowest terms, positive denominator), so equality is structural and the
 * textual form "p/q" is unique.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sqpack {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T v) : q_(to_integer(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    template <std::integral A, std::integral B>
    Rational(A num, B den) : Rational(to_integer(num), to_integer(den)) {}

    template <std::integral T>
    static Integer to_integer(T v) {
        if constexpr (std::is_signed_v<T>) {
            if constexpr (sizeof(T) <= sizeof(long)) return Integer(static_cast<long>(v));
            else return Integer(std::to_string(v));
        } else {
            if constexpr (sizeof(T) <= sizeof(unsigned long)) return Integer(static_cast<unsigned long>(v));
            else return Integer(std::to_string(v));
        }
    }

    /// Parses "p/q" or "p" (optional leading '-', decimal digits only).
    static Rational parse(std::string_view text) {
        auto is_int = [](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
            if (s.empty()) return false;
            for (char ch : s)
                if (ch < '0' || ch > '9') return false;
            return true;
        };
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : text.substr(slash + 1);
        if (!is_int(num, true) || !is_int(den, false))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        Integer d(std::string(den), 10);
        if (d == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(Integer(std::string(num), 10), d);
    }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Integer floor() const {
        Integer r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    Integer ceil() const {
        Integer r;
        mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    /// Fractional part in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    double to_double() const { return q_.get_d(); }

    /// Nearest rational for a finite double; exact binary expansion.
    static Rational from_double(double v) {
        Rational r;
        r.q_ = mpq_class(v);
        r.q_.canonicalize();
        return r;
    }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const { return q_.get_str(10); }

    /// Always "p/q", including integers ("3/1") and zero ("0/1").
    std::string canonical() const { return num().get_str(10) + "/" + den().get_str(10); }

    /// Decimal expansion rounded half away from zero to `digits` places.
    std::string to_decimal(int digits) const {
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits < 0 ? 0 : digits));
        Integer n = abs(num()) * scale * 2 + den();
        Integer d = den() * 2;
        Integer scaled;
        mpz_fdiv_q(scaled.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        std::string s = scaled.get_str(10);
        if (digits > 0) {
            if (s.size() <= static_cast<std::size_t>(digits))
                s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
            s.insert(s.size() - static_cast<std::size_t>(digits), ".");
        }
        if (sign() < 0 && scaled != 0) s.insert(0, "-");
        return s;
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.sign() == 0) throw std::domain_error("rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.q_ = -a.q_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Converts an Integer known to fit into a signed 64-bit value.
inline std::int64_t to_int64(const Integer& z) {
    if (!mpz_fits_slong_p(z.get_mpz_t())) throw std::overflow_error("integer exceeds 64 bits");
    return z.get_si();
}

}  // namespace sqpack
