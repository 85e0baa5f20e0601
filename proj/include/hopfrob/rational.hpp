#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfrob {

// Exact rational in lowest terms with positive denominator.  Values whose
// numerator and denominator fit in int64 live inline; anything larger is
// promoted to mpq_class and demoted again as soon as it fits.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : n_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o) : n_(o.n_), d_(o.d_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&&) noexcept = default;

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    bool is_small() const { return !big_; }
    int sign() const;

    std::int64_t small_num() const { return n_; }
    std::int64_t small_den() const { return d_; }
    mpq_class to_mpq() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const;

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    // "p" or "p/q".
    std::string str() const;
    // Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
    static Rational parse(std::string_view s);

private:
    void assign_wide(__int128 n, __int128 d);
    void assign_mpq(mpq_class q);

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace hopfrob
