#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hopfrob/rational.hpp"

namespace hopfrob {

// Interned description of Q(zeta_N).  pow_table[k] holds the integer
// coefficients of x^k mod Phi_N for every k needed by one multiplication.
struct CycloField {
    int N = 1;
    int phi = 1;
    std::vector<std::int64_t> phi_poly;              // Phi_N, low degree first, monic
    std::vector<std::vector<std::int64_t>> pow_table;  // size max(N, 2*phi - 1)
};

// Returns the unique interned field of conductor N (thread-safe).
const CycloField* cyclo_field(int N);

int euler_phi(int n);

// Element of Q(zeta_N) stored as the reduced polynomial sum c_k zeta^k,
// k < phi(N).  Conductor 1 is Q.  Mixed-conductor operands are lifted to
// the lcm of their conductors; no conductor minimization is performed.
class Cyclotomic {
public:
    using Coeffs = boost::container::small_vector<Rational, 4>;

    Cyclotomic() : f_(cyclo_field(1)), c_(1) {}
    Cyclotomic(Rational r) : f_(cyclo_field(1)), c_{std::move(r)} {}  // NOLINT(google-explicit-constructor)
    Cyclotomic(std::int64_t n) : Cyclotomic(Rational(n)) {}             // NOLINT(google-explicit-constructor)
    Cyclotomic(int n) : Cyclotomic(Rational(n)) {}                      // NOLINT(google-explicit-constructor)
    Cyclotomic(const CycloField* f, Coeffs c);

    static Cyclotomic zeta(int N, std::int64_t k);

    int conductor() const { return f_->N; }
    const CycloField* field() const { return f_; }
    const Coeffs& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    // True iff the element lies in Q; then rational_part() is its value.
    bool is_rational() const;
    const Rational& rational_part() const { return c_[0]; }

    // Same value expressed over Q(zeta_M); requires N | M.
    Cyclotomic lift(int M) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    // Throws std::domain_error on zero.
    Cyclotomic inverse() const;
    Cyclotomic pow(std::int64_t e) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // "p/q*z^k + ..." with z = zeta_N; "0" for zero.
    std::string str() const;
    // Inverse of str() over Q(zeta_N).  Throws std::invalid_argument.
    static Cyclotomic parse(std::string_view s, int N);

private:
    const CycloField* f_;
    Coeffs c_;
};

using Scalar = Cyclotomic;

Cyclotomic root_of_unity(int N, std::int64_t k);
Cyclotomic scalar_invert(const Cyclotomic& a);

int lcm_int(int a, int b);

}  // namespace hopfrob
