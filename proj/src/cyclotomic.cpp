#include "hopfrob/cyclotomic.hpp"

#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hopfrob {

namespace {

using Poly = std::vector<std::int64_t>;

Poly cyclotomic_polynomial(int n) {
    // x^n - 1 divided by Phi_d for every proper divisor d; all quotients are exact over Z.
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        Poly q = cyclotomic_polynomial(d);
        int dq = static_cast<int>(q.size()) - 1;
        int dp = static_cast<int>(p.size()) - 1;
        Poly quot(dp - dq + 1, 0);
        for (int k = dp - dq; k >= 0; --k) {
            std::int64_t c = p[k + dq];
            quot[k] = c;
            for (int j = 0; j <= dq; ++j) p[k + j] -= c * q[j];
        }
        p = std::move(quot);
    }
    return p;
}

std::unique_ptr<CycloField> make_field(int N) {
    auto f = std::make_unique<CycloField>();
    f->N = N;
    f->phi_poly = cyclotomic_polynomial(N);
    f->phi = static_cast<int>(f->phi_poly.size()) - 1;
    int size = std::max(N, 2 * f->phi - 1);
    f->pow_table.reserve(size);
    Poly cur(f->phi, 0);
    cur[0] = 1;
    for (int k = 0; k < size; ++k) {
        f->pow_table.push_back(cur);
        // cur <- x * cur mod Phi_N
        std::int64_t top = cur[f->phi - 1];
        for (int j = f->phi - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (int j = 0; j < f->phi; ++j) cur[j] -= top * f->phi_poly[j];
    }
    return f;
}

constexpr int kCacheSize = 1024;

struct Registry {
    std::mutex mu;
    std::map<int, std::unique_ptr<CycloField>> fields;
    std::array<std::atomic<const CycloField*>, kCacheSize> cache{};
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

const CycloField* cyclo_field(int N) {
    if (N < 1) throw std::invalid_argument("conductor must be positive");
    static const CycloField* rationals = [] {
        auto& r = registry();
        std::lock_guard<std::mutex> lock(r.mu);
        auto& slot = r.fields[1];
        slot = make_field(1);
        r.cache[1].store(slot.get());
        return slot.get();
    }();
    if (N == 1) return rationals;
    auto& r = registry();
    if (N < kCacheSize) {
        if (const CycloField* f = r.cache[N].load(std::memory_order_acquire)) return f;
    }
    std::lock_guard<std::mutex> lock(r.mu);
    auto& slot = r.fields[N];
    if (!slot) slot = make_field(N);
    if (N < kCacheSize) r.cache[N].store(slot.get(), std::memory_order_release);
    return slot.get();
}

Cyclotomic::Cyclotomic(const CycloField* f, Coeffs c) : f_(f), c_(std::move(c)) {
    if (static_cast<int>(c_.size()) != f_->phi) throw std::invalid_argument("coefficient vector length differs from phi(N)");
}

Cyclotomic Cyclotomic::zeta(int N, std::int64_t k) {
    const CycloField* f = cyclo_field(N);
    std::int64_t e = ((k % N) + N) % N;
    Coeffs c(f->phi);
    const auto& row = f->pow_table[e];
    for (int j = 0; j < f->phi; ++j)
        if (row[j]) c[j] = Rational(row[j]);
    return Cyclotomic(f, std::move(c));
}

bool Cyclotomic::is_zero() const {
    for (const auto& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return false;
    return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0].is_one(); }

Cyclotomic Cyclotomic::lift(int M) const {
    if (M == f_->N) return *this;
    if (M % f_->N) throw std::invalid_argument("lift target conductor is not a multiple");
    const CycloField* g = cyclo_field(M);
    Coeffs out(g->phi);
    int step = M / f_->N;
    for (int k = 0; k < f_->phi; ++k) {
        if (c_[k].is_zero()) continue;
        const auto& row = g->pow_table[k * step];
        for (int j = 0; j < g->phi; ++j)
            if (row[j]) out[j] += c_[k] * Rational(row[j]);
    }
    return Cyclotomic(g, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.f_ == f_) {
        for (int j = 0; j < f_->phi; ++j)
            if (!o.c_[j].is_zero()) c_[j] += o.c_[j];
        return *this;
    }
    if (o.f_->N == 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    int M = lcm_int(f_->N, o.f_->N);
    *this = lift(M);
    return *this += o.lift(M);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.f_->N == 1 || (o.f_ == f_ && o.is_rational())) {
        const Rational& s = o.c_[0];
        if (s.is_one()) return *this;
        for (auto& x : c_)
            if (!x.is_zero()) x *= s;
        return *this;
    }
    if (f_->N == 1 || (o.f_ == f_ && is_rational())) {
        Rational s = c_[0];
        *this = o;
        for (auto& x : c_)
            if (!x.is_zero()) x *= s;
        return *this;
    }
    if (o.f_ != f_) {
        int M = lcm_int(f_->N, o.f_->N);
        *this = lift(M);
        return *this *= o.lift(M);
    }
    const int phi = f_->phi;
    std::vector<Rational> prod(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j < phi; ++j)
            if (!o.c_[j].is_zero()) prod[i + j] += c_[i] * o.c_[j];
    }
    Coeffs out(phi);
    for (int k = 0; k < 2 * phi - 1; ++k) {
        if (prod[k].is_zero()) continue;
        if (k < phi) {
            out[k] += prod[k];
            continue;
        }
        const auto& row = f_->pow_table[k];
        for (int j = 0; j < phi; ++j)
            if (row[j]) out[j] += prod[k] * Rational(row[j]);
    }
    c_ = std::move(out);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) {
        Cyclotomic r = *this;
        r.c_[0] = c_[0].inverse();
        return r;
    }
    // Solve M c = e_0 where column j of M is the coefficient vector of a * zeta^j.
    const int phi = f_->phi;
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
    for (int j = 0; j < phi; ++j) {
        Cyclotomic col = *this * zeta(f_->N, j);
        for (int i = 0; i < phi; ++i) m[i][j] = col.c_[i];
    }
    m[0][phi] = Rational(1);
    for (int col = 0; col < phi; ++col) {
        int piv = col;
        while (piv < phi && m[piv][col].is_zero()) ++piv;
        if (piv == phi) throw std::logic_error("singular multiplication matrix for nonzero field element");
        std::swap(m[piv], m[col]);
        Rational inv = m[col][col].inverse();
        for (int j = col; j <= phi; ++j) m[col][j] *= inv;
        for (int i = 0; i < phi; ++i) {
            if (i == col || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (int j = col; j <= phi; ++j)
                if (!m[col][j].is_zero()) m[i][j] -= f * m[col][j];
        }
    }
    Coeffs out(phi);
    for (int i = 0; i < phi; ++i) out[i] = m[i][phi];
    return Cyclotomic(f_, std::move(out));
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(1);
    Cyclotomic base = *this;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.f_ == b.f_) return a.c_ == b.c_;
    if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
    int M = lcm_int(a.f_->N, b.f_->N);
    return a.lift(M).c_ == b.lift(M).c_;
}

std::string Cyclotomic::str() const {
    std::string out;
    for (int k = 0; k < f_->phi; ++k) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += c_[k].str();
        } else {
            out += c_[k].str() + "*z";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::parse(std::string_view s, int N) {
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '\t') t += ch;
    if (t.empty()) throw std::invalid_argument("empty scalar");
    // Split into signed terms at '+'/'-' that do not follow an operator.
    std::vector<std::string> terms;
    std::string cur;
    for (std::size_t i = 0; i < t.size(); ++i) {
        char ch = t[i];
        bool sep = (ch == '+' || ch == '-') && i > 0 && t[i - 1] != '*' && t[i - 1] != '/' && t[i - 1] != '^' &&
                   t[i - 1] != '+' && t[i - 1] != '-';
        if (sep) {
            terms.push_back(cur);
            cur.clear();
        }
        cur += ch;
    }
    terms.push_back(cur);
    Cyclotomic total(0);
    total = total.lift(N);
    for (std::string term : terms) {
        bool neg = false;
        while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            if (term[0] == '-') neg = !neg;
            term.erase(0, 1);
        }
        if (term.empty()) throw std::invalid_argument("dangling sign in scalar '" + std::string(s) + "'");
        Rational coeff(1);
        std::string zpart;
        auto zpos = term.find('z');
        if (zpos == std::string::npos) {
            coeff = Rational::parse(term);
        } else {
            std::string cpart = term.substr(0, zpos);
            zpart = term.substr(zpos);
            if (!cpart.empty()) {
                if (cpart.back() != '*') throw std::invalid_argument("expected '*' before z in '" + term + "'");
                cpart.pop_back();
                coeff = Rational::parse(cpart);
            }
        }
        std::int64_t e = 0;
        if (!zpart.empty()) {
            e = 1;
            if (zpart.size() > 1) {
                if (zpart[1] != '^' || zpart.size() < 3) throw std::invalid_argument("malformed power in '" + term + "'");
                Rational er = Rational::parse(zpart.substr(2));
                if (!er.is_integer() || !er.is_small()) throw std::invalid_argument("non-integer exponent in '" + term + "'");
                e = er.small_num();
            }
        }
        Cyclotomic piece = zeta(N, e) * Cyclotomic(neg ? -coeff : coeff);
        total += piece;
    }
    return total;
}

Cyclotomic root_of_unity(int N, std::int64_t k) { return Cyclotomic::zeta(N, k); }

Cyclotomic scalar_invert(const Cyclotomic& a) { return a.inverse(); }

}  // namespace hopfrob
