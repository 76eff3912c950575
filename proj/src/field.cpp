#include "orbcat/field.hpp"

namespace orbcat {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// residue of v in [0, p)
BigRational mod_p(const BigRational& v, uint32_t p) {
    BigInt num = numerator(v);
    BigInt den = denominator(v);
    BigInt bp = p;
    BigInt n = num % bp;
    if (n < 0) n += bp;
    if (den == 1) return BigRational(n);
    BigInt d = den % bp;
    if (d == 0) throw std::domain_error("denominator not invertible mod p");
    // extended Euclid for d^{-1} mod p
    long long a = d.convert_to<long long>(), m = p;
    long long x0 = 0, x1 = 1, a0 = m, a1 = a;
    while (a1 != 0) {
        long long q = a0 / a1;
        long long t = a0 - q * a1; a0 = a1; a1 = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    long long inv = x0 % m; if (inv < 0) inv += m;
    return BigRational((n * inv) % bp);
}

}  // namespace

Field Field::prime(uint32_t p) {
    if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::name() const {
    return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar::Scalar(const Field& f, long long n) : f_(f), v_(n) { *this = normalized(); }

Scalar::Scalar(const Field& f, const BigRational& v) : f_(f), v_(v) { *this = normalized(); }

Scalar Scalar::normalized() const {
    if (f_.is_rational()) return *this;  // cpp_rational keeps lowest terms, positive denominator
    Scalar s(*this);
    s.v_ = mod_p(v_, f_.characteristic());
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(f_, o.f_);
    return Scalar(f_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(f_, o.f_);
    return Scalar(f_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(f_, o.f_);
    return Scalar(f_, v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(f_, o.f_);
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (f_.is_rational()) return Scalar(f_, v_ / o.v_);
    return Scalar(f_, mod_p(BigRational(numerator(v_), numerator(o.v_)), f_.characteristic()));
}

Scalar Scalar::operator-() const { return Scalar(f_, -v_); }

bool Scalar::operator==(const Scalar& o) const { return f_ == o.f_ && v_ == o.v_; }

std::string Scalar::str() const {
    if (denominator(v_) == 1) return numerator(v_).str();
    return numerator(v_).str() + "/" + denominator(v_).str();
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Scalar(f, BigRational(BigInt(s)));
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in scalar literal: " + s);
    return Scalar(f, BigRational(num, den));
}

}  // namespace orbcat
