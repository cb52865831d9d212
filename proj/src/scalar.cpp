#include "descartes/scalar.hpp"

#include <ostream>

#include <cmath>
#include <cstdio>
#include <limits>

namespace descartes {
namespace {

struct SquareSplit {
    mpz_class root;      // largest s found with s^2 | k
    mpz_class radicand;  // k / s^2
};

// Splits k > 0 as s^2 * r.  Trial division removes square factors of primes
// below the bound; a leftover that is itself a perfect square is absorbed.
SquareSplit split_square(const mpz_class& k) {
    SquareSplit out{1, k};
    if (mpz_perfect_square_p(k.get_mpz_t()) != 0) {
        out.root = sqrt(k);
        out.radicand = 1;
        return out;
    }
    mpz_class rest = k;
    mpz_class radicand = 1;
    for (unsigned long p = 2; p < 20000; p += (p == 2 ? 1 : 2)) {
        mpz_class pp = p;
        if (pp * pp > rest) break;
        unsigned count = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            rest /= p;
            ++count;
        }
        for (unsigned i = 0; i + 1 < count; i += 2) out.root *= p;
        if (count % 2 == 1) radicand *= p;
    }
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
        out.root *= sqrt(rest);
    } else {
        radicand *= rest;
    }
    out.radicand = radicand;
    return out;
}

Exact sqrt_rational(const mpq_class& q) {
    if (sgn(q) < 0) throw FieldError("square root of a negative number");
    if (sgn(q) == 0) return Exact{};
    mpz_class k = q.get_num() * q.get_den();
    SquareSplit s = split_square(k);
    mpq_class coeff(s.root, q.get_den());
    coeff.canonicalize();
    if (s.radicand == 1) return Exact{coeff};
    if (!s.radicand.fits_slong_p()) throw FieldError("radicand too large: " + s.radicand.get_str());
    return Exact{mpq_class(0), coeff, s.radicand.get_si()};
}

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.front() == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + std::string(text));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    q.canonicalize();
    return q;
}

}  // namespace

Exact::Exact(mpq_class rational, mpq_class radical_coeff, long radicand)
    : a_(std::move(rational)), b_(std::move(radical_coeff)), d_(radicand) {
    if (sgn(b_) != 0 && d_ < 2) throw FieldError("radicand must be >= 2");
    normalize();
}

Exact Exact::ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Exact{q};
}

void Exact::normalize() {
    a_.canonicalize();
    b_.canonicalize();
    if (sgn(b_) == 0) d_ = 0;
}

long Exact::common_radicand(const Exact& o) const {
    if (d_ == 0) return o.d_;
    if (o.d_ == 0 || o.d_ == d_) return d_;
    throw FieldError("arithmetic mixes Q(sqrt " + std::to_string(d_) + ") and Q(sqrt " + std::to_string(o.d_) + ")");
}

int Exact::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    mpq_class lhs = a_ * a_;
    mpq_class rhs = b_ * b_ * d_;
    return lhs > rhs ? sa : sb;
}

double Exact::to_double() const {
    double v = a_.get_d();
    if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
    return v;
}

std::string Exact::str() const {
    if (d_ == 0) return a_.get_str();
    std::string out;
    if (sgn(a_) != 0) out = a_.get_str();
    std::string b = b_.get_str();
    if (!out.empty() && sgn(b_) > 0) out += '+';
    out += b;
    out += "*sqrt(" + std::to_string(d_) + ")";
    return out;
}

Exact Exact::parse(std::string_view text) {
    constexpr std::string_view marker = "*sqrt(";
    auto at = text.find(marker);
    if (at == std::string_view::npos) return Exact{parse_rational(text)};
    auto close = text.find(')', at);
    if (close == std::string_view::npos || close + 1 != text.size())
        throw std::invalid_argument("bad surd literal: " + std::string(text));
    long d = std::stol(std::string(text.substr(at + marker.size(), close - at - marker.size())));
    std::size_t split = std::string_view::npos;
    for (std::size_t i = at; i-- > 1;) {
        if (text[i] == '+' || text[i] == '-') {
            split = i;
            break;
        }
    }
    mpq_class a = 0;
    std::string_view coeff = text.substr(0, at);
    if (split != std::string_view::npos) {
        a = parse_rational(text.substr(0, split));
        coeff = text.substr(split, at - split);
    }
    // Re-canonicalize a non-square-free radicand, e.g. "sqrt(8)".
    Exact root = sqrt_rational(mpq_class(d));
    return Exact{a} + Exact{parse_rational(coeff)} * root;
}

Exact Exact::sqrt(const Exact& x) {
    if (x.sign() < 0) throw FieldError("square root of a negative number");
    if (x.d_ == 0) return sqrt_rational(x.a_);
    // sqrt(a + b sqrt d) = sqrt p + sgn(b) sqrt q with p + q = a, 4pq = b^2 d.
    mpq_class norm = x.a_ * x.a_ - x.b_ * x.b_ * x.d_;
    Exact r = sqrt_rational(norm);
    if (!r.is_rational()) throw FieldError("nested radical cannot be denested: " + x.str());
    mpq_class p = (x.a_ + r.a_) / 2;
    mpq_class q = (x.a_ - r.a_) / 2;
    Exact out = sqrt_rational(p);
    Exact tail = sqrt_rational(q);
    if (sgn(x.b_) < 0) tail = -tail;
    return out + tail;
}

Exact Exact::operator-() const {
    Exact out = *this;
    out.a_ = -out.a_;
    out.b_ = -out.b_;
    return out;
}

Exact& Exact::operator+=(const Exact& o) {
    long d = common_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = d;
    normalize();
    return *this;
}

Exact& Exact::operator-=(const Exact& o) {
    long d = common_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    d_ = d;
    normalize();
    return *this;
}

Exact& Exact::operator*=(const Exact& o) {
    long d = common_radicand(o);
    if (d == 0) {
        a_ *= o.a_;
        return *this;
    }
    mpq_class a = a_ * o.a_ + b_ * o.b_ * d;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    normalize();
    return *this;
}

Exact& Exact::operator/=(const Exact& o) {
    if (o.sign() == 0) throw std::domain_error("division by zero");
    common_radicand(o);
    if (o.d_ == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    // Multiply through by the conjugate of the divisor.
    mpq_class norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
    *this *= Exact{o.a_, -o.b_, o.d_};
    a_ /= norm;
    b_ /= norm;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Exact& l, const Exact& r) {
    int s = (l - r).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Exact abs(const Exact& x) { return x.sign() < 0 ? -x : x; }

double ScalarTraits<double>::sqrt(double x) {
    if (x < 0) {
        if (x > -1e-12) return 0.0;
        throw std::domain_error("square root of a negative number");
    }
    return std::sqrt(x);
}

bool ScalarTraits<double>::is_integer(double x, double tol) { return std::abs(x - std::round(x)) <= tol; }

std::string to_text(const Exact& x) { return x.str(); }

std::string to_text(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::ostream& operator<<(std::ostream& os, const Exact& x) { return os << x.str(); }

}  // namespace descartes
