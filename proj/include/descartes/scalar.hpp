#pragma once

// Scalar layer shared by every module.  Geometry code is written once as
// templates over a scalar type T and instantiated for two modes:
//
//   double  -- binary floating point, comparisons against an explicit tolerance
//   Exact   -- exact arithmetic in Q or in a real quadratic field Q(sqrt d)
//
// Exact behaves as a big rational whenever no square root of a non-square
// has been taken.  The quadratic extension exists because Descartes
// configurations in dimensions 3, 4 and 5 have no rational augmented
// matrices (det(W)^2 = n * 2^(n+3) is not a rational square there), while
// Q(sqrt 3), Q(sqrt 2) and Q(sqrt 5) do carry exact configurations.

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace descartes {

/// Raised when an exact operation leaves the supported number system
/// (mixing two different quadratic fields, nested radicals, ...).
class FieldError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// a + b*sqrt(d) with a, b rational and d a square-free integer >= 2.
/// Rational values are stored with b = 0 and d = 0.
class Exact {
public:
    Exact() = default;
    Exact(int v) : a_(v) {}                     // NOLINT(google-explicit-constructor)
    Exact(long v) : a_(v) {}                    // NOLINT(google-explicit-constructor)
    Exact(long long v) : a_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Exact(const mpq_class& q) : a_(q) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
    Exact(const mpz_class& z) : a_(z) {}        // NOLINT(google-explicit-constructor)
    Exact(mpq_class rational, mpq_class radical_coeff, long radicand);

    static Exact ratio(long num, long den);

    /// Parses "p", "p/q", or "p/q+r/s*sqrt(d)" (as produced by str()).
    static Exact parse(std::string_view text);

    /// Exact square root.  Supports rationals (possibly producing a
    /// Q(sqrt d) element) and denestable elements of Q(sqrt d).
    static Exact sqrt(const Exact& x);

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& radical_coeff() const { return b_; }
    long radicand() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_integer() const { return d_ == 0 && a_.get_den() == 1; }
    int sign() const;
    double to_double() const;
    std::string str() const;

    Exact operator-() const;
    Exact& operator+=(const Exact& o);
    Exact& operator-=(const Exact& o);
    Exact& operator*=(const Exact& o);
    Exact& operator/=(const Exact& o);

    friend Exact operator+(Exact l, const Exact& r) { return l += r; }
    friend Exact operator-(Exact l, const Exact& r) { return l -= r; }
    friend Exact operator*(Exact l, const Exact& r) { return l *= r; }
    friend Exact operator/(Exact l, const Exact& r) { return l /= r; }

    friend bool operator==(const Exact& l, const Exact& r) {
        return l.d_ == r.d_ && l.a_ == r.a_ && l.b_ == r.b_;
    }
    friend std::strong_ordering operator<=>(const Exact& l, const Exact& r);

private:
    void normalize();
    long common_radicand(const Exact& o) const;

    mpq_class a_{0};
    mpq_class b_{0};
    long d_ = 0;
};

Exact abs(const Exact& x);
std::ostream& operator<<(std::ostream& os, const Exact& x);

/// Per-mode behaviour.  Generic code talks to scalars only through these
/// helpers and ordinary arithmetic operators.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool is_exact = false;
    static constexpr const char* mode_name = "float";
    static double from_ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
    static double sqrt(double x);
    static double abs(double x) { return x < 0 ? -x : x; }
    static double to_double(double x) { return x; }
    static bool is_zero(double x, double tol) { return abs(x) <= tol; }
    static bool is_integer(double x, double tol);
    static int sign(double x, double tol) { return x > tol ? 1 : (x < -tol ? -1 : 0); }
};

template <>
struct ScalarTraits<Exact> {
    static constexpr bool is_exact = true;
    static constexpr const char* mode_name = "exact";
    static Exact from_ratio(long num, long den) { return Exact::ratio(num, den); }
    static Exact sqrt(const Exact& x) { return Exact::sqrt(x); }
    static Exact abs(const Exact& x) { return descartes::abs(x); }
    static double to_double(const Exact& x) { return x.to_double(); }
    static bool is_zero(const Exact& x, double) { return x.sign() == 0; }
    static bool is_integer(const Exact& x, double) { return x.is_integer(); }
    static int sign(const Exact& x, double) { return x.sign(); }
};

template <class T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, Exact>;

/// Default absolute tolerance per matrix entry in float mode.
inline constexpr double kDefaultTolerance = 1e-9;

/// Printable text for a scalar: "p/q" strings in exact mode, %.17g decimals
/// in float mode.
std::string to_text(const Exact& x);
std::string to_text(double x);

}  // namespace descartes
