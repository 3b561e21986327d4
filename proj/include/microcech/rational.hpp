#ifndef MICROCECH_RATIONAL_HPP
#define MICROCECH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mcech {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/* Error kinds, mapped to process exit codes by the C API / CLI:
 * format -> 2, domain -> 2, indeterminate -> 3. */
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IndeterminateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetError : IndeterminateError {
    using IndeterminateError::IndeterminateError;
};

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int floor_int(const Rat& r)
{
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r))
        --q;
    return q;
}

/* Canonical representative of r in [0,1). */
inline Rat mod1(const Rat& r) { return r - Rat(floor_int(r)); }

inline int to_int(const Int& n)
{
    if (n > std::numeric_limits<int>::max() || n < std::numeric_limits<int>::min())
        throw DomainError("integer out of machine range: " + n.str());
    return static_cast<int>(n);
}

inline int to_int(const Rat& r)
{
    if (!is_integer(r))
        throw DomainError("expected an integer, got " + r.str());
    return to_int(numerator(r));
}

/* Decimal-free "p/q" (or "p" when q = 1). */
inline std::string rat_str(const Rat& r)
{
    if (is_integer(r))
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat parse_rat(const std::string& s)
{
    if (s.empty())
        throw FormatError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw FormatError("zero denominator in \"" + s + "\"");
        return Rat(num, den);
    }
    catch (const std::runtime_error&) {
        throw FormatError("bad rational literal \"" + s + "\"");
    }
}

/* Element of Q(i): exact Gaussian rational. */
struct GaussRat {
    Rat re, im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(int n) : re(n) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b)
    {
        return a.re == b.re && a.im == b.im;
    }

    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

    GaussRat inverse() const
    {
        if (is_zero())
            throw DomainError("division by zero in Q(i)");
        Rat n = re * re + im * im;
        return {re / n, -im / n};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b)
    {
        return a * b.inverse();
    }

    std::string str() const
    {
        if (im == 0)
            return rat_str(re);
        return rat_str(re) + (im > 0 ? "+" : "") + rat_str(im) + "i";
    }
};

}  // namespace mcech

#endif
