#ifndef MICROCECH_SYMBOL_HPP
#define MICROCECH_SYMBOL_HPP

#include "microcech/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mcech {

/* One term c * x^a * xi1^s * xi2^b2 ... xin^bn.
 * x-exponents and xi2..xin-exponents are non-negative integers; the xi1
 * exponent is an arbitrary rational (Laurent and fractional powers of xi1
 * house the invertible operator D1 and its rational powers D1^lambda). */
struct Monomial {
    GaussRat coeff;
    std::vector<int> xexp;   // size nvars
    Rat xi1exp;
    std::vector<int> xiexp;  // size nvars-1, exponents of xi2..xin

    Rat xi_degree() const
    {
        Rat d = xi1exp;
        for (int e : xiexp)
            d += e;
        return d;
    }

    bool same_exponents(const Monomial& o) const
    {
        return xexp == o.xexp && xi1exp == o.xi1exp && xiexp == o.xiexp;
    }

    // total order on exponent patterns; used for the canonical form
    bool exponents_less(const Monomial& o) const
    {
        if (xexp != o.xexp)
            return xexp < o.xexp;
        if (xi1exp != o.xi1exp)
            return xi1exp < o.xi1exp;
        return xiexp < o.xiexp;
    }

    std::string str(int nvars) const;
};

/* Truncated total symbol: homogeneous xi-degree components at degrees
 * order, order-1, ..., order-window+1, with exact Q(i) coefficients.
 * Degrees below the window are unknown (truncated), degrees above the
 * stored order are zero. All fractional parts of xi1-exponents agree
 * with frac(order) modulo 1 (the operator's sector). */
class GradedSymbol {
public:
    GradedSymbol() = default;
    GradedSymbol(int nvars, Rat order, int window);

    static GradedSymbol zero(int nvars, Rat order, int window);
    static GradedSymbol constant(int nvars, GaussRat c, int window);
    static GradedSymbol one(int nvars, int window) { return constant(nvars, GaussRat(1), window); }
    static GradedSymbol from_monomial(int nvars, Monomial m, int window);
    // xi1^lambda, the total symbol of D1^lambda
    static GradedSymbol xi1_power(int nvars, Rat lambda, int window);
    // coordinate symbols x_i and xi_i (1-based index)
    static GradedSymbol coordinate_x(int nvars, int i, int window);
    static GradedSymbol coordinate_xi(int nvars, int i, int window);

    int nvars() const { return nvars_; }
    const Rat& order() const { return order_; }
    int window() const { return window_; }
    Rat floor_degree() const { return order_ - (window_ - 1); }
    Rat sector() const { return mod1(order_); }

    bool is_zero() const { return comps_.empty(); }
    bool in_window(const Rat& degree) const;

    /* Component at the given degree (empty list if zero there).
     * Degree must lie inside the window. */
    const std::vector<Monomial>& component(const Rat& degree) const;
    const std::map<Rat, std::vector<Monomial>>& components() const { return comps_; }

    // top nonzero (degree, monomials); nullopt for the zero symbol
    std::optional<Rat> top_degree() const;

    void add_term(Monomial m);  // keeps canonical form

    GradedSymbol& operator+=(const GradedSymbol& o);
    friend GradedSymbol operator+(GradedSymbol a, const GradedSymbol& b) { return a += b; }
    friend GradedSymbol operator-(const GradedSymbol& a, const GradedSymbol& b);
    GradedSymbol operator-() const { return scaled(GaussRat(-1)); }
    GradedSymbol scaled(const GaussRat& c) const;

    friend bool operator==(const GradedSymbol& a, const GradedSymbol& b);

    /* Formal partials; i is 1-based. d/dx preserves xi-degree, d/dxi
     * lowers it by one (and the recorded order with it). */
    GradedSymbol partial_x(int i) const;
    GradedSymbol partial_xi(int i) const;

    /* Plain commutative product of symbols (not the operator product),
     * truncated to the guaranteed window of the factors. */
    friend GradedSymbol sym_product(const GradedSymbol& a, const GradedSymbol& b);

    /* Reinterpret with a new (order, window); components outside the new
     * window are dropped. The new window must sit inside order+Z. */
    GradedSymbol rewindow(Rat order, int window) const;

    std::string str() const;

    std::string to_json() const;
    static GradedSymbol from_json(const std::string& text);

private:
    void canonicalize();
    void check_degree(const Monomial& m, const Rat& degree) const;

    int nvars_ = 1;
    Rat order_ = 0;
    int window_ = 1;
    // degree -> merged, sorted monomials of exactly that xi-degree
    std::map<Rat, std::vector<Monomial>> comps_;
};

}  // namespace mcech

#endif
