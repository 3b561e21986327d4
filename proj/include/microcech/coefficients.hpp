#ifndef MICROCECH_COEFFICIENTS_HPP
#define MICROCECH_COEFFICIENTS_HPP

#include "microcech/rational.hpp"

#include <string>

namespace mcech {

/* Coefficient groups for Cech cohomology. RCx is the computable stand-in
 * for C^*: the subgroup Q/Z (+) Q, with (t,u) representing the unit
 * e^{2 pi i t} * e^u. Classes outside it are not expressible here. */
enum class Coeff { Z, Zm, Q, QmodZ, RCx };

struct CoeffGroup {
    Coeff tag = Coeff::Z;
    Int m = 0;  // modulus for Zm, m >= 2

    static CoeffGroup Z() { return {Coeff::Z, 0}; }
    static CoeffGroup Zmod(Int m);
    static CoeffGroup Q() { return {Coeff::Q, 0}; }
    static CoeffGroup QmodZ() { return {Coeff::QmodZ, 0}; }
    static CoeffGroup RCx() { return {Coeff::RCx, 0}; }

    // accepts "Z", "Z/4", "Q", "Q/Z", "RCx"
    static CoeffGroup parse(const std::string& s);
    std::string str() const;

    friend bool operator==(const CoeffGroup& a, const CoeffGroup& b)
    {
        return a.tag == b.tag && a.m == b.m;
    }
};

/* One element of Q/Z (+) Q; multiplicative in C^*, written additively. */
struct RCxValue {
    Rat t;  // canonical representative in [0,1)
    Rat u;

    RCxValue() : t(0), u(0) {}
    RCxValue(Rat tt, Rat uu) : t(mod1(tt)), u(std::move(uu)) {}

    static RCxValue one() { return {}; }
    bool is_zero() const { return t == 0 && u == 0; }

    friend RCxValue operator+(const RCxValue& a, const RCxValue& b)
    {
        return {a.t + b.t, a.u + b.u};
    }
    friend RCxValue operator-(const RCxValue& a, const RCxValue& b)
    {
        return {a.t - b.t, a.u - b.u};
    }
    friend RCxValue operator-(const RCxValue& a) { return {-a.t, -a.u}; }
    RCxValue scaled(const Int& n) const { return {Rat(n) * t, Rat(n) * u}; }
    friend bool operator==(const RCxValue& a, const RCxValue& b)
    {
        return a.t == b.t && a.u == b.u;
    }

    std::string str() const { return "(" + rat_str(t) + "," + rat_str(u) + ")"; }
};

}  // namespace mcech

#endif
