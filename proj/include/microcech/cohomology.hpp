#ifndef MICROCECH_COHOMOLOGY_HPP
#define MICROCECH_COHOMOLOGY_HPP

#include "microcech/coefficients.hpp"
#include "microcech/matrix.hpp"
#include "microcech/nerve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mcech {

/* A cochain complex of free Z-modules, 0 -> C^0 -> C^1 -> ...; coefficients
 * other than Z are imposed at presentation time. */
struct ComplexZ {
    std::vector<int> dims;    // dims[k], k = 0..maxdeg
    std::vector<IntMat> d;    // d[k]: C^k -> C^{k+1}, k = 0..maxdeg-1

    int maxdeg() const { return (int)dims.size() - 1; }
    int dim(int k) const { return (k < 0 || k > maxdeg()) ? 0 : dims[k]; }
    // differential out of degree k (a zero-shaped matrix outside range)
    IntMat dmat(int k) const;
    void check() const;  // shapes and d.d = 0

    static ComplexZ from_nerve(const Nerve& n, int maxdeg);
};

/* Total complex of the tensor product of two complexes. Blocks of degree n
 * are ordered by ascending p (with p+q=n), row-major within a block. */
ComplexZ tensor_total(const ComplexZ& a, const ComplexZ& b);

/* Mapping-cone model of the circle bundle with Euler 2-cocycle e over the
 * base nerve: C^k(Y) = C^k(X) (+) C^{k-1}(X), base block first, with
 * d(a,b) = (da + e cup b, -db). */
ComplexZ cone_complex(const Nerve& base, const std::vector<Int>& euler, int maxdeg);

/* Alexander-Whitney cup product of an integer p-cochain with a T-valued
 * q-cochain on a nerve: (a cup b)(v0..v_{p+q}) = a(v0..vp) * b(vp..v_{p+q}). */
std::vector<Int> cup(const Nerve& n, int p, const std::vector<Int>& a, int q,
                     const std::vector<Int>& b);
std::vector<Rat> cup(const Nerve& n, int p, const std::vector<Int>& a, int q,
                     const std::vector<Rat>& b);
std::vector<RCxValue> cup(const Nerve& n, int p, const std::vector<Int>& a, int q,
                          const std::vector<RCxValue>& b);

/* d of value-level cochains (same convention as ComplexZ::dmat). */
std::vector<Int> coboundary(const Nerve& n, int k, const std::vector<Int>& c);
std::vector<Rat> coboundary(const Nerve& n, int k, const std::vector<Rat>& c);
std::vector<RCxValue> coboundary(const Nerve& n, int k, const std::vector<RCxValue>& c);

/* ---- presentations -------------------------------------------------- */

/* H^k with Z or Z/m coefficients: free part and invariant factors, with
 * representative cocycles and a decision procedure for coordinates. */
class FgPresentation {
public:
    // m = 0 presents over Z; m >= 2 over Z/m
    FgPresentation(const IntMat& dk, const IntMat& dkm1, Int m);

    int free_rank() const { return free_rank_; }
    const std::vector<Int>& factors() const { return factors_; }
    bool is_finite() const { return free_rank_ == 0; }
    Int order() const;  // finite case

    const std::vector<std::vector<Int>>& free_gens() const { return free_gens_; }
    const std::vector<std::vector<Int>>& torsion_gens() const { return torsion_gens_; }

    struct Coords {
        std::vector<Int> free;
        std::vector<Int> torsion;  // canonical in [0, factor)
        friend bool operator==(const Coords&, const Coords&) = default;
    };
    Coords coords(const std::vector<Int>& cocycle) const;
    std::vector<Int> from_coords(const Coords& c) const;
    Coords add(const Coords& a, const Coords& b) const;
    Coords scale(const Coords& a, const Int& s) const;
    Coords zero_coords() const;
    // all elements, torsion part only; throws DomainError if infinite
    std::vector<Coords> enumerate() const;

    std::string describe() const;  // e.g. "Z^2 (+) Z/2 (+) Z/4"

private:
    Int m_;
    int ncochain_ = 0;
    int free_rank_ = 0;
    std::vector<Int> factors_;
    std::vector<std::vector<Int>> free_gens_, torsion_gens_;
    // lattice data: L = span(K_j) with K_j = scale_j * (V col j)
    Snf snf_a_;
    std::vector<Int> scale_;
    std::vector<int> lattice_cols_;     // columns of V used for L
    Snf snf_m_;                         // SNF of relation matrix in L-coords
    std::vector<int> free_slots_, torsion_slots_;

    std::vector<Int> lattice_coords(const std::vector<Int>& z) const;
};

/* H^k with Q coefficients. */
class QPresentation {
public:
    QPresentation(const IntMat& dk, const IntMat& dkm1);

    int dim() const { return (int)gens_.size(); }
    const std::vector<std::vector<Rat>>& gens() const { return gens_; }
    std::vector<Rat> coords(const std::vector<Rat>& cocycle) const;
    std::vector<Rat> from_coords(const std::vector<Rat>& c) const;

private:
    IntMat dk_, dkm1_;
    std::vector<std::vector<Rat>> gens_;
};

/* H^k with Q/Z coefficients: (Q/Z)^r (+) Tors H^{k+1}(Z), with cochain-level
 * coordinates via the Bockstein of the canonical [0,1) lift. */
class QmodZPresentation {
public:
    QmodZPresentation(const ComplexZ& cx, int k);

    int divisible_rank() const { return divisible_rank_; }
    const std::vector<Int>& factors() const { return factors_; }

    struct Coords {
        std::vector<Rat> divisible;  // canonical in [0,1)
        std::vector<Int> torsion;    // canonical in [0, factor)
        friend bool operator==(const Coords&, const Coords&) = default;
    };
    Coords coords(const std::vector<Rat>& cocycle) const;
    std::vector<Rat> from_coords(const Coords& c) const;
    Coords add(const Coords& a, const Coords& b) const;

    std::string describe() const;

private:
    int k_;
    int divisible_rank_ = 0;
    std::vector<Int> factors_;
    FgPresentation zk_, zk1_;
    Snf snf_dk_;
    IntMat dk_, dkm1_;
    std::vector<std::vector<Rat>> bockstein_ref_;  // h_i / d_i
};

/* H^k with RCx = Q/Z (+) Q coefficients, componentwise. */
class RCxPresentation {
public:
    RCxPresentation(const ComplexZ& cx, int k);

    const QmodZPresentation& tpart() const { return tpart_; }
    const QPresentation& upart() const { return upart_; }

    struct Coords {
        QmodZPresentation::Coords t;
        std::vector<Rat> u;
        friend bool operator==(const Coords&, const Coords&) = default;
    };
    Coords coords(const std::vector<RCxValue>& cocycle) const;
    std::vector<RCxValue> from_coords(const Coords& c) const;
    Coords add(const Coords& a, const Coords& b) const;

    std::string describe() const;

private:
    QmodZPresentation tpart_;
    QPresentation upart_;
};

/* The spec-level umbrella: cohomology of a nerve (or complex) with any
 * supported coefficient group, as a tagged presentation. */
struct GroupPresentation {
    CoeffGroup coeff;
    int degree = 0;
    std::optional<FgPresentation> fg;        // Z, Zm
    std::optional<QPresentation> q;          // Q
    std::optional<QmodZPresentation> qmodz;  // QmodZ
    std::optional<RCxPresentation> rcx;      // RCx

    std::string describe() const;
    std::string to_json() const;  // rank/factor summary + generators
};

GroupPresentation cohomology(const ComplexZ& cx, const CoeffGroup& coeff, int k);
GroupPresentation cohomology(const Nerve& n, const CoeffGroup& coeff, int k);

}  // namespace mcech

#endif
