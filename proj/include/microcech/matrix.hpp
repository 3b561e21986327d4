#ifndef MICROCECH_MATRIX_HPP
#define MICROCECH_MATRIX_HPP

#include "microcech/rational.hpp"

#include <optional>
#include <vector>

namespace mcech {

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

    static IntMat identity(int n);

    Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    bool is_zero() const;
    friend IntMat operator*(const IntMat& x, const IntMat& y);
    friend bool operator==(const IntMat& x, const IntMat& y);

    std::vector<Int> apply(const std::vector<Int>& v) const;      // A v
    std::vector<Rat> apply(const std::vector<Rat>& v) const;
    IntMat col(int j) const;
};

/* U A V = D with U, V unimodular and D diagonal, d1 | d2 | ..., d_i >= 0.
 * Inverse transforms are tracked so solves need no extra inversion.
 * Deterministic for fixed input; the factorization is re-verified on
 * every call (cheap at the matrix sizes this project meets). */
struct Snf {
    IntMat u, uinv, d, v, vinv;
    int rank = 0;                 // number of nonzero diagonal entries
    Int diag(int i) const { return i < std::min(d.rows, d.cols) ? d.at(i, i) : Int(0); }
};

Snf smith_normal_form(const IntMat& a);

/* Solve A x = b over Z; nullopt when no integral solution exists. */
std::optional<std::vector<Int>> solve_int(const Snf& s, const std::vector<Int>& b);

/* Solve A x = b (mod 1) for rational x given rational b: i.e. find x with
 * A x - b integral. nullopt when no solution exists. */
std::optional<std::vector<Rat>> solve_mod1(const Snf& s, const std::vector<Rat>& b);

struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

    Rat& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    std::vector<Rat> apply(const std::vector<Rat>& v) const;
};

int rat_rank(RatMat m);

/* Basis of { x : M x = 0 }, reduced echelon convention, deterministic. */
std::vector<std::vector<Rat>> rat_kernel(const RatMat& m);

/* One solution of M x = b over Q; nullopt if inconsistent. */
std::optional<std::vector<Rat>> rat_solve(const RatMat& m, const std::vector<Rat>& b);

}  // namespace mcech

#endif
