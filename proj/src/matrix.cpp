#include "microcech/matrix.hpp"

#include <algorithm>

namespace mcech {

IntMat IntMat::identity(int n)
{
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool IntMat::is_zero() const
{
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

IntMat operator*(const IntMat& x, const IntMat& y)
{
    if (x.cols != y.rows)
        throw DomainError("matrix product shape mismatch");
    IntMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xv = x.at(i, k);
            if (xv == 0)
                continue;
            for (int j = 0; j < y.cols; ++j)
                if (y.at(k, j) != 0)
                    z.at(i, j) += xv * y.at(k, j);
        }
    return z;
}

bool operator==(const IntMat& x, const IntMat& y)
{
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const
{
    if ((int)v.size() != cols)
        throw DomainError("matrix apply shape mismatch");
    std::vector<Int> out(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0)
                out[i] += at(i, j) * v[j];
    return out;
}

std::vector<Rat> IntMat::apply(const std::vector<Rat>& v) const
{
    if ((int)v.size() != cols)
        throw DomainError("matrix apply shape mismatch");
    std::vector<Rat> out(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0)
                out[i] += Rat(at(i, j)) * v[j];
    return out;
}

IntMat IntMat::col(int j) const
{
    IntMat c(rows, 1);
    for (int i = 0; i < rows; ++i)
        c.at(i, 0) = at(i, j);
    return c;
}

namespace {

struct SnfWork {
    IntMat d, u, uinv, v, vinv;

    void row_swap(int i, int j)
    {
        if (i == j)
            return;
        for (int c = 0; c < d.cols; ++c)
            std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < u.cols; ++c)
            std::swap(u.at(i, c), u.at(j, c));
        for (int r = 0; r < uinv.rows; ++r)
            std::swap(uinv.at(r, i), uinv.at(r, j));
    }
    void col_swap(int i, int j)
    {
        if (i == j)
            return;
        for (int r = 0; r < d.rows; ++r)
            std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < v.rows; ++r)
            std::swap(v.at(r, i), v.at(r, j));
        for (int c = 0; c < vinv.cols; ++c)
            std::swap(vinv.at(i, c), vinv.at(j, c));
    }
    // row i -= q * row j
    void row_sub(int i, int j, const Int& q)
    {
        if (q == 0)
            return;
        for (int c = 0; c < d.cols; ++c)
            d.at(i, c) -= q * d.at(j, c);
        for (int c = 0; c < u.cols; ++c)
            u.at(i, c) -= q * u.at(j, c);
        for (int r = 0; r < uinv.rows; ++r)
            uinv.at(r, j) += q * uinv.at(r, i);
    }
    // col i -= q * col j
    void col_sub(int i, int j, const Int& q)
    {
        if (q == 0)
            return;
        for (int r = 0; r < d.rows; ++r)
            d.at(r, i) -= q * d.at(r, j);
        for (int r = 0; r < v.rows; ++r)
            v.at(r, i) -= q * v.at(r, j);
        for (int c = 0; c < vinv.cols; ++c)
            vinv.at(j, c) += q * vinv.at(i, c);
    }
    void row_negate(int i)
    {
        for (int c = 0; c < d.cols; ++c)
            d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < u.cols; ++c)
            u.at(i, c) = -u.at(i, c);
        for (int r = 0; r < uinv.rows; ++r)
            uinv.at(r, i) = -uinv.at(r, i);
    }
};

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

Snf smith_normal_form(const IntMat& a)
{
    SnfWork w;
    w.d = a;
    w.u = IntMat::identity(a.rows);
    w.uinv = IntMat::identity(a.rows);
    w.v = IntMat::identity(a.cols);
    w.vinv = IntMat::identity(a.cols);

    const int n = std::min(a.rows, a.cols);
    for (int t = 0; t < n; ++t) {
        // smallest nonzero |entry| in the trailing block, lex tie-break
        int pi = -1, pj = -1;
        for (int i = t; i < a.rows; ++i)
            for (int j = t; j < a.cols; ++j)
                if (w.d.at(i, j) != 0 &&
                    (pi < 0 || abs_int(w.d.at(i, j)) < abs_int(w.d.at(pi, pj))))
                    pi = i, pj = j;
        if (pi < 0)
            break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        for (;;) {
            bool again = false;
            for (int i = t + 1; i < a.rows; ++i)
                while (w.d.at(i, t) != 0) {
                    Int q = w.d.at(i, t) / w.d.at(t, t);
                    w.row_sub(i, t, q);
                    if (w.d.at(i, t) != 0) {  // remainder smaller than pivot
                        w.row_swap(t, i);
                        again = true;
                    }
                }
            for (int j = t + 1; j < a.cols; ++j)
                while (w.d.at(t, j) != 0) {
                    Int q = w.d.at(t, j) / w.d.at(t, t);
                    w.col_sub(j, t, q);
                    if (w.d.at(t, j) != 0) {
                        w.col_swap(t, j);
                        again = true;
                    }
                }
            if (!again)
                break;
        }

        // pivot must divide the rest of the block
        bool restart = false;
        for (int i = t + 1; i < a.rows && !restart; ++i)
            for (int j = t + 1; j < a.cols && !restart; ++j)
                if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                    w.row_sub(t, i, Int(-1));  // row t += row i
                    restart = true;
                }
        if (restart) {
            --t;
            continue;
        }
        if (w.d.at(t, t) < 0)
            w.row_negate(t);
    }

    Snf s;
    s.u = std::move(w.u);
    s.uinv = std::move(w.uinv);
    s.d = std::move(w.d);
    s.v = std::move(w.v);
    s.vinv = std::move(w.vinv);
    for (int i = 0; i < n; ++i)
        if (s.d.at(i, i) != 0)
            ++s.rank;

    if (!(s.u * a * s.v == s.d) || !(s.u * s.uinv == IntMat::identity(a.rows)) ||
        !(s.v * s.vinv == IntMat::identity(a.cols)))
        throw std::logic_error("SNF postcondition failed");
    return s;
}

std::optional<std::vector<Int>> solve_int(const Snf& s, const std::vector<Int>& b)
{
    std::vector<Int> c = s.u.apply(b);
    std::vector<Int> y(s.d.cols, Int(0));
    for (int i = 0; i < s.d.rows; ++i) {
        Int di = i < s.d.cols ? s.d.at(i, i) : Int(0);
        if (di == 0) {
            if (c[i] != 0)
                return std::nullopt;
        }
        else {
            if (c[i] % di != 0)
                return std::nullopt;
            y[i] = c[i] / di;
        }
    }
    return s.v.apply(y);
}

std::optional<std::vector<Rat>> solve_mod1(const Snf& s, const std::vector<Rat>& b)
{
    std::vector<Rat> c = s.u.apply(b);
    std::vector<Rat> y(s.d.cols, Rat(0));
    for (int i = 0; i < s.d.rows; ++i) {
        Int di = i < s.d.cols ? s.d.at(i, i) : Int(0);
        if (di == 0) {
            if (!is_integer(c[i]))
                return std::nullopt;
        }
        else {
            y[i] = c[i] / Rat(di);
        }
    }
    return s.v.apply(y);
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& v) const
{
    if ((int)v.size() != cols)
        throw DomainError("matrix apply shape mismatch");
    std::vector<Rat> out(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0)
                out[i] += at(i, j) * v[j];
    return out;
}

namespace {

// reduced row echelon form in place; returns pivot column per pivot row
std::vector<int> rref(RatMat& m)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(p, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, c);
        for (int j = 0; j < m.cols; ++j)
            m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i)
            if (i != r && m.at(i, c) != 0) {
                Rat f = m.at(i, c);
                for (int j = 0; j < m.cols; ++j)
                    m.at(i, j) -= f * m.at(r, j);
            }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rat_rank(RatMat m) { return (int)rref(m).size(); }

std::vector<std::vector<Rat>> rat_kernel(const RatMat& m)
{
    RatMat r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c])
            continue;
        std::vector<Rat> x(m.cols, Rat(0));
        x[c] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            x[pivots[pr]] = -r.at((int)pr, c);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rat>> rat_solve(const RatMat& m, const std::vector<Rat>& b)
{
    RatMat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    std::vector<Rat> x(m.cols, Rat(0));
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
        if (pivots[pr] == m.cols)
            return std::nullopt;  // pivot in the constant column
        x[pivots[pr]] = aug.at((int)pr, m.cols);
    }
    return x;
}

}  // namespace mcech
