#include "microcech/cohomology.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace mcech {

using nlohmann::json;

CoeffGroup CoeffGroup::Zmod(Int m)
{
    if (m < 2)
        throw DomainError("Z/m needs m >= 2");
    return {Coeff::Zm, std::move(m)};
}

CoeffGroup CoeffGroup::parse(const std::string& s)
{
    if (s == "Z")
        return Z();
    if (s == "Q")
        return Q();
    if (s == "Q/Z")
        return QmodZ();
    if (s == "RCx")
        return RCx();
    if (s.rfind("Z/", 0) == 0) {
        try {
            return Zmod(Int(s.substr(2)));
        }
        catch (const std::runtime_error&) {
        }
    }
    throw FormatError("unknown coefficient group \"" + s + "\" (Z, Z/m, Q, Q/Z, RCx)");
}

std::string CoeffGroup::str() const
{
    switch (tag) {
        case Coeff::Z: return "Z";
        case Coeff::Zm: return "Z/" + m.str();
        case Coeff::Q: return "Q";
        case Coeff::QmodZ: return "Q/Z";
        case Coeff::RCx: return "RCx";
    }
    return "?";
}

/* ---- complexes ------------------------------------------------------ */

IntMat ComplexZ::dmat(int k) const
{
    if (k >= 0 && k < (int)d.size())
        return d[k];
    return IntMat(dim(k + 1), dim(k));
}

void ComplexZ::check() const
{
    for (int k = 0; k + 1 <= maxdeg(); ++k) {
        const IntMat& m = dmat(k);
        if (m.rows != dim(k + 1) || m.cols != dim(k))
            throw std::logic_error("complex differential shape mismatch");
        if (k + 1 < (int)d.size() && !(dmat(k + 1) * m).is_zero())
            throw std::logic_error("complex differential does not square to zero");
    }
}

ComplexZ ComplexZ::from_nerve(const Nerve& n, int maxdeg)
{
    ComplexZ cx;
    cx.dims.resize(maxdeg + 1);
    for (int k = 0; k <= maxdeg; ++k)
        cx.dims[k] = n.count(k);
    for (int k = 0; k < maxdeg; ++k)
        cx.d.push_back(n.coboundary_matrix(k));
    cx.check();
    return cx;
}

ComplexZ tensor_total(const ComplexZ& a, const ComplexZ& b)
{
    ComplexZ t;
    int maxdeg = a.maxdeg() + b.maxdeg();
    t.dims.resize(maxdeg + 1, 0);
    // block offset of (p, n-p) inside degree n
    auto offset = [&](int n, int p) {
        int off = 0;
        for (int pp = 0; pp < p; ++pp)
            off += a.dim(pp) * b.dim(n - pp);
        return off;
    };
    for (int n = 0; n <= maxdeg; ++n)
        t.dims[n] = offset(n, n + 1);
    for (int n = 0; n < maxdeg; ++n) {
        IntMat m(t.dims[n + 1], t.dims[n]);
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            if (a.dim(p) == 0 || b.dim(q) == 0)
                continue;
            IntMat da = a.dmat(p), db = b.dmat(q);
            // d_a (x) id : (p,q) -> (p+1,q)
            for (int i = 0; i < da.rows; ++i)
                for (int j = 0; j < da.cols; ++j)
                    if (da.at(i, j) != 0)
                        for (int y = 0; y < b.dim(q); ++y)
                            m.at(offset(n + 1, p + 1) + i * b.dim(q) + y,
                                 offset(n, p) + j * b.dim(q) + y) += da.at(i, j);
            // (-1)^p id (x) d_b : (p,q) -> (p,q+1)
            Int sign = (p % 2 == 0) ? 1 : -1;
            for (int x = 0; x < a.dim(p); ++x)
                for (int i = 0; i < db.rows; ++i)
                    for (int j = 0; j < db.cols; ++j)
                        if (db.at(i, j) != 0)
                            m.at(offset(n + 1, p) + x * b.dim(q + 1) + i,
                                 offset(n, p) + x * b.dim(q) + j) += sign * db.at(i, j);
        }
        t.d.push_back(std::move(m));
    }
    t.check();
    return t;
}

ComplexZ cone_complex(const Nerve& base, const std::vector<Int>& euler, int maxdeg)
{
    if ((int)euler.size() != base.count(2))
        throw DomainError("euler cochain size mismatch");
    if (!std::all_of(coboundary(base, 2, euler).begin(),
                     coboundary(base, 2, euler).end(),
                     [](const Int& v) { return v == 0; }))
        throw DomainError("euler class is not a 2-cocycle");

    ComplexZ cx;
    cx.dims.resize(maxdeg + 1, 0);
    auto nx = [&](int k) { return base.count(k); };
    for (int k = 0; k <= maxdeg; ++k)
        cx.dims[k] = nx(k) + nx(k - 1);
    for (int k = 0; k < maxdeg; ++k) {
        IntMat m(cx.dims[k + 1], cx.dims[k]);
        IntMat dk = base.coboundary_matrix(k);
        for (int i = 0; i < dk.rows; ++i)
            for (int j = 0; j < dk.cols; ++j)
                m.at(i, j) = dk.at(i, j);
        if (k >= 1) {
            IntMat dk1 = base.coboundary_matrix(k - 1);
            for (int i = 0; i < dk1.rows; ++i)
                for (int j = 0; j < dk1.cols; ++j)
                    m.at(nx(k + 1) + i, nx(k) + j) = -dk1.at(i, j);
            // e cup (.) : C^{k-1}(X) -> C^{k+1}(X)
            for (int r = 0; r < nx(k + 1); ++r) {
                const auto& s = base.simplices(k + 1)[r];
                std::vector<int> front(s.begin(), s.begin() + 3);
                std::vector<int> back(s.begin() + 2, s.end());
                int fi = base.index_of(front);
                int bi = base.index_of(back);
                if (fi < 0 || bi < 0)
                    throw std::logic_error("cone faces missing from nerve");
                m.at(r, nx(k) + bi) += euler[fi];
            }
        }
        cx.d.push_back(std::move(m));
    }
    cx.check();
    return cx;
}

/* ---- cup products and value-level coboundaries ---------------------- */

namespace {

template <class T>
std::vector<T> cup_impl(const Nerve& n, int p, const std::vector<Int>& a, int q,
                        const std::vector<T>& b, const T& zero)
{
    if ((int)a.size() != n.count(p) || (int)b.size() != n.count(q))
        throw DomainError("cup product cochain size mismatch");
    std::vector<T> out(n.count(p + q), zero);
    const auto& top = n.simplices(p + q);
    for (int r = 0; r < (int)top.size(); ++r) {
        std::vector<int> front(top[r].begin(), top[r].begin() + p + 1);
        std::vector<int> back(top[r].begin() + p, top[r].end());
        int fi = n.index_of(front);
        int bi = n.index_of(back);
        if (fi < 0 || bi < 0)
            throw std::logic_error("nerve not downward closed");
        if constexpr (std::is_same_v<T, RCxValue>)
            out[r] = out[r] + b[bi].scaled(a[fi]);
        else
            out[r] = out[r] + T(a[fi]) * b[bi];
    }
    return out;
}

template <class T>
std::vector<T> coboundary_impl(const Nerve& n, int k, const std::vector<T>& c,
                               const T& zero)
{
    if ((int)c.size() != n.count(k))
        throw DomainError("coboundary cochain size mismatch");
    std::vector<T> out(n.count(k + 1), zero);
    const auto& top = n.simplices(k + 1);
    for (int r = 0; r < (int)top.size(); ++r)
        for (int i = 0; i <= k + 1; ++i) {
            std::vector<int> face;
            for (int j = 0; j <= k + 1; ++j)
                if (j != i)
                    face.push_back(top[r][j]);
            int ci = n.index_of(face);
            if constexpr (std::is_same_v<T, RCxValue>) {
                if (i % 2 == 0)
                    out[r] = out[r] + c[ci];
                else
                    out[r] = out[r] - c[ci];
            }
            else {
                out[r] = out[r] + (i % 2 == 0 ? c[ci] : T(-c[ci]));
            }
        }
    return out;
}

}  // namespace

std::vector<Int> cup(const Nerve& n, int p, const std::vector<Int>& a, int q,
                     const std::vector<Int>& b)
{
    return cup_impl(n, p, a, q, b, Int(0));
}
std::vector<Rat> cup(const Nerve& n, int p, const std::vector<Int>& a, int q,
                     const std::vector<Rat>& b)
{
    return cup_impl(n, p, a, q, b, Rat(0));
}
std::vector<RCxValue> cup(const Nerve& n, int p, const std::vector<Int>& a, int q,
                          const std::vector<RCxValue>& b)
{
    return cup_impl(n, p, a, q, b, RCxValue());
}

std::vector<Int> coboundary(const Nerve& n, int k, const std::vector<Int>& c)
{
    return coboundary_impl(n, k, c, Int(0));
}
std::vector<Rat> coboundary(const Nerve& n, int k, const std::vector<Rat>& c)
{
    return coboundary_impl(n, k, c, Rat(0));
}
std::vector<RCxValue> coboundary(const Nerve& n, int k, const std::vector<RCxValue>& c)
{
    return coboundary_impl(n, k, c, RCxValue());
}

/* ---- presentation over Z and Z/m ------------------------------------ */

namespace {
Int gcd_int(Int a, Int b)
{
    a = a < 0 ? Int(-a) : a;
    b = b < 0 ? Int(-b) : b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}
}  // namespace

FgPresentation::FgPresentation(const IntMat& dk, const IntMat& dkm1, Int m)
    : m_(std::move(m)), ncochain_(dk.cols)
{
    if (dkm1.rows != ncochain_)
        throw std::logic_error("presentation differential shapes disagree");
    snf_a_ = smith_normal_form(dk);

    // lattice L of cocycles: L = { z : dk z = 0 (mod m) }
    scale_.assign(ncochain_, Int(1));
    for (int j = 0; j < ncochain_; ++j) {
        Int dj = snf_a_.diag(j);
        if (m_ == 0) {
            if (dj == 0)
                lattice_cols_.push_back(j);
        }
        else {
            scale_[j] = m_ / gcd_int(dj == 0 ? m_ : dj, m_);
            lattice_cols_.push_back(j);
        }
    }
    const int L = (int)lattice_cols_.size();

    // relation subgroup: image of dkm1, plus m * Z^n when m > 0
    std::vector<std::vector<Int>> rel_cols;
    for (int j = 0; j < dkm1.cols; ++j) {
        std::vector<Int> g(ncochain_);
        for (int i = 0; i < ncochain_; ++i)
            g[i] = dkm1.at(i, j);
        rel_cols.push_back(lattice_coords(g));
    }
    if (m_ > 0)
        for (int i = 0; i < ncochain_; ++i) {
            std::vector<Int> g(ncochain_, Int(0));
            g[i] = m_;
            rel_cols.push_back(lattice_coords(g));
        }
    IntMat rel(L, (int)rel_cols.size());
    for (int j = 0; j < (int)rel_cols.size(); ++j)
        for (int i = 0; i < L; ++i)
            rel.at(i, j) = rel_cols[j][i];
    snf_m_ = smith_normal_form(rel);

    for (int i = 0; i < L; ++i) {
        Int di = snf_m_.diag(i);
        if (di == 0)
            free_slots_.push_back(i);
        else if (di != 1) {
            torsion_slots_.push_back(i);
            factors_.push_back(di);
        }
    }
    free_rank_ = (int)free_slots_.size();
    if (m_ > 0 && free_rank_ != 0)
        throw std::logic_error("Z/m cohomology cannot have a free part");

    // representative cocycles: K * (Uinv_M column of the slot)
    auto rep = [&](int slot) {
        std::vector<Int> z(ncochain_, Int(0));
        for (int l = 0; l < L; ++l) {
            Int c = snf_m_.uinv.at(l, slot);
            if (c == 0)
                continue;
            int j = lattice_cols_[l];
            for (int i = 0; i < ncochain_; ++i)
                z[i] += c * scale_[j] * snf_a_.v.at(i, j);
        }
        if (m_ > 0)
            for (auto& v : z)
                v = ((v % m_) + m_) % m_;
        return z;
    };
    for (int s : free_slots_)
        free_gens_.push_back(rep(s));
    for (int s : torsion_slots_)
        torsion_gens_.push_back(rep(s));
}

std::vector<Int> FgPresentation::lattice_coords(const std::vector<Int>& z) const
{
    std::vector<Int> w = snf_a_.vinv.apply(z);
    std::vector<Int> y(lattice_cols_.size());
    for (int j = 0; j < ncochain_; ++j) {
        bool in_lattice =
            std::binary_search(lattice_cols_.begin(), lattice_cols_.end(), j);
        if (!in_lattice) {
            if (w[j] != 0)
                throw DomainError("not a cocycle");
            continue;
        }
    }
    for (size_t l = 0; l < lattice_cols_.size(); ++l) {
        int j = lattice_cols_[l];
        if (w[j] % scale_[j] != 0)
            throw DomainError("not a cocycle (mod m)");
        y[l] = w[j] / scale_[j];
    }
    return y;
}

Int FgPresentation::order() const
{
    if (!is_finite())
        throw DomainError("group is infinite");
    Int o = 1;
    for (auto const& f : factors_)
        o *= f;
    return o;
}

FgPresentation::Coords FgPresentation::coords(const std::vector<Int>& cocycle) const
{
    if ((int)cocycle.size() != ncochain_)
        throw DomainError("cochain size mismatch");
    std::vector<Int> z = cocycle;
    if (m_ > 0)
        for (auto& v : z)
            v = ((v % m_) + m_) % m_;
    std::vector<Int> y = lattice_coords(z);
    std::vector<Int> u = snf_m_.u.apply(y);
    Coords c;
    for (int s : free_slots_)
        c.free.push_back(u[s]);
    for (size_t i = 0; i < torsion_slots_.size(); ++i) {
        Int v = u[torsion_slots_[i]] % factors_[i];
        if (v < 0)
            v += factors_[i];
        c.torsion.push_back(v);
    }
    return c;
}

std::vector<Int> FgPresentation::from_coords(const Coords& c) const
{
    if ((int)c.free.size() != free_rank_ || c.torsion.size() != factors_.size())
        throw DomainError("coordinate arity mismatch");
    std::vector<Int> z(ncochain_, Int(0));
    for (int i = 0; i < free_rank_; ++i)
        for (int j = 0; j < ncochain_; ++j)
            z[j] += c.free[i] * free_gens_[i][j];
    for (size_t i = 0; i < factors_.size(); ++i)
        for (int j = 0; j < ncochain_; ++j)
            z[j] += c.torsion[i] * torsion_gens_[i][j];
    if (m_ > 0)
        for (auto& v : z)
            v = ((v % m_) + m_) % m_;
    return z;
}

FgPresentation::Coords FgPresentation::add(const Coords& a, const Coords& b) const
{
    Coords c;
    for (int i = 0; i < free_rank_; ++i)
        c.free.push_back(a.free[i] + b.free[i]);
    for (size_t i = 0; i < factors_.size(); ++i) {
        Int v = (a.torsion[i] + b.torsion[i]) % factors_[i];
        c.torsion.push_back(v);
    }
    return c;
}

FgPresentation::Coords FgPresentation::scale(const Coords& a, const Int& s) const
{
    Coords c;
    for (int i = 0; i < free_rank_; ++i)
        c.free.push_back(a.free[i] * s);
    for (size_t i = 0; i < factors_.size(); ++i) {
        Int v = (a.torsion[i] * s) % factors_[i];
        if (v < 0)
            v += factors_[i];
        c.torsion.push_back(v);
    }
    return c;
}

FgPresentation::Coords FgPresentation::zero_coords() const
{
    Coords c;
    c.free.assign(free_rank_, Int(0));
    c.torsion.assign(factors_.size(), Int(0));
    return c;
}

std::vector<FgPresentation::Coords> FgPresentation::enumerate() const
{
    if (!is_finite())
        throw DomainError("cannot enumerate an infinite group");
    Int n = order();
    if (n > 200000)
        throw BudgetError("group too large to enumerate: " + n.str() + " elements");
    std::vector<Coords> all;
    Coords c = zero_coords();
    for (Int i = 0; i < n; ++i) {
        all.push_back(c);
        // increment mixed-radix counter
        for (size_t j = 0; j < factors_.size(); ++j) {
            c.torsion[j] += 1;
            if (c.torsion[j] < factors_[j])
                break;
            c.torsion[j] = 0;
        }
    }
    return all;
}

std::string FgPresentation::describe() const
{
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << "Z";
        if (free_rank_ > 1)
            os << "^" << free_rank_;
        first = false;
    }
    for (auto const& f : factors_) {
        if (!first)
            os << " (+) ";
        os << "Z/" << f;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

/* ---- presentation over Q --------------------------------------------- */

QPresentation::QPresentation(const IntMat& dk, const IntMat& dkm1)
    : dk_(dk), dkm1_(dkm1)
{
    RatMat a(dk.rows, dk.cols);
    for (int i = 0; i < dk.rows; ++i)
        for (int j = 0; j < dk.cols; ++j)
            a.at(i, j) = Rat(dk.at(i, j));
    auto kernel = rat_kernel(a);

    // greedily extend the image basis by kernel vectors
    RatMat span(dk.cols, dkm1.cols);
    for (int i = 0; i < dk.cols; ++i)
        for (int j = 0; j < dkm1.cols; ++j)
            span.at(i, j) = Rat(dkm1.at(i, j));
    int rank = rat_rank(span);
    for (auto& kv : kernel) {
        RatMat ext(dk.cols, span.cols + 1);
        for (int i = 0; i < dk.cols; ++i) {
            for (int j = 0; j < span.cols; ++j)
                ext.at(i, j) = span.at(i, j);
            ext.at(i, span.cols) = kv[i];
        }
        if (rat_rank(ext) > rank) {
            gens_.push_back(kv);
            span = std::move(ext);
            ++rank;
        }
    }
}

std::vector<Rat> QPresentation::coords(const std::vector<Rat>& cocycle) const
{
    if ((int)cocycle.size() != dk_.cols)
        throw DomainError("cochain size mismatch");
    for (auto const& v : dk_.apply(cocycle))
        if (v != 0)
            throw DomainError("not a cocycle");
    RatMat sys(dk_.cols, dkm1_.cols + (int)gens_.size());
    for (int i = 0; i < dk_.cols; ++i) {
        for (int j = 0; j < dkm1_.cols; ++j)
            sys.at(i, j) = Rat(dkm1_.at(i, j));
        for (size_t g = 0; g < gens_.size(); ++g)
            sys.at(i, dkm1_.cols + (int)g) = gens_[g][i];
    }
    auto sol = rat_solve(sys, cocycle);
    if (!sol)
        throw std::logic_error("cocycle not in the span of H^k(Q)");
    return std::vector<Rat>(sol->begin() + dkm1_.cols, sol->end());
}

std::vector<Rat> QPresentation::from_coords(const std::vector<Rat>& c) const
{
    if (c.size() != gens_.size())
        throw DomainError("coordinate arity mismatch");
    std::vector<Rat> z(dk_.cols, Rat(0));
    for (size_t g = 0; g < gens_.size(); ++g)
        for (int i = 0; i < dk_.cols; ++i)
            z[i] += c[g] * gens_[g][i];
    return z;
}

/* ---- presentation over Q/Z ------------------------------------------- */

QmodZPresentation::QmodZPresentation(const ComplexZ& cx, int k)
    : k_(k),
      zk_(cx.dmat(k), cx.dmat(k - 1), 0),
      zk1_(cx.dmat(k + 1), cx.dmat(k), 0),
      snf_dk_(smith_normal_form(cx.dmat(k))),
      dk_(cx.dmat(k)),
      dkm1_(cx.dmat(k - 1))
{
    divisible_rank_ = zk_.free_rank();
    factors_ = zk1_.factors();
    for (size_t i = 0; i < factors_.size(); ++i) {
        std::vector<Int> b(dk_.rows, Int(0));
        for (int j = 0; j < dk_.rows; ++j)
            b[j] = factors_[i] * zk1_.torsion_gens()[i][j];
        auto h = solve_int(snf_dk_, b);
        if (!h)
            throw std::logic_error("torsion bound fails to lift");
        std::vector<Rat> ref(dk_.cols);
        for (int j = 0; j < dk_.cols; ++j)
            ref[j] = mod1(Rat((*h)[j]) / Rat(factors_[i]));
        bockstein_ref_.push_back(std::move(ref));
    }
}

QmodZPresentation::Coords QmodZPresentation::coords(const std::vector<Rat>& cocycle) const
{
    if ((int)cocycle.size() != dk_.cols)
        throw DomainError("cochain size mismatch");
    std::vector<Rat> z(cocycle);
    for (auto& v : z)
        v = mod1(v);

    // Bockstein: d of the canonical lift is an integer cocycle
    std::vector<Rat> w = dk_.apply(z);
    std::vector<Int> wint(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        if (!is_integer(w[i]))
            throw DomainError("not a Q/Z cocycle");
        wint[i] = numerator(w[i]);
    }
    auto cw = zk1_.coords(wint);
    for (auto const& f : cw.free)
        if (f != 0)
            throw std::logic_error("Bockstein image has a free component");

    Coords out;
    out.torsion = cw.torsion;

    std::vector<Rat> z2 = z;
    for (size_t i = 0; i < factors_.size(); ++i)
        for (int j = 0; j < dk_.cols; ++j)
            z2[j] = mod1(z2[j] - Rat(cw.torsion[i]) * bockstein_ref_[i][j]);

    std::vector<Rat> w2 = dk_.apply(z2);
    std::vector<Int> w2int(w2.size());
    for (size_t i = 0; i < w2.size(); ++i) {
        if (!is_integer(w2[i]))
            throw std::logic_error("torsion correction broke integrality");
        w2int[i] = numerator(w2[i]);
    }
    auto c = solve_int(snf_dk_, w2int);
    if (!c)
        throw std::logic_error("trivialized Bockstein fails to lift");

    std::vector<Rat> v(dk_.cols);
    for (int j = 0; j < dk_.cols; ++j)
        v[j] = z2[j] - Rat((*c)[j]);
    for (auto const& dv : dk_.apply(v))
        if (dv != 0)
            throw std::logic_error("rational correction is not a cocycle");

    // coordinates of [v] in H^k(Q) w.r.t. images of the integral free basis
    const auto& fg = zk_.free_gens();
    RatMat sys(dk_.cols, dkm1_.cols + (int)fg.size());
    for (int i = 0; i < dk_.cols; ++i) {
        for (int j = 0; j < dkm1_.cols; ++j)
            sys.at(i, j) = Rat(dkm1_.at(i, j));
        for (size_t g = 0; g < fg.size(); ++g)
            sys.at(i, dkm1_.cols + (int)g) = Rat(fg[g][i]);
    }
    auto sol = rat_solve(sys, v);
    if (!sol)
        throw std::logic_error("rational class outside the integral lattice span");
    for (size_t g = 0; g < fg.size(); ++g)
        out.divisible.push_back(mod1((*sol)[dkm1_.cols + g]));
    return out;
}

std::vector<Rat> QmodZPresentation::from_coords(const Coords& c) const
{
    if ((int)c.divisible.size() != divisible_rank_ ||
        c.torsion.size() != factors_.size())
        throw DomainError("coordinate arity mismatch");
    std::vector<Rat> z(dk_.cols, Rat(0));
    for (int g = 0; g < divisible_rank_; ++g)
        for (int j = 0; j < dk_.cols; ++j)
            z[j] += c.divisible[g] * Rat(zk_.free_gens()[g][j]);
    for (size_t i = 0; i < factors_.size(); ++i)
        for (int j = 0; j < dk_.cols; ++j)
            z[j] += Rat(c.torsion[i]) * bockstein_ref_[i][j];
    for (auto& v : z)
        v = mod1(v);
    return z;
}

QmodZPresentation::Coords QmodZPresentation::add(const Coords& a, const Coords& b) const
{
    Coords c;
    for (int i = 0; i < divisible_rank_; ++i)
        c.divisible.push_back(mod1(a.divisible[i] + b.divisible[i]));
    for (size_t i = 0; i < factors_.size(); ++i)
        c.torsion.push_back((a.torsion[i] + b.torsion[i]) % factors_[i]);
    return c;
}

std::string QmodZPresentation::describe() const
{
    std::ostringstream os;
    bool first = true;
    if (divisible_rank_ > 0) {
        os << "(Q/Z)";
        if (divisible_rank_ > 1)
            os << "^" << divisible_rank_;
        first = false;
    }
    for (auto const& f : factors_) {
        if (!first)
            os << " (+) ";
        os << "Z/" << f;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

/* ---- RCx -------------------------------------------------------------- */

RCxPresentation::RCxPresentation(const ComplexZ& cx, int k)
    : tpart_(cx, k), upart_(cx.dmat(k), cx.dmat(k - 1))
{
}

RCxPresentation::Coords RCxPresentation::coords(const std::vector<RCxValue>& cocycle) const
{
    std::vector<Rat> t(cocycle.size()), u(cocycle.size());
    for (size_t i = 0; i < cocycle.size(); ++i) {
        t[i] = cocycle[i].t;
        u[i] = cocycle[i].u;
    }
    return {tpart_.coords(t), upart_.coords(u)};
}

std::vector<RCxValue> RCxPresentation::from_coords(const Coords& c) const
{
    auto t = tpart_.from_coords(c.t);
    auto u = upart_.from_coords(c.u);
    std::vector<RCxValue> z(t.size());
    for (size_t i = 0; i < t.size(); ++i)
        z[i] = RCxValue(t[i], u[i]);
    return z;
}

RCxPresentation::Coords RCxPresentation::add(const Coords& a, const Coords& b) const
{
    Coords c;
    c.t = tpart_.add(a.t, b.t);
    c.u.resize(a.u.size());
    for (size_t i = 0; i < a.u.size(); ++i)
        c.u[i] = a.u[i] + b.u[i];
    return c;
}

std::string RCxPresentation::describe() const
{
    std::string t = tpart_.describe();
    int qd = upart_.dim();
    if (qd == 0)
        return t;
    std::string q = "Q";
    if (qd > 1)
        q += "^" + std::to_string(qd);
    if (t == "0")
        return q;
    return t + " (+) " + q;
}

/* ---- umbrella --------------------------------------------------------- */

std::string GroupPresentation::describe() const
{
    switch (coeff.tag) {
        case Coeff::Z:
        case Coeff::Zm: return fg->describe();
        case Coeff::Q: {
            int d = q->dim();
            if (d == 0)
                return "0";
            return d == 1 ? "Q" : "Q^" + std::to_string(d);
        }
        case Coeff::QmodZ: return qmodz->describe();
        case Coeff::RCx: return rcx->describe();
    }
    return "?";
}

std::string GroupPresentation::to_json() const
{
    json j;
    j["coeff"] = coeff.str();
    j["degree"] = degree;
    j["group"] = describe();
    switch (coeff.tag) {
        case Coeff::Z:
        case Coeff::Zm: {
            j["free_rank"] = fg->free_rank();
            json f = json::array();
            for (auto const& v : fg->factors())
                f.push_back(v.str());
            j["factors"] = std::move(f);
            json gens = json::array();
            for (auto const& g : fg->free_gens()) {
                json gv = json::array();
                for (auto const& x : g)
                    gv.push_back(x.str());
                gens.push_back(std::move(gv));
            }
            for (auto const& g : fg->torsion_gens()) {
                json gv = json::array();
                for (auto const& x : g)
                    gv.push_back(x.str());
                gens.push_back(std::move(gv));
            }
            j["generators"] = std::move(gens);
            break;
        }
        case Coeff::Q: j["dim"] = q->dim(); break;
        case Coeff::QmodZ: {
            j["divisible_rank"] = qmodz->divisible_rank();
            json f = json::array();
            for (auto const& v : qmodz->factors())
                f.push_back(v.str());
            j["factors"] = std::move(f);
            break;
        }
        case Coeff::RCx: {
            j["divisible_rank"] = rcx->tpart().divisible_rank();
            json f = json::array();
            for (auto const& v : rcx->tpart().factors())
                f.push_back(v.str());
            j["factors"] = std::move(f);
            j["q_dim"] = rcx->upart().dim();
            break;
        }
    }
    return j.dump();
}

GroupPresentation cohomology(const ComplexZ& cx, const CoeffGroup& coeff, int k)
{
    if (k < 0)
        throw DomainError("cohomology degree must be >= 0");
    GroupPresentation g;
    g.coeff = coeff;
    g.degree = k;
    switch (coeff.tag) {
        case Coeff::Z:
            g.fg.emplace(cx.dmat(k), cx.dmat(k - 1), Int(0));
            break;
        case Coeff::Zm:
            g.fg.emplace(cx.dmat(k), cx.dmat(k - 1), coeff.m);
            break;
        case Coeff::Q:
            g.q.emplace(cx.dmat(k), cx.dmat(k - 1));
            break;
        case Coeff::QmodZ:
            g.qmodz.emplace(cx, k);
            break;
        case Coeff::RCx:
            g.rcx.emplace(cx, k);
            break;
    }
    return g;
}

GroupPresentation cohomology(const Nerve& n, const CoeffGroup& coeff, int k)
{
    ComplexZ cx = ComplexZ::from_nerve(n, std::max(n.dim() + 2, k + 2));
    return cohomology(cx, coeff, k);
}

}  // namespace mcech
