#include "microcech/microdiff.hpp"

#include <algorithm>
#include <functional>

namespace mcech::md {

namespace {

/* Equality of truncated expansions on the overlap of their windows; an
 * empty overlap decides nothing and counts as equal here. */
bool equal_on_common_window(const GradedSymbol& a, const GradedSymbol& b)
{
    Rat top = std::min(a.order(), b.order());
    Rat bot = std::max(a.floor_degree(), b.floor_degree());
    for (Rat d = top; d >= bot; d -= 1) {
        const auto& ca = a.in_window(d) ? a.component(d) : std::vector<Monomial>{};
        const auto& cb = b.in_window(d) ? b.component(d) : std::vector<Monomial>{};
        if (!(ca == cb))
            return false;
    }
    return true;
}

// enumerate multi-indices alpha in N^n with |alpha| <= max_total
void for_each_alpha(int n, int max_total,
                    const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> alpha(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == n) {
            fn(alpha);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            alpha[pos] = v;
            rec(pos + 1, remaining - v);
        }
        alpha[pos] = 0;
    };
    rec(0, max_total);
}

Rat factorial(int n)
{
    Rat f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

}  // namespace

GradedSymbol leibniz_product(const GradedSymbol& p, const GradedSymbol& q)
{
    if (p.nvars() != q.nvars())
        throw DomainError("nvars mismatch in operator product");
    int n = p.nvars();
    int w = std::min(p.window(), q.window());
    GradedSymbol out = GradedSymbol::zero(n, p.order() + q.order(), w);
    if (p.is_zero() || q.is_zero())
        return out;

    for_each_alpha(n, w - 1, [&](const std::vector<int>& alpha) {
        int total = 0;
        Rat alpha_fact = 1;
        for (int a : alpha) {
            total += a;
            alpha_fact *= factorial(a);
        }
        GradedSymbol pa = p;
        GradedSymbol qa = q;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < alpha[i]; ++k) {
                pa = pa.partial_xi(i + 1);
                qa = qa.partial_x(i + 1);
            }
        if (pa.is_zero() || qa.is_zero())
            return;
        GradedSymbol term = sym_product(pa, qa).scaled(GaussRat(Rat(1) / alpha_fact));
        // collect the part of the term inside the result window
        for (auto const& [deg, lst] : term.components())
            if (out.in_window(deg))
                for (auto const& m : lst)
                    out.add_term(m);
    });
    return out;
}

GradedSymbol symbol_of_order(const GradedSymbol& p, const Rat& mu)
{
    if (!p.in_window(mu))
        throw DomainError("symbol order " + rat_str(mu) +
                          " outside the stored window; truncated data cannot decide it");
    GradedSymbol out = GradedSymbol::zero(p.nvars(), mu, 1);
    for (auto const& m : p.component(mu))
        out.add_term(m);
    return out;
}

std::pair<Rat, GradedSymbol> principal_symbol(const GradedSymbol& p)
{
    auto top = p.top_degree();
    if (!top)
        throw DomainError("principal symbol of the zero operator");
    return {*top, symbol_of_order(p, *top)};
}

bool is_invertible(const GradedSymbol& p)
{
    auto [deg, sigma] = principal_symbol(p);
    auto const& lst = sigma.component(deg);
    if (lst.size() != 1)
        return false;
    auto const& m = lst.front();
    for (int e : m.xexp)
        if (e != 0)
            return false;
    for (int e : m.xiexp)
        if (e != 0)
            return false;
    return true;
}

GradedSymbol formal_inverse(const GradedSymbol& p)
{
    if (!is_invertible(p))
        throw DomainError("operator is not invertible (principal symbol is not c*xi1^s)");
    auto [d, sigma] = principal_symbol(p);
    const Monomial lead = sigma.component(d).front();
    // components of p below the top nonzero degree are still trusted down
    // to the stored floor; that is the effective window of the inverse
    int w_eff = to_int(Rat(d - p.floor_degree())) + 1;
    const GaussRat cinv = lead.coeff.inverse();

    GradedSymbol q = GradedSymbol::zero(p.nvars(), -d, w_eff);
    {
        Monomial m{cinv, std::vector<int>(p.nvars(), 0), -lead.xi1exp,
                   std::vector<int>(p.nvars() - 1, 0)};
        q.add_term(std::move(m));
    }
    for (int k = 1; k < w_eff; ++k) {
        GradedSymbol prod = leibniz_product(p, q);
        // residual at degree -k; dividing by the leading monomial solves
        // lead * q_{-d-k} + residual = 0
        for (auto m : prod.component(Rat(-k))) {
            m.coeff = -(m.coeff * cinv);
            m.xi1exp -= lead.xi1exp;
            q.add_term(std::move(m));
        }
    }
    return q;
}

GradedSymbol adjoint(const GradedSymbol& p)
{
    if (p.sector() != 0 || !is_integer(p.order()))
        throw DomainError("adjoint requires integer order and trivial sector");
    int n = p.nvars();
    // S(x,xi) = tot(P)(x,-xi)
    GradedSymbol s = GradedSymbol::zero(n, p.order(), p.window());
    for (auto const& [deg, lst] : p.components())
        for (auto m : lst) {
            Int k = numerator(m.xi_degree());
            if ((k % 2 + 2) % 2 == 1)
                m.coeff = -m.coeff;
            s.add_term(std::move(m));
        }
    GradedSymbol out = GradedSymbol::zero(n, p.order(), p.window());
    for_each_alpha(n, p.window() - 1, [&](const std::vector<int>& alpha) {
        Rat alpha_fact = 1;
        GradedSymbol t = s;
        for (int i = 0; i < n; ++i) {
            alpha_fact *= factorial(alpha[i]);
            for (int k = 0; k < alpha[i]; ++k)
                t = t.partial_xi(i + 1).partial_x(i + 1);
        }
        if (t.is_zero())
            return;
        t = t.scaled(GaussRat(Rat(1) / alpha_fact));
        for (auto const& [deg, lst] : t.components())
            if (out.in_window(deg))
                for (auto const& m : lst)
                    out.add_term(m);
    });
    return out;
}

GradedSymbol ad_conjugation(const GradedSymbol& p, const GradedSymbol& q)
{
    GradedSymbol pinv = formal_inverse(p);  // checks invertibility
    return leibniz_product(leibniz_product(p, q), pinv);
}

GradedSymbol sector_shift_generator(const Rat& lambda, int nvars, int window)
{
    return GradedSymbol::xi1_power(nvars, lambda, window);
}

std::vector<GradedSymbol> bimodule_hom_basis(const Rat& lambda, const Rat& mu,
                                             int nvars, int window)
{
    if (window < 1)
        throw DomainError("window must be >= 1");
    std::vector<GradedSymbol> basis;
    const Rat rhs_factor = mu - lambda;
    /* Ansatz P = sum c_s xi1^s over integer s, |s| <= window-1 (P lives in
     * the base algebra, so its xi1-exponents are integers).  All commutation
     * constraints act degree-diagonally on this ansatz, so the kernel is
     * spanned by the surviving basis monomials; each candidate is checked by
     * evaluating the actual commutators. */
    /* Monomial candidates are exact (not truncations), so the constraints
     * are evaluated at a boosted internal window; decidability does not
     * depend on the requested window. */
    const int win = window + 2;
    for (int s = window - 1; s >= -(window - 1); --s) {
        GradedSymbol cand = GradedSymbol::xi1_power(nvars, s, win);
        GradedSymbol d1 = GradedSymbol::coordinate_xi(nvars, 1, win);
        GradedSymbol x1 = GradedSymbol::coordinate_x(nvars, 1, win);
        auto commutes = [&](const GradedSymbol& g) {
            return (leibniz_product(cand, g) - leibniz_product(g, cand)).is_zero();
        };
        if (!commutes(d1))
            continue;
        bool ok = true;
        for (int i = 2; i <= nvars && ok; ++i) {
            ok = commutes(GradedSymbol::coordinate_x(nvars, i, win)) &&
                 commutes(GradedSymbol::coordinate_xi(nvars, i, win));
        }
        if (!ok)
            continue;
        // [x1, P] = (mu - lambda) P D1^{-1}
        GradedSymbol lhs =
            leibniz_product(x1, cand) - leibniz_product(cand, x1);
        GradedSymbol rhs =
            leibniz_product(cand, GradedSymbol::xi1_power(nvars, -1, win))
                .scaled(GaussRat(rhs_factor));
        if (equal_on_common_window(lhs, rhs))
            basis.push_back(GradedSymbol::xi1_power(nvars, s, window));
    }
    return basis;
}

}  // namespace mcech::md
