#include "microcech/symbol.hpp"

#include <doctest.h>

using namespace mcech;

namespace {

GradedSymbol mono(int nvars, GaussRat c, std::vector<int> x, Rat xi1,
                  std::vector<int> xi, int window)
{
    return GradedSymbol::from_monomial(nvars, Monomial{c, x, xi1, xi}, window);
}

}  // namespace

TEST_CASE("addition merges like terms")
{
    auto xi1 = GradedSymbol::coordinate_xi(1, 1, 3);
    auto sum = xi1 + xi1;
    CHECK(sum == xi1.scaled(GaussRat(2)));

    // P + 0 = P on the shared window
    auto zero = GradedSymbol::zero(1, 1, 3);
    CHECK(xi1 + zero == xi1);
}

TEST_CASE("addition cancels to a sparse canonical form")
{
    // (xi1 + x1) + (-x1) = xi1, with -x1 carried at order 1 so the windows match
    auto p = GradedSymbol::coordinate_xi(2, 1, 2) + GradedSymbol::coordinate_x(2, 1, 2);
    auto mx1 = GradedSymbol::coordinate_x(2, 1, 2).scaled(GaussRat(-1)).rewindow(1, 2);
    auto s = p + mx1;
    CHECK(s == GradedSymbol::coordinate_xi(2, 1, 2).rewindow(1, 2));
    CHECK(s.component(Rat(0)).empty());
    CHECK(s.component(Rat(1)).size() == 1);
}

TEST_CASE("addition rejects sector mismatch and disjoint windows")
{
    auto a = GradedSymbol::xi1_power(1, Rat(1, 2), 2);
    auto b = GradedSymbol::coordinate_xi(1, 1, 2);
    CHECK_THROWS_AS(a + b, DomainError);

    auto hi = GradedSymbol::coordinate_xi(1, 1, 1);             // degree 1 only
    auto lo = GradedSymbol::one(1, 1).rewindow(-1, 1);          // degree -1 only
    CHECK_THROWS_AS(hi + lo, DomainError);
}

TEST_CASE("partial derivatives follow the power rules")
{
    Rat lam(7, 3);
    auto p = GradedSymbol::xi1_power(1, lam, 4);
    auto dp = p.partial_xi(1);
    auto expect = GradedSymbol::xi1_power(1, lam - 1, 4).scaled(GaussRat(lam));
    CHECK(dp == expect);

    // d/dx1 of xi2 is zero
    auto xi2 = GradedSymbol::coordinate_xi(2, 2, 3);
    CHECK(xi2.partial_x(1).is_zero());

    // d/dx1 (x1^2 xi1^-3) = 2 x1 xi1^-3
    auto m = mono(1, GaussRat(1), {2}, -3, {}, 2);
    auto dm = m.partial_x(1);
    CHECK(dm == mono(1, GaussRat(2), {1}, -3, {}, 2));
}

TEST_CASE("partials commute and respect addition")
{
    auto p = mono(2, GaussRat(Rat(3), Rat(1, 2)), {1, 2}, Rat(5, 2), {1}, 4) +
             mono(2, GaussRat(Rat(-2)), {0, 1}, Rat(3, 2), {2}, 4).rewindow(Rat(9, 2), 4) +
             mono(2, GaussRat(Rat(1, 7)), {3, 0}, Rat(7, 2), {1}, 4);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            CHECK(p.partial_x(i).partial_x(j) == p.partial_x(j).partial_x(i));
            CHECK(p.partial_xi(i).partial_xi(j) == p.partial_xi(j).partial_xi(i));
            CHECK(p.partial_x(i).partial_xi(j) == p.partial_xi(j).partial_x(i));
        }

    auto q = mono(2, GaussRat(Rat(2, 3)), {0, 0}, Rat(9, 2), {0}, 4);
    CHECK((p + q).partial_x(1) == p.partial_x(1) + q.partial_x(1));
    CHECK((p + q).partial_xi(2) == p.partial_xi(2) + q.partial_xi(2));
}

TEST_CASE("degree bookkeeping is exact after every operation")
{
    auto p = mono(3, GaussRat(1), {1, 0, 2}, Rat(-1, 3), {2, 0}, 5) +
             mono(3, GaussRat(Rat(4)), {0, 0, 0}, Rat(2, 3), {0, 1}, 5).rewindow(Rat(5, 3), 5);
    for (auto const& [deg, lst] : p.components())
        for (auto const& m : lst)
            CHECK(m.xi_degree() == deg);
    auto d = p.partial_xi(1);
    for (auto const& [deg, lst] : d.components())
        for (auto const& m : lst)
            CHECK(m.xi_degree() == deg);
}

TEST_CASE("terms outside the window are rejected")
{
    GradedSymbol s = GradedSymbol::zero(1, 2, 2);  // degrees 1..2
    CHECK_THROWS_AS(
        s.add_term(Monomial{GaussRat(1), {0}, Rat(0), {}}), DomainError);
}

TEST_CASE("JSON round trip is bit-exact")
{
    auto p = mono(2, GaussRat(Rat(22, 7), Rat(-1, 3)), {1, 0}, Rat(-5, 2), {3}, 4) +
             mono(2, GaussRat(Rat(0), Rat(1)), {0, 2}, Rat(-3, 2), {1}, 4) +
             mono(2, GaussRat(Rat(5)), {0, 0}, Rat(1, 2), {0}, 4);
    auto text = p.to_json();
    auto q = GradedSymbol::from_json(text);
    CHECK(p == q);
    CHECK(text == q.to_json());

    CHECK_THROWS_AS(GradedSymbol::from_json("{"), FormatError);
    CHECK_THROWS_AS(GradedSymbol::from_json(R"({"nvars":1})"), FormatError);
    CHECK_THROWS_AS(GradedSymbol::from_json(
                        R"({"nvars":1,"order":"0.5","window":1,"terms":[]})"),
                    FormatError);
}
