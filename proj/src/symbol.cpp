#include "microcech/symbol.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace mcech {

using nlohmann::json;

std::string Monomial::str(int nvars) const
{
    std::ostringstream os;
    os << coeff.str();
    for (int i = 0; i < nvars; ++i)
        if (xexp[i] != 0)
            os << "*x" << i + 1 << "^" << xexp[i];
    if (xi1exp != 0)
        os << "*xi1^" << rat_str(xi1exp);
    for (int i = 0; i + 1 < nvars; ++i)
        if (xiexp[i] != 0)
            os << "*xi" << i + 2 << "^" << xiexp[i];
    return os.str();
}

GradedSymbol::GradedSymbol(int nvars, Rat order, int window)
    : nvars_(nvars), order_(std::move(order)), window_(window)
{
    if (nvars < 1)
        throw DomainError("nvars must be >= 1");
    if (window < 1)
        throw DomainError("window must be >= 1");
}

GradedSymbol GradedSymbol::zero(int nvars, Rat order, int window)
{
    return GradedSymbol(nvars, std::move(order), window);
}

GradedSymbol GradedSymbol::constant(int nvars, GaussRat c, int window)
{
    GradedSymbol s(nvars, 0, window);
    if (!c.is_zero()) {
        Monomial m{std::move(c), std::vector<int>(nvars, 0), 0,
                   std::vector<int>(nvars - 1, 0)};
        s.add_term(std::move(m));
    }
    return s;
}

GradedSymbol GradedSymbol::from_monomial(int nvars, Monomial m, int window)
{
    GradedSymbol s(nvars, m.xi_degree(), window);
    s.add_term(std::move(m));
    return s;
}

GradedSymbol GradedSymbol::xi1_power(int nvars, Rat lambda, int window)
{
    Monomial m{GaussRat(1), std::vector<int>(nvars, 0), std::move(lambda),
               std::vector<int>(nvars - 1, 0)};
    return from_monomial(nvars, std::move(m), window);
}

GradedSymbol GradedSymbol::coordinate_x(int nvars, int i, int window)
{
    if (i < 1 || i > nvars)
        throw DomainError("coordinate index out of range");
    Monomial m{GaussRat(1), std::vector<int>(nvars, 0), 0,
               std::vector<int>(nvars - 1, 0)};
    m.xexp[i - 1] = 1;
    return from_monomial(nvars, std::move(m), window);
}

GradedSymbol GradedSymbol::coordinate_xi(int nvars, int i, int window)
{
    if (i < 1 || i > nvars)
        throw DomainError("coordinate index out of range");
    Monomial m{GaussRat(1), std::vector<int>(nvars, 0), 0,
               std::vector<int>(nvars - 1, 0)};
    if (i == 1)
        m.xi1exp = 1;
    else
        m.xiexp[i - 2] = 1;
    return from_monomial(nvars, std::move(m), window);
}

bool GradedSymbol::in_window(const Rat& degree) const
{
    Rat j = order_ - degree;
    return is_integer(j) && j >= 0 && j < window_;
}

const std::vector<Monomial>& GradedSymbol::component(const Rat& degree) const
{
    static const std::vector<Monomial> empty;
    if (!in_window(degree))
        throw DomainError("degree " + rat_str(degree) + " outside window of symbol");
    auto it = comps_.find(degree);
    return it == comps_.end() ? empty : it->second;
}

std::optional<Rat> GradedSymbol::top_degree() const
{
    if (comps_.empty())
        return std::nullopt;
    return comps_.rbegin()->first;
}

void GradedSymbol::check_degree(const Monomial& m, const Rat& degree) const
{
    if (m.xi_degree() != degree)
        throw DomainError("monomial of degree " + rat_str(m.xi_degree()) +
                          " placed in component " + rat_str(degree));
}

void GradedSymbol::add_term(Monomial m)
{
    if (m.coeff.is_zero())
        return;
    if ((int)m.xexp.size() != nvars_ || (int)m.xiexp.size() != nvars_ - 1)
        throw DomainError("monomial exponent arity mismatch");
    for (int e : m.xexp)
        if (e < 0)
            throw DomainError("negative x-exponent");
    for (int e : m.xiexp)
        if (e < 0)
            throw DomainError("negative xi-exponent (only xi1 is Laurent)");
    Rat deg = m.xi_degree();
    if (!in_window(deg))
        throw DomainError("term of degree " + rat_str(deg) + " outside window [" +
                          rat_str(floor_degree()) + ", " + rat_str(order_) + "]");
    auto& lst = comps_[deg];
    auto it = std::lower_bound(lst.begin(), lst.end(), m,
                               [](const Monomial& a, const Monomial& b) {
                                   return a.exponents_less(b);
                               });
    if (it != lst.end() && it->same_exponents(m)) {
        it->coeff += m.coeff;
        if (it->coeff.is_zero())
            lst.erase(it);
    }
    else {
        lst.insert(it, std::move(m));
    }
    if (lst.empty())
        comps_.erase(deg);
}

void GradedSymbol::canonicalize()
{
    std::map<Rat, std::vector<Monomial>> old;
    old.swap(comps_);
    for (auto& [deg, lst] : old)
        for (auto& m : lst) {
            check_degree(m, deg);
            add_term(std::move(m));
        }
}

GradedSymbol& GradedSymbol::operator+=(const GradedSymbol& o)
{
    if (nvars_ != o.nvars_)
        throw DomainError("nvars mismatch in symbol addition");
    if (sector() != o.sector())
        throw DomainError("sector mismatch: " + rat_str(sector()) + " vs " +
                          rat_str(o.sector()));
    Rat top = std::min(order_, o.order_);
    Rat bot = std::max(floor_degree(), o.floor_degree());
    if (top < bot)
        throw DomainError("disjoint degree windows in symbol addition");
    GradedSymbol out(nvars_, top, to_int(Rat(top - bot)) + 1);
    for (auto const* src : {this, &o})
        for (auto const& [deg, lst] : src->comps_)
            if (deg <= top && deg >= bot)
                for (auto const& m : lst)
                    out.add_term(m);
    return *this = std::move(out);
}

GradedSymbol operator-(const GradedSymbol& a, const GradedSymbol& b)
{
    GradedSymbol c = a;
    c += b.scaled(GaussRat(-1));
    return c;
}

GradedSymbol GradedSymbol::scaled(const GaussRat& c) const
{
    GradedSymbol out(nvars_, order_, window_);
    if (c.is_zero())
        return out;
    for (auto const& [deg, lst] : comps_)
        for (auto m : lst) {
            m.coeff *= c;
            out.add_term(std::move(m));
        }
    return out;
}

bool operator==(const GradedSymbol& a, const GradedSymbol& b)
{
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ &&
           a.window_ == b.window_ && a.comps_ == b.comps_;
}

bool operator==(const Monomial& a, const Monomial& b)
{
    return a.coeff == b.coeff && a.xexp == b.xexp && a.xi1exp == b.xi1exp &&
           a.xiexp == b.xiexp;
}

GradedSymbol GradedSymbol::partial_x(int i) const
{
    if (i < 1 || i > nvars_)
        throw DomainError("partial_x index out of range");
    GradedSymbol out(nvars_, order_, window_);
    for (auto const& [deg, lst] : comps_)
        for (auto m : lst) {
            int e = m.xexp[i - 1];
            if (e == 0)
                continue;
            m.coeff *= GaussRat(Rat(e));
            m.xexp[i - 1] = e - 1;
            out.add_term(std::move(m));
        }
    return out;
}

GradedSymbol GradedSymbol::partial_xi(int i) const
{
    if (i < 1 || i > nvars_)
        throw DomainError("partial_xi index out of range");
    GradedSymbol out(nvars_, order_ - 1, window_);
    for (auto const& [deg, lst] : comps_)
        for (auto m : lst) {
            if (i == 1) {
                if (m.xi1exp == 0)
                    continue;
                m.coeff *= GaussRat(m.xi1exp);
                m.xi1exp -= 1;
            }
            else {
                int e = m.xiexp[i - 2];
                if (e == 0)
                    continue;
                m.coeff *= GaussRat(Rat(e));
                m.xiexp[i - 2] = e - 1;
            }
            out.add_term(std::move(m));
        }
    return out;
}

GradedSymbol sym_product(const GradedSymbol& a, const GradedSymbol& b)
{
    if (a.nvars_ != b.nvars_)
        throw DomainError("nvars mismatch in symbol product");
    int w = std::min(a.window_, b.window_);
    GradedSymbol out(a.nvars_, a.order_ + b.order_, w);
    Rat bot = out.floor_degree();
    for (auto const& [da, la] : a.comps_)
        for (auto const& [db, lb] : b.comps_) {
            if (da + db < bot || da + db > out.order_)
                continue;
            for (auto const& ma : la)
                for (auto const& mb : lb) {
                    Monomial m;
                    m.coeff = ma.coeff * mb.coeff;
                    m.xexp.resize(a.nvars_);
                    for (int i = 0; i < a.nvars_; ++i)
                        m.xexp[i] = ma.xexp[i] + mb.xexp[i];
                    m.xi1exp = ma.xi1exp + mb.xi1exp;
                    m.xiexp.resize(a.nvars_ - 1);
                    for (int i = 0; i + 1 < a.nvars_; ++i)
                        m.xiexp[i] = ma.xiexp[i] + mb.xiexp[i];
                    out.add_term(std::move(m));
                }
        }
    return out;
}

GradedSymbol GradedSymbol::rewindow(Rat order, int window) const
{
    if (!comps_.empty()) {
        Rat shift = order - order_;
        if (!is_integer(shift))
            throw DomainError("rewindow must preserve the sector");
    }
    GradedSymbol out(nvars_, std::move(order), window);
    for (auto const& [deg, lst] : comps_) {
        if (!out.in_window(deg))
            continue;
        for (auto const& m : lst)
            out.add_term(m);
    }
    return out;
}

std::string GradedSymbol::str() const
{
    if (comps_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = comps_.rbegin(); it != comps_.rend(); ++it)
        for (auto const& m : it->second) {
            if (!first)
                os << " + ";
            os << m.str(nvars_);
            first = false;
        }
    return os.str();
}

std::string GradedSymbol::to_json() const
{
    json terms = json::array();
    for (auto it = comps_.rbegin(); it != comps_.rend(); ++it)
        for (auto const& m : it->second) {
            json t;
            t["coeff"] = {rat_str(m.coeff.re), rat_str(m.coeff.im)};
            t["x"] = m.xexp;
            t["xi1"] = rat_str(m.xi1exp);
            t["xi"] = m.xiexp;
            terms.push_back(std::move(t));
        }
    json j;
    j["nvars"] = nvars_;
    j["order"] = rat_str(order_);
    j["window"] = window_;
    j["terms"] = std::move(terms);
    return j.dump();
}

GradedSymbol GradedSymbol::from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    }
    catch (const json::parse_error& e) {
        throw FormatError(std::string("symbol JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("nvars") || !j.contains("order") ||
            !j.contains("window") || !j.contains("terms"))
            throw FormatError("symbol JSON: need nvars, order, window, terms");
        int nvars = j["nvars"].get<int>();
        Rat order = parse_rat(j["order"].get<std::string>());
        int window = j["window"].get<int>();
        GradedSymbol s(nvars, order, window);
        for (auto const& t : j["terms"]) {
            Monomial m;
            auto c = t.at("coeff");
            m.coeff = GaussRat(parse_rat(c.at(0).get<std::string>()),
                               parse_rat(c.at(1).get<std::string>()));
            m.xexp = t.at("x").get<std::vector<int>>();
            m.xi1exp = parse_rat(t.at("xi1").get<std::string>());
            m.xiexp = t.at("xi").get<std::vector<int>>();
            s.add_term(std::move(m));
        }
        return s;
    }
    catch (const json::exception& e) {
        throw FormatError(std::string("symbol JSON: ") + e.what());
    }
    catch (const DomainError& e) {
        throw FormatError(std::string("symbol JSON: ") + e.what());
    }
}

}  // namespace mcech
