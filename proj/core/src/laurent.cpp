#include "qwalk/laurent.hpp"

#include <algorithm>

namespace qwalk {

LaurentXY LaurentXY::monomial(const PolyT& c, int i, int j)
{
    LaurentXY r;
    r.add(c, i, j);
    return r;
}

void LaurentXY::add(const PolyT& c, int i, int j)
{
    if (c.is_zero_poly())
        return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero_poly())
            terms_.erase(it);
    }
}

const PolyT& LaurentXY::coeff(int i, int j) const
{
    static const PolyT zero;
    auto it = terms_.find({i, j});
    return it == terms_.end() ? zero : it->second;
}

LaurentXY& LaurentXY::operator+=(const LaurentXY& o)
{
    for (const auto& [k, c] : o.terms_)
        add(c, k.first, k.second);
    return *this;
}

LaurentXY& LaurentXY::operator-=(const LaurentXY& o)
{
    for (const auto& [k, c] : o.terms_)
        add(-c, k.first, k.second);
    return *this;
}

LaurentXY operator*(const LaurentXY& a, const LaurentXY& b)
{
    LaurentXY r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add(ca * cb, ka.first + kb.first, ka.second + kb.second);
    return r;
}

LaurentXY LaurentXY::operator-() const
{
    LaurentXY r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

LaurentXY LaurentXY::scaled(const PolyT& c) const
{
    LaurentXY r;
    for (const auto& [k, v] : terms_)
        r.add(v * c, k.first, k.second);
    return r;
}

LaurentXY LaurentXY::pow(int k) const
{
    LaurentXY r(Rat(1));
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

int LaurentXY::min_x() const
{
    int m = 0;
    for (const auto& [k, c] : terms_)
        m = std::min(m, k.first);
    return m;
}

int LaurentXY::min_y() const
{
    int m = 0;
    for (const auto& [k, c] : terms_)
        m = std::min(m, k.second);
    return m;
}

LaurentXY LaurentXY::at_y_zero() const
{
    LaurentXY r;
    for (const auto& [k, c] : terms_) {
        if (k.second < 0)
            fail(ErrorCode::PreconditionFailed, "substituting y = 0 into a term with a pole at y = 0");
        if (k.second == 0)
            r.add(c, k.first, 0);
    }
    return r;
}

LaurentXY LaurentXY::at_x_zero() const
{
    LaurentXY r;
    for (const auto& [k, c] : terms_) {
        if (k.first < 0)
            fail(ErrorCode::PreconditionFailed, "substituting x = 0 into a term with a pole at x = 0");
        if (k.first == 0)
            r.add(c, 0, k.second);
    }
    return r;
}

PolyYXT LaurentXY::cleared(int* shift_x, int* shift_y) const
{
    const int sx = -min_x();
    const int sy = -min_y();
    if (shift_x)
        *shift_x = sx;
    if (shift_y)
        *shift_y = sy;
    PolyYXT out;
    for (const auto& [k, c] : terms_)
        out += PolyYXT::monomial(PolyXT::monomial(c, k.first + sx), k.second + sy);
    return out;
}

std::string LaurentXY::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        std::string cs = qwalk::to_string(c, {"t"});
        std::string mono;
        auto power = [](const char* v, int e) {
            return e == 0 ? std::string() : (e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e));
        };
        std::string px = power("x", k.first), py = power("y", k.second);
        mono = px.empty() ? py : (py.empty() ? px : px + "*" + py);
        std::string term;
        if (mono.empty())
            term = c.degree() > 0 ? "(" + cs + ")" : cs;
        else if (cs == "1")
            term = mono;
        else if (cs == "-1")
            term = "-" + mono;
        else
            term = (c.degree() > 0 ? "(" + cs + ")" : cs) + "*" + mono;
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

} // namespace qwalk
