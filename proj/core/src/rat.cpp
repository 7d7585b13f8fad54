#include "qwalk/rat.hpp"

#include "qwalk/error.hpp"

#include <cctype>

namespace qwalk {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

mpz_class parse_int(std::string_view s)
{
    if (s[0] == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rat parse_rat(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        fail(ErrorCode::MalformedInput, "not a rational literal: '" + std::string(text) + "'");
    mpz_class d = parse_int(den);
    if (d == 0)
        fail(ErrorCode::MalformedInput, "zero denominator in '" + std::string(text) + "'");
    Rat r(parse_int(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

bool is_rational_square(const Rat& r, Rat* root)
{
    if (sgn(r) < 0)
        return false;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
        return false;
    if (root) {
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
        *root = Rat(n, d);
        root->canonicalize();
    }
    return true;
}

std::string to_string(const Valuation& v) { return v ? to_string(*v) : std::string("inf"); }

bool valuation_less(const Valuation& a, const Valuation& b)
{
    if (!a)
        return false;
    if (!b)
        return true;
    return *a < *b;
}

} // namespace qwalk
