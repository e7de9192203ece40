#include "srr/rational.hpp"

#include <cctype>
#include <sstream>

#include "srr/error.hpp"

namespace srr {

std::string to_string(const Rational& x)
{
    return x.str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

}   // namespace

Rational parse_rational(std::string_view text)
{
    auto fail = [&]() -> Rational {
        throw Error(ErrorKind::ParseError, "rational",
                    "cannot parse '" + std::string(text) + "' as a rational");
    };
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos)
    {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            return fail();
        Integer d{std::string(den)};
        if (d == 0)
            return fail();
        value = Rational(Integer(std::string(num)), d);
    }
    else if (auto dot = s.find('.'); dot != std::string_view::npos)
    {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole))
            || (!frac.empty() && !all_digits(frac)))
            return fail();
        Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
        Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
        Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
        value = Rational(w) + Rational(f, scale);
    }
    else
    {
        if (!all_digits(s))
            return fail();
        value = Rational(Integer(std::string(s)));
    }
    return negative ? Rational(-value) : value;
}

VectorQ parse_rational_list(std::string_view text)
{
    std::vector<Rational> values;
    std::size_t start = 0;
    while (true)
    {
        auto comma = text.find(',', start);
        values.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return to_vector(values);
}

VectorQ to_vector(const std::vector<Rational>& values)
{
    VectorQ v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = values[i];
    return v;
}

double to_double(const Rational& x)
{
    return x.convert_to<double>();
}

std::string to_decimal(const Rational& x, int significant_digits)
{
    std::ostringstream out;
    out.precision(significant_digits);
    out << to_double(x);
    return out.str();
}

Integer lcm(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0)
        return 0;
    return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

bool lex_less(const VectorQ& a, const VectorQ& b)
{
    for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i)
    {
        if (a(i) < b(i))
            return true;
        if (b(i) < a(i))
            return false;
    }
    return a.size() < b.size();
}

}   // namespace srr
