#include "cpt/rational.hpp"

#include "cpt/errors.hpp"

#include <algorithm>
#include <cctype>

namespace cpt {

namespace {

bool is_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_integer(std::string_view s, std::string_view whole)
{
    if (!is_integer_text(s))
        throw ValidationError("malformed rational '" + std::string(whole) + "'");
    if (s.front() == '+')
        s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

}  // namespace

BigRational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    BigRational out;
    if (slash == std::string_view::npos) {
        out = BigRational(parse_integer(text, text));
    } else {
        const BigInt den = parse_integer(text.substr(slash + 1), text);
        if (den == 0)
            throw ValidationError("zero denominator in '" + std::string(text) + "'");
        out = BigRational(parse_integer(text.substr(0, slash), text), den);
    }
    out.canonicalize();
    return out;
}

std::string to_string(const BigRational& value)
{
    return value.get_str(10);
}

std::string to_string(const BigInt& value)
{
    return value.get_str(10);
}

std::vector<BigRational> parse_rational_list(std::string_view csv)
{
    std::vector<BigRational> out;
    while (true) {
        const auto comma = csv.find(',');
        out.push_back(parse_rational(csv.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        csv.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace cpt
