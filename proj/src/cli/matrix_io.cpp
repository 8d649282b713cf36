#include "hankel1/cli/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

namespace hankel1::cli
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_literal(std::string_view token)
{
    throw Error(ErrorKind::ParseError, "malformed number '" + std::string(token) + "'");
}

double parse_real(std::string_view s, std::string_view token)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x))
        bad_literal(token);
    return x;
}

/// Coefficient of `i`: an empty or sign-only body means one.
double parse_imag(std::string_view s, std::string_view token)
{
    if (s.empty() || s == "+")
        return 1.0;
    if (s == "-")
        return -1.0;
    return parse_real(s, token);
}

}  // namespace

Complex parse_complex(std::string_view token)
{
    std::string compact;
    for (char ch : token)
        if (ch != ' ' && ch != '\t')
            compact.push_back(ch);
    std::string_view s = compact;
    if (s.empty())
        bad_literal(token);
    if (s.back() != 'i')
        return {parse_real(s, token), 0.0};

    s.remove_suffix(1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
        {
            split = k;
            break;
        }
    if (split == std::string_view::npos)
        return {0.0, parse_imag(s, token)};
    return {parse_real(s.substr(0, split), token), parse_imag(s.substr(split), token)};
}

CMatrix parse_matrix(std::string_view text)
{
    std::vector<std::vector<Complex>> rows;
    std::size_t start = 0;
    while (start <= text.size())
    {
        std::size_t end = text.find_first_of("\n;", start);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view line = trim(text.substr(start, end - start));
        start = end + 1;
        if (line.empty() || line.front() == '#')
            continue;
        std::vector<Complex> row;
        std::size_t pos = 0;
        while (true)
        {
            const std::size_t comma = line.find(',', pos);
            row.push_back(parse_complex(trim(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos))));
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw Error(ErrorKind::ParseError, "row " + std::to_string(rows.size() + 1) + " has " +
                                                   std::to_string(row.size()) + " entries, expected " +
                                                   std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw Error(ErrorKind::ParseError, "no matrix rows found");

    CMatrix a(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (Index j = 0; j < a.rows(); ++j)
        for (Index k = 0; k < a.cols(); ++k)
            a(j, k) = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    return a;
}

CMatrix read_matrix(const std::string& path)
{
    std::string text;
    if (path == "-")
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    else
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return parse_matrix(text);
}

namespace
{

std::string round_trip(double x)
{
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

}  // namespace

std::string format_matrix(const CMatrix& a)
{
    const bool real = is_real(a);
    std::ostringstream os;
    for (Index j = 0; j < a.rows(); ++j)
    {
        for (Index k = 0; k < a.cols(); ++k)
        {
            if (k)
                os << ',';
            const Complex v = a(j, k);
            os << round_trip(v.real());
            if (!real)
                os << (std::signbit(v.imag()) ? "-" : "+") << round_trip(std::abs(v.imag())) << 'i';
        }
        os << '\n';
    }
    return os.str();
}

std::string format_complex(Complex z, int digits)
{
    char buf[96];
    if (z.imag() == 0.0)
        std::snprintf(buf, sizeof buf, "%.*f", digits, z.real());
    else
        std::snprintf(buf, sizeof buf, "%.*f%c%.*fi", digits, z.real(), std::signbit(z.imag()) ? '-' : '+', digits,
                      std::abs(z.imag()));
    return buf;
}

}  // namespace hankel1::cli
