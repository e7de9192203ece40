#include "srr/matrix_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "srr/error.hpp"

namespace srr {

namespace {

constexpr const char* kModule = "matrix_file";

[[noreturn]] void fail(int line, const std::string& message)
{
    throw Error(ErrorKind::ParseError, kModule, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::uint64_t> numbers(std::string_view text, int line)
{
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < text.size())
    {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' || text[pos] == ','))
            ++pos;
        if (pos == text.size())
            break;
        std::uint64_t value = 0;
        auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || (end != text.data() + text.size() && *end != ' ' && *end != '\t' && *end != '\r'
                                  && *end != ','))
        {
            std::size_t stop = pos;
            while (stop < text.size() && text[stop] != ' ' && text[stop] != '\t')
                ++stop;
            fail(line, "expected a nonnegative integer, got '" + std::string(text.substr(pos, stop - pos)) + "'");
        }
        out.push_back(value);
        pos = static_cast<std::size_t>(end - text.data());
    }
    return out;
}

}   // namespace

GeneratorMatrix parse_matrix_file(std::string_view text)
{
    struct Line
    {
        int number;
        std::vector<std::uint64_t> values;
    };
    std::vector<Line> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size())
    {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto values = numbers(line, number);
        if (!values.empty())
            lines.push_back({number, std::move(values)});
        start = end + 1;
    }
    if (lines.empty())
        fail(1, "missing header 'q k n'");
    const auto& header = lines.front();
    const auto& h = header.values;
    if (h.size() < 3)
        fail(header.number, "header needs 'q k n'");
    const auto q = h[0];
    const auto k = h[1];
    const auto n = h[2];
    if (q < 2 || q > (1u << 16))
        fail(header.number, "field order " + std::to_string(q) + " out of range");
    if (k < 1 || n < 1 || k > 64 || n > 4096)
        fail(header.number, "dimensions k = " + std::to_string(k) + ", n = " + std::to_string(n) + " out of range");

    FieldContext field = [&] {
        if (h.size() == 3)
        {
            std::uint64_t p = 2;
            while (q % p != 0)
                ++p;
            std::uint64_t rest = q;
            while (rest % p == 0)
                rest /= p;
            if (p != q && rest == 1)
                throw Error(ErrorKind::MissingModulus, kModule,
                            "line " + std::to_string(header.number) + ": F_" + std::to_string(q)
                                + " needs 'p e c_0 ... c_e' after 'q k n'");
            return FieldContext::make(static_cast<std::uint32_t>(q));
        }
        if (h.size() < 5)
            fail(header.number, "extension field needs 'p e c_0 ... c_e'");
        const auto p = h[3];
        const auto e = h[4];
        if (e < 1 || e > 16 || h.size() != 5 + e + 1)
            fail(header.number, "modulus needs e + 1 coefficients");
        std::uint64_t power = 1;
        for (std::uint64_t i = 0; i < e; ++i)
            power *= p;
        if (power != q)
            fail(header.number, std::to_string(p) + "^" + std::to_string(e) + " is not " + std::to_string(q));
        std::vector<std::uint32_t> modulus(h.begin() + 5, h.end());
        return FieldContext::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e), modulus);
    }();

    if (lines.size() - 1 != k)
        fail(lines.back().number, "expected " + std::to_string(k) + " matrix rows, found "
                                      + std::to_string(lines.size() - 1));
    std::vector<Element> entries;
    for (std::size_t r = 1; r < lines.size(); ++r)
    {
        const auto& row = lines[r];
        if (row.values.size() != n)
            fail(row.number, "expected " + std::to_string(n) + " entries, found " + std::to_string(row.values.size()));
        for (auto x : row.values)
        {
            if (x >= q)
                fail(row.number, "entry " + std::to_string(x) + " is not an element of F_" + std::to_string(q));
            entries.push_back(static_cast<Element>(x));
        }
    }
    return GeneratorMatrix(FFMatrix(field, static_cast<int>(k), static_cast<int>(n), std::move(entries)));
}

GeneratorMatrix load_matrix_file(const std::string& path, std::string* contents)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::ParseError, kModule, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    auto g = parse_matrix_file(text);
    if (contents)
        *contents = std::move(text);
    return g;
}

}   // namespace srr
