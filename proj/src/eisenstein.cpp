#include "hmix/eisenstein.hpp"

#include <cctype>
#include <sstream>

#include "hmix/error.hpp"

namespace hmix {

std::string to_string(const EisensteinInt& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

namespace {

// Reads an optionally signed decimal integer starting at pos.
bool read_int(std::string_view s, std::size_t& pos, BigInt& out)
{
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
        ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (pos == digits)
        return false;
    std::string tok(s.substr(start, pos - start));
    if (tok.front() == '+')
        tok.erase(0, 1);
    out = BigInt(tok);
    return true;
}

} // namespace

EisensteinInt parse_eisenstein(std::string_view text)
{
    std::size_t pos = 0;
    BigInt a;
    BigInt b = 0;
    if (!read_int(text, pos, a))
        throw ParseError("bad Eisenstein integer '" + std::string(text) + "'");
    if (pos < text.size()) {
        if (text[pos] != '+' && text[pos] != '-')
            throw ParseError("bad Eisenstein integer '" + std::string(text) + "'");
        if (!read_int(text, pos, b) || pos + 1 != text.size() || text[pos] != 'w')
            throw ParseError("bad Eisenstein integer '" + std::string(text) + "'");
    }
    return {a, b};
}

} // namespace hmix
