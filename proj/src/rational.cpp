#include "splitnet/rational.hpp"

#include <cctype>
#include <cstddef>

#include "splitnet/errors.hpp"

namespace splitnet {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::size_t begin = 0;
    bool negative = false;
    if (begin < text.size() && (text[begin] == '+' || text[begin] == '-')) {
        negative = text[begin] == '-';
        ++begin;
    }
    const auto slash = text.find('/', begin);
    const auto dot = text.find('.', begin);
    Rat value;
    if (slash != std::string::npos) {
        if (dot != std::string::npos || !all_digits(text, begin, slash) ||
            !all_digits(text, slash + 1, text.size()))
            throw input_error("bad rational: " + text);
        BigInt num(text.substr(begin, slash - begin));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw input_error("zero denominator: " + text);
        value = Rat(num, den);
    } else if (dot != std::string::npos) {
        if (!all_digits(text, begin, dot) || !all_digits(text, dot + 1, text.size()))
            throw input_error("bad rational: " + text);
        BigInt whole(text.substr(begin, dot - begin));
        const std::string frac = text.substr(dot + 1);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        value = Rat(whole * den + BigInt(frac), den);
    } else {
        if (!all_digits(text, begin, text.size()))
            throw input_error("bad rational: " + text);
        value = Rat(BigInt(text.substr(begin)));
    }
    return negative ? -value : value;
}

std::string format_rational(const Rat& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) out += "/" + denominator(value).str();
    return out;
}

}  // namespace splitnet
