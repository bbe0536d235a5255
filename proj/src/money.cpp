#include "exnet/money.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace exnet {

Money Money::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Money::parse: empty string");
    size_t i = 0;
    bool neg = false;
    if (text[i] == '-' || text[i] == '+') {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw std::invalid_argument("Money::parse: no digits in '" + text + "'");
    int64_t whole = 0;
    bool any = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        whole = whole * 10 + (text[i] - '0');
        any = true;
    }
    int64_t frac = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        int digits = 0;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            ++digits;
            if (digits > 2) throw std::invalid_argument("Money::parse: finer than 0.01 in '" + text + "'");
            frac = frac * 10 + (text[i] - '0');
            any = true;
        }
        if (digits == 1) frac *= 10;
    }
    if (!any || i != text.size())
        throw std::invalid_argument("Money::parse: malformed amount '" + text + "'");
    int64_t cents = whole * 100 + frac;
    return Money(neg ? -cents : cents);
}

std::string Money::str() const {
    int64_t c = cents_;
    char buf[32];
    const char* sign = c < 0 ? "-" : "";
    if (c < 0) c = -c;
    std::snprintf(buf, sizeof(buf), "%s%lld.%02lld", sign,
                  static_cast<long long>(c / 100), static_cast<long long>(c % 100));
    return buf;
}

} // namespace exnet
