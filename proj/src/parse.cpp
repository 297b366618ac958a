#include "zetascan/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace zetascan {
namespace {

double parse_finite_double(const std::string& text, const std::string& whole) {
    if (text.empty() || std::isspace(static_cast<unsigned char>(text.front()))) {
        throw std::invalid_argument("malformed number in '" + whole + "'");
    }
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) {
        throw std::invalid_argument("malformed number in '" + whole + "'");
    }
    if (!std::isfinite(v)) {
        throw std::invalid_argument("number out of range in '" + whole + "'");
    }
    return v;
}

std::uint32_t parse_count(const std::string& text, const std::string& whole) {
    if (text.empty() || text.size() > 7) {
        throw std::invalid_argument("malformed count in '" + whole + "'");
    }
    std::uint32_t v = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed count in '" + whole + "'");
        }
        v = v * 10 + std::uint32_t(c - '0');
    }
    if (v < 1 || v > 1'000'000) {
        throw std::invalid_argument("count out of range in '" + whole + "'");
    }
    return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty complex literal");
    size_t split = std::string::npos;
    for (size_t k = text.size() - 1; k >= 1; --k) {
        const char c = text[k];
        if ((c == '+' || c == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split != std::string::npos) {
        if (text.back() != 'i') {
            throw std::invalid_argument("expected trailing 'i' in '" + text + "'");
        }
        const double re = parse_finite_double(text.substr(0, split), text);
        const double im =
            parse_finite_double(text.substr(split, text.size() - split - 1), text);
        return {re, im};
    }
    if (text.back() == 'i') {
        return {0.0, parse_finite_double(text.substr(0, text.size() - 1), text)};
    }
    return {parse_finite_double(text, text), 0.0};
}

std::pair<double, double> parse_range(const std::string& text) {
    const size_t pos = text.find(':');
    if (pos == std::string::npos || text.find(':', pos + 1) != std::string::npos) {
        throw std::invalid_argument("expected 'lo:hi' in '" + text + "'");
    }
    return {parse_finite_double(text.substr(0, pos), text),
            parse_finite_double(text.substr(pos + 1), text)};
}

std::pair<std::uint32_t, std::uint32_t> parse_dims(const std::string& text) {
    const size_t pos = text.find('x');
    if (pos == std::string::npos || text.find('x', pos + 1) != std::string::npos) {
        throw std::invalid_argument("expected 'NxM' in '" + text + "'");
    }
    return {parse_count(text.substr(0, pos), text), parse_count(text.substr(pos + 1), text)};
}

}  // namespace zetascan
