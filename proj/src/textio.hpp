#pragma once

// Hex-float helpers shared by the series and jet text formats.

#include "betatet/core.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace betatet::textio {

inline std::string hex(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", x);
    return buf;
}

inline double parse_double(const std::string& text)
{
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw std::runtime_error("malformed number '" + text + "'");
    return v;
}

/// "key=<re>,<im>"
inline cplx parse_complex_field(const std::string& token, const std::string& key)
{
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0)
        throw std::runtime_error("expected field '" + key + "', got '" + token + "'");
    const std::string body = token.substr(prefix.size());
    const auto comma = body.find(',');
    if (comma == std::string::npos)
        throw std::runtime_error("field '" + key + "' needs <re>,<im>");
    return {parse_double(body.substr(0, comma)), parse_double(body.substr(comma + 1))};
}

inline long parse_int_field(const std::string& token, const std::string& key)
{
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0)
        throw std::runtime_error("expected field '" + key + "', got '" + token + "'");
    std::size_t used = 0;
    const std::string body = token.substr(prefix.size());
    const long v = std::stol(body, &used);
    if (used != body.size())
        throw std::runtime_error("malformed integer in '" + token + "'");
    return v;
}

inline std::string complex_field(const std::string& key, cplx z)
{
    return key + "=" + hex(z.real()) + "," + hex(z.imag());
}

/// Lines "c_<k> = <re> <im>" for k = 0..count-1.
inline std::vector<cplx> read_coefficient_lines(std::istream& is, std::size_t count)
{
    std::vector<cplx> out;
    out.reserve(count);
    std::string line;
    while (out.size() < count && std::getline(is, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string name, eq, re, im;
        ls >> name >> eq >> re >> im;
        const std::string expected = "c_" + std::to_string(out.size());
        if (name != expected || eq != "=")
            throw std::runtime_error("expected '" + expected + " = <re> <im>', got '" + line + "'");
        out.emplace_back(parse_double(re), parse_double(im));
    }
    if (out.size() != count)
        throw std::runtime_error("truncated coefficient list");
    return out;
}

inline void write_coefficient_lines(std::ostream& os, const std::vector<cplx>& coeffs)
{
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        os << "c_" << k << " = " << hex(coeffs[k].real()) << ' ' << hex(coeffs[k].imag()) << '\n';
}

}  // namespace betatet::textio
