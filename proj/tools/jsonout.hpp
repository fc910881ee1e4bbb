#pragma once

#include "polymaass/types.hpp"

#include <cstdio>
#include <string>

namespace polymaass::cli {

// JSON output with round-trip-exact doubles (17 significant digits) and a
// fixed field order, so identical invocations give byte-identical output.

inline std::string jnum(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string jnum(long v) { return std::to_string(v); }
inline std::string jnum(int v) { return std::to_string(v); }

inline std::string jcomplex(cplx v) {
    return "{\"re\": " + jnum(v.real()) + ", \"im\": " + jnum(v.imag()) + "}";
}

inline std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

inline std::string jbool(bool b) { return b ? "true" : "false"; }

} // namespace polymaass::cli
