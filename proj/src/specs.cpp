#include "arakzeta/specs.hpp"

#include <vector>

#include "arakzeta/errors.hpp"

namespace arakzeta {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long long to_int(const std::string& s, const std::string& spec) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw InputError("");
        return v;
    } catch (...) {
        throw InputError("bad integer '" + s + "' in spec '" + spec + "'");
    }
}

}  // namespace

NumberFieldData field_from_spec(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) return load_field_file(spec.substr(5));
    const auto parts = split(spec, ':');
    if (parts.size() == 2 && parts[0] == "builtin" && parts[1] == "Q") return make_rationals();
    if (parts.size() == 3 && parts[0] == "builtin" && parts[1] == "quad") return make_quadratic(to_int(parts[2], spec));
    throw InputError("unknown field spec '" + spec + "' (builtin:Q, builtin:quad:<m>, file:<path>)");
}

CurveData curve_from_spec(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) return load_curve_file(spec.substr(5));
    const auto parts = split(spec, ':');
    if (parts.size() == 3 && parts[0] == "builtin" && parts[1] == "p1") return make_p1(to_int(parts[2], spec));
    if (parts.size() == 4 && parts[0] == "builtin" && parts[1] == "ell")
        return make_elliptic(to_int(parts[2], spec), to_int(parts[3], spec));
    throw InputError("unknown curve spec '" + spec + "' (builtin:p1:<q>, builtin:ell:<q>:<N>, file:<path>)");
}

}  // namespace arakzeta
