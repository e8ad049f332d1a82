#pragma once

#include <string>

#include "arakzeta/ffzeta.hpp"
#include "arakzeta/field.hpp"

namespace arakzeta {

// builtin:Q | builtin:quad:<m> | file:<path>
NumberFieldData field_from_spec(const std::string& spec);

// builtin:p1:<q> | builtin:ell:<q>:<N> | file:<path>
CurveData curve_from_spec(const std::string& spec);

}  // namespace arakzeta
