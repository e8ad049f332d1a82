#pragma once

#include <functional>
#include <string>
#include <vector>

#include "arakzeta/ffzeta.hpp"
#include "arakzeta/field.hpp"

namespace arakzeta {

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;  // not applicable to the given data
    std::string detail;
};

struct VerifyOptions {
    int grid_points = 64;  // class-space grid for integral checks
    unsigned long long seed = 20240607ULL;
};

// Runs body; an Error becomes a failed check (CapabilityError: skipped).
CheckResult run_check(const std::string& name, const std::function<CheckResult()>& body);

std::vector<CheckResult> verify_field(const NumberFieldData& F, const VerifyOptions& opt = {});
std::vector<CheckResult> verify_curve(const CurveData& C);
std::vector<CheckResult> verify_regularization();
std::vector<CheckResult> verify_oscint_core();
std::vector<CheckResult> verify_ffzeta_core(unsigned long long seed);

bool all_passed(const std::vector<CheckResult>& r);

}  // namespace arakzeta
