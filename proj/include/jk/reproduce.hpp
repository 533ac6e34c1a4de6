#pragma once

#include <string>
#include <vector>

#include "jk/dense.hpp"

namespace jk {

struct UnknownReport : Error {
    using Error::Error;
};

struct ClaimResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Consolidated reproduction suites. Valid ids: table1, example12, appendixA,
/// exampleA2, lemma-commuting, lie-section3.
std::vector<ClaimResult> reproduce(const std::string& id);

bool all_pass(const std::vector<ClaimResult>& claims);

}  // namespace jk
