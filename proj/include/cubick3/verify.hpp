#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cubick3/cubic_k3.hpp"

namespace cubick3 {

struct VerifyOptions {
    long hyperbolic_bound = kDefaultHyperbolicBound;
    long disc_cap = kDefaultFormSearchCap;
    /* replaces the h^2 coefficient of w2 in the pairing checks */
    std::optional<mpq_class> w2_h2_override;
};

struct CheckResult {
    std::string id;
    std::string expected;
    std::string actual;
    bool passed() const { return expected == actual; }
};

struct VerifySummary {
    std::vector<CheckResult> checks;

    std::size_t checks_run() const { return checks.size(); }
    std::vector<CheckResult> failures() const;
    bool ok() const { return failures().empty(); }
};

VerifySummary run_verify(VerifyOptions const & options = {});

} // namespace cubick3
