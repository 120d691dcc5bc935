#ifndef BRAIDKIT_REPORT_HPP
#define BRAIDKIT_REPORT_HPP

#include <string>
#include <vector>

namespace braidkit {

struct Check {
    std::string name;
    bool passed = true;
    std::string witness; // empty when passed
};

// Machine-checkable outcome of an axiom sweep.  A failing check always
// carries a witness (index tuple, monomial, or residual in canonical text).
struct VerificationReport {
    bool passed = true;
    std::vector<Check> checks;

    void add(const std::string& name, bool ok, const std::string& witness = "") {
        checks.push_back({name, ok, ok ? "" : witness});
        passed = passed && ok;
    }
    void merge(const VerificationReport& o, const std::string& prefix = "") {
        for (const auto& c : o.checks) checks.push_back({prefix + c.name, c.passed, c.witness});
        passed = passed && o.passed;
    }
    const Check* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

} // namespace braidkit

#endif
