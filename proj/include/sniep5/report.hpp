#ifndef SNIEP5_REPORT_HPP
#define SNIEP5_REPORT_HPP

#include <string>
#include <vector>

namespace sniep5 {

struct VerifyStep {
    std::string step;
    std::string claim;
    bool pass = false;
    std::string detail;  // expected/actual on failure, or extra context
};

struct VerifyReport {
    std::string title;
    std::vector<VerifyStep> steps;

    void add(std::string step, std::string claim, bool pass, std::string detail = "") {
        steps.push_back({std::move(step), std::move(claim), pass, std::move(detail)});
    }
    void merge(const VerifyReport& other) {
        steps.insert(steps.end(), other.steps.begin(), other.steps.end());
    }
    bool all_pass() const {
        for (const auto& s : steps)
            if (!s.pass) return false;
        return true;
    }
    int fail_count() const {
        int n = 0;
        for (const auto& s : steps)
            if (!s.pass) ++n;
        return n;
    }
    const VerifyStep* first_failure() const {
        for (const auto& s : steps)
            if (!s.pass) return &s;
        return nullptr;
    }
};

}  // namespace sniep5

#endif
