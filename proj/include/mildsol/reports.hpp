#pragma once

#include <string>
#include <vector>

namespace mildsol {

struct CheckRow {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = true;
    std::string note;
};

/// Row-per-sample verification report. Checks never throw; callers decide
/// what a failure means.
struct Check {
    std::string name;
    std::vector<CheckRow> rows;

    bool passed() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }

    const CheckRow* first_failure() const {
        for (const auto& r : rows)
            if (!r.pass) return &r;
        return nullptr;
    }

    std::string to_text() const;
};

}  // namespace mildsol
