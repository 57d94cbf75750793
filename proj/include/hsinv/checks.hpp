/// Named pass/fail/skip results with exact witnesses, shared by the
/// verification routines and the report serializer.
#pragma once

#include <string>
#include <vector>

namespace hsinv {

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

struct CheckResult {
    std::string name;     // stable identifier, e.g. "spectrum-symmetry"
    std::string rule;     // the mathematical statement being checked
    CheckStatus status = CheckStatus::Skip;
    std::string witness;  // exact quantities backing the verdict

    static CheckResult pass(std::string name, std::string rule, std::string witness) {
        return {std::move(name), std::move(rule), CheckStatus::Pass, std::move(witness)};
    }
    static CheckResult fail(std::string name, std::string rule, std::string witness) {
        return {std::move(name), std::move(rule), CheckStatus::Fail, std::move(witness)};
    }
    static CheckResult skip(std::string name, std::string rule, std::string witness) {
        return {std::move(name), std::move(rule), CheckStatus::Skip, std::move(witness)};
    }

    bool failed() const { return status == CheckStatus::Fail; }
};

}  // namespace hsinv
