#pragma once

#include <string>
#include <vector>

#include "hopfstar/matrix.hpp"

namespace hopfstar {

struct CheckFailed : Error {
    using Error::Error;
};

enum class CheckStatus { pass, fail, skipped };

inline const char* to_cstring(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "skipped";
    }
}

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string witness;  // nonempty exactly when status == fail
};

/// Itemized verification result. A failed check always carries a witness.
struct Report {
    std::string subject;
    std::vector<Check> checks;
    std::vector<std::string> notes;  // truncation notes etc.

    explicit Report(std::string subj = "") : subject(std::move(subj)) {}

    void require(const std::string& name, bool ok, const std::string& witness_if_fail) {
        if (ok) {
            checks.push_back({name, CheckStatus::pass, ""});
        } else {
            checks.push_back({name, CheckStatus::fail,
                              witness_if_fail.empty() ? std::string("(no witness supplied)") : witness_if_fail});
        }
    }

    void skip(const std::string& name, const std::string& why) {
        checks.push_back({name, CheckStatus::skipped, why});
    }

    void merge(const Report& other) {
        for (const auto& c : other.checks) checks.push_back({other.subject + ": " + c.name, c.status, c.witness});
        for (const auto& n : other.notes) notes.push_back(other.subject + ": " + n);
    }

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const Check& c) { return c.status != CheckStatus::fail; });
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    bool passed(const std::string& name) const {
        const Check* c = find(name);
        return c && c->status == CheckStatus::pass;
    }
    bool failed(const std::string& name) const {
        const Check* c = find(name);
        return c && c->status == CheckStatus::fail;
    }

    std::vector<std::string> failed_names() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) out.push_back(c.name);
        return out;
    }

    void throw_if_failed() const {
        if (all_pass()) return;
        std::string msg = subject + " failed:";
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) msg += " " + c.name;
        throw CheckFailed(msg);
    }

    std::string to_text() const {
        std::string s = subject + "\n";
        for (const auto& c : checks) {
            s += "  [" + std::string(to_cstring(c.status)) + "] " + c.name;
            if (c.status == CheckStatus::fail) s += "  witness: " + c.witness;
            if (c.status == CheckStatus::skipped && !c.witness.empty()) s += "  (" + c.witness + ")";
            s += "\n";
        }
        for (const auto& n : notes) s += "  note: " + n + "\n";
        return s;
    }
};

inline std::string diff_witness(const std::string& label, const Matrix& lhs, const Matrix& rhs) {
    return label + ": lhs = " + lhs.to_string() + " rhs = " + rhs.to_string();
}

inline std::string diff_witness(const std::string& label, const Vec& lhs, const Vec& rhs) {
    return diff_witness(label, Matrix::from_rows({lhs}), Matrix::from_rows({rhs}));
}

inline std::string diff_witness(const std::string& label, const Scalar& lhs, const Scalar& rhs) {
    return label + ": lhs = " + lhs.to_string() + " rhs = " + rhs.to_string();
}

}  // namespace hopfstar
