#pragma once

#include <string>
#include <utility>

namespace sbcoinv {

/// Outcome of a verification: pass/fail plus a printable witness.
struct Verdict {
    bool ok = true;
    std::string witness;

    explicit operator bool() const { return ok; }

    /// Records the first failure only.
    Verdict& fail(std::string why) {
        if (ok) witness = std::move(why);
        ok = false;
        return *this;
    }

    Verdict& note(const std::string& s) {
        if (ok) witness += (witness.empty() ? "" : "; ") + s;
        return *this;
    }

    Verdict& absorb(const Verdict& other) {
        if (!other.ok) fail(other.witness);
        return *this;
    }
};

}  // namespace sbcoinv
