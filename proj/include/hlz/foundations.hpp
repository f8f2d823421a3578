#pragma once

// Value types shared by every module, plus the free-function spellings of
// their elementary operations.

#include <string>
#include <string_view>

#include "hlz/error.hpp"
#include "hlz/interval_set.hpp"
#include "hlz/simple_function.hpp"
#include "hlz/step_decreasing.hpp"
#include "hlz/weight.hpp"

namespace hlz {

inline double primitive(const Weight& w, double r) { return w.primitive(r); }

inline double measure(const Weight& u, const IntervalSet& e) { return u.measure(e); }

inline SimpleFunction scale_and_translate(const SimpleFunction& f, double shift, double dilation) {
    return f.scale_and_translate(shift, dilation);
}

enum class Verdict { CertifiedIn, CertifiedOut, Empirical };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::CertifiedIn: return "certified-in";
        case Verdict::CertifiedOut: return "certified-out";
        case Verdict::Empirical: return "empirical";
    }
    return "empirical";
}

/// Outcome of a weight-class test.
///
/// Analytic verdicts (certified-in / certified-out) are only issued for power
/// weights. `constant` is the analytic constant when one is known and the
/// worst ratio seen on the search grid otherwise; `witness` names the
/// configuration attaining it.
struct MembershipReport {
    std::string class_name;
    Verdict verdict = Verdict::Empirical;
    double constant = 0.0;
    std::string witness;
    /// Worst ratio over the search grid, reported for every verdict.
    double empirical_constant = 0.0;
    std::string note;

    [[nodiscard]] bool in() const { return verdict == Verdict::CertifiedIn; }
    [[nodiscard]] bool out() const { return verdict == Verdict::CertifiedOut; }
};

} // namespace hlz
