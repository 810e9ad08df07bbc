#ifndef COPOSIT_VERDICT_HPP
#define COPOSIT_VERDICT_HPP

#include <string_view>

namespace coposit {

// Classification outcome of a copositivity test.
// Copositive means "copositive, strictness not asserted": analytic criteria
// that decide copositivity only (and boundary cases with an exact zero) both
// land here. Unknown is used when a comparison falls inside the tolerance
// band and the exact path cannot resolve it.
enum class Verdict { StrictlyCopositive, Copositive, NotCopositive, Unknown };

// Stable strings (scripting API; do not change).
constexpr std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::StrictlyCopositive: return "STRICTLY_COPOSITIVE";
        case Verdict::Copositive:         return "COPOSITIVE";
        case Verdict::NotCopositive:      return "NOT_COPOSITIVE";
        case Verdict::Unknown:            return "UNKNOWN";
    }
    return "UNKNOWN";
}

inline bool is_copositive(Verdict v) {
    return v == Verdict::StrictlyCopositive || v == Verdict::Copositive;
}

// CLI exit codes: 0 copositive (strictly, when strict was requested),
// 1 not copositive, 2 unknown/inconclusive, 3 input error.
inline int exit_code(Verdict v, bool strict_requested) {
    switch (v) {
        case Verdict::StrictlyCopositive: return 0;
        case Verdict::Copositive:         return strict_requested ? 2 : 0;
        case Verdict::NotCopositive:      return 1;
        case Verdict::Unknown:            return 2;
    }
    return 2;
}

// Comparison signs under the tolerance-band policy.
enum class Sign { Negative, Zero, Positive, Borderline };

constexpr double kComparisonBand = 1e-12;

inline Sign sign_with_band(double v, double band = kComparisonBand) {
    if (v > band) return Sign::Positive;
    if (v < -band) return Sign::Negative;
    return Sign::Borderline;
}

}  // namespace coposit

#endif
