#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cdp {

// All arithmetic in the library is exact. Feasibility verdicts, duality
// checks and packing certificates are equalities/inequalities over Q.
using Rational = mpq_class;

// Per-vertex rationals, indexed by dense vertex id. Plays the role of a
// cost function, a capacity function, an LP point or a dual solution
// depending on the call site.
using NodeWeights = std::vector<Rational>;
using FractionalSolution = std::vector<Rational>;

// Parses "p", "-p" or "p/q" (q > 0 after sign normalization).
// Throws InputError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q". Canonical form.
std::string rational_str(const Rational& r);

inline bool is_nonnegative(const NodeWeights& w) {
    for (const Rational& r : w)
        if (sgn(r) < 0) return false;
    return true;
}

}  // namespace cdp
