/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every infcrystal module.
 *
 * The CLI maps these onto exit codes: input_error -> 1,
 * property_violation -> 2, budget_exhausted -> 3.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace infcrystal {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or illegal input (bad letter for the type, mismatched shapes, ...).
struct input_error : error {
    using error::error;
};

/// A mathematical invariant that must hold did not (strip check, failed
/// postcondition). Signals a bug or a counterexample, never user error.
struct property_violation : error {
    using error::error;
};

/// Rank escalation exceeded its cap while stabilizing an infinite-rank answer.
struct rank_instability : property_violation {
    using property_violation::property_violation;
};

/// An enumeration or closure ran out of its step budget before finishing.
struct budget_exhausted : error {
    using error::error;
};

}  // namespace infcrystal
