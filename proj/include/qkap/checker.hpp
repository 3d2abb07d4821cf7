#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qkap/errors.hpp"

namespace qkap {

// verified: every instance inside the bounds held.
// falsified: at least one instance failed (details in counterexamples).
// scan_report: a conjecture sweep; reports findings, never claims the
// conjecture itself.
enum class Outcome { verified, falsified, scan_report };
[[nodiscard]] std::string outcome_name(Outcome o);

struct Counterexample {
    std::map<std::string, long> params;    // e.g. {"n",6},{"m",2}
    std::optional<std::size_t> index;      // offending exponent, when meaningful
    std::string note;                      // what went wrong, human-oriented
};

struct CheckReport {
    std::string check;
    std::map<std::string, int> bounds;
    Outcome outcome = Outcome::verified;
    std::vector<Counterexample> counterexamples;
    long instances = 0;
    double elapsed_seconds = 0.0;
};

enum class Profile { quick, standard, extended };
[[nodiscard]] std::optional<Profile> profile_from_name(std::string_view name);
[[nodiscard]] std::string profile_name(Profile p);

struct CheckBounds {
    std::map<std::string, int> values;
    // lifts the soft guard against runaway enumeration (overnight runs)
    bool allow_large = false;
};

[[nodiscard]] const std::vector<std::string>& check_ids();
[[nodiscard]] bool is_check_id(std::string_view id);
[[nodiscard]] std::string check_description(const std::string& id);      // UnknownCheckError
[[nodiscard]] CheckBounds default_bounds(const std::string& id, Profile p);  // UnknownCheckError
// The bound a generic "max n" knob should override; empty for fixed-size
// checks.
[[nodiscard]] std::string primary_bound_key(const std::string& id);      // UnknownCheckError

// Runs one check. Unknown ids raise UnknownCheckError; bounds beyond the
// per-check guard raise BoundsTooLargeError unless allow_large is set.
CheckReport run_check(const std::string& id, const CheckBounds& bounds);
CheckReport run_check(const std::string& id, Profile p = Profile::standard);

// Runs the whole registry at a profile, in registry order.
std::vector<CheckReport> run_all(Profile p);

// Free-range conjecture sweep behind the scan checks and the CLI: which is
// "conj18" (plain q-Catalan unimodality) or "conj19" (the (1+q) multiple).
// Scans n in [from, to]; the guard caps `to` unless allow_large.
CheckReport scan_conjecture(const std::string& which, int from, int to,
                            bool allow_large = false);

}  // namespace qkap
