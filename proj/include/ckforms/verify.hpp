#ifndef CKFORMS_VERIFY_HPP
#define CKFORMS_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ckforms {

// A typo-candidate marks a proof intermediate whose printed display disagrees
// with the exact computation while the downstream final values agree; it
// never fails a report. Final-value disagreement is a hard mismatch.
enum class Verdict { match, mismatch, typo_candidate };
std::string to_string(Verdict v);

struct Check {
    std::string id;              // short stable name, unique across suites
    std::string paper_location;  // tag of the display the check replays
    std::string expected;        // printable exact value or property statement
    std::string computed;
    Verdict verdict = Verdict::match;

    bool operator==(const Check&) const = default;
};

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;

    std::size_t count(Verdict v) const;
    // pass iff nothing was a hard mismatch
    bool overall_pass() const;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

// The model-space computations behind the two main results, each replayed
// as a named check with the expected value frozen.
VerificationReport run_g2_suite();
VerificationReport run_spin7_suite();

// The algebra and projector laws the computations rest on. Exhaustive over
// blade bases where feasible; randomized checks draw from the given seed.
VerificationReport run_axiom_suite(std::uint64_t seed = kDefaultSeed);

// All three suites merged, in order, as a single report.
VerificationReport run_all_suites(std::uint64_t seed = kDefaultSeed);

// Deterministic renderers: byte-identical output for identical reports.
std::string render_text(const VerificationReport& report);
std::string render_json(const VerificationReport& report);

}  // namespace ckforms

#endif
