#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hodgeforge/realization.hpp"
#include "hodgeforge/torus_rep.hpp"

namespace hodgeforge {

// Input Hodge numbers fail length, sign or symmetry requirements.
class AdmissibilityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A freshly built certificate did not pass its own verification.
class InternalVerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Mode { Block, Packed };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

struct PlanEntry {
    SimpleLabel label;
    std::int64_t mult = 0;

    friend bool operator==(const PlanEntry&, const PlanEntry&) = default;
};

struct Plan {
    int weight = 0;
    std::vector<PlanEntry> entries;  // p descending

    [[nodiscard]] RepObject formal() const;
    [[nodiscard]] std::int64_t total_copies() const;

    friend bool operator==(const Plan&, const Plan&) = default;
};

// H = ⊕_{p>q} H(p,q)^{g^{pq}} ⊕ Q(-k/2)^{g^{k/2,k/2}}.
Plan make_plan(const HodgeNumbers& g);

// Multiplicity of the label inside V^{⊗k}.
std::int64_t capacity(int k, SimpleLabel label);

// One group of k factors of E^N, holding a summand of V^{⊗k} (the all-ones
// Künneth component of H^k(E^k)).
struct Block {
    std::vector<PlanEntry> simples;
    int k = 0;
    std::size_t dim = 1;
    QMatrix projector;
    std::vector<FrameVector> frame;
    std::vector<int> signs;  // polarization sign per simple copy
    QMatrix gram;

    [[nodiscard]] RepObject formal() const;
};

struct EquivarianceResult {
    TorusElement element;
    bool ok = false;
};

struct VerificationReport {
    bool admissible = false;
    bool layout = false;
    bool idempotent = false;
    std::vector<EquivarianceResult> equivariance;
    bool hodge_numbers_match = false;
    bool hodge_riemann_1 = false;
    bool hodge_riemann_2 = false;
    bool endomorphism_oracle = false;
    bool pass = false;
    std::vector<std::string> notes;  // first failure of each kind

    void finalize();
};

struct Certificate {
    std::string version = "1";
    HodgeNumbers input;
    Plan plan;
    Mode mode = Mode::Block;
    std::int64_t n_factors = 0;  // N, the number of copies of E
    std::vector<Block> blocks;
    VerificationReport report;
};

struct VerifyOptions {
    TorusElement primary{Rational(1), Rational(2)};
    TorusElement secondary{Rational(2), Rational(1)};
    // Tried in order when `primary` does not separate the characters.
    std::vector<TorusElement> fallbacks{TorusElement{Rational(1), Rational(3)}};
    // Largest image rank for which the commutant is solved by brute force;
    // beyond it the commutant dimension comes from eigenspace multiplicities.
    std::size_t brute_force_commutant_limit = 12;
};

Certificate build_certificate(const Plan& plan, Mode mode, const VerifyOptions& options = {});

// Recomputes everything from the projectors; frames stored in the
// certificate are not consulted.
VerificationReport verify_certificate(const Certificate& c, const VerifyOptions& options = {});

}  // namespace hodgeforge
