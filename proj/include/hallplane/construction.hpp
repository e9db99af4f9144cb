#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hallplane/pappus.hpp"

namespace hallplane {

/// The analytically constructed completions for the two-given-points theorem,
/// one per canonical pair case and unknown specialization:
///   NbfNbfIntersecting:  l1: y = x (mu, psi), l2: y = x (0,1);  g = t = z = 0
///   NbfNbfParallelI:     l1: y = x (0,1) + kappa, l2: y = x (0,1);  g = h = t = 0
///   NbfNbfParallelII:    same lines;  g = t = 0, h = 1
///   BfNbfGammaZero:      l1: x = 0, l2: y = x (0,1);  e = t = w = 0   (B1 = ((0,0),(0,delta)))
///   BfNbfGammaNonzero:   same lines; j, t, v, w, z given by closed forms in (gamma, delta, e, g, h)
enum class ConstructionCase : std::uint8_t {
    NbfNbfIntersecting,
    NbfNbfParallelI,
    NbfNbfParallelII,
    BfNbfGammaZero,
    BfNbfGammaNonzero,
};

const char* construction_case_name(ConstructionCase c);
std::optional<ConstructionCase> construction_case_from_name(std::string_view name);

/// Parameters (given data) and unknowns (completion data) of one evaluation,
/// as base-field elements. Fields that a case does not use stay zero; fields
/// a case derives (t, v, w, z, j in the gamma != 0 branch) are outputs.
struct CaseAssignment {
    Felem mu = 0, psi = 0;
    Felem gamma = 0, delta = 0;
    Felem kappa1 = 0, kappa2 = 0;
    Felem e = 0, j = 0, g = 0, h = 0, t = 0, v = 0, w = 0, z = 0;
};

struct ConstraintCheck {
    std::string name;
    bool paper_stated = true; // false: discovered by the engine, flagged for review
    bool passed = true;
};

struct ConstraintReport {
    std::vector<ConstraintCheck> checks;
    bool admissible = true;
    std::string first_violation;

    void record(std::string name, bool paper_stated, bool passed) {
        if (!passed && admissible) {
            admissible = false;
            first_violation = name;
        }
        checks.push_back({std::move(name), paper_stated, passed});
    }
};

struct CaseEvaluation {
    ConstraintReport constraints;
    CaseAssignment resolved; // with derived unknowns filled in
    std::optional<Sextuple> sextuple;
    std::optional<PappusOutcome> outcome;
    std::uint64_t formula_checked = 0;    // printed quantities compared with the engine
    std::uint64_t formula_mismatches = 0; // must stay zero
    std::vector<std::string> mismatch_notes;
    bool expected_shape_ok = false; // the case's stated Pappus-line shape
};

/// Evaluates one assignment: builds the six points from the published
/// coordinate formulas, checks every constraint, runs the configuration
/// through the incidence engine, and compares every printed intermediate
/// quantity with the engine's joins and meets.
CaseEvaluation evaluate_case(const PlaneTables& pt, ConstructionCase c, const CaseAssignment& a);

struct SweepSummary {
    ConstructionCase tag = ConstructionCase::NbfNbfIntersecting;
    int q = 0;
    std::uint64_t assignments = 0;
    std::uint64_t admissible = 0;
    std::uint64_t pappus_ok = 0;        // admissible assignments with a Pappus configuration
    std::uint64_t ninety_three_ok = 0;
    std::uint64_t shape_ok = 0;         // case-specific Pappus-line shape held
    std::uint64_t formula_checked = 0;
    std::uint64_t formula_mismatches = 0;
    std::map<std::string, std::uint64_t> exclusions; // first violated constraint -> count
    std::uint64_t param_combos = 0;
    std::uint64_t param_combos_with_admissible = 0;
    bool engine_flagged = false; // an engine-discovered exclusion class fired
    bool budget_exhausted = false;
    double elapsed_s = 0.0;

    bool all_admissible_pappus() const {
        return pappus_ok == admissible && formula_mismatches == 0;
    }
};

/// Iterates every parameter and free-unknown assignment of the case (or a
/// deterministic prefix when budget > 0) and aggregates.
SweepSummary sweep_case(const PlaneTables& pt, ConstructionCase c, std::uint64_t budget = 0);

} // namespace hallplane
