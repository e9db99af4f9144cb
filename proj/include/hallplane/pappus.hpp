#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hallplane/plane.hpp"

namespace hallplane {

/// Three marked points on each of two distinct lines. Valid when all six
/// points are pairwise distinct, each lies on its stated line, and none
/// equals the meet of the two lines.
struct Sextuple {
    LineId l1 = 0, l2 = 0;
    std::array<PointId, 3> first{};  // A1, B1, C1 on l1
    std::array<PointId, 3> second{}; // A2, B2, C2 on l2
};

struct PappusOutcome {
    PointId a3 = kNoPoint, b3 = kNoPoint, c3 = kNoPoint;
    std::optional<LineId> pappus_line;
    bool is_pappus = false;        // cross points pairwise distinct and collinear
    bool is_ninety_three = false;  // 9 distinct points, 9 distinct lines, 3 points per line
    bool relaxed_collinear = false; // coincidences among cross points allowed
};

/// Cross points A3 = (B1 C2)(B2 C1), B3 = (A1 C2)(A2 C1), C3 = (A1 B2)(A2 B1)
/// in the projective completion; they always exist. Throws
/// DegenerateSextupleError when the sextuple invariants fail.
PappusOutcome pappus_check(const PlaneTables& pt, const Sextuple& s);

enum class QuestionKind : std::uint8_t { Q3p3, Q3p2, Q3p1, Q3p0, Q2p0, Count };
const char* question_name(QuestionKind k);

/// Nondegenerate: a selection "defines a Pappus configuration" when some
/// labeling of the chosen points yields the full 9_3 structure. Relaxed:
/// collinear cross points suffice, coincidences allowed.
enum class SelectionMode : std::uint8_t { Nondegenerate, Relaxed };
const char* mode_name(SelectionMode m);

struct QuestionOptions {
    SelectionMode mode = SelectionMode::Nondegenerate;
    int jobs = 1;
    std::uint64_t budget = 0;  // 0 = unbounded; otherwise caps examined instances
    bool early_exit = true;    // stop at the first failing instance
    /// Selections live in the affine plane by default: an affine line
    /// contributes only its affine points (its infinite point is never
    /// chosen). The line at infinity, when it is one of the pair, contributes
    /// its own points regardless. With projective_points the infinite points
    /// of affine lines become eligible too; verdicts in that regime are
    /// reported separately and carry no expectations.
    bool projective_points = false;
};

struct FailingSelection {
    std::vector<PointId> on_l1;
    std::vector<PointId> on_l2;
};

struct PairTask {
    LineId l1 = 0, l2 = 0;
    std::optional<PointId> marked; // reduction anchor: first chosen point on l1
    std::string label;
};

struct QuestionVerdict {
    QuestionKind kind = QuestionKind::Q3p3;
    LineId l1 = 0, l2 = 0;
    std::string case_label;
    SelectionMode mode = SelectionMode::Nondegenerate;
    bool projective_points = false;
    bool affirmed = false;
    bool relaxed_affirmed = false; // the same scan under the relaxed predicate
    bool scan_complete = true;     // false when early exit or budget cut the scan short
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::uint64_t relaxed_failures = 0;
    std::uint64_t pappus_count = 0; // Count kind only
    std::optional<FailingSelection> failing;
    std::optional<Sextuple> completion;
    double elapsed_s = 0.0;
};

QuestionVerdict run_question(const PlaneTables& pt, QuestionKind kind, const PairTask& task,
                             const QuestionOptions& opt);

/// Runs a question over many pairs, parallelizing across pairs with a
/// deterministic ordered merge. With early_exit, pairs after the first
/// failing pair are skipped.
std::vector<QuestionVerdict> run_question_on_pairs(const PlaneTables& pt, QuestionKind kind,
                                                   const std::vector<PairTask>& tasks,
                                                   const QuestionOptions& opt);

/// All ordered pairs of distinct lines, optionally restricted to pairs that
/// do / do not involve the line at infinity.
enum class PairScope : std::uint8_t { All, AffineOnly, InfinityOnly };
std::vector<PairTask> all_pair_tasks(const PlaneTables& pt, PairScope scope);

/// Re-runs the witness carried by a verdict and checks it still supports the
/// recorded outcome: a completion must evaluate as a defining configuration,
/// a failing selection must still admit no completion.
bool replay_verdict(const PlaneTables& pt, const QuestionVerdict& v);

/// Whether the given selection (sizes per question kind) admits a completion;
/// used by the runners and by witness replay.
bool selection_completes(const PlaneTables& pt, QuestionKind kind, LineId l1, LineId l2,
                         const std::vector<PointId>& given_l1,
                         const std::vector<PointId>& given_l2, SelectionMode mode,
                         bool projective_points = false, Sextuple* out = nullptr);

struct DesarguesWitness {
    PointId center = kNoPoint;
    std::array<LineId, 3> through_center{};
    PointId r = kNoPoint, s = kNoPoint, axis_third = kNoPoint;
    LineId axis = kNoLine;
    std::array<PointId, 3> triangle1{}, triangle2{};
    std::array<LineId, 6> sides{}; // A1A2, A2A3, A1A3, B1B2, B2B3, B1B3
};

/// Finds two triangles inscribed in three concurrent lines, sides through two
/// fixed points, that are perspective from a line as well; the resulting ten
/// points and ten lines are validated as a full Desargues configuration.
DesarguesWitness exists_desargues(const PlaneTables& pt);
bool verify_desargues(const PlaneTables& pt, const DesarguesWitness& w);

/// First nondegenerate labeled sextuple with collinearity of cross points
/// failing. Throws NotFoundError if none exists (the classical plane).
Sextuple find_non_pappus_witness(const PlaneTables& pt, std::uint64_t budget = 0);

} // namespace hallplane
