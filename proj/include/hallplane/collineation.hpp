#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hallplane/plane.hpp"

namespace hallplane {

/// 2x2 matrix over the base field, acting on row vectors: v S.
struct Mat2 {
    Felem a11 = 1, a12 = 0, a21 = 0, a22 = 1;
    auto operator<=>(const Mat2&) const = default;
};

Mat2 mat_mul(const PrimePowerField& F, const Mat2& A, const Mat2& B);
Felem mat_det(const PrimePowerField& F, const Mat2& A);
/// Throws SingularMatrixError.
Mat2 mat_inv(const PrimePowerField& F, const Mat2& A);
HallElement mat_act(const PrimePowerField& F, HallElement v, const Mat2& A);

/// tau_{a,b}: (x, y) -> (x + a, y + b).
struct Translation {
    HallElement a, b;
};

/// sigma_S: (x, y) -> (x S, y S), S invertible over the base field.
struct Autotopism {
    Mat2 s;
};

/// lambda_{a,b}: (x, y) -> ((b - a r) x + a y, a s x + b y), (a, b) != (0, 0).
struct LinearMap {
    Felem a = 0, b = 1;
};

using Generator = std::variant<Translation, Autotopism, LinearMap>;

/// An ordered word of generators, applied left to right. The three families
/// act by different formula shapes, so composites are never flattened.
class Collineation {
public:
    Collineation() = default;
    explicit Collineation(Generator g) : steps_{std::move(g)} {}

    Collineation& then(Generator g) {
        steps_.push_back(std::move(g));
        return *this;
    }
    Collineation& then(const Collineation& c) {
        steps_.insert(steps_.end(), c.steps_.begin(), c.steps_.end());
        return *this;
    }
    const std::vector<Generator>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }

    Collineation inverse(const HallSystem& H) const;

private:
    std::vector<Generator> steps_;
};

Point apply_point(const HallSystem& H, const Generator& g, Point p);
Line apply_line(const HallSystem& H, const Generator& g, Line l);
Point apply_point(const HallSystem& H, const Collineation& c, Point p);
Line apply_line(const HallSystem& H, const Collineation& c, Line l);

PointId apply_point_id(const PlaneTables& pt, const Generator& g, PointId p);
LineId apply_line_id(const PlaneTables& pt, const Generator& g, LineId l);
PointId apply_point_id(const PlaneTables& pt, const Collineation& c, PointId p);
LineId apply_line_id(const PlaneTables& pt, const Collineation& c, LineId l);

Generator inverse_generator(const HallSystem& H, const Generator& g);

std::vector<Translation> all_translations(const HallSystem& H);
std::vector<Autotopism> all_autotopisms(const PrimePowerField& F);
std::vector<LinearMap> all_linear_maps(const PrimePowerField& F);

/// The matrix S with y S = z and ((1 S^{-1})(0,1)) S = (0,1), for nonzero
/// y, z. Its autotopism fixes the origin, fixes every line of slope (0,1)
/// through the origin as well as x = 0, and moves y to z. The denominator
/// y1^2 + r y1 y2 - s y2^2 is nonzero because the defining quadratic is
/// rootless.
Mat2 stabilizer_matrix(const HallSystem& H, HallElement y, HallElement z);

/// A collineation fixing the origin and the line l (through the origin) and
/// mapping p to q, both non-origin points of l. Drawn from the autotopisms
/// when l is x = 0 or has basefield slope, from the linear maps otherwise.
Collineation transitive_stabilizer_witness(const PlaneTables& pt, LineId l, PointId p, PointId q);

enum class PairCase : std::uint8_t {
    BfBfIntersecting,
    BfBfParallel,
    NbfNbfIntersecting,
    NbfNbfParallel,
    NbfBf,
    BfNbf,
};
const char* pair_case_name(PairCase c);

/// Residual data of a canonical ordered pair. The canonical shapes are
///   BfBfIntersecting:   l1: y = x mu (mu in F),        l2: x = 0
///   BfBfParallel:       l1: y = kappa,                 l2: y = 0
///   NbfNbfIntersecting: l1: y = x (mu, psi), psi != 0, l2: y = x (0,1)
///   NbfNbfParallel:     l1: y = x (0,1) + kappa,       l2: y = x (0,1)
///   NbfBf:              l1: y = x (0,1),               l2: x = 0
///   BfNbf:              l1: x = 0,                     l2: y = x (0,1)
struct CanonicalPairForm {
    PairCase tag;
    Line l1, l2;
    std::optional<Hidx> residual_slope;     // mu (BfBf) or (mu, psi) (NbfNbf)
    std::optional<Hidx> residual_intercept; // kappa for the parallel cases
    std::optional<Point> marked_image;
    bool used_fallback = false;
};

struct CanonicalizationResult {
    Collineation map;
    CanonicalPairForm form;
};

/// Moves an ordered pair of distinct affine lines (with an optional marked
/// affine point on l1, distinct from the meet) to its canonical form,
/// constructively. The result is asserted against the canonical shape; if the
/// constructive word ever misses, a bounded search over single stabilizer
/// elements repairs the marked-point step and the event is flagged.
/// Throws InfinityLineUnsupportedError for pairs touching the line at
/// infinity.
CanonicalizationResult canonicalize_pair(const PlaneTables& pt, LineId l1, LineId l2,
                                         std::optional<PointId> marked = std::nullopt);

/// Expected canonical marked-point image for a canonical pair, per case.
Point canonical_marked_image(const PlaneTables& pt, const CanonicalPairForm& form);

struct PairRepresentative {
    LineId l1, l2;
    std::optional<PairCase> tag; // empty for pairs involving the line at infinity
    bool involves_infinity = false;
    std::optional<PointId> marked; // canonical marked point on l1 (reduction anchor)
    std::string label;
};

/// One representative ordered pair per canonical case and residual parameter
/// value, followed by the four flagged classes that involve the line at
/// infinity (handled by direct search, without marked-point reduction).
std::vector<PairRepresentative> canonical_pair_representatives(const PlaneTables& pt);

struct GroupPropositionsReport {
    int q = 0;
    std::size_t tr_count = 0;
    bool tr_sharply_transitive = false;
    bool tr_preserves_parallel_classes = false;
    bool tr_transitive_in_each_class = false;

    std::size_t atp_count = 0;
    bool atp_count_matches_gl = false;
    bool atp_fixes_type1_classes = false;
    bool atp_transitive_type2_classes = false;
    int atp_vertical_orbit_count = 0; // expected 2, one orbit being {x = 0}
    bool atp_zero_vertical_fixed = false;

    std::size_t lnr_count = 0; // expected q^2 - 1
    bool lnr_fixes_nbf_classes = false;
    bool lnr_transitive_bf_classes = false;
    bool lnr_abelian = false;
    bool lnr_has_full_order_element = false; // some element of order q^2 - 1

    bool tr_atp_transitive_type2_lines = false;
    bool tr_atp_transitive_vertical_lines = false;
    bool tr_atp_type2_vertical_single_orbit = false; // union reading, reported only
    bool tr_lnr_transitive_bf_lines = false;

    std::size_t bf_orbit_size = 0;
    std::size_t nbf_orbit_size = 0;
    bool line_orbits_are_bf_nbf = false;

    bool all_generators_preserve_collinearity = false;

    /// All claims that the propositions assert (the union reading is
    /// informational and not included).
    bool ok() const;
};

/// Exhaustive verification of the translation / autotopism / linear-map
/// propositions by explicit orbit computation. Intended for q <= 5.
GroupPropositionsReport verify_group_propositions(const PlaneTables& pt);

} // namespace hallplane
