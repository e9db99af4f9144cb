#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "hallplane/hall.hpp"

namespace hallplane {

using PointId = std::uint32_t;
using LineId = std::uint32_t;

inline constexpr PointId kNoPoint = 0xffffffffu;
inline constexpr LineId kNoLine = 0xffffffffu;

enum class LineClass : std::uint8_t { BF, NBF, Infinity };

/// Projective point: an affine point (x, y), the common point of the
/// parallel class of slope m, or the common point of the vertical lines.
struct Point {
    enum class Kind : std::uint8_t { Affine, Slope, VerticalInfinity } kind = Kind::Affine;
    Hidx x = 0, y = 0; // affine coordinates; for Kind::Slope, x holds m

    static Point affine(Hidx x, Hidx y) { return {Kind::Affine, x, y}; }
    static Point slope(Hidx m) { return {Kind::Slope, m, 0}; }
    static Point vertical_infinity() { return {Kind::VerticalInfinity, 0, 0}; }
    bool is_affine() const { return kind == Kind::Affine; }
    auto operator<=>(const Point&) const = default;
};

/// Projective line: x = c, y = x m + k, or the line at infinity.
struct Line {
    enum class Kind : std::uint8_t { Vertical, Slanted, Infinity } kind = Kind::Vertical;
    Hidx c = 0;    // vertical: x = c
    Hidx m = 0, k = 0; // slanted: y = x m + k

    static Line vertical(Hidx c) { return {Kind::Vertical, c, 0, 0}; }
    static Line slanted(Hidx m, Hidx k) { return {Kind::Slanted, 0, m, k}; }
    static Line infinity() { return {Kind::Infinity, 0, 0, 0}; }
    bool is_affine() const { return kind != Kind::Infinity; }
    auto operator<=>(const Line&) const = default;
};

/// Dense incidence machinery for a projective plane of order n coordinatized
/// by a Hall system or by the field of order n. Ids are assigned in a fixed
/// order (affine points by (x, y); verticals by c, slanted lines by (m, k),
/// the line at infinity last), so exports are reproducible byte for byte.
///
/// Construction fills join and meet tables by walking per-line point lists;
/// a cell written twice with different values would witness a violated plane
/// axiom and aborts the build. All tables are immutable afterwards and safe
/// for concurrent readers.
class PlaneTables {
public:
    static PlaneTables build(std::shared_ptr<const HallSystem> hall);
    static PlaneTables build(std::shared_ptr<const FieldOracle> oracle);

    bool is_hall() const { return hall_ != nullptr; }
    const HallSystem& hall() const { return *hall_; }
    const FieldOracle& oracle() const { return *oracle_; }
    std::string coordinates_name() const;

    int order() const { return n_; }               // plane order n = q^2
    int num_points() const { return num_points_; } // n^2 + n + 1
    int num_lines() const { return num_lines_; }

    PointId point_id(const Point& p) const;
    Point point(PointId id) const;
    LineId line_id(const Line& l) const;
    Line line(LineId id) const;
    LineId line_at_infinity() const { return static_cast<LineId>(n_ + n_ * n_); }

    bool incident(PointId p, LineId l) const {
        std::size_t bit = static_cast<std::size_t>(p) * num_lines_ + l;
        return (incidence_[bit >> 6] >> (bit & 63)) & 1u;
    }
    /// Unique line through two distinct points. Throws CoincidentPointsError.
    LineId join(PointId p, PointId q) const {
        if (p == q) throw CoincidentPointsError();
        return join_[static_cast<std::size_t>(p) * num_points_ + q];
    }
    /// Unique common point of two distinct lines. Throws CoincidentLinesError.
    PointId meet(LineId l, LineId m) const {
        if (l == m) throw CoincidentLinesError();
        return meet_[static_cast<std::size_t>(l) * num_lines_ + m];
    }

    // Raw table reads for hot loops; callers guarantee distinct arguments.
    LineId join_unchecked(PointId p, PointId q) const {
        return join_[static_cast<std::size_t>(p) * num_points_ + q];
    }
    PointId meet_unchecked(LineId l, LineId m) const {
        return meet_[static_cast<std::size_t>(l) * num_lines_ + m];
    }

    std::span<const PointId> points_on(LineId l) const {
        return {line_points_.data() + static_cast<std::size_t>(l) * (n_ + 1),
                static_cast<std::size_t>(n_ + 1)};
    }
    std::span<const LineId> lines_on(PointId p) const {
        return {point_lines_.data() + static_cast<std::size_t>(p) * (n_ + 1),
                static_cast<std::size_t>(n_ + 1)};
    }

    LineClass line_class(LineId l) const { return line_class_[l]; }
    int num_bf() const { return num_bf_; }
    int num_nbf() const { return num_nbf_; }
    int num_affine_lines() const { return n_ * n_ + n_; }

    /// Parallel class of an affine line: m for slanted lines, n for verticals.
    int parallel_class(LineId l) const;
    bool parallel(LineId a, LineId b) const {
        return a != b && line(a).is_affine() && line(b).is_affine() &&
               parallel_class(a) == parallel_class(b);
    }

    /// Writes "<numpoints> <numlines>" then one row of ascending point ids per
    /// line. UTF-8, '\n' terminated, identical across platforms.
    void export_incidence(std::ostream& os) const;

private:
    template <class Ring>
    void fill(const Ring& ring);

    std::shared_ptr<const HallSystem> hall_;
    std::shared_ptr<const FieldOracle> oracle_;
    int n_ = 0, num_points_ = 0, num_lines_ = 0;
    int num_bf_ = 0, num_nbf_ = 0;
    std::vector<PointId> line_points_;
    std::vector<LineId> point_lines_;
    std::vector<PointId> meet_;
    std::vector<LineId> join_;
    std::vector<std::uint64_t> incidence_;
    std::vector<LineClass> line_class_;
};

/// Parsed form of the incidence export, for round-trip checks.
struct IncidenceData {
    int num_points = 0;
    int num_lines = 0;
    std::vector<std::vector<int>> lines;
};
IncidenceData parse_incidence(std::istream& is);

} // namespace hallplane
