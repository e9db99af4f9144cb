#include "hallplane/plane.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hallplane {

PointId PlaneTables::point_id(const Point& p) const {
    switch (p.kind) {
    case Point::Kind::Affine:
        return static_cast<PointId>(static_cast<std::size_t>(p.x) * n_ + p.y);
    case Point::Kind::Slope:
        return static_cast<PointId>(static_cast<std::size_t>(n_) * n_ + p.x);
    case Point::Kind::VerticalInfinity:
    default:
        return static_cast<PointId>(static_cast<std::size_t>(n_) * n_ + n_);
    }
}

Point PlaneTables::point(PointId id) const {
    const std::size_t nn = static_cast<std::size_t>(n_) * n_;
    if (id < nn) return Point::affine(static_cast<Hidx>(id / n_), static_cast<Hidx>(id % n_));
    if (id < nn + static_cast<std::size_t>(n_)) return Point::slope(static_cast<Hidx>(id - nn));
    return Point::vertical_infinity();
}

LineId PlaneTables::line_id(const Line& l) const {
    switch (l.kind) {
    case Line::Kind::Vertical:
        return static_cast<LineId>(l.c);
    case Line::Kind::Slanted:
        return static_cast<LineId>(static_cast<std::size_t>(n_) + static_cast<std::size_t>(l.m) * n_ + l.k);
    case Line::Kind::Infinity:
    default:
        return line_at_infinity();
    }
}

Line PlaneTables::line(LineId id) const {
    if (id < static_cast<LineId>(n_)) return Line::vertical(static_cast<Hidx>(id));
    const std::size_t rest = id - n_;
    if (rest < static_cast<std::size_t>(n_) * n_)
        return Line::slanted(static_cast<Hidx>(rest / n_), static_cast<Hidx>(rest % n_));
    return Line::infinity();
}

int PlaneTables::parallel_class(LineId l) const {
    Line ll = line(l);
    switch (ll.kind) {
    case Line::Kind::Slanted:
        return ll.m;
    case Line::Kind::Vertical:
        return n_;
    default:
        throw std::invalid_argument("the line at infinity has no parallel class");
    }
}

template <class Ring>
void PlaneTables::fill(const Ring& ring) {
    n_ = ring.order();
    const int n = n_;
    num_points_ = n * n + n + 1;
    num_lines_ = num_points_;
    const int per_line = n + 1;

    line_points_.assign(static_cast<std::size_t>(num_lines_) * per_line, kNoPoint);
    line_class_.assign(num_lines_, LineClass::BF);

    auto row = [&](LineId l) { return line_points_.data() + static_cast<std::size_t>(l) * per_line; };

    for (LineId l = 0; l < static_cast<LineId>(num_lines_); ++l) {
        PointId* pts = row(l);
        Line ll = line(l);
        int cnt = 0;
        switch (ll.kind) {
        case Line::Kind::Vertical:
            for (int y = 0; y < n; ++y)
                pts[cnt++] = point_id(Point::affine(ll.c, static_cast<Hidx>(y)));
            pts[cnt++] = point_id(Point::vertical_infinity());
            line_class_[l] = LineClass::BF;
            break;
        case Line::Kind::Slanted:
            for (int x = 0; x < n; ++x) {
                Hidx y = ring.addi(ring.muli(static_cast<Hidx>(x), ll.m), ll.k);
                pts[cnt++] = point_id(Point::affine(static_cast<Hidx>(x), y));
            }
            pts[cnt++] = point_id(Point::slope(ll.m));
            line_class_[l] = ring.slope_in_basefield(ll.m) ? LineClass::BF : LineClass::NBF;
            break;
        case Line::Kind::Infinity:
            for (int m = 0; m < n; ++m) pts[cnt++] = point_id(Point::slope(static_cast<Hidx>(m)));
            pts[cnt++] = point_id(Point::vertical_infinity());
            line_class_[l] = LineClass::Infinity;
            break;
        }
        std::sort(pts, pts + per_line);
    }

    num_bf_ = num_nbf_ = 0;
    for (LineId l = 0; l < static_cast<LineId>(num_lines_); ++l) {
        if (line_class_[l] == LineClass::BF) ++num_bf_;
        else if (line_class_[l] == LineClass::NBF) ++num_nbf_;
    }

    // Dual lists.
    point_lines_.assign(static_cast<std::size_t>(num_points_) * per_line, kNoLine);
    std::vector<int> fillcnt(num_points_, 0);
    for (LineId l = 0; l < static_cast<LineId>(num_lines_); ++l)
        for (PointId p : points_on(l)) {
            if (fillcnt[p] >= per_line)
                throw std::logic_error("point lies on more than n+1 lines");
            point_lines_[static_cast<std::size_t>(p) * per_line + fillcnt[p]++] = l;
        }
    for (PointId p = 0; p < static_cast<PointId>(num_points_); ++p)
        if (fillcnt[p] != per_line) throw std::logic_error("point lies on fewer than n+1 lines");

    // Join: every unordered point pair must be covered exactly once.
    join_.assign(static_cast<std::size_t>(num_points_) * num_points_, kNoLine);
    for (LineId l = 0; l < static_cast<LineId>(num_lines_); ++l) {
        auto pts = points_on(l);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                std::size_t a = static_cast<std::size_t>(pts[i]) * num_points_ + pts[j];
                std::size_t b = static_cast<std::size_t>(pts[j]) * num_points_ + pts[i];
                if (join_[a] != kNoLine)
                    throw std::logic_error("two points on two common lines: plane axiom violated");
                join_[a] = join_[b] = l;
            }
    }
    for (PointId p = 0; p < static_cast<PointId>(num_points_); ++p)
        for (PointId q = 0; q < static_cast<PointId>(num_points_); ++q)
            if (p != q && join_[static_cast<std::size_t>(p) * num_points_ + q] == kNoLine)
                throw std::logic_error("point pair on no common line: plane axiom violated");

    // Meet, dually.
    meet_.assign(static_cast<std::size_t>(num_lines_) * num_lines_, kNoPoint);
    for (PointId p = 0; p < static_cast<PointId>(num_points_); ++p) {
        auto ls = lines_on(p);
        for (std::size_t i = 0; i < ls.size(); ++i)
            for (std::size_t j = i + 1; j < ls.size(); ++j) {
                std::size_t a = static_cast<std::size_t>(ls[i]) * num_lines_ + ls[j];
                std::size_t b = static_cast<std::size_t>(ls[j]) * num_lines_ + ls[i];
                if (meet_[a] != kNoPoint)
                    throw std::logic_error("two lines with two common points: plane axiom violated");
                meet_[a] = meet_[b] = p;
            }
    }
    for (LineId l = 0; l < static_cast<LineId>(num_lines_); ++l)
        for (LineId m = 0; m < static_cast<LineId>(num_lines_); ++m)
            if (l != m && meet_[static_cast<std::size_t>(l) * num_lines_ + m] == kNoPoint)
                throw std::logic_error("line pair with no common point: plane axiom violated");

    // Incidence bits.
    std::size_t bits = static_cast<std::size_t>(num_points_) * num_lines_;
    incidence_.assign((bits + 63) / 64, 0);
    for (LineId l = 0; l < static_cast<LineId>(num_lines_); ++l)
        for (PointId p : points_on(l)) {
            std::size_t bit = static_cast<std::size_t>(p) * num_lines_ + l;
            incidence_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
        }
}

PlaneTables PlaneTables::build(std::shared_ptr<const HallSystem> hall) {
    PlaneTables t;
    t.hall_ = std::move(hall);
    t.fill(*t.hall_);
    return t;
}

PlaneTables PlaneTables::build(std::shared_ptr<const FieldOracle> oracle) {
    PlaneTables t;
    t.oracle_ = std::move(oracle);
    t.fill(*t.oracle_);
    return t;
}

std::string PlaneTables::coordinates_name() const {
    return hall_ ? hall_->name() : oracle_->name();
}

void PlaneTables::export_incidence(std::ostream& os) const {
    os << num_points_ << ' ' << num_lines_ << '\n';
    for (LineId l = 0; l < static_cast<LineId>(num_lines_); ++l) {
        auto pts = points_on(l);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) os << ' ';
            os << pts[i];
        }
        os << '\n';
    }
}

IncidenceData parse_incidence(std::istream& is) {
    IncidenceData d;
    is >> d.num_points >> d.num_lines;
    d.lines.resize(d.num_lines);
    std::string rest;
    std::getline(is, rest);
    for (int l = 0; l < d.num_lines; ++l) {
        std::string row;
        if (!std::getline(is, row)) throw std::runtime_error("truncated incidence data");
        std::istringstream ss(row);
        int v;
        while (ss >> v) d.lines[l].push_back(v);
    }
    return d;
}

} // namespace hallplane
