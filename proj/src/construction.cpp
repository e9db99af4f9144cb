#include "hallplane/construction.hpp"

#include <chrono>
#include <stdexcept>

namespace hallplane {

const char* construction_case_name(ConstructionCase c) {
    switch (c) {
    case ConstructionCase::NbfNbfIntersecting: return "nbfnbf-intersecting";
    case ConstructionCase::NbfNbfParallelI: return "nbfnbf-parallel-i";
    case ConstructionCase::NbfNbfParallelII: return "nbfnbf-parallel-ii";
    case ConstructionCase::BfNbfGammaZero: return "bfnbf-gamma-zero";
    case ConstructionCase::BfNbfGammaNonzero: return "bfnbf-gamma-nonzero";
    }
    return "?";
}

std::optional<ConstructionCase> construction_case_from_name(std::string_view name) {
    for (ConstructionCase c :
         {ConstructionCase::NbfNbfIntersecting, ConstructionCase::NbfNbfParallelI,
          ConstructionCase::NbfNbfParallelII, ConstructionCase::BfNbfGammaZero,
          ConstructionCase::BfNbfGammaNonzero})
        if (name == construction_case_name(c)) return c;
    return std::nullopt;
}

namespace {

/// Base-field value with operators, so the published rational expressions can
/// be transcribed verbatim. Division is only applied behind explicit nonzero
/// guards.
struct Fv {
    const PrimePowerField* F = nullptr;
    Felem v = 0;
    friend Fv operator+(Fv a, Fv b) { return {a.F, a.F->add(a.v, b.v)}; }
    friend Fv operator-(Fv a, Fv b) { return {a.F, a.F->sub(a.v, b.v)}; }
    friend Fv operator*(Fv a, Fv b) { return {a.F, a.F->mul(a.v, b.v)}; }
    friend Fv operator/(Fv a, Fv b) { return {a.F, a.F->div(a.v, b.v)}; }
    Fv operator-() const { return {F, F->neg(v)}; }
    friend Fv operator*(int c, Fv a) { return Fv{a.F, a.F->of_int(c)} * a; }
    friend Fv operator+(int c, Fv a) { return Fv{a.F, a.F->of_int(c)} + a; }
    friend Fv operator-(int c, Fv a) { return Fv{a.F, a.F->of_int(c)} - a; }
    bool zero() const { return v == 0; }
    bool operator==(const Fv& o) const { return v == o.v; }
};

struct Eval {
    const PlaneTables& pt;
    const HallSystem& H;
    const PrimePowerField& F;
    ConstructionCase tag;
    CaseEvaluation out;
    Fv r, s;

    Eval(const PlaneTables& p, ConstructionCase c)
        : pt(p), H(p.hall()), F(H.base()), tag(c), r{&F, H.r()}, s{&F, H.s()} {}

    Fv fv(Felem x) const { return {&F, x}; }
    Hidx hx(Fv a, Fv b) const { return H.index({a.v, b.v}); }

    void compare(const char* what, Felem engine, Fv printed) {
        ++out.formula_checked;
        if (engine != printed.v) {
            ++out.formula_mismatches;
            out.mismatch_notes.push_back(std::string(what) + ": engine=" + std::to_string(engine) +
                                         " printed=" + std::to_string(printed.v));
        }
    }
};

struct SixPoints {
    // Hall-element indices: x then y for A1, B1, C1, A2, B2, C2.
    Hidx x[6], y[6];
};

/// The published verifications equate the slopes of A3B3 and A3C3 under the
/// type-2 multiplication branch, so both joins must themselves be type 2;
/// unknown values that break this leave the construction's domain. Returns
/// false (and records the exclusion) when the configuration is outside it.
bool pappus_joins_type2(Eval& ev, const PappusOutcome& o) {
    const PlaneTables& pt = ev.pt;
    bool distinct_affine = o.a3 != o.b3 && o.a3 != o.c3 && o.b3 != o.c3 &&
                           pt.point(o.a3).is_affine() && pt.point(o.b3).is_affine() &&
                           pt.point(o.c3).is_affine();
    ev.out.constraints.record("cross-points-degenerate", true, distinct_affine);
    if (!distinct_affine) return false;
    bool type2 = true;
    for (LineId l : {pt.join(o.a3, o.b3), pt.join(o.a3, o.c3)}) {
        Line ll = pt.line(l);
        if (ll.kind != Line::Kind::Slanted || ev.H.slope_in_basefield(ll.m)) type2 = false;
    }
    ev.out.constraints.record("pappus-join-not-type2", true, type2);
    return ev.out.constraints.admissible;
}

/// Shared tail: nondegeneracy, on-line checks, the six cross lines, the
/// Pappus outcome. Returns the outcome when the assignment is admissible so
/// far. line shape expectations are handled by the caller.
std::optional<PappusOutcome> common_tail(Eval& ev, Line l1, Line l2, const SixPoints& P,
                                         bool check_type2_crosses) {
    const PlaneTables& pt = ev.pt;
    LineId id1 = pt.line_id(l1), id2 = pt.line_id(l2);
    PointId ids[6];
    for (int i = 0; i < 6; ++i) ids[i] = pt.point_id(Point::affine(P.x[i], P.y[i]));

    // On-line incidence is a property of the printed point tables.
    bool on_lines = true;
    for (int i = 0; i < 6; ++i) {
        LineId expect = i < 3 ? id1 : id2;
        bool inc = pt.incident(ids[i], expect);
        ev.compare(i < 3 ? "point-on-l1" : "point-on-l2", inc ? 1 : 0, ev.fv(1));
        on_lines = on_lines && inc;
    }
    if (!on_lines) {
        ev.out.constraints.record("points-not-on-lines", false, false);
        return std::nullopt;
    }

    bool distinct = true;
    for (int i = 0; i < 6 && distinct; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (ids[i] == ids[j]) {
                distinct = false;
                break;
            }
    PointId meetp = pt.meet(id1, id2);
    for (int i = 0; i < 6; ++i)
        if (ids[i] == meetp) distinct = false;
    ev.out.constraints.record("points-nondegenerate", true, distinct);
    if (!distinct) return std::nullopt;

    // The six cross joins, built type 2 in every published solution.
    const int pairs[6][2] = {{0, 4}, {3, 1}, {0, 5}, {3, 2}, {1, 5}, {4, 2}};
    // A1B2, A2B1, A1C2, A2C1, B1C2, B2C1 (second index offset by 3 handled below)
    LineId cross[6];
    bool vertical_ok = true, type2_ok = true;
    for (int i = 0; i < 6; ++i) {
        int a = pairs[i][0], b = pairs[i][1];
        cross[i] = pt.join(ids[a], ids[b]);
        Line cl = pt.line(cross[i]);
        if (cl.kind != Line::Kind::Slanted) vertical_ok = false;
        else if (ev.H.slope_in_basefield(cl.m)) type2_ok = false;
    }
    ev.out.constraints.record("cross-line-vertical", true, vertical_ok);
    if (!vertical_ok) return std::nullopt;
    if (check_type2_crosses) {
        ev.out.constraints.record("cross-line-slope-in-basefield", true, type2_ok);
        if (!type2_ok) return std::nullopt;
    }

    Sextuple s;
    s.l1 = id1;
    s.l2 = id2;
    s.first = {ids[0], ids[1], ids[2]};
    s.second = {ids[3], ids[4], ids[5]};
    ev.out.sextuple = s;
    ev.out.outcome = pappus_check(pt, s);
    return ev.out.outcome;
}

// ---- Case: intersecting type-2 pair, specialization g = t = z = 0 ----

void eval_41(Eval& ev, const CaseAssignment& a) {
    const Fv mu = ev.fv(a.mu), ps = ev.fv(a.psi), ga = ev.fv(a.gamma), de = ev.fv(a.delta);
    const Fv h = ev.fv(a.h), v = ev.fv(a.v), e = ev.fv(a.e), j = ev.fv(a.j), w = ev.fv(a.w);
    const Fv r = ev.r, s = ev.s;

    ev.out.constraints.record("psi-nonzero", true, !ps.zero());
    if (!ps.zero() && ev.H.index({mu.v, ps.v}) == ev.H.index({0, 1}))
        ev.out.constraints.record("lines-distinct", true, false);
    if (!ev.out.constraints.admissible) return;

    Fv fmu = mu * mu - r * mu - s; // f(mu)

    SixPoints P;
    auto X = [&](int i, Fv c1, Fv c2) { P.x[i] = ev.hx(c1, c2); };
    auto Y = [&](int i, Fv c1, Fv c2) { P.y[i] = ev.hx(c1, c2); };
    X(0, ev.fv(0), ev.fv(1));
    Y(0, -fmu / ps, r - mu);
    X(1, ga, de);
    Y(1, ga * mu - fmu * de / ps, de * (r - mu) + ga * ps);
    X(2, e, j);
    Y(2, e * mu - fmu * j / ps, j * (r - mu) + e * ps);
    X(3, ev.fv(0), h);
    Y(3, s * h, r * h);
    X(4, ev.fv(0), v);
    Y(4, s * v, r * v);
    X(5, w, ev.fv(0));
    Y(5, ev.fv(0), w);

    // The published guard for line A1B2: v = 1 and the quadratic's roots make
    // its denominators vanish.
    Fv quad = s * ps * v * v + (-s + mu * (-r + mu) - s * ps) * v + (s - mu * (-r + mu));
    ev.out.constraints.record("a1b2-denominator-quadratic", true, !quad.zero());
    if (!ev.out.constraints.admissible) return;

    Line l1 = Line::slanted(ev.H.index({mu.v, ps.v}), 0);
    Line l2 = Line::slanted(ev.H.index({0, 1}), 0);
    auto outcome = common_tail(ev, l1, l2, P, true);
    if (!outcome) return;

    // Printed slope and intercept of A1B2.
    {
        Line a1b2 = ev.pt.line(ev.pt.join(ev.pt.point_id(Point::affine(P.x[0], P.y[0])),
                                          ev.pt.point_id(Point::affine(P.x[4], P.y[4]))));
        HallElement m = ev.H.element(a1b2.m), k = ev.H.element(a1b2.k);
        Fv m1 = mu / (1 - v);
        Fv m2 = (s * (-1 + v) * (-1 + v) - mu * (r * (-1 + v) + mu)) * ps /
                ((-1 + v) * (mu * (-r + mu) + s * (-1 + v * ps)));
        Fv k1 = v * (s + (r - mu) * mu - s * ps) / ((-1 + v) * ps);
        Fv k2 = v * mu / (1 - v);
        ev.compare("a1b2.m1", m.a1, m1);
        ev.compare("a1b2.m2", m.a2, m2);
        ev.compare("a1b2.k1", k.a1, k1);
        ev.compare("a1b2.k2", k.a2, k2);
    }

    // The published C3 = (A1B2)(A2B1), all four components.
    {
        Fv E = v * de * mu - h * mu - v * ga * ps;
        Fv d = h - v * de;
        Fv D1 = -(s * d * d) + E * (r * d + E);
        Fv Dx2 = s * d * d + E * (r * v * de - r * h - v * de * mu + h * mu + v * ga * ps);
        ev.compare("c3.denominator-identity", Dx2.v, -D1);

        Point c3 = ev.pt.point(ev.out.outcome->c3);
        if (c3.is_affine() && !D1.zero()) {
            Fv x1 = -(ga * (v - h) * h * (mu * (-r + mu) + s * (-1 + v * ps))) / D1;
            Fv x2 =
                (s * (de * h * h + v * v * de * (de - h + de * h) -
                      v * h * (de + de * de - h + de * h)) -
                 v * v * de * de * mu * mu + v * de * h * mu * mu + v * v * de * h * mu * mu +
                 v * de * de * h * mu * mu - v * v * de * de * h * mu * mu - v * h * h * mu * mu -
                 de * h * h * mu * mu + v * de * h * h * mu * mu + 2 * (v * v * ga * de * mu * ps) -
                 v * v * ga * h * mu * ps - 2 * (v * ga * de * h * mu * ps) +
                 2 * (v * v * ga * de * h * mu * ps) - v * ga * h * h * mu * ps -
                 v * v * ga * ga * ps * ps + v * ga * ga * h * ps * ps -
                 v * v * ga * ga * h * ps * ps +
                 r * (-(de * h) + v * (de - h + de * h)) * (v * de * mu - h * mu - v * ga * ps)) /
                Dx2;
            Fv y1 =
                (-((v - h) * (r - mu) * mu * (r * de - de * mu + ga * ps) *
                   (v * de * mu - h * mu - v * ga * ps)) -
                 s * s * (v * de - h) * (-(de * h) + v * (de - h * ps + de * h * ps)) +
                 s * (h * h * mu * (2 * (de * mu) - ga * ps) +
                      v * v *
                          (de * de * mu * mu * (2 + h * ps) +
                           ga * ps * ps * (ga + h * mu + ga * h * ps) -
                           de * mu * ps * (h * mu + 2 * (ga * (1 + h * ps)))) +
                      r * (-(2 * (de * h * h * mu)) +
                           v * h *
                               (2 * (de * de * mu) - ga * de * ps - h * mu * ps +
                                de * mu * (2 + h * ps)) +
                           v * v *
                               (-(ga * h * ps * ps) - de * de * mu * (2 + h * ps) +
                                de * ps * (ga + h * mu + ga * h * ps))) +
                      v * h *
                          (-(2 * (de * de * mu * mu)) -
                           de * mu * (-(2 * (ga * ps)) + mu * (2 + h * ps)) +
                           ps * (h * mu * mu - ga * ga * ps + ga * (mu + h * mu * ps))))) /
                (ps * D1);
            Fv y2 =
                (-(r * r * (-(de * h) + v * (de - h + de * h)) *
                   (v * de * mu - h * mu - v * ga * ps)) -
                 (v - h) * (mu * (de * mu - ga * ps) * (v * de * mu - h * mu - v * ga * ps) +
                            s * (-(v * de * de * mu) + de * h * mu - ga * h * ps + v * ga * h * ps)) +
                 r * (s * (-(de * h * h) - v * v * de * (de - h + de * h) +
                           v * h * (de + de * de - h + de * h)) +
                      h * h * mu * (2 * (de * mu) - ga * ps) +
                      v * v * (de * mu - ga * ps) *
                          (de * (2 + h) * mu - ga * ps - h * (mu + ga * ps)) +
                      v * h *
                          (-(2 * (de * de * mu * mu)) - de * mu * ((2 + h) * mu - 3 * (ga * ps)) +
                           ga * ps * (mu - ga * ps) + h * mu * (mu + ga * ps)))) /
                D1;
            HallElement cx = ev.H.element(c3.x), cy = ev.H.element(c3.y);
            ev.compare("c3.x1", cx.a1, x1);
            ev.compare("c3.x2", cx.a2, x2);
            ev.compare("c3.y1", cy.a1, y1);
            ev.compare("c3.y2", cy.a2, y2);
        } else {
            // Affine C3 and nonzero denominator coincide; disagreement is a
            // transcription failure.
            if (c3.is_affine() != !D1.zero()) {
                ++ev.out.formula_mismatches;
                ev.out.mismatch_notes.push_back("c3 affine-ness disagrees with its denominator");
            }
            ev.out.constraints.record("cross-points-degenerate", true, false);
            return;
        }
    }

    const PappusOutcome& o = *ev.out.outcome;
    if (!pappus_joins_type2(ev, o)) return;
    // Stated shape: a type-2 Pappus line.
    ev.out.expected_shape_ok = o.is_pappus && o.pappus_line &&
                               ev.pt.line(*o.pappus_line).kind == Line::Kind::Slanted &&
                               !ev.H.slope_in_basefield(ev.pt.line(*o.pappus_line).m);
}

// ---- Case: parallel type-2 pair, specializations (i) g=h=t=0, (ii) g=t=0,h=1 ----

void eval_42(Eval& ev, const CaseAssignment& a, bool solution_two) {
    const Fv ga = ev.fv(a.gamma), de = ev.fv(a.delta), k1 = ev.fv(a.kappa1), k2 = ev.fv(a.kappa2);
    const Fv v = ev.fv(a.v), e = ev.fv(a.e), j = ev.fv(a.j), w = ev.fv(a.w), z = ev.fv(a.z);
    const Fv r = ev.r, s = ev.s;

    ev.out.constraints.record("kappa-nonzero", true, !(k1.zero() && k2.zero()));
    if (!ev.out.constraints.admissible) return;

    SixPoints P;
    P.x[0] = ev.hx(ev.fv(0), ev.fv(1));
    P.y[0] = ev.hx(k1 + s, k2 + r);
    P.x[1] = ev.hx(ga, de);
    P.y[1] = ev.hx(k1 + s * de, k2 + ga + r * de);
    P.x[2] = ev.hx(e, j);
    P.y[2] = ev.hx(k1 + s * j, k2 + e + r * j);
    if (!solution_two) {
        P.x[3] = ev.hx(ev.fv(0), ev.fv(0));
        P.y[3] = ev.hx(ev.fv(0), ev.fv(0));
    } else {
        P.x[3] = ev.hx(ev.fv(0), ev.fv(1));
        P.y[3] = ev.hx(s, r);
    }
    P.x[4] = ev.hx(ev.fv(0), v);
    P.y[4] = ev.hx(s * v, r * v);
    P.x[5] = ev.hx(w, z);
    P.y[5] = ev.hx(s * z, w + r * z);

    Hidx one01 = ev.H.index({0, 1});
    Line l1 = Line::slanted(one01, ev.H.index({k1.v, k2.v}));
    Line l2 = Line::slanted(one01, 0);
    auto outcome = common_tail(ev, l1, l2, P, true);
    if (!outcome) return;

    const PappusOutcome& o = *outcome;
    if (!pappus_joins_type2(ev, o)) return;
    ev.out.expected_shape_ok = o.is_pappus && o.pappus_line &&
                               ev.pt.line(*o.pappus_line).kind == Line::Kind::Slanted &&
                               !ev.H.slope_in_basefield(ev.pt.line(*o.pappus_line).m);
}

// ---- Case: vertical / type-2 pair ----

void eval_43_zero(Eval& ev, const CaseAssignment& a) {
    const Fv de = ev.fv(a.delta), j = ev.fv(a.j), g = ev.fv(a.g), h = ev.fv(a.h), v = ev.fv(a.v),
             z = ev.fv(a.z);
    const Fv r = ev.r, s = ev.s;

    SixPoints P;
    P.x[0] = ev.hx(ev.fv(0), ev.fv(0));
    P.y[0] = ev.hx(ev.fv(0), ev.fv(1));
    P.x[1] = ev.hx(ev.fv(0), ev.fv(0));
    P.y[1] = ev.hx(ev.fv(0), de);
    P.x[2] = ev.hx(ev.fv(0), ev.fv(0));
    P.y[2] = ev.hx(ev.fv(0), j);
    P.x[3] = ev.hx(g, h);
    P.y[3] = ev.hx(s * h, g + r * h);
    P.x[4] = ev.hx(ev.fv(0), v);
    P.y[4] = ev.hx(s * v, r * v);
    P.x[5] = ev.hx(ev.fv(0), z);
    P.y[5] = ev.hx(s * z, r * z);

    Line l1 = Line::vertical(0);
    Line l2 = Line::slanted(ev.H.index({0, 1}), 0);
    auto outcome = common_tail(ev, l1, l2, P, true);
    if (!outcome) return;

    const PappusOutcome& o = *outcome;
    if (!pappus_joins_type2(ev, o)) return;
    // Stated shape: the Pappus line is again type 2.
    ev.out.expected_shape_ok = o.is_pappus && o.pappus_line &&
                               ev.pt.line(*o.pappus_line).kind == Line::Kind::Slanted &&
                               !ev.H.slope_in_basefield(ev.pt.line(*o.pappus_line).m);
}

void eval_43_nonzero(Eval& ev, const CaseAssignment& a) {
    const Fv ga = ev.fv(a.gamma), de = ev.fv(a.delta), e = ev.fv(a.e), g = ev.fv(a.g),
             h = ev.fv(a.h);
    const Fv r = ev.r, s = ev.s;

    ev.out.constraints.record("gamma-nonzero", true, !ga.zero());
    if (!ev.out.constraints.admissible) return;

    // Derived denominators, both provably nonzero over a rootless quadratic.
    Fv DEL = ga * ga + r * ga * de - s * de * de;
    Fv A = ga + (-1 + de) * e;
    Fv D = s * A * A - ga * e * (ga * e + r * A);
    ev.out.constraints.record("derived-denominator-zero", false, !DEL.zero() && !D.zero());
    if (!ev.out.constraints.admissible) return;

    Fv j = (ga - e + de * e) / ga;
    Fv t = (ga * ga + r * ga * g - s * de * g - s * ga * h) / DEL;
    Fv v = (ga * de - ga * g - s * de * h) / DEL;
    Fv w = ga * (s * (-1 + de) * e * g + ga * (-(e * e) + s * g - r * e * g + s * e * h)) / D;
    Fv z = ga * (ga * e * (-1 + g) + s * ga * h - (-1 + de) * e * (e - s * h)) / D;

    ev.out.resolved.j = j.v;
    ev.out.resolved.t = t.v;
    ev.out.resolved.v = v.v;
    ev.out.resolved.w = w.v;
    ev.out.resolved.z = z.v;

    SixPoints P;
    P.x[0] = ev.hx(ev.fv(0), ev.fv(0));
    P.y[0] = ev.hx(ev.fv(0), ev.fv(1));
    P.x[1] = ev.hx(ev.fv(0), ev.fv(0));
    P.y[1] = ev.hx(ga, de);
    P.x[2] = ev.hx(ev.fv(0), ev.fv(0));
    P.y[2] = ev.hx(e, j);
    P.x[3] = ev.hx(g, h);
    P.y[3] = ev.hx(s * h, g + r * h);

    // Printed coordinates of B2 and C2.
    Fv yb1 = s * (ga * (de - g) - s * de * h) / DEL;
    Fv yb2 = (ga * ga - s * de * (g + r * h) + ga * (r * de - s * h)) / DEL;
    Fv yc1 = s * ga * (ga * e * (-1 + g) + s * ga * h - (-1 + de) * e * (e - s * h)) / D;
    Fv yc2 = (ga * ((-(e * e) - e * g * r + g * s + e * h * s) * ga + e * g * s * (-1 + de)) +
              r * ga * (e * (-1 + g) * ga + h * s * ga - e * (e - h * s) * (-1 + de))) /
             D;
    P.x[4] = ev.hx(t, v);
    P.y[4] = ev.hx(yb1, yb2);
    P.x[5] = ev.hx(w, z);
    P.y[5] = ev.hx(yc1, yc2);

    // The printed y-coordinates must agree with evaluating l2 at the
    // printed x-coordinates.
    {
        Hidx one01 = ev.H.index({0, 1});
        HallElement yb = ev.H.element(ev.H.muli(P.x[4], one01));
        HallElement yc = ev.H.element(ev.H.muli(P.x[5], one01));
        ev.compare("b2.y1", yb.a1, yb1);
        ev.compare("b2.y2", yb.a2, yb2);
        ev.compare("c2.y1", yc.a1, yc1);
        ev.compare("c2.y2", yc.a2, yc2);
    }

    Line l1 = Line::vertical(0);
    Line l2 = Line::slanted(ev.H.index({0, 1}), 0);
    auto outcome = common_tail(ev, l1, l2, P, true);
    if (!outcome) return;

    // Stated shape: opposite joins fall into parallel pairs, so the cross
    // points are distinct infinite points and the Pappus line is the line at
    // infinity.
    const PappusOutcome& o = *outcome;
    bool at_infinity = !ev.pt.point(o.a3).is_affine() && !ev.pt.point(o.b3).is_affine() &&
                       !ev.pt.point(o.c3).is_affine();
    ev.out.expected_shape_ok = o.is_pappus && at_infinity && o.pappus_line &&
                               *o.pappus_line == ev.pt.line_at_infinity();
}

} // namespace

CaseEvaluation evaluate_case(const PlaneTables& pt, ConstructionCase c, const CaseAssignment& a) {
    if (!pt.is_hall()) throw std::invalid_argument("constructions run on Hall planes");
    Eval ev(pt, c);
    ev.out.resolved = a;
    switch (c) {
    case ConstructionCase::NbfNbfIntersecting: eval_41(ev, a); break;
    case ConstructionCase::NbfNbfParallelI: eval_42(ev, a, false); break;
    case ConstructionCase::NbfNbfParallelII: eval_42(ev, a, true); break;
    case ConstructionCase::BfNbfGammaZero: eval_43_zero(ev, a); break;
    case ConstructionCase::BfNbfGammaNonzero: eval_43_nonzero(ev, a); break;
    }
    return std::move(ev.out);
}

SweepSummary sweep_case(const PlaneTables& pt, ConstructionCase c, std::uint64_t budget) {
    auto t0 = std::chrono::steady_clock::now();
    const HallSystem& H = pt.hall();
    const int q = H.base().q();
    SweepSummary sum;
    sum.tag = c;
    sum.q = q;

    bool stop = false;
    auto run_one = [&](const CaseAssignment& a, bool& any_admissible) {
        if (budget && sum.assignments >= budget) {
            sum.budget_exhausted = true;
            stop = true;
            return;
        }
        ++sum.assignments;
        CaseEvaluation ev = evaluate_case(pt, c, a);
        sum.formula_checked += ev.formula_checked;
        sum.formula_mismatches += ev.formula_mismatches;
        if (!ev.constraints.admissible) {
            ++sum.exclusions[ev.constraints.first_violation];
            for (const auto& chk : ev.constraints.checks)
                if (!chk.passed && !chk.paper_stated) sum.engine_flagged = true;
            return;
        }
        ++sum.admissible;
        any_admissible = true;
        if (ev.outcome && ev.outcome->is_pappus) ++sum.pappus_ok;
        if (ev.outcome && ev.outcome->is_ninety_three) ++sum.ninety_three_ok;
        if (ev.expected_shape_ok) ++sum.shape_ok;
    };

    auto each_param = [&](auto&& body) {
        // body(assignment-with-parameters-set, any_admissible_ref)
        switch (c) {
        case ConstructionCase::NbfNbfIntersecting:
            for (int mu = 0; mu < q && !stop; ++mu)
                for (int ps = 1; ps < q && !stop; ++ps) {
                    if (mu == 0 && ps == 1) continue; // l1 = l2
                    for (int ga = 0; ga < q && !stop; ++ga)
                        for (int de = 0; de < q && !stop; ++de) {
                            if (ga == 0 && (de == 0 || de == 1)) continue; // B1 in {meet, A1}
                            CaseAssignment a;
                            a.mu = static_cast<Felem>(mu);
                            a.psi = static_cast<Felem>(ps);
                            a.gamma = static_cast<Felem>(ga);
                            a.delta = static_cast<Felem>(de);
                            body(a);
                        }
                }
            break;
        case ConstructionCase::NbfNbfParallelI:
        case ConstructionCase::NbfNbfParallelII:
            for (int k1 = 0; k1 < q && !stop; ++k1)
                for (int k2 = 0; k2 < q && !stop; ++k2) {
                    if (k1 == 0 && k2 == 0) continue;
                    for (int ga = 0; ga < q && !stop; ++ga)
                        for (int de = 0; de < q && !stop; ++de) {
                            if (ga == 0 && de == 1) continue; // B1 = A1
                            CaseAssignment a;
                            a.kappa1 = static_cast<Felem>(k1);
                            a.kappa2 = static_cast<Felem>(k2);
                            a.gamma = static_cast<Felem>(ga);
                            a.delta = static_cast<Felem>(de);
                            body(a);
                        }
                }
            break;
        case ConstructionCase::BfNbfGammaZero:
            for (int de = 0; de < q && !stop; ++de) {
                if (de == 0 || de == 1) continue; // B1 in {meet, A1}
                CaseAssignment a;
                a.delta = static_cast<Felem>(de);
                body(a);
            }
            break;
        case ConstructionCase::BfNbfGammaNonzero:
            for (int ga = 1; ga < q && !stop; ++ga)
                for (int de = 0; de < q && !stop; ++de) {
                    CaseAssignment a;
                    a.gamma = static_cast<Felem>(ga);
                    a.delta = static_cast<Felem>(de);
                    body(a);
                }
            break;
        }
    };

    each_param([&](CaseAssignment base) {
        ++sum.param_combos;
        bool any = false;
        switch (c) {
        case ConstructionCase::NbfNbfIntersecting:
            for (int h = 0; h < q && !stop; ++h)
                for (int v = 0; v < q && !stop; ++v)
                    for (int e = 0; e < q && !stop; ++e)
                        for (int j = 0; j < q && !stop; ++j)
                            for (int w = 0; w < q && !stop; ++w) {
                                CaseAssignment a = base;
                                a.h = static_cast<Felem>(h);
                                a.v = static_cast<Felem>(v);
                                a.e = static_cast<Felem>(e);
                                a.j = static_cast<Felem>(j);
                                a.w = static_cast<Felem>(w);
                                run_one(a, any);
                            }
            break;
        case ConstructionCase::NbfNbfParallelI:
        case ConstructionCase::NbfNbfParallelII:
            for (int v = 0; v < q && !stop; ++v)
                for (int e = 0; e < q && !stop; ++e)
                    for (int j = 0; j < q && !stop; ++j)
                        for (int w = 0; w < q && !stop; ++w)
                            for (int z = 0; z < q && !stop; ++z) {
                                CaseAssignment a = base;
                                a.v = static_cast<Felem>(v);
                                a.e = static_cast<Felem>(e);
                                a.j = static_cast<Felem>(j);
                                a.w = static_cast<Felem>(w);
                                a.z = static_cast<Felem>(z);
                                run_one(a, any);
                            }
            break;
        case ConstructionCase::BfNbfGammaZero:
            for (int j = 0; j < q && !stop; ++j)
                for (int g = 0; g < q && !stop; ++g)
                    for (int h = 0; h < q && !stop; ++h)
                        for (int v = 0; v < q && !stop; ++v)
                            for (int z = 0; z < q && !stop; ++z) {
                                CaseAssignment a = base;
                                a.j = static_cast<Felem>(j);
                                a.g = static_cast<Felem>(g);
                                a.h = static_cast<Felem>(h);
                                a.v = static_cast<Felem>(v);
                                a.z = static_cast<Felem>(z);
                                run_one(a, any);
                            }
            break;
        case ConstructionCase::BfNbfGammaNonzero:
            for (int e = 0; e < q && !stop; ++e)
                for (int g = 0; g < q && !stop; ++g)
                    for (int h = 0; h < q && !stop; ++h) {
                        CaseAssignment a = base;
                        a.e = static_cast<Felem>(e);
                        a.g = static_cast<Felem>(g);
                        a.h = static_cast<Felem>(h);
                        run_one(a, any);
                    }
            break;
        }
        if (any) ++sum.param_combos_with_admissible;
    });

    sum.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sum;
}

} // namespace hallplane
