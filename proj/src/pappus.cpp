#include "hallplane/pappus.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "hallplane/parallel.hpp"

namespace hallplane {

const char* question_name(QuestionKind k) {
    switch (k) {
    case QuestionKind::Q3p3: return "3p3";
    case QuestionKind::Q3p2: return "3p2";
    case QuestionKind::Q3p1: return "3p1";
    case QuestionKind::Q3p0: return "3p0";
    case QuestionKind::Q2p0: return "2p0";
    case QuestionKind::Count: return "count";
    }
    return "?";
}

const char* mode_name(SelectionMode m) {
    return m == SelectionMode::Nondegenerate ? "nondegenerate" : "relaxed";
}

namespace {

constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
constexpr std::size_t kTripleBlock = 64;
constexpr std::size_t kPairBlock = 8;

/// Per-pair search context: eligible points (the meet excluded) and the
/// cached joins between the two lines.
struct PairContext {
    const PlaneTables& pt;
    LineId l1, l2;
    PointId meetp;
    std::vector<PointId> pts1, pts2;
    int n1 = 0, n2 = 0;
    std::vector<LineId> jcache;

    PairContext(const PlaneTables& p, LineId a, LineId b, bool projective_points = false)
        : pt(p), l1(a), l2(b) {
        if (a == b) throw CoincidentLinesError();
        meetp = pt.meet(a, b);
        auto eligible = [&](LineId l, PointId q) {
            if (q == meetp) return false;
            if (!projective_points && pt.line(l).is_affine() && !pt.point(q).is_affine())
                return false;
            return true;
        };
        for (PointId q : pt.points_on(a))
            if (eligible(a, q)) pts1.push_back(q);
        for (PointId q : pt.points_on(b))
            if (eligible(b, q)) pts2.push_back(q);
        std::sort(pts1.begin(), pts1.end());
        std::sort(pts2.begin(), pts2.end());
        n1 = static_cast<int>(pts1.size());
        n2 = static_cast<int>(pts2.size());
        jcache.resize(static_cast<std::size_t>(n1) * n2);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j)
                jcache[static_cast<std::size_t>(i) * n2 + j] = pt.join_unchecked(pts1[i], pts2[j]);
    }

    LineId jn(int i, int j) const { return jcache[static_cast<std::size_t>(i) * n2 + j]; }

    void cross(int i1, int i2, int i3, int j1, int j2, int j3, PointId& a3, PointId& b3,
               PointId& c3) const {
        a3 = pt.meet_unchecked(jn(i2, j3), jn(i3, j2));
        b3 = pt.meet_unchecked(jn(i1, j3), jn(i3, j1));
        c3 = pt.meet_unchecked(jn(i1, j2), jn(i2, j1));
    }

    bool relaxed_ok(int i1, int i2, int i3, int j1, int j2, int j3) const {
        PointId a3, b3, c3;
        cross(i1, i2, i3, j1, j2, j3, a3, b3, c3);
        if (a3 == b3 || a3 == c3 || b3 == c3) return true;
        return pt.incident(c3, pt.join_unchecked(a3, b3));
    }

    bool strict_ok(int i1, int i2, int i3, int j1, int j2, int j3) const {
        PointId a3, b3, c3;
        cross(i1, i2, i3, j1, j2, j3, a3, b3, c3);
        if (a3 == b3 || a3 == c3 || b3 == c3) return false;
        LineId pl = pt.join_unchecked(a3, b3);
        if (!pt.incident(c3, pl)) return false;

        const PointId pts[9] = {pts1[i1], pts1[i2], pts1[i3], pts2[j1], pts2[j2],
                                 pts2[j3], a3,        b3,        c3};
        for (int x = 6; x < 9; ++x)
            for (int y = 0; y < 6; ++y)
                if (pts[x] == pts[y]) return false;

        const LineId lines[9] = {l1,         l2,         jn(i1, j2), jn(i2, j1), jn(i1, j3),
                                 jn(i3, j1), jn(i2, j3), jn(i3, j2), pl};
        for (int x = 0; x < 9; ++x)
            for (int y = x + 1; y < 9; ++y)
                if (lines[x] == lines[y]) return false;
        for (int x = 0; x < 9; ++x) {
            int cnt = 0;
            for (int y = 0; y < 9; ++y) cnt += pt.incident(pts[y], lines[x]);
            if (cnt != 3) return false;
        }
        return true;
    }

    bool check(SelectionMode mode, int i1, int i2, int i3, int j1, int j2, int j3) const {
        return mode == SelectionMode::Nondegenerate ? strict_ok(i1, i2, i3, j1, j2, j3)
                                                    : relaxed_ok(i1, i2, i3, j1, j2, j3);
    }

    /// Some labeling of {u, v, w} against the fixed first triple.
    bool set_ok(SelectionMode mode, int i1, int i2, int i3, int u, int v, int w,
                int* perm_out = nullptr) const {
        const int arr[3] = {u, v, w};
        for (int p = 0; p < 6; ++p) {
            if (check(mode, i1, i2, i3, arr[kPerm[p][0]], arr[kPerm[p][1]], arr[kPerm[p][2]])) {
                if (perm_out) *perm_out = p;
                return true;
            }
        }
        return false;
    }

    Sextuple make_sextuple(int i1, int i2, int i3, int u, int v, int w, int perm) const {
        const int arr[3] = {u, v, w};
        Sextuple s;
        s.l1 = l1;
        s.l2 = l2;
        s.first = {pts1[i1], pts1[i2], pts1[i3]};
        s.second = {pts2[arr[kPerm[perm][0]]], pts2[arr[kPerm[perm][1]]], pts2[arr[kPerm[perm][2]]]};
        return s;
    }
};

/// Per-worker memo: the completion that worked last is tried first.
struct Scratch {
    int a = -1, b = -1, perm = 0;
};

bool complete_31(const PairContext& c, SelectionMode mode, int i1, int i2, int i3, int j,
                 Scratch& sc, Sextuple* out) {
    // memo first
    if (sc.a >= 0 && sc.a < c.n2 && sc.b < c.n2 && sc.a != j && sc.b != j && sc.a != sc.b) {
        const int arr[3] = {j, sc.a, sc.b};
        int p = sc.perm;
        if (c.check(mode, i1, i2, i3, arr[kPerm[p][0]], arr[kPerm[p][1]], arr[kPerm[p][2]])) {
            if (out) *out = c.make_sextuple(i1, i2, i3, j, sc.a, sc.b, p);
            return true;
        }
    }
    for (int a = 0; a < c.n2; ++a) {
        if (a == j) continue;
        for (int b = a + 1; b < c.n2; ++b) {
            if (b == j) continue;
            int perm = 0;
            if (c.set_ok(mode, i1, i2, i3, j, a, b, &perm)) {
                sc.a = a;
                sc.b = b;
                sc.perm = perm;
                if (out) *out = c.make_sextuple(i1, i2, i3, j, a, b, perm);
                return true;
            }
        }
    }
    return false;
}

bool complete_32(const PairContext& c, SelectionMode mode, int i1, int i2, int i3, int j1, int j2,
                 Sextuple* out) {
    for (int r = 0; r < c.n2; ++r) {
        if (r == j1 || r == j2) continue;
        int perm = 0;
        if (c.set_ok(mode, i1, i2, i3, j1, j2, r, &perm)) {
            if (out) *out = c.make_sextuple(i1, i2, i3, j1, j2, r, perm);
            return true;
        }
    }
    return false;
}

bool complete_20(const PairContext& c, SelectionMode mode, int i1, int i2, Sextuple* out) {
    for (int i3 = 0; i3 < c.n1; ++i3) {
        if (i3 == i1 || i3 == i2) continue;
        for (int u = 0; u < c.n2; ++u)
            for (int v = u + 1; v < c.n2; ++v)
                for (int w = v + 1; w < c.n2; ++w) {
                    int perm = 0;
                    if (c.set_ok(mode, i1, i2, i3, u, v, w, &perm)) {
                        if (out) *out = c.make_sextuple(i1, i2, i3, u, v, w, perm);
                        return true;
                    }
                }
    }
    return false;
}

struct BlockRes {
    std::uint64_t instances = 0, fail_strict = 0, fail_relaxed = 0, count = 0;
    std::optional<FailingSelection> first_fail;
    std::optional<Sextuple> first_completion;
};

std::vector<std::array<int, 3>> make_triples(int n, std::optional<int> fixed_first) {
    std::vector<std::array<int, 3>> out;
    if (fixed_first) {
        int f = *fixed_first;
        for (int i = 0; i < n; ++i) {
            if (i == f) continue;
            for (int j = i + 1; j < n; ++j) {
                if (j == f) continue;
                out.push_back({f, i, j});
            }
        }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) out.push_back({i, j, k});
    }
    return out;
}

std::vector<std::array<int, 2>> make_pairs(int n, std::optional<int> fixed_first) {
    std::vector<std::array<int, 2>> out;
    if (fixed_first) {
        int f = *fixed_first;
        for (int i = 0; i < n; ++i)
            if (i != f) out.push_back({f, i});
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) out.push_back({i, j});
    }
    return out;
}

} // namespace

PappusOutcome pappus_check(const PlaneTables& pt, const Sextuple& s) {
    if (s.l1 == s.l2) throw DegenerateSextupleError("the two lines coincide");
    PointId meetp = pt.meet(s.l1, s.l2);
    PointId all[6] = {s.first[0], s.first[1], s.first[2], s.second[0], s.second[1], s.second[2]};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (all[i] == all[j]) throw DegenerateSextupleError("repeated point");
    for (int i = 0; i < 3; ++i) {
        if (!pt.incident(s.first[i], s.l1)) throw DegenerateSextupleError("point not on l1");
        if (!pt.incident(s.second[i], s.l2)) throw DegenerateSextupleError("point not on l2");
        if (s.first[i] == meetp || s.second[i] == meetp)
            throw DegenerateSextupleError("point equals the meet of the lines");
    }

    PappusOutcome o;
    LineId b1c2 = pt.join(s.first[1], s.second[2]);
    LineId b2c1 = pt.join(s.second[1], s.first[2]);
    LineId a1c2 = pt.join(s.first[0], s.second[2]);
    LineId a2c1 = pt.join(s.second[0], s.first[2]);
    LineId a1b2 = pt.join(s.first[0], s.second[1]);
    LineId a2b1 = pt.join(s.second[0], s.first[1]);
    o.a3 = pt.meet(b1c2, b2c1);
    o.b3 = pt.meet(a1c2, a2c1);
    o.c3 = pt.meet(a1b2, a2b1);

    bool distinct = o.a3 != o.b3 && o.a3 != o.c3 && o.b3 != o.c3;
    if (!distinct) {
        o.relaxed_collinear = true; // at most two distinct cross points
        return o;
    }
    LineId pl = pt.join(o.a3, o.b3);
    bool collinear = pt.incident(o.c3, pl);
    o.relaxed_collinear = collinear;
    if (!collinear) return o;
    o.is_pappus = true;
    o.pappus_line = pl;

    const PointId pts[9] = {all[0], all[1], all[2], all[3], all[4], all[5], o.a3, o.b3, o.c3};
    const LineId lines[9] = {s.l1, s.l2, a1b2, a2b1, a1c2, a2c1, b1c2, b2c1, pl};
    bool ok = true;
    for (int i = 0; i < 9 && ok; ++i)
        for (int j = i + 1; j < 9 && ok; ++j)
            if (pts[i] == pts[j] || lines[i] == lines[j]) ok = false;
    for (int i = 0; i < 9 && ok; ++i) {
        int cnt = 0;
        for (int j = 0; j < 9; ++j) cnt += pt.incident(pts[j], lines[i]);
        if (cnt != 3) ok = false;
    }
    o.is_ninety_three = ok;
    return o;
}

QuestionVerdict run_question(const PlaneTables& pt, QuestionKind kind, const PairTask& task,
                             const QuestionOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    PairContext c(pt, task.l1, task.l2, opt.projective_points);

    QuestionVerdict v;
    v.kind = kind;
    v.l1 = task.l1;
    v.l2 = task.l2;
    v.case_label = task.label;
    v.mode = opt.mode;
    v.projective_points = opt.projective_points;

    std::optional<int> anchor;
    if (task.marked) {
        auto it = std::find(c.pts1.begin(), c.pts1.end(), *task.marked);
        if (it == c.pts1.end())
            throw std::invalid_argument("reduction anchor is not an eligible point of l1");
        anchor = static_cast<int>(it - c.pts1.begin());
    }

    const SelectionMode mode = opt.mode;
    std::uint64_t outer_n = 0;
    std::vector<std::array<int, 3>> triples;
    std::vector<std::array<int, 2>> duos;
    switch (kind) {
    case QuestionKind::Q3p3:
    case QuestionKind::Q3p2:
    case QuestionKind::Q3p1:
    case QuestionKind::Count:
        triples = make_triples(c.n1, anchor);
        outer_n = triples.size();
        break;
    case QuestionKind::Q2p0:
        duos = make_pairs(c.n1, anchor);
        outer_n = duos.size();
        break;
    case QuestionKind::Q3p0:
        triples = make_triples(c.n1, std::nullopt);
        outer_n = 1;
        break;
    }

    auto fail_here = [&](BlockRes& r, std::vector<PointId> g1, std::vector<PointId> g2,
                         int i1, int i2, int i3, auto relaxed_retry) {
        ++r.fail_strict;
        if (!r.first_fail) r.first_fail = FailingSelection{std::move(g1), std::move(g2)};
        if (mode == SelectionMode::Nondegenerate && !relaxed_retry(i1, i2, i3)) ++r.fail_relaxed;
        if (mode == SelectionMode::Relaxed) ++r.fail_relaxed;
    };

    auto worker = [&](std::size_t lo, std::size_t hi) -> BlockRes {
        BlockRes r;
        Scratch sc;
        for (std::size_t oi = lo; oi < hi; ++oi) {
            switch (kind) {
            case QuestionKind::Q3p3: {
                auto [i1, i2, i3] = triples[oi];
                for (int u = 0; u < c.n2; ++u)
                    for (int vv = u + 1; vv < c.n2; ++vv)
                        for (int w = vv + 1; w < c.n2; ++w) {
                            ++r.instances;
                            int perm = 0;
                            if (!c.set_ok(mode, i1, i2, i3, u, vv, w, &perm)) {
                                fail_here(r,
                                          {c.pts1[i1], c.pts1[i2], c.pts1[i3]},
                                          {c.pts2[u], c.pts2[vv], c.pts2[w]}, i1, i2, i3,
                                          [&](int a, int b, int cc) {
                                              return c.set_ok(SelectionMode::Relaxed, a, b, cc, u,
                                                              vv, w);
                                          });
                                if (opt.early_exit) return r;
                            } else if (!r.first_completion) {
                                r.first_completion = c.make_sextuple(i1, i2, i3, u, vv, w, perm);
                            }
                        }
                break;
            }
            case QuestionKind::Count: {
                auto [i1, i2, i3] = triples[oi];
                for (int u = 0; u < c.n2; ++u)
                    for (int vv = u + 1; vv < c.n2; ++vv)
                        for (int w = vv + 1; w < c.n2; ++w) {
                            ++r.instances;
                            if (c.set_ok(mode, i1, i2, i3, u, vv, w)) ++r.count;
                        }
                break;
            }
            case QuestionKind::Q3p2: {
                auto [i1, i2, i3] = triples[oi];
                for (int j1 = 0; j1 < c.n2; ++j1)
                    for (int j2 = j1 + 1; j2 < c.n2; ++j2) {
                        ++r.instances;
                        Sextuple sx;
                        if (!complete_32(c, mode, i1, i2, i3, j1, j2,
                                         r.first_completion ? nullptr : &sx)) {
                            fail_here(r,
                                      {c.pts1[i1], c.pts1[i2], c.pts1[i3]},
                                      {c.pts2[j1], c.pts2[j2]}, i1, i2, i3,
                                      [&](int a, int b, int cc) {
                                          return complete_32(c, SelectionMode::Relaxed, a, b, cc,
                                                             j1, j2, nullptr);
                                      });
                            if (opt.early_exit) return r;
                        } else if (!r.first_completion) {
                            r.first_completion = sx;
                        }
                    }
                break;
            }
            case QuestionKind::Q3p1: {
                auto [i1, i2, i3] = triples[oi];
                for (int j = 0; j < c.n2; ++j) {
                    ++r.instances;
                    Sextuple sx;
                    if (!complete_31(c, mode, i1, i2, i3, j, sc,
                                     r.first_completion ? nullptr : &sx)) {
                        Scratch dummy;
                        fail_here(r, {c.pts1[i1], c.pts1[i2], c.pts1[i3]}, {c.pts2[j]}, i1, i2, i3,
                                  [&](int a, int b, int cc) {
                                      return complete_31(c, SelectionMode::Relaxed, a, b, cc, j,
                                                         dummy, nullptr);
                                  });
                        if (opt.early_exit) return r;
                    } else if (!r.first_completion) {
                        r.first_completion = sx;
                    }
                }
                break;
            }
            case QuestionKind::Q2p0: {
                auto [i1, i2] = duos[oi];
                ++r.instances;
                Sextuple sx;
                if (!complete_20(c, mode, i1, i2, r.first_completion ? nullptr : &sx)) {
                    fail_here(r, {c.pts1[i1], c.pts1[i2]}, {}, i1, i2, -1,
                              [&](int a, int b, int) {
                                  return complete_20(c, SelectionMode::Relaxed, a, b, nullptr);
                              });
                    if (opt.early_exit) return r;
                } else if (!r.first_completion) {
                    r.first_completion = sx;
                }
                break;
            }
            case QuestionKind::Q3p0: {
                bool found = false;
                for (std::size_t ti = 0; ti < triples.size() && !found; ++ti) {
                    auto [i1, i2, i3] = triples[ti];
                    for (int u = 0; u < c.n2 && !found; ++u)
                        for (int vv = u + 1; vv < c.n2 && !found; ++vv)
                            for (int w = vv + 1; w < c.n2 && !found; ++w) {
                                ++r.instances;
                                int perm = 0;
                                if (c.set_ok(mode, i1, i2, i3, u, vv, w, &perm)) {
                                    r.first_completion =
                                        c.make_sextuple(i1, i2, i3, u, vv, w, perm);
                                    found = true;
                                    break;
                                }
                            }
                }
                if (!found) ++r.fail_strict;
                break;
            }
            }
            if (opt.budget && r.instances >= opt.budget) break;
        }
        return r;
    };

    BlockRes total = run_blocks<BlockRes>(
        outer_n, kTripleBlock, opt.jobs, BlockRes{}, worker,
        [](BlockRes& acc, BlockRes&& b) {
            acc.instances += b.instances;
            acc.fail_strict += b.fail_strict;
            acc.fail_relaxed += b.fail_relaxed;
            acc.count += b.count;
            if (!acc.first_fail && b.first_fail) acc.first_fail = std::move(b.first_fail);
            if (!acc.first_completion && b.first_completion)
                acc.first_completion = std::move(b.first_completion);
        },
        [&](const BlockRes& acc) {
            if (opt.early_exit && acc.fail_strict > 0 && kind != QuestionKind::Count) return true;
            if (opt.budget && acc.instances >= opt.budget) return true;
            return false;
        });

    v.instances = total.instances;
    v.failures = total.fail_strict;
    v.relaxed_failures = total.fail_relaxed;
    v.pappus_count = total.count;
    v.failing = total.first_fail;
    v.completion = total.first_completion;
    bool budget_hit = opt.budget && total.instances >= opt.budget;
    bool early_stop = opt.early_exit && total.fail_strict > 0;
    v.scan_complete = !budget_hit && (!early_stop || kind == QuestionKind::Q3p0);
    if (kind == QuestionKind::Q3p0)
        v.affirmed = total.first_completion.has_value();
    else if (kind == QuestionKind::Count)
        v.affirmed = true;
    else
        v.affirmed = total.fail_strict == 0;
    v.relaxed_affirmed = (kind == QuestionKind::Q3p0) ? v.affirmed : total.fail_relaxed == 0;
    v.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return v;
}

std::vector<QuestionVerdict> run_question_on_pairs(const PlaneTables& pt, QuestionKind kind,
                                                   const std::vector<PairTask>& tasks,
                                                   const QuestionOptions& opt) {
    QuestionOptions per_pair = opt;
    per_pair.jobs = 1;
    struct Res {
        std::vector<QuestionVerdict> verdicts;
        bool failed = false;
    };
    Res total = run_blocks<Res>(
        tasks.size(), kPairBlock, opt.jobs, Res{},
        [&](std::size_t lo, std::size_t hi) {
            Res r;
            for (std::size_t i = lo; i < hi; ++i) {
                r.verdicts.push_back(run_question(pt, kind, tasks[i], per_pair));
                if (!r.verdicts.back().affirmed && kind != QuestionKind::Count &&
                    kind != QuestionKind::Q3p0 && opt.early_exit) {
                    r.failed = true;
                    break;
                }
                if (kind == QuestionKind::Q3p0 && !r.verdicts.back().affirmed) {
                    r.failed = true;
                    if (opt.early_exit) break;
                }
            }
            return r;
        },
        [](Res& acc, Res&& b) {
            for (auto& v : b.verdicts) acc.verdicts.push_back(std::move(v));
            acc.failed = acc.failed || b.failed;
        },
        [&](const Res& acc) { return opt.early_exit && acc.failed; });
    return std::move(total.verdicts);
}

std::vector<PairTask> all_pair_tasks(const PlaneTables& pt, PairScope scope) {
    std::vector<PairTask> out;
    const LineId inf = pt.line_at_infinity();
    for (LineId a = 0; a < static_cast<LineId>(pt.num_lines()); ++a)
        for (LineId b = 0; b < static_cast<LineId>(pt.num_lines()); ++b) {
            if (a == b) continue;
            bool touches_inf = (a == inf || b == inf);
            if (scope == PairScope::AffineOnly && touches_inf) continue;
            if (scope == PairScope::InfinityOnly && !touches_inf) continue;
            PairTask t;
            t.l1 = a;
            t.l2 = b;
            t.label = "pair(" + std::to_string(a) + "," + std::to_string(b) + ")";
            out.push_back(std::move(t));
        }
    return out;
}

bool selection_completes(const PlaneTables& pt, QuestionKind kind, LineId l1, LineId l2,
                         const std::vector<PointId>& given_l1,
                         const std::vector<PointId>& given_l2, SelectionMode mode,
                         bool projective_points, Sextuple* out) {
    PairContext c(pt, l1, l2, projective_points);
    auto locate = [](const std::vector<PointId>& v, PointId p) {
        auto it = std::find(v.begin(), v.end(), p);
        if (it == v.end()) throw std::invalid_argument("selection point is not eligible");
        return static_cast<int>(it - v.begin());
    };
    std::vector<int> g1, g2;
    for (PointId p : given_l1) g1.push_back(locate(c.pts1, p));
    for (PointId p : given_l2) g2.push_back(locate(c.pts2, p));
    Scratch sc;
    switch (kind) {
    case QuestionKind::Q3p3:
    case QuestionKind::Count: {
        if (g1.size() != 3 || g2.size() != 3) throw std::invalid_argument("3+3 needs 3+3 points");
        int perm = 0;
        if (c.set_ok(mode, g1[0], g1[1], g1[2], g2[0], g2[1], g2[2], &perm)) {
            if (out) *out = c.make_sextuple(g1[0], g1[1], g1[2], g2[0], g2[1], g2[2], perm);
            return true;
        }
        return false;
    }
    case QuestionKind::Q3p2:
        if (g1.size() != 3 || g2.size() != 2) throw std::invalid_argument("3+2 needs 3+2 points");
        return complete_32(c, mode, g1[0], g1[1], g1[2], g2[0], g2[1], out);
    case QuestionKind::Q3p1:
        if (g1.size() != 3 || g2.size() != 1) throw std::invalid_argument("3+1 needs 3+1 points");
        return complete_31(c, mode, g1[0], g1[1], g1[2], g2[0], sc, out);
    case QuestionKind::Q2p0:
        if (g1.size() != 2 || !g2.empty()) throw std::invalid_argument("2+0 needs 2 points");
        return complete_20(c, mode, g1[0], g1[1], out);
    case QuestionKind::Q3p0: {
        if (!g1.empty() || !g2.empty()) throw std::invalid_argument("3+0 takes no points");
        PairTask t{l1, l2, std::nullopt, ""};
        QuestionOptions o;
        o.mode = mode;
        o.projective_points = projective_points;
        auto v = run_question(pt, QuestionKind::Q3p0, t, o);
        if (v.affirmed && out && v.completion) *out = *v.completion;
        return v.affirmed;
    }
    }
    return false;
}

bool replay_verdict(const PlaneTables& pt, const QuestionVerdict& v) {
    if (v.completion) {
        const Sextuple& s = *v.completion;
        if (s.l1 != v.l1 || s.l2 != v.l2) return false;
        PappusOutcome o = pappus_check(pt, s);
        bool ok = v.mode == SelectionMode::Nondegenerate ? o.is_ninety_three : o.relaxed_collinear;
        if (!ok) return false;
    }
    if (v.failing) {
        if (v.kind == QuestionKind::Q3p0 || v.kind == QuestionKind::Count) return false;
        if (selection_completes(pt, v.kind, v.l1, v.l2, v.failing->on_l1, v.failing->on_l2,
                                v.mode, v.projective_points))
            return false;
    }
    return true;
}

bool verify_desargues(const PlaneTables& pt, const DesarguesWitness& w) {
    const PointId pts[10] = {w.center,       w.triangle1[0], w.triangle1[1], w.triangle1[2],
                             w.triangle2[0], w.triangle2[1], w.triangle2[2], w.r,
                             w.s,            w.axis_third};
    const LineId lines[10] = {w.through_center[0], w.through_center[1], w.through_center[2],
                              w.sides[0],          w.sides[1],          w.sides[2],
                              w.sides[3],          w.sides[4],          w.sides[5],
                              w.axis};
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
            if (pts[i] == pts[j] || lines[i] == lines[j]) return false;
    for (int i = 0; i < 10; ++i) {
        int cnt = 0;
        for (int j = 0; j < 10; ++j) cnt += pt.incident(pts[j], lines[i]);
        if (cnt != 3) return false;
    }
    for (int j = 0; j < 10; ++j) {
        int cnt = 0;
        for (int i = 0; i < 10; ++i) cnt += pt.incident(pts[j], lines[i]);
        if (cnt != 3) return false;
    }
    // The named incidences of the configuration.
    auto on = [&](PointId p, LineId l) { return pt.incident(p, l); };
    for (int i = 0; i < 3; ++i) {
        if (!on(w.center, w.through_center[i])) return false;
        if (!on(w.triangle1[i], w.through_center[i])) return false;
        if (!on(w.triangle2[i], w.through_center[i])) return false;
    }
    const std::array<std::array<PointId, 3>, 6> side_pts = {{
        {w.triangle1[0], w.triangle1[1], w.r},
        {w.triangle1[1], w.triangle1[2], w.s},
        {w.triangle1[0], w.triangle1[2], w.axis_third},
        {w.triangle2[0], w.triangle2[1], w.r},
        {w.triangle2[1], w.triangle2[2], w.s},
        {w.triangle2[0], w.triangle2[2], w.axis_third},
    }};
    for (int i = 0; i < 6; ++i)
        for (PointId p : side_pts[i])
            if (!on(p, w.sides[i])) return false;
    return on(w.r, w.axis) && on(w.s, w.axis) && on(w.axis_third, w.axis);
}

DesarguesWitness exists_desargues(const PlaneTables& pt) {
    const PointId center = pt.point_id(Point::affine(0, 0));
    auto through = pt.lines_on(center);
    const LineId l1 = through[0], l2 = through[1], l3 = through[2];

    std::vector<PointId> off;
    for (PointId p = 0; p < static_cast<PointId>(pt.num_points()); ++p)
        if (!pt.incident(p, l1) && !pt.incident(p, l2) && !pt.incident(p, l3)) off.push_back(p);

    for (std::size_t ri = 0; ri < off.size(); ++ri) {
        for (std::size_t si = ri + 1; si < off.size(); ++si) {
            const PointId R = off[ri], S = off[si];
            const LineId axis = pt.join(R, S);
            // triangles A1 on l1, A1A2 through R, A2A3 through S
            std::vector<std::array<PointId, 3>> tris;
            std::vector<std::array<LineId, 3>> tri_sides; // A1A2, A2A3 (A1A3 later)
            for (PointId a1 : pt.points_on(l1)) {
                if (a1 == center) continue;
                LineId s12 = pt.join(a1, R);
                PointId a2 = pt.meet(s12, l2);
                if (a2 == center || a2 == a1) continue;
                LineId s23 = pt.join(a2, S);
                PointId a3 = pt.meet(s23, l3);
                if (a3 == center || a3 == a1 || a3 == a2) continue;
                LineId s13 = pt.join(a1, a3);
                if (s13 == s12 || s13 == s23) continue; // degenerate triangle
                tris.push_back({a1, a2, a3});
                tri_sides.push_back({s12, s23, s13});
            }
            for (std::size_t i = 0; i < tris.size(); ++i)
                for (std::size_t j = i + 1; j < tris.size(); ++j) {
                    if (tri_sides[i][2] == tri_sides[j][2]) continue;
                    PointId z = pt.meet(tri_sides[i][2], tri_sides[j][2]);
                    if (!pt.incident(z, axis)) continue;
                    DesarguesWitness w;
                    w.center = center;
                    w.through_center = {l1, l2, l3};
                    w.r = R;
                    w.s = S;
                    w.axis = axis;
                    w.axis_third = z;
                    w.triangle1 = tris[i];
                    w.triangle2 = tris[j];
                    w.sides = {tri_sides[i][0], tri_sides[i][1], tri_sides[i][2],
                               tri_sides[j][0], tri_sides[j][1], tri_sides[j][2]};
                    if (verify_desargues(pt, w)) return w;
                }
        }
    }
    throw NotFoundError("no Desargues configuration found (this contradicts Ostrom's theorem)");
}

Sextuple find_non_pappus_witness(const PlaneTables& pt, std::uint64_t budget) {
    std::uint64_t seen = 0;
    for (LineId a = 0; a < static_cast<LineId>(pt.num_lines()); ++a) {
        for (LineId b = a + 1; b < static_cast<LineId>(pt.num_lines()); ++b) {
            PairContext c(pt, a, b);
            for (int i1 = 0; i1 < c.n1; ++i1)
                for (int i2 = i1 + 1; i2 < c.n1; ++i2)
                    for (int i3 = i2 + 1; i3 < c.n1; ++i3)
                        for (int j1 = 0; j1 < c.n2; ++j1)
                            for (int j2 = 0; j2 < c.n2; ++j2) {
                                if (j2 == j1) continue;
                                for (int j3 = 0; j3 < c.n2; ++j3) {
                                    if (j3 == j1 || j3 == j2) continue;
                                    ++seen;
                                    if (budget && seen > budget)
                                        throw NotFoundError("no non-Pappus sextuple within budget");
                                    PointId a3, b3, c3;
                                    c.cross(i1, i2, i3, j1, j2, j3, a3, b3, c3);
                                    bool pap = false;
                                    if (a3 != b3 && a3 != c3 && b3 != c3)
                                        pap = pt.incident(c3, pt.join_unchecked(a3, b3));
                                    else
                                        pap = false;
                                    if (!pap) {
                                        Sextuple s;
                                        s.l1 = a;
                                        s.l2 = b;
                                        s.first = {c.pts1[i1], c.pts1[i2], c.pts1[i3]};
                                        s.second = {c.pts2[j1], c.pts2[j2], c.pts2[j3]};
                                        return s;
                                    }
                                }
                            }
        }
    }
    throw NotFoundError("every nondegenerate sextuple has collinear distinct cross points");
}

} // namespace hallplane
