#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hallplane/build.hpp"
#include "hallplane/report.hpp"

using namespace hallplane;
using nlohmann::json;

namespace {

struct Options {
    int p = 3, k = 1, r = -1, s = -1;
    bool oracle = false;
    std::string pairs = "canonical";
    std::string points = "affine";
    std::string mode = "nondegenerate";
    std::uint64_t budget = 0;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    std::string out;
    std::string format = "json";
};

PlaneTables build_plane(const Options& o) {
    return o.oracle ? make_oracle_plane(o.p, o.k) : make_hall_plane(o.p, o.k, o.r, o.s);
}

SelectionMode parse_mode(const std::string& m) {
    return m == "relaxed" ? SelectionMode::Relaxed : SelectionMode::Nondegenerate;
}

std::optional<QuestionKind> parse_kind(const std::string& k) {
    if (k == "3p3") return QuestionKind::Q3p3;
    if (k == "3p2") return QuestionKind::Q3p2;
    if (k == "3p1") return QuestionKind::Q3p1;
    if (k == "3p0") return QuestionKind::Q3p0;
    if (k == "2p0") return QuestionKind::Q2p0;
    if (k == "count") return QuestionKind::Count;
    return std::nullopt;
}

std::vector<PairTask> select_pairs(const PlaneTables& pt, const Options& o, QuestionKind kind) {
    if (o.pairs == "all") return all_pair_tasks(pt, PairScope::All);
    if (o.pairs == "infinity") return all_pair_tasks(pt, PairScope::InfinityOnly);
    if (o.pairs != "canonical")
        throw CLI::ValidationError("--pairs must be canonical, all, or infinity");
    if (!pt.is_hall())
        throw CLI::ValidationError("--pairs canonical needs a Hall plane; use --pairs all");
    std::vector<PairTask> tasks;
    for (const auto& rep : canonical_pair_representatives(pt)) {
        PairTask t;
        t.l1 = rep.l1;
        t.l2 = rep.l2;
        t.label = rep.label;
        bool use_marked = !rep.involves_infinity && kind != QuestionKind::Count &&
                          kind != QuestionKind::Q3p0;
        if (use_marked) t.marked = rep.marked;
        tasks.push_back(std::move(t));
    }
    return tasks;
}

int emit(const Options& o, json& report, int exit_code,
         std::chrono::steady_clock::time_point t0) {
    report["wall_time_ms"] = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              t0)
            .count());
    std::string text =
        o.format == "text" ? render_text(report) : report.dump(2) + "\n";
    if (!o.out.empty()) {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open output file " << o.out << "\n";
            return 1;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return exit_code;
}

json claim_json(const std::string& name, std::optional<bool> expected, bool observed) {
    json c;
    c["name"] = name;
    c["observed_affirmed"] = observed;
    if (expected) {
        c["expected_affirmed"] = *expected;
        c["reproduced"] = (*expected == observed);
    } else {
        c["expected_affirmed"] = nullptr;
        c["reproduced"] = true; // recorded, not presumed
    }
    return c;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    if (o.jobs < 1) o.jobs = 1;

    CLI::App app{"Hall plane engine: incidence tables, collineations, Pappus variants"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--p", o.p, "base field characteristic");
    app.add_option("--k", o.k, "base field extension degree");
    app.add_option("--r", o.r, "defining quadratic coefficient r (element index; -1 = smallest)");
    app.add_option("--s", o.s, "defining quadratic coefficient s (element index; -1 = smallest)");
    app.add_flag("--oracle", o.oracle, "use the field plane of order (p^k)^2 instead");
    app.add_option("--pairs", o.pairs, "line pairs to run: canonical, all, infinity");
    app.add_option("--points", o.points,
                   "point selections: affine (default), projective (infinite points of "
                   "affine lines become eligible; reported, no expectations)");
    app.add_option("--mode", o.mode, "selection mode: nondegenerate, relaxed");
    app.add_option("--budget", o.budget, "cap on examined instances (0 = unbounded)");
    app.add_option("--jobs", o.jobs, "worker count");
    app.add_option("--out", o.out, "write the report to this file");
    app.add_option("--format", o.format, "report format: json, text");

    auto* plane_cmd = app.add_subcommand("plane", "build or export a plane");
    auto* plane_build = plane_cmd->add_subcommand("build", "build and summarize");
    auto* plane_export = plane_cmd->add_subcommand("export", "write the incidence structure");
    plane_cmd->require_subcommand(1);

    auto* suite_cmd = app.add_subcommand("suite", "verification suites");
    auto* suite_axioms = suite_cmd->add_subcommand("axioms", "field, quasifield, plane axioms");
    auto* suite_groups = suite_cmd->add_subcommand("groups", "collineation group propositions");
    suite_cmd->require_subcommand(1);

    std::string kind_arg;
    auto* question_cmd = app.add_subcommand("question", "run a completion question");
    question_cmd->add_option("kind", kind_arg, "3p3, 3p2, 3p1, 3p0, 2p0, count")->required();

    std::string case_arg;
    auto* sweep_cmd = app.add_subcommand("sweep", "validate a published construction");
    sweep_cmd->add_option("case", case_arg,
                          "nbfnbf-intersecting, nbfnbf-parallel-i, nbfnbf-parallel-ii, "
                          "bfnbf-gamma-zero, bfnbf-gamma-nonzero, all")
        ->required();

    std::string witness_arg;
    auto* witness_cmd = app.add_subcommand("witness", "search for a configuration witness");
    witness_cmd->add_option("what", witness_arg, "desargues, non-pappus")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    json report;
    report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    report["seed"] = 0;
    {
        std::string cmd;
        for (int i = 1; i < argc; ++i) {
            if (i > 1) cmd += ' ';
            cmd += argv[i];
        }
        report["command"] = cmd;
    }

    try {
        PlaneTables pt = build_plane(o);
        report["plane"] = plane_json(pt, o.p, o.k);
        int exit_code = 0;

        if (plane_build->parsed()) {
            // nothing beyond the summary; a violated axiom would have thrown
        } else if (plane_export->parsed()) {
            std::ostringstream os;
            pt.export_incidence(os);
            if (!o.out.empty()) {
                std::ofstream f(o.out, std::ios::binary);
                if (!f) {
                    std::cerr << "error: cannot open output file " << o.out << "\n";
                    return 1;
                }
                f << os.str();
                report["exported_to"] = o.out;
                o.out.clear(); // report itself goes to stdout
            } else {
                std::cout << os.str();
                return 0;
            }
        } else if (suite_axioms->parsed()) {
            PrimePowerField base = PrimePowerField::build(o.p, o.k);
            FieldAxiomsReport fr = check_field_axioms(base);
            report["field_axioms"] = field_axioms_json(fr);
            bool ok = fr.ok();
            if (pt.is_hall()) {
                QuasifieldReport qr = check_quasifield(pt.hall());
                report["quasifield"] = quasifield_json(pt.hall(), qr);
                ok = ok && qr.structural_ok();
                if (base.q() > 3) {
                    bool witnesses = qr.noncommutative && qr.nonassociative &&
                                     qr.non_left_distributive;
                    report["claims"] = json::array(
                        {claim_json("hall-not-a-field-for-q-gt-3", true, witnesses)});
                    ok = ok && witnesses;
                }
            }
            const int n = pt.order();
            bool counts = pt.num_affine_lines() == n * n + n &&
                          pt.num_points() == n * n + n + 1 &&
                          (!pt.is_hall() || (pt.num_bf() == n * (pt.hall().base().q() + 1) &&
                                             pt.num_nbf() == n * n - n * pt.hall().base().q()));
            report["plane_counts_ok"] = counts;
            exit_code = (ok && counts) ? 0 : 1;
        } else if (suite_groups->parsed()) {
            GroupPropositionsReport gr = verify_group_propositions(pt);
            report["group_propositions"] = group_report_json(gr);
            exit_code = gr.ok() ? 0 : 1;
        } else if (question_cmd->parsed()) {
            auto kind = parse_kind(kind_arg);
            if (!kind) throw CLI::ValidationError("unknown question kind: " + kind_arg);
            QuestionOptions qo;
            qo.mode = parse_mode(o.mode);
            qo.jobs = o.jobs;
            qo.budget = o.budget;
            if (o.points == "projective") qo.projective_points = true;
            else if (o.points != "affine")
                throw CLI::ValidationError("--points must be affine or projective");
            auto tasks = select_pairs(pt, o, *kind);
            auto verdicts = run_question_on_pairs(pt, *kind, tasks, qo);

            bool all_affirmed = true;
            std::uint64_t instances = 0, failures = 0, total_count = 0;
            json failing = json::array();
            for (const auto& v : verdicts) {
                all_affirmed = all_affirmed && v.affirmed;
                instances += v.instances;
                failures += v.failures;
                total_count += v.pappus_count;
                if (!v.affirmed) failing.push_back(verdict_json(pt, v));
            }
            json sum;
            sum["pairs_selected"] = tasks.size();
            sum["pairs_run"] = verdicts.size();
            sum["instances"] = instances;
            sum["failures"] = failures;
            sum["affirmed"] = all_affirmed;
            if (*kind == QuestionKind::Count) sum["pappus_count_total"] = total_count;
            report["summary"] = sum;
            if (verdicts.size() <= 200) {
                json arr = json::array();
                for (const auto& v : verdicts) arr.push_back(verdict_json(pt, v));
                report["verdicts"] = arr;
            } else {
                report["verdicts"] = failing;
            }
            auto expected = expected_affirmed(*kind, pt.order(), !pt.is_hall());
            if (qo.projective_points) expected.reset();
            std::string claim_name = std::string(question_name(*kind)) + "-order-" +
                                     std::to_string(pt.order()) +
                                     (pt.is_hall() ? "-hall" : "-field");
            report["claims"] = json::array({claim_json(claim_name, expected, all_affirmed)});
            if (expected && *expected != all_affirmed) exit_code = 1;
        } else if (sweep_cmd->parsed()) {
            std::vector<ConstructionCase> cases;
            if (case_arg == "all") {
                cases = {ConstructionCase::NbfNbfIntersecting, ConstructionCase::NbfNbfParallelI,
                         ConstructionCase::NbfNbfParallelII, ConstructionCase::BfNbfGammaZero,
                         ConstructionCase::BfNbfGammaNonzero};
            } else if (auto c = construction_case_from_name(case_arg)) {
                cases = {*c};
            } else {
                throw CLI::ValidationError("unknown construction case: " + case_arg);
            }
            if (!pt.is_hall()) throw CLI::ValidationError("sweeps need a Hall plane");
            json arr = json::array();
            bool ok = true;
            for (ConstructionCase c : cases) {
                SweepSummary s = sweep_case(pt, c, o.budget);
                arr.push_back(sweep_json(s));
                ok = ok && s.all_admissible_pappus() && s.shape_ok == s.admissible;
            }
            report["sweeps"] = arr;
            report["claims"] =
                json::array({claim_json("constructions-all-admissible-pappus", true, ok)});
            exit_code = ok ? 0 : 1;
        } else if (witness_cmd->parsed()) {
            if (witness_arg == "desargues") {
                DesarguesWitness w = exists_desargues(pt);
                report["desargues"] = desargues_json(pt, w);
                bool ok = verify_desargues(pt, w);
                report["claims"] =
                    json::array({claim_json("desargues-configuration-exists", true, ok)});
                exit_code = ok ? 0 : 1;
            } else if (witness_arg == "non-pappus") {
                bool expect_found = pt.is_hall();
                bool found = false;
                try {
                    Sextuple s = find_non_pappus_witness(pt, o.budget);
                    found = true;
                    report["non_pappus_witness"] = sextuple_json(pt, s);
                    PappusOutcome out = pappus_check(pt, s);
                    report["non_pappus_witness"]["is_pappus"] = out.is_pappus;
                } catch (const NotFoundError&) {
                    report["non_pappus_witness"] = nullptr;
                }
                report["claims"] = json::array({claim_json(
                    expect_found ? "non-pappus-sextuple-exists" : "plane-is-pappian",
                    true, expect_found == found)});
                exit_code = (expect_found == found) ? 0 : 1;
            } else {
                throw CLI::ValidationError("unknown witness kind: " + witness_arg);
            }
        }
        return emit(o, report, exit_code, t0);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
