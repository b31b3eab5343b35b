#include "nnr3/cli.hpp"

#include "nnr3/boundary.hpp"
#include "nnr3/examples.hpp"
#include "nnr3/geometry.hpp"
#include "nnr3/groebner.hpp"
#include "nnr3/matrix_io.hpp"
#include "nnr3/rng.hpp"
#include "nnr3/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace nnr3 {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitAborted = 2;
constexpr int kExitUsage = 64;

struct CommonOpts {
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0 = default
    std::uint64_t max_pairs = 1'000'000;
    double max_seconds = 1800.0;
    bool unbounded = false;

    unsigned effective_threads() const {
        if (threads) return threads;
        if (const char* env = std::getenv("NNR3_THREADS")) {
            long v = std::atol(env);
            if (v > 0) return static_cast<unsigned>(v);
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? hw : 1;
    }

    EngineOptions engine() const {
        EngineOptions opts;
        opts.threads = effective_threads();
        opts.max_pairs = unbounded ? 0 : max_pairs;
        opts.max_seconds = unbounded ? 0.0 : max_seconds;
        return opts;
    }
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_budget = true) {
    cmd->add_option("--seed", c.seed, "random seed, echoed in the report");
    cmd->add_option("--threads", c.threads,
                    "worker threads (default: NNR3_THREADS env or hardware)");
    if (with_budget) {
        cmd->add_option("--max-pairs", c.max_pairs, "S-pair work budget (0 = unlimited)");
        cmd->add_option("--max-seconds", c.max_seconds, "time budget in seconds (0 = unlimited)");
        cmd->add_flag("--unbounded", c.unbounded, "remove all work budgets");
    }
}

// Accumulates per-check entries and the aggregate status.
struct Report {
    json checks = json::array();
    json result = json::object();

    void check(const std::string& name, bool ok, json extra = json::object()) {
        extra["name"] = name;
        extra["status"] = ok ? "PASS" : "FAIL";
        checks.push_back(std::move(extra));
    }
    void aborted(const std::string& name, json extra = json::object()) {
        extra["name"] = name;
        extra["status"] = "ABORTED";
        checks.push_back(std::move(extra));
    }

    std::string status() const {
        bool fail = false;
        for (auto& c : checks) {
            if (c.at("status") == "ABORTED") return "ABORTED";
            if (c.at("status") == "FAIL") fail = true;
        }
        return fail ? "FAIL" : "PASS";
    }
};

int emit(std::ostream& out, const std::string& command, const json& config, Report& rep,
         std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    json doc;
    doc["command"] = command;
    doc["config"] = config;
    doc["checks"] = rep.checks;
    doc["result"] = rep.result;
    doc["status"] = rep.status();
    doc["timing_ms"] = ms;  // wall clock; excluded from byte-identity comparisons
    out << doc.dump(2) << "\n";
    if (rep.status() == "ABORTED") return kExitAborted;
    return rep.status() == "PASS" ? kExitPass : kExitFail;
}

json config_json(const CommonOpts& c, json extra = json::object()) {
    extra["seed"] = c.seed;
    extra["threads"] = c.effective_threads();
    extra["max_pairs"] = c.unbounded ? 0 : c.max_pairs;
    extra["max_seconds"] = c.unbounded ? 0.0 : c.max_seconds;
    return extra;
}

json stats_json(const EngineStats& s) {
    // deterministic fields only; wall-clock seconds are deliberately omitted
    return json{{"pairs_considered", s.pairs_considered},
                {"pairs_skipped", s.pairs_skipped},
                {"reductions", s.reductions},
                {"basis_growth", s.basis_growth},
                {"aborted", s.aborted}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_matrix_file(const std::string& path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        return matrix_to_json(matrix_from_csv(in));
    }
    return json::parse(read_file(path));
}

template <class K>
json point_json(const Pt<K>& p) {
    return json::array({p.x.str(), p.y.str()});
}

template <class K>
json polygon_json(const ConvexPolygon<K>& poly) {
    json out = json::array();
    for (auto& p : poly.vertices()) out.push_back(point_json(p));
    return out;
}

template <class K>
json triangle_json(const TriangleCandidate<K>& t) {
    json verts = json::array();
    for (auto& p : t.verts) verts.push_back(point_json(p));
    return json{{"vertices", std::move(verts)},
                {"provenance",
                 t.provenance == TriangleProvenance::VertexAnchored ? "vertex" : "edge"},
                {"anchor_index", t.anchor_index},
                {"contains_V", t.contains_V},
                {"inside_W", t.inside_W},
                {"valid", t.valid()}};
}

Matrix<Rational> random_gl3(Rng& rng) {
    for (;;) {
        Matrix<Rational> g(3, 3);
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j) g(i, j) = rng.rational();
        if (!g.det().is_zero()) return g;
    }
}

// ---------------------------------------------------------------- commands

int run_gens(const CommonOpts& c, unsigned m, unsigned n, const std::string& out_path,
             std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    GeneratorSet gs = generators(m, n);

    auto binom = [](unsigned a, unsigned b) -> std::uint64_t {
        if (b > a) return 0;
        std::uint64_t r = 1;
        for (unsigned i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    std::uint64_t want_quartics = binom(m, 4) * binom(n, 4);
    std::uint64_t want_sextics = binom(n, 3);
    rep.check("quartic_count", gs.quartics.size() == want_quartics,
              {{"expected", want_quartics}, {"actual", gs.quartics.size()}});
    rep.check("sextic_count", gs.sextics.size() == want_sextics,
              {{"expected", want_sextics}, {"actual", gs.sextics.size()}});

    json sextics = json::array();
    for (auto& [t, p] : gs.sextics) {
        auto md = p.multidegree(m, n);
        sextics.push_back({{"triple", {t.idx[0], t.idx[1], t.idx[2]}},
                           {"terms", p.term_count()},
                           {"multidegree", md ? md->str() : "NOT_HOMOGENEOUS"}});
    }
    rep.result = {{"m", m},
                  {"n", n},
                  {"quartics", gs.quartics.size()},
                  {"sextics", gs.sextics.size()},
                  {"total", gs.quartics.size() + gs.sextics.size()},
                  {"sextic_manifest", std::move(sextics)}};

    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open " + out_path);
        for (auto& p : gs.all()) f << p.str() << "\n";
        rep.result["generator_file"] = out_path;
    }
    return emit(out, "gens", config_json(c, {{"m", m}, {"n", n}}), rep, start);
}

int run_gb_check(const CommonOpts& c, unsigned m, unsigned n, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    GbReport r = verify_gb(m, n, c.engine());
    if (r.aborted) {
        rep.aborted("groebner_basis", {{"stats", stats_json(r.stats)}});
    } else {
        rep.check("groebner_basis", r.groebner_pass, {{"stats", stats_json(r.stats)}});
        rep.check("reduced_basis_equality", r.reduced_equality_pass);
    }
    rep.result = {{"m", m}, {"n", n}};
    return emit(out, "gb-check", config_json(c, {{"m", m}, {"n", n}}), rep, start);
}

int run_member(const CommonOpts& c, unsigned m, unsigned n, const std::string& poly_path,
               std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    Polynomial p = Polynomial::parse(read_file(poly_path));

    auto res = buchberger(generators(m, n).all(), MonomialOrder::grevlex(), c.engine());
    if (res.stats.aborted) {
        rep.aborted("basis_computation", {{"stats", stats_json(res.stats)}});
        return emit(out, "member", config_json(c, {{"m", m}, {"n", n}, {"poly", poly_path}}),
                    rep, start);
    }
    Polynomial nf = normal_form(p, res.basis.generators, MonomialOrder::grevlex());
    rep.check("membership_computed", true, {{"stats", stats_json(res.stats)}});
    rep.result = {{"member", nf.is_zero()},
                  {"normal_form_terms", nf.term_count()},
                  {"poly_terms", p.term_count()}};
    return emit(out, "member", config_json(c, {{"m", m}, {"n", n}, {"poly", poly_path}}), rep,
                start);
}

int run_pullback(const CommonOpts& c, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    const Polynomial& f63 = compute_f63();
    Polynomial lhs = mu_pullback(canonical_sextic_f());
    rep.check("exact_division", lhs == det_D() * f63,
              {{"pullback_terms", lhs.term_count()}, {"cofactor_terms", f63.term_count()}});
    auto bi = f63.ab_bidegree();
    rep.check("bidegree_6_3", bi && bi->first == 6 && bi->second == 3);
    rep.result = {{"cofactor_terms", f63.term_count()},
                  {"determinant_terms", det_D().term_count()}};
    return emit(out, "pullback", config_json(c), rep, start);
}

int run_sextic(const CommonOpts& c, const std::vector<unsigned>& triple, unsigned n,
               const std::string& out_path, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    if (triple.size() != 3) throw CLI::ValidationError("--triple needs exactly three indices");
    ColumnTriple t(triple[0], triple[1], triple[2]);
    Polynomial s = sextic_for_triple(t, n);
    rep.check("pullback_identity", mu_pullback(s) == compute_f63() * aligned_det_B(t));
    auto md = s.multidegree(4, n);
    rep.check("multidegree", md.has_value(),
              {{"multidegree", md ? md->str() : "NOT_HOMOGENEOUS"}});
    rep.result = {{"triple", {t.idx[0], t.idx[1], t.idx[2]}}, {"terms", s.term_count()}};
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open " + out_path);
        f << s.str() << "\n";
        rep.result["polynomial_file"] = out_path;
    } else {
        rep.result["polynomial"] = s.str();
    }
    return emit(out, "sextic",
                config_json(c, {{"n", n}, {"triple", {t.idx[0], t.idx[1], t.idx[2]}}}), rep,
                start);
}

int run_dim_check(const CommonOpts& c, unsigned m, unsigned n, unsigned trials,
                  std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    Rng rng(c.seed);
    DimensionReport r = dimension_check(m, n, trials, rng);
    rep.check("jacobian_rank", r.pass(),
              {{"expected", r.expected}, {"max_rank", r.max_rank}});
    rep.result = {{"m", m}, {"n", n}, {"trials", trials}, {"expected", r.expected},
                  {"max_rank", r.max_rank}};
    return emit(out, "dim-check",
                config_json(c, {{"m", m}, {"n", n}, {"trials", trials}}), rep, start);
}

int run_invariance_check(const CommonOpts& c, unsigned trials, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    Rng rng(c.seed);

    Matrix<Rational> diag(3, 3), shear(3, 3);
    for (unsigned i = 0; i < 3; ++i) {
        diag(i, i) = Rational(i == 0 ? 2 : 1);
        shear(i, i) = Rational(1);
    }
    shear(0, 1) = Rational(3);  // det = 1

    auto run_one = [&](const Matrix<Rational>& g, const std::string& label) {
        EquivarianceReport r = check_gl3_equivariance(g, 20, rng);
        rep.check("equivariance_" + label, r.pass(),
                  {{"scaling_ok", r.scaling_ok}, {"pullback_ok", r.pullback_ok}});
    };
    run_one(diag, "diag_2_1_1");
    run_one(shear, "unit_det_shear");
    unsigned failures = 0;
    for (unsigned i = 0; i < trials; ++i) {
        EquivarianceReport r = check_gl3_equivariance(random_gl3(rng), 20, rng);
        if (!r.pass()) ++failures;
    }
    rep.check("equivariance_random", failures == 0,
              {{"trials", trials}, {"failures", failures}});
    rep.result = {{"trials", trials}};
    return emit(out, "invariance-check", config_json(c, {{"trials", trials}}), rep, start);
}

int run_minimality_check(const CommonOpts& c, unsigned m, unsigned n, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    MinimalityReport r = minimality_check(m, n);
    rep.check("quartic_rank", r.quartic_rank == r.quartic_count,
              {{"expected", r.quartic_count}, {"actual", r.quartic_rank}});
    rep.check("sextics_outside_span", r.sextic_failures.empty(),
              {{"failures", r.sextic_failures}});
    rep.result = {{"m", m}, {"n", n}, {"quartic_rank", r.quartic_rank}};
    return emit(out, "minimality-check", config_json(c, {{"m", m}, {"n", n}}), rep, start);
}

template <class K>
void nnrank_into(const Matrix<K>& mat, Report& rep) {
    NnrankResult<K> res = nnrank_le3(mat);
    rep.result["nnrank_le3"] = res.value;
    rep.result["rank_fast_path"] = res.rank_fast_path;
    rep.result["reason"] = res.reason;
    if (res.value) {
        if (res.witness) rep.result["witness"] = triangle_json(*res.witness);
        if (res.factorization) {
            auto& [a, b] = *res.factorization;
            rep.check("factorization_reproduces", a * b == mat);
            rep.result["factorization"] = {{"A", matrix_to_json(a)}, {"B", matrix_to_json(b)}};
        }
        rep.check("decision", true, {{"value", true}});
    } else {
        json cands = json::array();
        for (auto& cand : res.candidates) cands.push_back(triangle_json(cand));
        rep.result["exhausted_candidates"] = std::move(cands);
        rep.check("decision", true, {{"value", false}});
    }
}

int run_nnrank(const CommonOpts& c, const std::string& matrix_path, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    json j = load_matrix_file(matrix_path);
    if (matrix_json_has_sqrt(j))
        nnrank_into(matrix_from_json<Quad2>(j), rep);
    else
        nnrank_into(matrix_from_json<Rational>(j), rep);
    return emit(out, "nnrank", config_json(c, {{"matrix", matrix_path}}), rep, start);
}

template <class K>
void boundary_into(const Matrix<K>& mat, Report& rep) {
    BoundaryReport<K> r = boundary_test(mat);
    const char* verdict = r.verdict == BoundaryVerdict::INTERIOR    ? "INTERIOR"
                          : r.verdict == BoundaryVerdict::BOUNDARY ? "BOUNDARY"
                                                                   : "NOT_IN_MODEL";
    json cands = json::array();
    for (auto& st : r.candidates)
        cands.push_back({{"triangle", triangle_json(st.triangle)},
                         {"every_edge_touches_V", st.every_edge_touches_V},
                         {"edge_contains_V_edge", st.edge_contains_V_edge},
                         {"vertex_on_W_vertex", st.vertex_on_W_vertex},
                         {"boundary_conditions", st.boundary_conditions()}});
    rep.result = {{"verdict", verdict},
                  {"zero_entry", r.zero_entry},
                  {"rank_le2", r.rank_le2},
                  {"candidates", std::move(cands)},
                  {"note", r.note}};
    rep.check("verdict_computed", true, {{"verdict", verdict}});
}

int run_boundary(const CommonOpts& c, const std::string& matrix_path, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    json j = load_matrix_file(matrix_path);
    if (matrix_json_has_sqrt(j))
        boundary_into(matrix_from_json<Quad2>(j), rep);
    else
        boundary_into(matrix_from_json<Rational>(j), rep);
    return emit(out, "boundary", config_json(c, {{"matrix", matrix_path}}), rep, start);
}

int run_example_moitra(const CommonOpts& c, unsigned n, const std::string& eps_str,
                       unsigned long precision, const std::string& out_path,
                       std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    MoitraExample ex = moitra_example(n, Rational::parse(eps_str), precision);
    rep.check("shapes", ex.report.shapes_ok);
    rep.check("no_triangle_contains_vprime", ex.report.no_triangle_contains_vprime);
    rep.check("deltas_cover_all_but_edge_pairs", ex.report.deltas_cover_all_but_edge_pairs);
    rep.check("wide_submatrix_rank3", ex.report.submatrix_spot_check);
    rep.result = {{"n", n},
                  {"matrix_size", {3 * n, 3 * n}},
                  {"max_guaranteed_columns", ex.report.max_guaranteed_columns},
                  {"failures", ex.report.failures}};
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open " + out_path);
        f << matrix_to_json(ex.matrix).dump(2) << "\n";
        rep.result["matrix_file"] = out_path;
    }
    return emit(out, "example",
                config_json(c, {{"kind", "moitra"}, {"n", n}, {"eps", eps_str},
                                {"precision", precision}}),
                rep, start);
}

int run_example_square(const CommonOpts& c, const std::string& eps_str,
                       const std::string& out_path, const std::string& base_path,
                       std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    SquareExample ex = square_example(Rational::parse(eps_str));
    rep.check("boundary_at_base", ex.report.boundary_at_base);
    rep.check("vprime_no_triangle", ex.report.vprime_no_triangle);
    rep.check("angular_deletions", ex.report.angular_deletions);
    rep.check("perpendicular_deletions", ex.report.perpendicular_deletions);
    rep.result = {{"matrix_size", {4, 8}},
                  {"tight_fits", ex.report.tight_fits},
                  {"failures", ex.report.failures}};
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open " + out_path);
        f << matrix_to_json(ex.matrix).dump(2) << "\n";
        rep.result["matrix_file"] = out_path;
    }
    if (!base_path.empty()) {
        std::ofstream f(base_path);
        if (!f) throw std::runtime_error("cannot open " + base_path);
        f << matrix_to_json(ex.matrix_unperturbed).dump(2) << "\n";
        rep.result["base_matrix_file"] = base_path;
    }
    return emit(out, "example", config_json(c, {{"kind", "square"}, {"eps", eps_str}}), rep,
                start);
}

template <class K>
void render_from(const Matrix<K>& mat, const std::string& out_path, Report& rep) {
    ChartTriple<K> ct = chart_from_matrix(mat);
    auto cands = candidate_triangles(ct.W, ct.V);
    svg_render(ct.W, ct.V, cands, out_path);
    rep.result = {{"svg_file", out_path},
                  {"W_vertices", ct.W.size()},
                  {"V_vertices", ct.V.size()},
                  {"triangles", cands.size()}};
    rep.check("rendered", true);
}

int run_render(const CommonOpts& c, const std::string& matrix_path, const std::string& out_path,
               std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    json j = load_matrix_file(matrix_path);
    if (matrix_json_has_sqrt(j))
        render_from(matrix_from_json<Quad2>(j), out_path, rep);
    else
        render_from(matrix_from_json<Rational>(j), out_path, rep);
    return emit(out, "render", config_json(c, {{"matrix", matrix_path}, {"out", out_path}}),
                rep, start);
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for rank-3 determinantal boundary ideals and nested-polygon "
                 "nonnegative rank decisions"};
    app.require_subcommand(1);

    CommonOpts c;
    unsigned m = 4, n = 6, trials = 20;
    unsigned long precision = 1'000'000;
    std::vector<unsigned> triple;
    std::string matrix_path, poly_path, out_path, eps_str = "1/1000";

    auto* gens = app.add_subcommand("gens", "emit the generator set with a JSON manifest");
    gens->add_option("--m", m)->required();
    gens->add_option("--n", n)->required();
    gens->add_option("--out", out_path, "polynomial output file");
    add_common(gens, c);

    auto* gb = app.add_subcommand("gb-check", "verify the generators form a Groebner basis");
    gb->add_option("--m", m)->required();
    gb->add_option("--n", n)->required();
    add_common(gb, c);

    auto* member = app.add_subcommand("member", "ideal membership of a polynomial file");
    member->add_option("--m", m)->required();
    member->add_option("--n", n)->required();
    member->add_option("--poly", poly_path)->required();
    add_common(member, c);

    auto* pullback = app.add_subcommand("pullback", "verify the pullback factorization");
    add_common(pullback, c);

    auto* sextic = app.add_subcommand("sextic", "solve for the sextic of a column triple");
    sextic->add_option("--triple", triple, "three 1-based column indices")
        ->required()
        ->delimiter(',');
    sextic->add_option("--n", n)->required();
    sextic->add_option("--out", out_path, "polynomial output file");
    add_common(sextic, c);

    auto* dim = app.add_subcommand("dim-check", "Jacobian dimension check");
    dim->add_option("--m", m)->required();
    dim->add_option("--n", n)->required();
    dim->add_option("--trials", trials)->default_val(3u);
    add_common(dim, c);

    auto* inv = app.add_subcommand("invariance-check", "GL3 equivariance of the cofactor");
    inv->add_option("--trials", trials)->default_val(20u);
    add_common(inv, c);

    auto* minim = app.add_subcommand("minimality-check", "minimal generation check");
    minim->add_option("--m", m)->required();
    minim->add_option("--n", n)->required();
    add_common(minim, c);

    auto* nnrank = app.add_subcommand("nnrank", "decide nonnegative rank <= 3");
    nnrank->add_option("--matrix", matrix_path)->required();
    add_common(nnrank, c, false);

    auto* boundary = app.add_subcommand("boundary", "boundary trichotomy of a rank-<=3 matrix");
    boundary->add_option("--matrix", matrix_path)->required();
    add_common(boundary, c, false);

    auto* example = app.add_subcommand("example", "generate and verify a named example");
    auto* moitra = example->add_subcommand("moitra", "expanded chord polygon family");
    moitra->add_option("--n", n)->required();
    moitra->add_option("--eps", eps_str)->default_val("1/1000");
    moitra->add_option("--precision", precision)->default_val(1'000'000UL);
    moitra->add_option("--out", out_path, "matrix output file");
    add_common(moitra, c, false);
    auto* square = example->add_subcommand("square", "octagon-in-square over Q(sqrt(2))");
    std::string base_path;
    square->add_option("--eps", eps_str)->default_val("1/100");
    square->add_option("--out", out_path, "perturbed matrix output file");
    square->add_option("--out-base", base_path, "unperturbed boundary matrix output file");
    add_common(square, c, false);
    example->require_subcommand(1);

    auto* render = app.add_subcommand("render", "SVG figure of a matrix's nested polygons");
    render->add_option("--matrix", matrix_path)->required();
    render->add_option("--out", out_path)->required();
    add_common(render, c, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help() << "\n";
            return kExitPass;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gens->parsed()) return run_gens(c, m, n, out_path, out);
        if (gb->parsed()) return run_gb_check(c, m, n, out);
        if (member->parsed()) return run_member(c, m, n, poly_path, out);
        if (pullback->parsed()) return run_pullback(c, out);
        if (sextic->parsed()) return run_sextic(c, triple, n, out_path, out);
        if (dim->parsed()) return run_dim_check(c, m, n, trials, out);
        if (inv->parsed()) return run_invariance_check(c, trials, out);
        if (minim->parsed()) return run_minimality_check(c, m, n, out);
        if (nnrank->parsed()) return run_nnrank(c, matrix_path, out);
        if (boundary->parsed()) return run_boundary(c, matrix_path, out);
        if (example->parsed()) {
            if (moitra->parsed()) return run_example_moitra(c, n, eps_str, precision, out_path, out);
            return run_example_square(c, eps_str, out_path, base_path, out);
        }
        if (render->parsed()) return run_render(c, matrix_path, out_path, out);
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace nnr3
