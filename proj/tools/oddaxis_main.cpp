// oddaxis: command-line front end for the degree / section / spectrum toolkit.
//
// Subcommands: degree | swtable | eigen | span | bundle | rh.
// Reports are UTF-8 JSON with fixed key order, printed to stdout and
// optionally written to --out. Reports carry no timestamps, so identical
// config and seed reproduce identical bytes; wall time goes to the stderr log
// (ODDAXIS_LOG=info).
//
// Exit codes: 0 pass, 2 usage error, 3 numerical search failure,
// 4 non-convergent degree.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oddaxis/bundles.hpp"
#include "oddaxis/charclass.hpp"
#include "oddaxis/degree.hpp"
#include "oddaxis/errors.hpp"
#include "oddaxis/io.hpp"
#include "oddaxis/linalg.hpp"
#include "oddaxis/parallel.hpp"
#include "oddaxis/spectra.hpp"
#include "oddaxis/sphere.hpp"

namespace {

using oddaxis::Json;

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

LogLevel log_level() {
    const char* env = std::getenv("ODDAXIS_LOG");
    if (!env) return LogLevel::quiet;
    const std::string v(env);
    if (v == "debug") return LogLevel::debug;
    if (v == "info") return LogLevel::info;
    return LogLevel::quiet;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::info) std::cerr << "[oddaxis] " << msg << "\n";
}

struct RunConfig {
    int mesh_level = 4;
    std::uint64_t seed = 0;
    std::vector<std::string> tol_overrides;
    std::string out_path;
    std::string dump_mesh_path;
    bool emit_csv = false;
    int threads = 1;
};

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--mesh-level", cfg.mesh_level, "icosphere subdivision level")
        ->check(CLI::Range(0, 8));
    cmd->add_option("--seed", cfg.seed, "random seed for generated inputs");
    cmd->add_option("--tol", cfg.tol_overrides, "tolerance override NAME=VAL (repeatable)");
    cmd->add_option("--out", cfg.out_path, "write the JSON report here as well");
    cmd->add_flag("--emit-csv", cfg.emit_csv, "write scan/plot data next to --out");
    cmd->add_option("--dump-mesh", cfg.dump_mesh_path, "write the working mesh as OFF text");
    cmd->add_option("--threads", cfg.threads, "worker thread cap")->check(CLI::Range(1, 256));
}

/// Named tolerances with per-command defaults; --tol NAME=VAL overrides.
std::map<std::string, double> resolve_tolerances(const std::map<std::string, double>& defaults,
                                                 const std::vector<std::string>& overrides) {
    std::map<std::string, double> tol = defaults;
    for (const std::string& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw oddaxis::ParameterError("--tol expects NAME=VAL, got: " + item);
        const std::string name = item.substr(0, eq);
        if (tol.find(name) == tol.end())
            throw oddaxis::ParameterError("unknown tolerance name: " + name);
        const double value = std::stod(item.substr(eq + 1));
        if (!(value > 0.0)) throw oddaxis::ParameterError("tolerances must be > 0");
        tol[name] = value;
    }
    return tol;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_string(const std::string& bytes) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a-%016llx",
                  static_cast<unsigned long long>(fnv1a(bytes)));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw oddaxis::ParameterError("cannot open file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Json config_json(const RunConfig& cfg, const std::map<std::string, double>& tol) {
    Json t = Json::object();
    for (const auto& [name, value] : tol) t[name] = value;
    return Json{{"mesh_level", cfg.mesh_level},
                {"seed", cfg.seed},
                {"threads", cfg.threads},
                {"tolerances", t}};
}

void emit_report(const Json& report, const RunConfig& cfg) {
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) throw oddaxis::ParameterError("cannot write file: " + cfg.out_path);
        out << text;
    }
}

void emit_csv_file(const RunConfig& cfg, const std::string& contents) {
    if (!cfg.emit_csv) return;
    if (cfg.out_path.empty())
        throw oddaxis::ParameterError("--emit-csv needs --out to name the CSV file");
    const std::string path = cfg.out_path + ".csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw oddaxis::ParameterError("cannot write file: " + path);
    out << contents;
    log_info("csv written to " + path);
}

oddaxis::SphereMap resolve_map_spec(const std::string& spec, std::string* digest_src) {
    if (spec.rfind("sample:", 0) == 0) {
        const std::string path = spec.substr(7);
        const std::string bytes = read_file(path);
        *digest_src = bytes;
        const Json j = Json::parse(bytes);
        const int level = j.at("mesh_level").get<int>();
        const oddaxis::SphereMesh mesh = oddaxis::icosphere(level);
        std::vector<oddaxis::Vec3> values;
        for (const Json& row : j.at("values"))
            values.push_back({row.at(0).get<double>(), row.at(1).get<double>(),
                              row.at(2).get<double>()});
        return oddaxis::sampled_sphere_map(mesh, values);
    }
    *digest_src = spec;
    return oddaxis::builtin_sphere_map(spec);
}

// ---------------------------------------------------------------------------

int cmd_degree(const std::string& map_spec, const RunConfig& cfg) {
    const auto tol = resolve_tolerances({{"residual", 0.2}}, cfg.tol_overrides);
    std::string digest_src;
    const oddaxis::SphereMap g = resolve_map_spec(map_spec, &digest_src);
    const oddaxis::SphereMesh mesh = oddaxis::icosphere(cfg.mesh_level);

    const oddaxis::DegreeReport integral = oddaxis::brouwer_degree(g, mesh);

    // Retry the preimage count with nudged targets if one lands on a fold.
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> u(-0.2, 0.2);
    oddaxis::Vec3 target = oddaxis::normalized(oddaxis::Vec3{0.31, -0.52, 0.64});
    oddaxis::DegreeReport preimage;
    bool found = false;
    std::string note;
    for (int attempt = 0; attempt < 8 && !found; ++attempt) {
        try {
            preimage = oddaxis::degree_by_preimage(g, target, mesh);
            found = true;
        } catch (const oddaxis::IrregularValueError&) {
            note = "target perturbed past an irregular value";
            target = oddaxis::normalized(
                oddaxis::Vec3{target.x + u(rng), target.y + u(rng), target.z + u(rng)});
        }
    }
    if (!found) throw oddaxis::SearchFailure("no regular preimage target found", 0.0);

    const bool agree = integral.rounded == preimage.rounded;
    const bool pass = agree && integral.certified && integral.residual < tol.at("residual");

    Json results{{"map", map_spec},
                 {"integral",
                  {{"raw", integral.raw},
                   {"rounded", integral.rounded},
                   {"residual", integral.residual},
                   {"certified", integral.certified}}},
                 {"preimage",
                  {{"rounded", preimage.rounded},
                   {"target", {target.x, target.y, target.z}}}},
                 {"agree", agree}};
    if (!note.empty()) results["note"] = note;

    Json report{{"command", "degree"},
                {"config", config_json(cfg, tol)},
                {"inputs_digest", digest_string(digest_src)},
                {"results", results},
                {"pass", pass}};
    emit_report(report, cfg);
    return pass ? 0 : 3;
}

int cmd_swtable(int k_max, int n_max, const RunConfig& cfg) {
    const auto tol = resolve_tolerances({}, cfg.tol_overrides);
    Json rows = Json::array();
    std::string csv = "k";
    for (int n = 1; n <= n_max; ++n) csv += ",n=" + std::to_string(n);
    csv += "\n";
    for (int k = 1; k <= k_max; ++k) {
        Json row{{"k", k}};
        Json by_n = Json::array();
        csv += std::to_string(k);
        for (int n = 1; n <= n_max; ++n) {
            const bool trivial = oddaxis::is_sw_trivial(k, n);
            by_n.push_back(trivial);
            csv += trivial ? ",trivial" : ",obstructed";
        }
        row["trivial_by_n"] = by_n;
        rows.push_back(row);
        csv += "\n";
    }

    // The three cases the table is meant to display.
    bool odd_obstructed_rp1 = true;
    for (int k = 1; k <= k_max; k += 2) odd_obstructed_rp1 &= !oddaxis::is_sw_trivial(k, 1);
    bool twice_odd_obstructed_rp2 = true;
    for (int k = 2; k <= k_max; k += 4) twice_odd_obstructed_rp2 &= !oddaxis::is_sw_trivial(k, 2);
    const bool four_gamma_trivial = oddaxis::is_sw_trivial(4, 2);

    Json results{{"k_max", k_max},
                 {"n_max", n_max},
                 {"rows", rows},
                 {"highlights",
                  {{"odd_k_obstructed_on_rp1", odd_obstructed_rp1},
                   {"twice_odd_k_obstructed_on_rp2", twice_odd_obstructed_rp2},
                   {"four_gamma_trivial_on_rp2", four_gamma_trivial}}}};
    const bool pass = odd_obstructed_rp1 && twice_odd_obstructed_rp2 && four_gamma_trivial;

    Json report{{"command", "swtable"},
                {"config", config_json(cfg, tol)},
                {"inputs_digest",
                 digest_string(std::to_string(k_max) + "x" + std::to_string(n_max))},
                {"results", results},
                {"pass", pass}};
    emit_report(report, cfg);
    emit_csv_file(cfg, csv);
    return pass ? 0 : 3;
}

int cmd_eigen(const std::string& path, const RunConfig& cfg) {
    const auto tol = resolve_tolerances({{"residual", 1e-8}}, cfg.tol_overrides);
    const std::string bytes = read_file(path);
    const oddaxis::ComplexMatrix t =
        oddaxis::complex_matrix_from_json(Json::parse(bytes));
    if (t.size() % 2 == 0)
        throw oddaxis::ParameterError(
            "eigen needs odd dimension (the constructive route covers n = 2m+1 only)");

    const oddaxis::SphereMesh mesh = oddaxis::icosphere(cfg.mesh_level);
    const oddaxis::SpectralCertificate cert = oddaxis::complex_odd_eigen(t, mesh);
    const bool pass = cert.residual <= tol.at("residual");

    Json report{{"command", "eigen"},
                {"config", config_json(cfg, tol)},
                {"inputs_digest", digest_string(bytes)},
                {"results", oddaxis::certificate_to_json(cert)},
                {"pass", pass}};
    emit_report(report, cfg);
    return pass ? 0 : 3;
}

int cmd_span(const std::string& path, const RunConfig& cfg) {
    const auto tol = resolve_tolerances({{"sigma_min", 1e-6}}, cfg.tol_overrides);
    const std::string bytes = read_file(path);
    const oddaxis::SpanFamily fam = oddaxis::span_family_from_json(Json::parse(bytes));
    if (fam.r() != 3)
        throw oddaxis::ParameterError("span needs exactly three matrices, got " +
                                      std::to_string(fam.r()));

    const oddaxis::SphereMesh mesh = oddaxis::icosphere(cfg.mesh_level);
    const oddaxis::MinRankResult res = oddaxis::min_rank_over_sphere(fam, mesh);

    const bool singular_expected = fam.q % 4 == 2;
    const bool pass = singular_expected ? res.sigma_min < tol.at("sigma_min") : true;
    std::string flag;
    if (!singular_expected)
        flag = "no singularity expected (q % 4 = " + std::to_string(fam.q % 4) + ")";
    else if (!pass)
        flag = "singular combination not found below tolerance";
    else if (res.warn)
        flag = "minimum in the ambiguous band";

    Json results{{"q", fam.q},
                 {"sigma_min", res.sigma_min},
                 {"witness", res.witness},
                 {"estimated_rank", res.estimated_rank},
                 {"singular_expected", singular_expected}};
    if (!flag.empty()) results["flag"] = flag;

    Json report{{"command", "span"},
                {"config", config_json(cfg, tol)},
                {"inputs_digest", digest_string(bytes)},
                {"results", results},
                {"pass", pass}};
    emit_report(report, cfg);

    if (cfg.emit_csv) {
        std::string csv = "index,x,y,z,sigma_min_estimate\n";
        for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
            const oddaxis::Vec3& v = mesh.vertices[i];
            const double est = oddaxis::sigma_min_estimate(
                oddaxis::span_morphism(fam, {v.x, v.y, v.z}));
            csv += std::to_string(i) + "," + std::to_string(v.x) + "," + std::to_string(v.y) +
                   "," + std::to_string(v.z) + "," + std::to_string(est) + "\n";
        }
        emit_csv_file(cfg, csv);
    }
    return pass ? 0 : 3;
}

int cmd_bundle(const std::string& bundle_case, const RunConfig& cfg) {
    const auto tol = resolve_tolerances({{"defect", 1e-12}, {"det", 1e-8}, {"sigma_min", 1e-5}},
                                        cfg.tol_overrides);
    const oddaxis::SphereMesh mesh = oddaxis::icosphere(cfg.mesh_level);
    Json results;
    bool pass = false;
    std::string csv;

    if (bundle_case == "two-gamma-rp1") {
        const auto secs = oddaxis::canonical_sections_2gamma();
        const std::vector<oddaxis::CircleSection> v{secs[0], secs[1]};
        double equiv = 0.0, det_defect = 0.0, gram_defect = 0.0;
        for (const auto& sec : secs) equiv = std::max(equiv, check_equivariance(sec, 512));
        for (const oddaxis::Vec2& p : oddaxis::circle_grid(512)) {
            const oddaxis::RealMatrix m = section_matrix(v, p);
            det_defect = std::max(det_defect, std::fabs(oddaxis::determinant(m) - 1.0));
            const oddaxis::RealMatrix gram = m * m.transposed();
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    gram_defect =
                        std::max(gram_defect, std::fabs(gram(i, j) - (i == j ? 1.0 : 0.0)));
        }
        pass = equiv <= tol.at("defect") && det_defect <= tol.at("defect") &&
               gram_defect <= tol.at("defect");
        results = Json{{"case", bundle_case},
                       {"equivariance_defect", equiv},
                       {"det_defect", det_defect},
                       {"orthonormality_defect", gram_defect}};
    } else if (bundle_case == "four-gamma-rp2") {
        const auto secs = oddaxis::canonical_sections_4gamma();
        const std::vector<oddaxis::SphereSection> v{secs[0], secs[1], secs[2], secs[3]};
        double equiv = 0.0, det_defect = 0.0, gram_defect = 0.0;
        for (const auto& sec : secs) equiv = std::max(equiv, check_equivariance(sec, mesh));
        auto probe = [&](const oddaxis::Vec3& s) {
            const oddaxis::RealMatrix m = section_matrix(v, s);
            det_defect = std::max(det_defect, std::fabs(oddaxis::determinant(m) - 1.0));
            const oddaxis::RealMatrix gram = m * m.transposed();
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    gram_defect =
                        std::max(gram_defect, std::fabs(gram(i, j) - (i == j ? 1.0 : 0.0)));
        };
        for (const oddaxis::Vec3& s : mesh.vertices) probe(s);
        for (const oddaxis::Vec3& s : mesh.face_centroid) probe(s);
        pass = equiv <= tol.at("defect") && det_defect <= tol.at("defect") &&
               gram_defect <= tol.at("defect");
        results = Json{{"case", bundle_case},
                       {"equivariance_defect", equiv},
                       {"det_defect", det_defect},
                       {"orthonormality_defect", gram_defect},
                       {"samples", mesh.vertices.size() + mesh.face_centroid.size()}};
    } else if (bundle_case == "gamma-eps-rp1") {
        std::mt19937_64 rng(cfg.seed);
        const auto pair = oddaxis::random_compliant_pair_rp1(rng);
        const oddaxis::Rp1Witness w = oddaxis::rank_drop_search_rp1(pair);
        pass = w.det_abs < tol.at("det");
        results = Json{{"case", bundle_case},
                       {"witness", {w.point.x, w.point.y}},
                       {"det_abs", w.det_abs},
                       {"bracket_width", w.bracket_width},
                       {"degenerate_everywhere", w.degenerate_everywhere}};
        if (cfg.emit_csv) {
            csv = "theta,det\n";
            const auto grid = oddaxis::circle_grid(1024);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const double th = std::atan2(grid[k].y, grid[k].x);
                csv += std::to_string(th) + "," +
                       std::to_string(oddaxis::determinant(section_matrix(pair, grid[k]))) +
                       "\n";
            }
        }
    } else if (bundle_case == "two-gamma-eps-rp2") {
        std::mt19937_64 rng(cfg.seed);
        const auto secs = oddaxis::random_compliant_triple_rp2(rng);
        const oddaxis::Rp2Witness w = oddaxis::rank_drop_search_rp2(secs, mesh);

        // Structured demonstration: columns from the identity and a rotation,
        // both antipode-preserving with odd degree; the third column constant.
        const double ang = 0.3;
        auto make = [ang](int i) {
            return oddaxis::SphereSection({-1, -1, 1}, [i, ang](const oddaxis::Vec3& s) {
                const double rx = s.x * std::cos(ang) - s.y * std::sin(ang);
                const double ry = s.x * std::sin(ang) + s.y * std::cos(ang);
                const oddaxis::Vec3 rs{rx, ry, s.z};
                const double c[3] = {0.2, -0.4, 0.9};
                return std::vector<double>{s[i], rs[i], c[i]};
            });
        };
        const std::vector<oddaxis::SphereSection> demo{make(0), make(1), make(2)};
        const oddaxis::RhoExtraction ext = oddaxis::extract_rho_maps(demo, mesh);
        Json rho_trace;
        if (ext.short_circuit) {
            rho_trace = Json{{"short_circuit", true},
                             {"witness", {ext.witness.x, ext.witness.y, ext.witness.z}},
                             {"sigma_min", ext.sigma_min}};
        } else {
            const int d1 = oddaxis::brouwer_degree(*ext.rho1, mesh).rounded;
            const int d2 = oddaxis::brouwer_degree(*ext.rho2, mesh).rounded;
            const int d2n = oddaxis::brouwer_degree(oddaxis::negate(*ext.rho2), mesh).rounded;
            const oddaxis::Rp2Witness wd = oddaxis::rank_drop_search_rp2(demo, mesh);
            rho_trace = Json{
                {"short_circuit", false},
                {"antipode_defect_rho1", oddaxis::antipode_defect(*ext.rho1, mesh)},
                {"antipode_defect_rho2", oddaxis::antipode_defect(*ext.rho2, mesh)},
                {"deg_rho1", d1},
                {"deg_rho2", d2},
                {"deg_neg_rho2", d2n},
                {"degrees_odd_and_equal", d1 == d2 && d1 % 2 != 0},
                {"negation_flips_sign", d2n == -d2},
                {"rank_drop", {{"witness", {wd.point.x, wd.point.y, wd.point.z}},
                               {"sigma_min", wd.sigma_min}}}};
        }

        pass = w.sigma_min < tol.at("sigma_min");
        results = Json{{"case", bundle_case},
                       {"random_triple",
                        {{"witness", {w.point.x, w.point.y, w.point.z}},
                         {"sigma_min", w.sigma_min},
                         {"warn", w.warn}}},
                       {"rho_demo", rho_trace}};
    } else {
        throw oddaxis::ParameterError("unknown bundle case: " + bundle_case);
    }

    Json report{{"command", "bundle"},
                {"config", config_json(cfg, tol)},
                {"inputs_digest",
                 digest_string(bundle_case + ":" + std::to_string(cfg.seed))},
                {"results", results},
                {"pass", pass}};
    emit_report(report, cfg);
    if (!csv.empty()) emit_csv_file(cfg, csv);
    return pass ? 0 : 3;
}

int cmd_rh(std::int64_t n, const RunConfig& cfg) {
    const auto tol = resolve_tolerances({}, cfg.tol_overrides);
    const oddaxis::RadonHurwitzDecomposition r = oddaxis::radon_hurwitz(n);
    Json report{{"command", "rh"},
                {"config", config_json(cfg, tol)},
                {"inputs_digest", digest_string(std::to_string(n))},
                {"results",
                 {{"n", r.n}, {"b", r.b}, {"m", r.m}, {"c", r.c}, {"d", r.d}, {"rho", r.rho}}},
                {"pass", true}};
    emit_report(report, cfg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree, section, and spectrum verifications on S^1 and S^2"};
    app.require_subcommand(1);

    RunConfig cfg;

    std::string map_spec;
    CLI::App* degree = app.add_subcommand("degree", "Brouwer degree of a sphere map");
    degree->add_option("--map", map_spec, "builtin name or sample:FILE")->required();
    add_common_options(degree, cfg);

    int k_max = 8, n_max = 2;
    CLI::App* swtable = app.add_subcommand("swtable", "total-class triviality table");
    swtable->add_option("--k-max", k_max, "largest bundle multiplicity")
        ->check(CLI::Range(1, 4096));
    swtable->add_option("--n-max", n_max, "largest base dimension")->check(CLI::Range(1, 64));
    add_common_options(swtable, cfg);

    std::string eigen_path;
    CLI::App* eigen = app.add_subcommand("eigen", "odd-dimension complex eigenpair");
    eigen->add_option("--input", eigen_path, "complex matrix JSON file")->required();
    add_common_options(eigen, cfg);

    std::string span_path;
    CLI::App* span = app.add_subcommand("span", "singular combination of a matrix triple");
    span->add_option("--input", span_path, "span family JSON file")->required();
    add_common_options(span, cfg);

    std::string bundle_case;
    CLI::App* bundle = app.add_subcommand("bundle", "section trivializations and obstructions");
    bundle
        ->add_option("--case", bundle_case,
                     "two-gamma-rp1 | four-gamma-rp2 | gamma-eps-rp1 | two-gamma-eps-rp2")
        ->required();
    add_common_options(bundle, cfg);

    std::int64_t rh_n = 1;
    CLI::App* rh = app.add_subcommand("rh", "Radon-Hurwitz function");
    rh->add_option("n", rh_n, "argument")->required();
    add_common_options(rh, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    oddaxis::set_worker_threads(cfg.threads);
    const auto t0 = std::chrono::steady_clock::now();
    int code = 2;
    try {
        if (!cfg.dump_mesh_path.empty()) {
            std::ofstream off(cfg.dump_mesh_path);
            if (!off) throw oddaxis::ParameterError("cannot write " + cfg.dump_mesh_path);
            oddaxis::write_off(oddaxis::icosphere(cfg.mesh_level), off);
            log_info("mesh written to " + cfg.dump_mesh_path);
        }
        if (degree->parsed()) code = cmd_degree(map_spec, cfg);
        else if (swtable->parsed()) code = cmd_swtable(k_max, n_max, cfg);
        else if (eigen->parsed()) code = cmd_eigen(eigen_path, cfg);
        else if (span->parsed()) code = cmd_span(span_path, cfg);
        else if (bundle->parsed()) code = cmd_bundle(bundle_case, cfg);
        else if (rh->parsed()) code = cmd_rh(rh_n, cfg);
    } catch (const oddaxis::ParameterError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const oddaxis::DimensionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: malformed input JSON: " << e.what() << "\n";
        return 2;
    } catch (const oddaxis::NonConvergentDegreeError& e) {
        std::cerr << "degree did not converge: " << e.what() << "\n";
        return 4;
    } catch (const oddaxis::SearchFailure& e) {
        std::cerr << "search failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    const auto t1 = std::chrono::steady_clock::now();
    log_info("wall time " +
             std::to_string(
                 std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()) +
             " ms");
    return code;
}
