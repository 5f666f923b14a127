#include "ness/cli.hpp"

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "ness/dispersion.hpp"
#include "ness/lattice.hpp"
#include "ness/level_shift.hpp"
#include "ness/quadrature.hpp"
#include "ness/quasifree.hpp"
#include "ness/radial.hpp"
#include "ness/small_system.hpp"
#include "ness/validate.hpp"

namespace ness::cli {

namespace {

using ojson = nlohmann::ordered_json;

// config-shape violations: unknown keys, missing keys, wrong types.
// Distinct from domain errors so they can map to the usage exit code.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string hash_hex(std::uint64_t h) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------- schema ---

void check_object(const ojson& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path + " must be a JSON object");
}

void check_keys(const ojson& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
    check_object(j, path);
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw SchemaError(path + ": unknown key \"" + key + "\"");
    }
}

const ojson& require_key(const ojson& j, const std::string& path, const char* key) {
    if (!j.contains(key)) throw SchemaError(path + ": missing required key \"" + key + "\"");
    return j.at(key);
}

double get_double(const ojson& j, const std::string& path, const char* key) {
    const ojson& v = require_key(j, path, key);
    if (!v.is_number()) throw SchemaError(path + "." + key + " must be a number");
    return v.get<double>();
}

double get_double_or(const ojson& j, const std::string& path, const char* key, double dflt) {
    if (!j.contains(key)) return dflt;
    return get_double(j, path, key);
}

int get_int(const ojson& j, const std::string& path, const char* key) {
    const ojson& v = require_key(j, path, key);
    if (!v.is_number_integer()) throw SchemaError(path + "." + key + " must be an integer");
    return v.get<int>();
}

std::vector<double> get_double_list(const ojson& j, const std::string& path, const char* key) {
    const ojson& v = require_key(j, path, key);
    if (!v.is_array() || v.empty())
        throw SchemaError(path + "." + key + " must be a non-empty array of numbers");
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number()) throw SchemaError(path + "." + key + " must contain only numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

Eigen::MatrixXd get_square_matrix(const ojson& j, const std::string& path, const char* key,
                                  int d) {
    const ojson& v = require_key(j, path, key);
    if (!v.is_array() || static_cast<int>(v.size()) != d)
        throw SchemaError(path + "." + key + " must be a " + std::to_string(d) + "x" +
                          std::to_string(d) + " array");
    Eigen::MatrixXd m(d, d);
    for (int i = 0; i < d; ++i) {
        const ojson& row = v.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw SchemaError(path + "." + key + " row " + std::to_string(i) + " must have " +
                              std::to_string(d) + " numbers");
        for (int c = 0; c < d; ++c) {
            if (!row.at(c).is_number())
                throw SchemaError(path + "." + key + " must contain only numbers");
            m(i, c) = row.at(c).get<double>();
        }
    }
    return m;
}

FormFactor load_form_factor(const ojson& ff, const std::string& path) {
    check_keys(ff, path, {"type", "value", "lo", "hi", "k_lo", "k_hi", "ramp"});
    std::string type = require_key(ff, path, "type").is_string()
                           ? ff.at("type").get<std::string>()
                           : throw SchemaError(path + ".type must be a string");
    if (type == "constant") {
        check_keys(ff, path, {"type", "value"});
        return FormFactor(RadialFunction::constant(get_double(ff, path, "value")));
    }
    if (type == "bump_t") {
        check_keys(ff, path, {"type", "lo", "hi"});
        return FormFactor::bump_on_interval(get_double(ff, path, "lo"),
                                            get_double(ff, path, "hi"));
    }
    if (type == "plateau_k") {
        check_keys(ff, path, {"type", "k_lo", "k_hi", "ramp"});
        return FormFactor(RadialFunction::even_k_plateau(get_double(ff, path, "k_lo"),
                                                         get_double(ff, path, "k_hi"),
                                                         get_double(ff, path, "ramp")));
    }
    throw SchemaError(path + ".type must be one of constant|bump_t|plateau_k");
}

ModelInstance load_instance(const ojson& inst_j) {
    const std::string path = "instance";
    check_keys(inst_j, path,
               {"reference", "gamma", "energies", "Y_re", "Y_im", "form_factor", "beta_plus",
                "beta_minus", "v", "a_bound", "lambda"});
    TemperaturePair temps{get_double(inst_j, path, "beta_plus"),
                          get_double(inst_j, path, "beta_minus")};

    if (inst_j.contains("reference")) {
        for (const char* banned : {"gamma", "energies", "Y_re", "Y_im", "form_factor", "v"})
            if (inst_j.contains(banned))
                throw SchemaError(path + ": \"" + banned +
                                  "\" conflicts with \"reference\" (the reference family "
                                  "fixes it)");
        const ojson& ref = inst_j.at("reference");
        check_keys(ref, path + ".reference", {"v", "b"});
        ModelInstance inst =
            build_appendix_instance(get_double(ref, path + ".reference", "v"),
                                    get_double(ref, path + ".reference", "b"), temps);
        inst.a_bound = get_double_or(inst_j, path, "a_bound", inst.a_bound);
        inst.lambda = get_double_or(inst_j, path, "lambda", inst.lambda);
        return inst;
    }

    const ojson& energies_j = require_key(inst_j, path, "energies");
    if (!energies_j.is_array() || energies_j.empty())
        throw SchemaError(path + ".energies must be a non-empty array of numbers");
    const int d = static_cast<int>(energies_j.size());
    Eigen::VectorXd energies(d);
    for (int i = 0; i < d; ++i) {
        if (!energies_j.at(i).is_number())
            throw SchemaError(path + ".energies must contain only numbers");
        energies[i] = energies_j.at(i).get<double>();
    }

    Eigen::MatrixXd y_re = get_square_matrix(inst_j, path, "Y_re", d);
    Eigen::MatrixXd y_im = inst_j.contains("Y_im") ? get_square_matrix(inst_j, path, "Y_im", d)
                                                   : Eigen::MatrixXd::Zero(d, d);
    Eigen::MatrixXcd y = y_re.cast<cdouble>() + cdouble(0.0, 1.0) * y_im.cast<cdouble>();

    ModelInstance inst{DispersionParams{get_double(inst_j, path, "gamma")},
                       SmallSystem(energies, y),
                       load_form_factor(require_key(inst_j, path, "form_factor"),
                                        path + ".form_factor"),
                       temps,
                       get_double(inst_j, path, "v"),
                       get_double_or(inst_j, path, "a_bound", 0.5),
                       get_double_or(inst_j, path, "lambda", 0.01)};
    if (!(inst.v > 0.0 && inst.v < 1.0))
        throw std::domain_error("instance.v must lie in (0,1)");
    if (!(inst.a_bound > 0.0)) throw std::domain_error("instance.a_bound must be positive");
    return inst;
}

// validated shape of each command section; sections other than the invoked
// one are still shape-checked so config typos never pass silently
struct Config {
    ojson raw;
    std::uint64_t hash = 0;
    ModelInstance instance;

    explicit Config(ModelInstance inst) : instance(std::move(inst)) {}

    // ness
    int n_k = 0;
    int window_half_width = 0;
    // dynamics
    int half_width = 0;
    std::vector<double> horizons;
    int samples = 0;
    int probe_half_width = 0;
    // levelshift
    double kernel_tol = 1e-8;
    // gapscan
    double beta_center = 0.0;
    std::vector<double> deltas;
    std::vector<double> v_scan;
    double gamma_fixed = 0.3;
    std::vector<double> delta_scan;
    double v_fixed = 0.25;
    double coupling_constant = 1.0;

    bool has_ness = false, has_dynamics = false, has_gapscan = false;
};

Config load_config(const std::string& file, const std::string& need_section) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw SchemaError("cannot open config file " + file);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();

    ojson raw;
    try {
        raw = ojson::parse(bytes);
    } catch (const ojson::parse_error& e) {
        throw SchemaError(std::string("config is not valid JSON: ") + e.what());
    }
    check_keys(raw, "config", {"instance", "ness", "dynamics", "levelshift", "gapscan"});
    Config cfg(load_instance(require_key(raw, "config", "instance")));
    cfg.raw = std::move(raw);
    cfg.hash = fnv1a64(bytes);

    if (cfg.raw.contains("ness")) {
        const ojson& s = cfg.raw.at("ness");
        check_keys(s, "ness", {"n_k", "window_half_width"});
        cfg.n_k = get_int(s, "ness", "n_k");
        cfg.window_half_width = get_int(s, "ness", "window_half_width");
        if (cfg.n_k < 2 || cfg.n_k % 2 != 0)
            throw SchemaError("ness.n_k must be a positive even integer");
        if (cfg.window_half_width < 1) throw SchemaError("ness.window_half_width must be >= 1");
        cfg.has_ness = true;
    }
    if (cfg.raw.contains("dynamics")) {
        const ojson& s = cfg.raw.at("dynamics");
        check_keys(s, "dynamics", {"half_width", "horizons", "samples", "probe_half_width"});
        cfg.half_width = get_int(s, "dynamics", "half_width");
        cfg.horizons = get_double_list(s, "dynamics", "horizons");
        cfg.samples = get_int(s, "dynamics", "samples");
        cfg.probe_half_width = get_int(s, "dynamics", "probe_half_width");
        cfg.has_dynamics = true;
    }
    if (cfg.raw.contains("levelshift")) {
        const ojson& s = cfg.raw.at("levelshift");
        check_keys(s, "levelshift", {"kernel_tol"});
        cfg.kernel_tol = get_double_or(s, "levelshift", "kernel_tol", 1e-8);
        if (!(cfg.kernel_tol > 0.0)) throw SchemaError("levelshift.kernel_tol must be > 0");
    }
    if (cfg.raw.contains("gapscan")) {
        const ojson& s = cfg.raw.at("gapscan");
        check_keys(s, "gapscan",
                   {"beta_center", "deltas", "v_scan", "gamma_fixed", "delta_scan", "v_fixed",
                    "coupling_constant"});
        cfg.beta_center = get_double(s, "gapscan", "beta_center");
        cfg.deltas = get_double_list(s, "gapscan", "deltas");
        cfg.v_scan = s.contains("v_scan") ? get_double_list(s, "gapscan", "v_scan")
                                          : std::vector<double>{0.3, 0.1, 0.03, 0.01, 0.003};
        cfg.gamma_fixed = get_double_or(s, "gapscan", "gamma_fixed", 0.3);
        cfg.delta_scan = s.contains("delta_scan")
                             ? get_double_list(s, "gapscan", "delta_scan")
                             : std::vector<double>{0.3, 0.1, 0.03, 0.01, 0.003};
        cfg.v_fixed = get_double_or(s, "gapscan", "v_fixed", 0.25);
        cfg.coupling_constant = get_double_or(s, "gapscan", "coupling_constant", 1.0);
        cfg.has_gapscan = true;
    }

    if (need_section == "ness" && !cfg.has_ness)
        throw SchemaError("config lacks the \"ness\" section required by this command");
    if (need_section == "dynamics" && !cfg.has_dynamics)
        throw SchemaError("config lacks the \"dynamics\" section required by this command");
    if (need_section == "gapscan" && !cfg.has_gapscan)
        throw SchemaError("config lacks the \"gapscan\" section required by this command");
    return cfg;
}

// ---------------------------------------------------------------- output ---

std::string csv_header(const Config& cfg, const std::string& command,
                       const std::string& columns) {
    std::string h;
    h += std::string("# artifact_version: ") + kArtifactVersion + "\n";
    h += "# config_hash: " + hash_hex(cfg.hash) + "\n";
    h += "# command: " + command + "\n";
    h += "# columns: " + columns + "\n";
    return h;
}

void write_file(const std::filesystem::path& out_dir, const std::string& name,
                const std::string& content) {
    std::filesystem::create_directories(out_dir);
    std::ofstream out(out_dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + (out_dir / name).string());
    out << content;
}

ojson json_meta(const Config& cfg, const std::string& command) {
    ojson j;
    j["artifact_version"] = kArtifactVersion;
    j["config_hash"] = hash_hex(cfg.hash);
    j["command"] = command;
    return j;
}

// deterministic static-chunk parallel map: worker w handles indices
// w, w+T, w+2T, ...; every result lands in its own slot so the output is
// identical for any thread count
void parallel_for(int n, const std::function<void(int)>& body) {
    const int workers = std::min(thread_cap(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mu;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < n; i += workers) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

// -------------------------------------------------------------- commands ---

int cmd_validate(const Config& cfg, const std::filesystem::path& out) {
    ValidationReport rep = validate_instance(cfg.instance);
    ojson j = json_meta(cfg, "validate");
    const ojson rep_j = rep.to_json(cfg.instance);
    for (const auto& [k, v] : rep_j.items()) j[k] = v;
    write_file(out, "report.json", j.dump(2) + "\n");
    return rep.all_pass() ? kExitOk : kExitDomain;
}

int cmd_ness(const Config& cfg, const std::filesystem::path& out) {
    const auto& temps = cfg.instance.temps;
    const auto& params = cfg.instance.params;

    const int n = cfg.n_k;
    const double h = 2.0 * M_PI / n;
    std::vector<double> rho(n), asym(n);
    parallel_for(n, [&](int i) {
        double k = -M_PI + (i + 0.5) * h;
        rho[i] = rho_of_k(k, temps, params);
        asym[i] = std::abs(rho[i] - rho_of_k(-k, temps, params));
    });
    std::string csv = csv_header(
        cfg, "ness",
        "k [rad], rho [occupation in [0,1]], asymmetry [|rho(k)-rho(-k)|, dimensionless]");
    for (int i = 0; i < n; ++i) {
        double k = -M_PI + (i + 0.5) * h;
        csv += fmt(k) + "," + fmt(rho[i]) + "," + fmt(asym[i]) + "\n";
    }
    write_file(out, "rho.csv", csv);

    CovarianceMatrix C = ness_covariance(cfg.window_half_width, temps, params);
    std::string cov = csv_header(
        cfg, "ness", "i [site], j [site], re [dimensionless], im [dimensionless]");
    const int w = cfg.window_half_width;
    for (int i = -w; i <= w; ++i)
        for (int j = -w; j <= w; ++j) {
            cdouble c = C.M(C.index_of(i), C.index_of(j));
            cov += std::to_string(i) + "," + std::to_string(j) + "," + fmt(c.real()) + "," +
                   fmt(c.imag()) + "\n";
        }
    write_file(out, "covariance.csv", cov);
    return kExitOk;
}

int cmd_dynamics(const Config& cfg, const std::filesystem::path& out) {
    const auto& temps = cfg.instance.temps;
    const auto& params = cfg.instance.params;
    const LatticeWindow window{cfg.half_width};
    const CovarianceMatrix steady = ness_covariance(cfg.probe_half_width, temps, params);

    struct Row {
        double T = 0.0, dev = 0.0, drift = 0.0;
        bool warn = false;
    };
    const int n = static_cast<int>(cfg.horizons.size());
    std::vector<Row> rows(n);
    parallel_for(n, [&](int i) {
        const double T = cfg.horizons[i];
        ErgodicMeanResult res =
            ergodic_mean(window, temps, params, T, cfg.samples, cfg.probe_half_width);
        rows[i].T = T;
        rows[i].dev = (res.mean.M - steady.M).cwiseAbs().maxCoeff();
        rows[i].warn = res.horizon_warning;

        Evolver evolver(window, params);
        CovarianceMatrix c0 = initial_two_temperature_covariance(window, temps, params);
        EvolutionState evolved = evolver.evolve({c0, 0.0}, T);
        rows[i].drift = std::abs(evolved.C.M.trace() - c0.M.trace());
    });

    std::string csv = csv_header(
        cfg, "dynamics",
        "T [time], max_abs_dev [max entrywise |ergodic mean - steady state|], trace_drift "
        "[|tr C(T) - tr C(0)|], horizon_warning [0/1]");
    for (const auto& r : rows)
        csv += fmt(r.T) + "," + fmt(r.dev) + "," + fmt(r.drift) + "," +
               (r.warn ? "1" : "0") + "\n";
    write_file(out, "dynamics.csv", csv);
    return kExitOk;
}

int cmd_levelshift(const Config& cfg, const std::filesystem::path& out) {
    const ModelInstance& inst = cfg.instance;
    const auto spec = liouville_spectrum(inst.sys);

    ojson j = json_meta(cfg, "levelshift");
    j["kernel_tol"] = cfg.kernel_tol;
    j["levels"] = ojson::array();
    for (const auto& lvl : spec.levels) {
        LevelShiftOperator op = assemble_gamma(lvl.e, inst.sys, inst.f, inst.temps,
                                               inst.params);
        KernelReport rep = kernel_report(op, cfg.kernel_tol);

        ojson lj;
        lj["e"] = lvl.e;
        lj["basis"] = ojson::array();
        for (auto [a, b] : op.basis) lj["basis"].push_back({a, b});
        const int D = static_cast<int>(op.G.rows());
        ojson re = ojson::array(), im = ojson::array();
        for (int r = 0; r < D; ++r) {
            ojson rr = ojson::array(), ri = ojson::array();
            for (int c = 0; c < D; ++c) {
                rr.push_back(op.G(r, c).real());
                ri.push_back(op.G(r, c).imag());
            }
            re.push_back(rr);
            im.push_back(ri);
        }
        lj["G_re"] = re;
        lj["G_im"] = im;
        lj["eigenvalues"] = std::vector<double>(
            rep.eigenvalues.data(), rep.eigenvalues.data() + rep.eigenvalues.size());
        lj["kernel_dim"] = rep.kernel_dim;
        lj["min_eig"] = rep.min_eig;
        lj["gamma_e"] = rep.gamma_e;
        lj["gap_defined"] = rep.gap_defined;

        if (lvl.e == 0.0 && inst.temps.beta_plus == inst.temps.beta_minus &&
            rep.kernel_dim >= 1) {
            Eigen::VectorXd c = gibbs_vector(inst.sys, inst.temps.beta_plus);
            cdouble overlap = 0.0;
            for (int i = 0; i < inst.sys.dim(); ++i)
                overlap += c[i] * std::conj(rep.kernel_basis(i, 0));
            lj["gibbs_overlap"] = std::abs(overlap);
        }
        j["levels"].push_back(lj);
    }
    write_file(out, "levelshift.json", j.dump(2) + "\n");
    return kExitOk;
}

int cmd_gapscan(const Config& cfg, const std::filesystem::path& out) {
    const ModelInstance& inst = cfg.instance;
    GapScanResult scan = gap_scan(inst.sys, inst.f, inst.params, cfg.beta_center, cfg.deltas);

    std::string csv = csv_header(cfg, "gapscan",
                                 "delta_beta [beta_plus - beta_minus], gamma0 [min eigenvalue "
                                 "of the zero-eigenvalue level operator]");
    csv += "# fitted_loglog_slope: " + fmt(scan.slope) + "\n";
    for (const auto& row : scan.rows) csv += fmt(row.delta_beta) + "," + fmt(row.gamma0) + "\n";
    write_file(out, "gapscan.csv", csv);

    std::string l1 = csv_header(
        cfg, "gapscan",
        "scan [small_v|small_delta], x [scanned variable], v [region level], gamma_e [gap], "
        "lambda1 [coupling threshold], active_index [0-3], active_term [name], "
        "active_exponent [exact rational in the scanned variable]");
    for (double v : cfg.v_scan) {
        int idx = lambda1_active_index(v, cfg.gamma_fixed);
        const auto& term = lambda1_terms()[idx];
        l1 += std::string("small_v,") + fmt(v) + "," + fmt(v) + "," + fmt(cfg.gamma_fixed) +
              "," + fmt(lambda1_scaling(v, cfg.gamma_fixed, cfg.coupling_constant)) + "," +
              std::to_string(idx) + "," + term.name + "," + term.v_exp.str() + "\n";
    }
    for (double db : cfg.delta_scan) {
        double g = db * db;
        int idx = lambda1_active_index(cfg.v_fixed, g);
        const auto& term = lambda1_terms()[idx];
        l1 += std::string("small_delta,") + fmt(db) + "," + fmt(cfg.v_fixed) + "," + fmt(g) +
              "," + fmt(lambda1_scaling(cfg.v_fixed, g, cfg.coupling_constant)) + "," +
              std::to_string(idx) + "," + term.name + "," + term.g_exp.times(2).str() + "\n";
    }
    write_file(out, "lambda1.csv", l1);
    return kExitOk;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

int thread_cap() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("NESS_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end && *end == '\0' && n >= 1 && n < 1024) return std::min<int>(hw, n);
    }
    return hw;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"steady-state analysis toolkit for the two-temperature lattice Fermi gas"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    std::string chosen;
    for (const char* name : {"validate", "ness", "dynamics", "levelshift", "gapscan"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON config file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "output directory")->required();
        sub->callback([&chosen, name] { chosen = name; });
    }

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Config cfg = load_config(config_path, chosen);
        const std::filesystem::path out(out_dir);
        if (chosen == "validate") return cmd_validate(cfg, out);
        if (chosen == "ness") return cmd_ness(cfg, out);
        if (chosen == "dynamics") return cmd_dynamics(cfg, out);
        if (chosen == "levelshift") return cmd_levelshift(cfg, out);
        if (chosen == "gapscan") return cmd_gapscan(cfg, out);
        std::fprintf(stderr, "error: unknown command\n");
        return kExitUsage;
    } catch (const SchemaError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitUsage;
    } catch (const BandEdgeError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kExitNumerical;
    } catch (const QuadratureError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kExitNumerical;
    } catch (const std::filesystem::filesystem_error& e) {
        std::fprintf(stderr, "filesystem error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDomain;
    }
}

}  // namespace ness::cli
