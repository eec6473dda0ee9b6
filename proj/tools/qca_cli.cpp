// qca: reproduction pipelines for the two-ring cellular-automaton study.
//
// Subcommands:
//   eca-run         noise-free space-time diagrams
//   classical-sweep compression slope S_delta over (N, gamma*t_c) with
//                   finite-size extrapolation when enough sizes are given
//   phase-diagram   quantum (t_c, phi) grid: S_delta from majority strings
//                   plus entanglement negativity across the ring cut
//   vqs-bench       variational-circuit benchmark against the dense integrator
//   rk-verify       dark-state and steady-state structure checks
//
// Every artifact embeds (version, config hash, master seed) and reruns are
// byte-identical. Environment: QCA_OUTPUT_DIR overrides --out; QCA_THREADS is
// accepted as a thread cap (all pipelines here are deterministic and
// single-threaded, so it is recorded but has no effect).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "qca/io.hpp"
#include "qca/pipeline.hpp"

using namespace qca;
using nlohmann::json;

namespace {

std::string resolve_out(std::string out) {
    if (const char* env = std::getenv("QCA_OUTPUT_DIR")) out = env;
    std::filesystem::create_directories(out);
    return out;
}

std::string fd(double v) { return fmt_double(v); }

RunConfig load_config(const std::string& path) {
    return path.empty() ? RunConfig{} : RunConfig::parse_file(path);
}

void put(RunConfig& cfg, const std::string& k, const std::string& v) { cfg.kv[k] = v; }
void put(RunConfig& cfg, const std::string& k, double v) { cfg.kv[k] = fmt_double(v); }
void put(RunConfig& cfg, const std::string& k, long v) { cfg.kv[k] = std::to_string(v); }

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt_double(v[i]);
    return s;
}

} // namespace

static int cmd_eca_run(const std::string& config_path, int rule, int n, int steps,
                       std::string initial, std::string out_dir) {
    RunConfig cfg = load_config(config_path);
    rule = static_cast<int>(cfg.integer("rule", rule));
    n = static_cast<int>(cfg.integer("n_sites", n));
    steps = static_cast<int>(cfg.integer("cycles", steps));
    initial = cfg.str("initial_bits", initial);
    out_dir = resolve_out(cfg.str("output_dir", out_dir));
    put(cfg, "rule", static_cast<long>(rule));
    put(cfg, "n_sites", static_cast<long>(n));
    put(cfg, "cycles", static_cast<long>(steps));
    put(cfg, "initial_bits", initial);

    const RuleSet r = rule_from_number(rule);
    Config c0(0, n);
    if (initial.empty()) c0.set(n / 2, 1);
    else c0 = Config::from_string(initial);
    SpaceTimeHistory h;
    h.n = c0.n;
    h.rows.push_back(c0);
    for (int t = 0; t < steps; ++t) h.rows.push_back(step(r, h.rows.back()));

    write_pbm(h, out_dir + "/eca.pbm");
    CsvWriter csv(out_dir + "/eca.csv", {"t", "row"}, cfg, 0);
    for (std::size_t t = 0; t < h.rows.size(); ++t)
        csv.row({std::to_string(t), h.rows[t].to_string()});
    std::printf("eca-run: rule %d, %d sites, %d steps -> %s/eca.{csv,pbm}\n", rule, c0.n, steps,
                out_dir.c_str());
    return 0;
}

static int cmd_classical_sweep(const std::string& config_path, std::vector<double> sizes,
                               std::vector<double> tcs, std::string out_dir) {
    RunConfig cfg = load_config(config_path);
    ClassicalParams base;
    base.rule = static_cast<int>(cfg.integer("rule", base.rule));
    base.gamma = cfg.num("gamma_per_time", base.gamma);
    base.n_states = static_cast<int>(cfg.integer("n_initial_states", base.n_states));
    base.cycles = static_cast<int>(cfg.integer("cycles", base.cycles));
    base.samples = static_cast<int>(cfg.integer("samples", base.samples));
    base.stride = static_cast<int>(cfg.integer("stride", base.stride));
    base.seed = static_cast<std::uint64_t>(cfg.integer("master_seed", 777));
    base.n_boot = static_cast<int>(cfg.integer("bootstrap_resamples", base.n_boot));
    base.sampler = cfg.str("sampler", "bernoulli") == "gillespie" ? Sampler::gillespie
                                                                  : Sampler::bernoulli;
    sizes = cfg.num_list("sizes", sizes);
    tcs = cfg.num_list("t_c_list", tcs);
    out_dir = resolve_out(cfg.str("output_dir", out_dir));
    put(cfg, "rule", static_cast<long>(base.rule));
    put(cfg, "gamma_per_time", base.gamma);
    put(cfg, "n_initial_states", static_cast<long>(base.n_states));
    put(cfg, "cycles", static_cast<long>(base.cycles));
    put(cfg, "samples", static_cast<long>(base.samples));
    put(cfg, "stride", static_cast<long>(base.stride));
    put(cfg, "master_seed", static_cast<long>(base.seed));
    put(cfg, "sizes", join(sizes));
    put(cfg, "t_c_list", join(tcs));

    CsvWriter sweep(out_dir + "/sweep.csv", {"n_sites", "gamma_t_c", "s_delta", "sigma_boot"}, cfg,
                    base.seed);
    CsvWriter series(out_dir + "/delta_series.csv", {"n_sites", "gamma_t_c", "t", "delta_n"}, cfg,
                     base.seed);
    std::map<int, std::pair<std::vector<double>, std::vector<double>>> per_size; // t_c -> (s, sigma)
    std::map<int, double> s_ref;
    const double ref_tc = *std::max_element(tcs.begin(), tcs.end());
    for (double ns : sizes) {
        for (double tc : tcs) {
            ClassicalParams p = base;
            p.n_sites = static_cast<int>(ns);
            p.t_c = tc / p.gamma;
            const ClassicalPoint res = classical_point(p);
            sweep.row({std::to_string(p.n_sites), fd(tc), fd(res.slope.s_delta),
                       fd(res.slope.stderr_boot)});
            for (std::size_t i = 0; i < res.ts.size(); ++i)
                series.row({std::to_string(p.n_sites), fd(tc), fd(res.ts[i]),
                            fd(res.slope.delta[i])});
            per_size[p.n_sites].first.push_back(res.slope.s_delta);
            per_size[p.n_sites].second.push_back(res.slope.stderr_boot);
            if (tc == ref_tc) s_ref[p.n_sites] = res.slope.s_delta;
            std::printf("classical-sweep: N=%2d gamma*t_c=%5.2f  S_delta=%+.4f +- %.4f\n",
                        p.n_sites, tc, res.slope.s_delta, res.slope.stderr_boot);
        }
    }

    json summary;
    summary["version"] = kVersion;
    summary["master_seed"] = base.seed;
    summary["reference_gamma_t_c"] = ref_tc;
    if (sizes.size() >= 3 && tcs.size() >= 3) {
        std::vector<FssPoint> pts;
        for (const auto& [ns, sv] : per_size) {
            FssPoint pt;
            pt.n_sites = ns;
            pt.s_ref = s_ref[ns];
            pt.transition = transition_estimate(tcs, sv.first, sv.second);
            pts.push_back(pt);
            summary["per_size_transition"][std::to_string(ns)] = pt.transition;
        }
        try {
            const FssResult fss = fss_local_maxima(pts);
            summary["transition"] = fss.transition;
            summary["transition_stderr"] = fss.stderr_fit;
            summary["retained_sizes"] = fss.retained;
            std::printf("classical-sweep: extrapolated transition gamma*t_c = %.3f +- %.3f\n",
                        fss.transition, fss.stderr_fit);
        } catch (const std::exception& e) {
            summary["transition_error"] = e.what();
        }
    }
    std::ofstream(out_dir + "/summary.json") << summary.dump(2) << "\n";
    return 0;
}

static int cmd_phase_diagram(const std::string& config_path, std::vector<double> tcs,
                             std::vector<double> phis, std::string out_dir) {
    RunConfig cfg = load_config(config_path);
    QuantumParams base;
    base.rule = static_cast<int>(cfg.integer("rule", base.rule));
    base.n_sites = static_cast<int>(cfg.integer("n_sites", base.n_sites));
    base.gamma = cfg.num("gamma_per_time", base.gamma);
    base.n_states = static_cast<int>(cfg.integer("n_initial_states", base.n_states));
    base.cycles = static_cast<int>(cfg.integer("cycles", base.cycles));
    base.trajectories = static_cast<int>(cfg.integer("trajectories", base.trajectories));
    base.seed = static_cast<std::uint64_t>(cfg.integer("master_seed", 777));
    base.n_boot = static_cast<int>(cfg.integer("bootstrap_resamples", base.n_boot));
    tcs = cfg.num_list("t_c_list", tcs);
    phis = cfg.num_list("phi_list", phis);
    out_dir = resolve_out(cfg.str("output_dir", out_dir));
    if (2 * base.n_sites > 12) {
        std::fprintf(stderr,
                     "phase-diagram: %d qubits exceeds the dense-state cap of 12; "
                     "reduce n_sites (<= 6 per ring)\n",
                     2 * base.n_sites);
        return 2;
    }
    put(cfg, "rule", static_cast<long>(base.rule));
    put(cfg, "n_sites", static_cast<long>(base.n_sites));
    put(cfg, "gamma_per_time", base.gamma);
    put(cfg, "n_initial_states", static_cast<long>(base.n_states));
    put(cfg, "cycles", static_cast<long>(base.cycles));
    put(cfg, "trajectories", static_cast<long>(base.trajectories));
    put(cfg, "master_seed", static_cast<long>(base.seed));
    put(cfg, "t_c_list", join(tcs));
    put(cfg, "phi_list", join(phis));

    CsvWriter grid(out_dir + "/grid.csv",
                   {"gamma_t_c", "phi", "s_delta", "sigma_boot", "neg_late_avg"}, cfg, base.seed);
    CsvWriter negs(out_dir + "/negativity.csv", {"gamma_t_c", "phi", "cycle", "negativity"}, cfg,
                   base.seed);
    CsvWriter maj(out_dir + "/majority.csv", {"gamma_t_c", "phi", "cycle", "majority_bits"}, cfg,
                  base.seed);
    for (double tc : tcs) {
        for (double phi : phis) {
            QuantumParams p = base;
            p.t_c = tc / p.gamma;
            p.phi = phi;
            const QuantumPoint res = quantum_point(p);
            grid.row({fd(tc), fd(phi), fd(res.slope.s_delta), fd(res.slope.stderr_boot),
                      fd(res.neg_late_avg)});
            for (std::size_t c = 0; c < res.neg_by_cycle.size(); ++c)
                negs.row({fd(tc), fd(phi), std::to_string(c + 1), fd(res.neg_by_cycle[c])});
            for (std::size_t c = 0; c < res.majority_rows.size(); ++c)
                maj.row({fd(tc), fd(phi), std::to_string(c + 1), res.majority_rows[c].to_string()});
            std::printf("phase-diagram: gamma*t_c=%5.2f phi=%.2f  S_delta=%+.4f +- %.4f  "
                        "late-time negativity=%.3g\n",
                        tc, phi, res.slope.s_delta, res.slope.stderr_boot, res.neg_late_avg);
        }
    }
    return 0;
}

static int cmd_vqs_bench(const std::string& config_path, std::string out_dir) {
    RunConfig cfg = load_config(config_path);
    VqsParams p;
    p.rule = static_cast<int>(cfg.integer("rule", p.rule));
    p.n_sites = static_cast<int>(cfg.integer("n_sites", p.n_sites));
    p.gamma = cfg.num("gamma_per_time", p.gamma);
    p.t_c = cfg.num("t_c", p.t_c);
    p.phi = cfg.num("phi", p.phi);
    p.depth = static_cast<int>(cfg.integer("depth", p.depth));
    p.steps = static_cast<int>(cfg.integer("steps", p.steps));
    p.tau = cfg.num("tau", p.tau);
    p.c0 = cfg.str("initial_bits", p.c0);
    p.seed = static_cast<std::uint64_t>(cfg.integer("master_seed", 777));
    p.max_sweeps = static_cast<int>(cfg.integer("max_sweeps", p.max_sweeps));
    p.max_block_iters = static_cast<int>(cfg.integer("max_block_iters", p.max_block_iters));
    p.polish_sweeps = static_cast<int>(cfg.integer("polish_sweeps", p.polish_sweeps));
    out_dir = resolve_out(cfg.str("output_dir", out_dir));
    put(cfg, "rule", static_cast<long>(p.rule));
    put(cfg, "n_sites", static_cast<long>(p.n_sites));
    put(cfg, "gamma_per_time", p.gamma);
    put(cfg, "t_c", p.t_c);
    put(cfg, "phi", p.phi);
    put(cfg, "depth", static_cast<long>(p.depth));
    put(cfg, "steps", static_cast<long>(p.steps));
    put(cfg, "tau", p.tau);
    put(cfg, "initial_bits", p.c0);
    put(cfg, "master_seed", static_cast<long>(p.seed));

    const VqsBenchReport rep = vqs_benchmark(p);
    CsvWriter csv(out_dir + "/vqs.csv",
                  {"timestep", "t", "f_v", "epsilon", "negativity_v", "negativity_exact",
                   "converged"},
                  cfg, p.seed);
    json params = json::array();
    int warn = 0;
    for (std::size_t s = 0; s < rep.steps.size(); ++s) {
        const auto& st = rep.steps[s];
        csv.row({std::to_string(s + 1), fd(st.t), fd(st.f_v), fd(st.epsilon), fd(st.neg_v),
                 fd(st.neg_exact), st.converged ? "1" : "0"});
        const std::size_t ppl = static_cast<std::size_t>(params_per_layer(2 * p.n_sites));
        json layers = json::array();
        for (std::size_t l = 0; l * ppl < st.theta.size(); ++l) {
            json layer = json::array();
            for (std::size_t k = 0; k < ppl; ++k) layer.push_back(st.theta[l * ppl + k]);
            layers.push_back(layer);
        }
        params.push_back({{"timestep", s + 1}, {"layers", layers}});
        if (!st.converged) ++warn;
        std::printf("vqs-bench: step %zu t=%.3f  F_v=%.4g  eps=%.4f  neg_v=%.4g  neg_exact=%.4g%s\n",
                    s + 1, st.t, st.f_v, st.epsilon, st.neg_v, st.neg_exact,
                    st.converged ? "" : "  [optimizer warning: not converged]");
    }
    std::ofstream(out_dir + "/vqs_params.json") << params.dump(2) << "\n";
    return warn == 0 ? 0 : 3;
}

static int cmd_rk_verify(const std::string& config_path, std::string out_dir) {
    RunConfig cfg = load_config(config_path);
    const int n_max = static_cast<int>(cfg.integer("n_max", 7));
    const int n_ss = static_cast<int>(cfg.integer("n_steady", 3));
    out_dir = resolve_out(cfg.str("output_dir", out_dir));
    put(cfg, "n_max", static_cast<long>(n_max));
    put(cfg, "n_steady", static_cast<long>(n_ss));

    json report;
    report["version"] = kVersion;
    bool dark_ok = true;
    for (int n = 3; n <= n_max; ++n) {
        const RKState rk = build_rk_state(n);
        double worst = 0;
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, (single_ring_mu(i, n) * rk.amplitudes).norm());
        report["dark_state"][std::to_string(n)] = {{"Z", rk.z}, {"max_mu_norm", worst}};
        dark_ok = dark_ok && worst < 1e-12;
        std::printf("rk-verify: N=%d  Z=%d  max ||mu psi_RK|| = %.2e\n", n, rk.z, worst);
    }

    const TwoRingLattice lat(n_ss, false), lat_swapped(n_ss, true);
    Generator gq = rk_generator(lat, 1.0);
    const Generator gq_b = rk_generator(lat_swapped, 1.0);
    Generator both = gq;
    both.jumps.insert(both.jumps.end(), gq_b.jumps.begin(), gq_b.jumps.end());
    for (auto [name, gen] : {std::pair<const char*, const Generator*>{"single_orientation", &gq},
                             {"both_orientations", &both}}) {
        const SteadyState ss = steady_state(*gen);
        const double neg = negativity(ss.rho, (1L << n_ss) - 1, 2 * n_ss);
        report["steady_state"][name] = {{"unique", ss.unique},
                                        {"residual", ss.residual},
                                        {"deflated_residual", ss.second_residual},
                                        {"negativity", neg}};
        std::printf("rk-verify: L_q (%s) N=%d  unique=%s  residual=%.2e  deflated=%.2e  "
                    "negativity=%.3g\n",
                    name, n_ss, ss.unique ? "yes" : "no", ss.residual, ss.second_residual, neg);
    }
    std::ofstream(out_dir + "/rk_verify.json") << report.dump(2) << "\n";
    return dark_ok ? 0 : 4;
}

int main(int argc, char** argv) {
    CLI::App app{"two-ring cellular-automaton pipelines"};
    app.require_subcommand(1);
    std::string config_path, out_dir = "qca_out", initial;
    int rule = 110, n = 31, steps = 60;
    std::vector<double> sizes{11, 14, 17}, tcs{4, 10}, phis{0.6};

    auto* eca = app.add_subcommand("eca-run", "noise-free space-time diagram");
    eca->add_option("--config", config_path, "flat key=value config file");
    eca->add_option("--rule", rule, "rule number 0..255");
    eca->add_option("--n", n, "ring size");
    eca->add_option("--steps", steps, "number of update steps");
    eca->add_option("--initial", initial, "initial bit string (default: single centered 1)");
    eca->add_option("--out", out_dir, "output directory");

    auto* cls = app.add_subcommand("classical-sweep", "S_delta over (N, gamma*t_c)");
    cls->add_option("--config", config_path, "flat key=value config file");
    cls->add_option("--sizes", sizes, "ring sizes")->delimiter(',');
    cls->add_option("--tc-list", tcs, "gamma*t_c grid")->delimiter(',');
    cls->add_option("--out", out_dir, "output directory");

    auto* phase = app.add_subcommand("phase-diagram", "quantum (t_c, phi) grid");
    phase->add_option("--config", config_path, "flat key=value config file");
    phase->add_option("--tc-list", tcs, "gamma*t_c grid")->delimiter(',');
    phase->add_option("--phi-list", phis, "phi grid")->delimiter(',');
    phase->add_option("--out", out_dir, "output directory");

    auto* vqs = app.add_subcommand("vqs-bench", "variational benchmark");
    vqs->add_option("--config", config_path, "flat key=value config file");
    vqs->add_option("--out", out_dir, "output directory");

    auto* rkv = app.add_subcommand("rk-verify", "dark-state and steady-state checks");
    rkv->add_option("--config", config_path, "flat key=value config file");
    rkv->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);
    try {
        if (eca->parsed()) return cmd_eca_run(config_path, rule, n, steps, initial, out_dir);
        if (cls->parsed()) return cmd_classical_sweep(config_path, sizes, tcs, out_dir);
        if (phase->parsed()) return cmd_phase_diagram(config_path, tcs, phis, out_dir);
        if (vqs->parsed()) return cmd_vqs_bench(config_path, out_dir);
        if (rkv->parsed()) return cmd_rk_verify(config_path, out_dir);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
