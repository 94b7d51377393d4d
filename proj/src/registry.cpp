#include "lpkinetic/registry.hpp"

#include <chrono>

namespace lpk {

const std::vector<Experiment>& experiment_registry() {
    static const std::vector<Experiment> registry = {
        make_gf02_heat_decay(),   make_gf21_kinetic_decay(), make_nb3_scaling(),
        make_ev11_moments(),      make_gs1_commutator(),     make_theta_orthogonality(),
        make_nm4_maxprinciple(),  make_schauder_ratio(),     make_stable_laws(),
        make_sde_uniqueness(),    make_transport_residual(), make_picard_contraction(),
    };
    return registry;
}

const Experiment* find_experiment(const std::string& id) {
    for (const auto& e : experiment_registry())
        if (e.id == id) return &e;
    return nullptr;
}

ExperimentReport run_experiment(const Experiment& exp, const Config& cfg,
                                const std::string& out_dir) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentReport rep = exp.run(cfg, out_dir);
    rep.experiment = exp.id;
    rep.paper_ref = exp.paper_ref;
    rep.config_echo = cfg.entries();
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace lpk
