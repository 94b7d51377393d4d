#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lpkinetic/config.hpp"
#include "lpkinetic/report.hpp"

namespace lpk {

// A registered verification experiment. `run` computes its checks and writes
// data files into out_dir (when nonempty).
struct Experiment {
    std::string id;
    std::string description;
    std::string paper_ref;
    std::function<ExperimentReport(const Config&, const std::string& out_dir)> run;
};

const std::vector<Experiment>& experiment_registry();
const Experiment* find_experiment(const std::string& id);

// shared helper: run with timing and config echo filled in
ExperimentReport run_experiment(const Experiment& exp, const Config& cfg,
                                const std::string& out_dir);

// individual experiment constructors (one per acceptance criterion)
Experiment make_gf02_heat_decay();
Experiment make_gf21_kinetic_decay();
Experiment make_nb3_scaling();
Experiment make_ev11_moments();
Experiment make_gs1_commutator();
Experiment make_theta_orthogonality();
Experiment make_nm4_maxprinciple();
Experiment make_schauder_ratio();
Experiment make_stable_laws();
Experiment make_sde_uniqueness();
Experiment make_transport_residual();
Experiment make_picard_contraction();

}  // namespace lpk
