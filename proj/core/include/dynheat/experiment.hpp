#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dynheat/config.hpp"

namespace dynheat {

/// What a command run produced; serialized to manifest.json in the output
/// directory. Every listed artifact exists when the command returns.
struct RunManifest {
    std::string command;
    std::string config_hash;
    std::string version;
    std::string started_at;
    std::string finished_at;
    std::vector<std::string> artifacts;
};

/// Solve the direct problem for the configured truth source; writes
/// trajectory.csv and final_time.csv.
RunManifest run_forward(const ExperimentConfig& cfg);

/// Landweber reconstruction for every configured noise level; writes
/// recovered_p<P>.csv and trace_p<P>.csv per level, summary.csv, and — for a
/// noise-free level — table1.csv with the first five error rows.
RunManifest run_reconstruct(const ExperimentConfig& cfg, std::ostream& log);

struct RefineReport {
    std::vector<std::size_t> cells;              // per level
    std::vector<double> forward_error;           // vs fine-grid reference
    std::vector<double> adjoint_gap;
    std::vector<double> gradient_fd_gap;
    double forward_order = 0.0;                  // least-squares slopes
    double adjoint_order = 0.0;
    double gradient_order = 0.0;
};

/// Four-level simultaneous (Δx,Δt) refinement study; writes refine.csv and
/// returns the observed orders.
RefineReport run_refine(const ExperimentConfig& cfg, std::ostream& log,
                        RunManifest* manifest = nullptr);

struct SelftestOptions {
    int pair_count = 8;                    // random pairs per property
    bool inject_adjoint_sign_error = false;  // verification fixture
};

struct SuiteResult {
    std::string name;
    bool pass;
    std::string detail;
};

/// Invariant suites of every module, run on the configured grids with
/// tolerances scaled by max(1, (256/n_cells)², (512/n_steps)²).
std::vector<SuiteResult> run_selftest(const ExperimentConfig& cfg,
                                      const SelftestOptions& opts,
                                      std::ostream& log);

/// FNV-1a hash of the canonical config text, as a hex string.
std::string config_hash(const ExperimentConfig& cfg);

void write_manifest(const std::filesystem::path& out_dir, const RunManifest& m);

}  // namespace dynheat
