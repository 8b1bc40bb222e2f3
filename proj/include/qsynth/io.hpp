#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsynth/strategies.hpp"

namespace qsynth::io {

// %.<sig>g with the C locale; 17 digits round-trips doubles exactly.
std::string format_real(double x, int sig);

struct InstanceFile {
    ProblemInstance instance;
    std::string topology; // chain | complete | edge-list
};

void write_instance(const std::string& path, const ProblemInstance& inst,
                    const std::string& topology);
InstanceFile read_instance(const std::string& path);

struct CatalogueEntry {
    std::string tool_version;
    std::string run_id;
    std::string strategy;
    std::uint64_t instance_seed = 0;
    std::uint64_t run_seed = 0;
    std::string topology;
    ProblemInstance instance;
    int layers = 1;
    std::string fiducial; // "zero" | "plus"
    std::string ramp_target = "problem";
    double bound = 1.0;
    std::vector<double> packed_params;
    double cost = 0, e_gs = 0, delta_e = 0, beta = 0, fidelity = 0;
    std::string status;
    int total_iterations = 0;
    int final_stage_iterations = 0;
    bool degenerate_ground_space = false;
    int beta_guarded_rows = 0;
    double wall_seconds = 0;
};

void write_catalogue(const std::string& path, const CatalogueEntry& entry);
CatalogueEntry read_catalogue(const std::string& path);

// One row per logged optimizer iteration, stages in order; reals at 12
// significant digits. Unless real_timing is set, wall_ms is written as 0 so
// reruns are byte-identical (real totals live in the catalogue entry).
void write_trace_csv(const std::string& path, const std::string& run_id, const StrategyRun& run,
                     bool real_timing);

extern const char* const kTraceHeader; // pinned column order

// (index, re, im) per line at 17 significant digits.
void write_state(const std::string& path, const StateVector& psi);

} // namespace qsynth::io
