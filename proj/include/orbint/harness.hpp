#pragma once

// Verification campaigns over many data: fundamental-lemma sweeps,
// induction checks, invariance properties and the n = 1 derivative grid.
// Every sample draws from its own RNG stream stream_seed(seed, index), so
// the parallel and the serial driver produce identical records.

#include "orbint/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbint {

enum class Mode { Fl, Induction, Invariance, AflN1, Orb };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s);

/// How the fl sweep draws gamma: unrestricted entries, unit-determinant
/// entries, or alternating between the two by sample index.
enum class Sampler { Uniform, Compact, Mixed };

std::string to_string(Sampler s);
Sampler sampler_from_string(const std::string& s);

struct SweepConfig {
    long p = 3;
    std::size_t n = 2;
    long bound = 2;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    std::uint64_t threshold = kDefaultEnumerationThreshold;
    Mode mode = Mode::Fl;
    Sampler sampler = Sampler::Mixed;
    /// fl with n = 1: walk the exhaustive grid instead of sampling.
    bool grid = false;
    /// 0 means the OpenMP default.
    int jobs = 0;

    void validate() const;
    json to_json() const;
};

enum class Verdict { Pass, Fail, Skipped, Overflow };

std::string to_string(Verdict v);

struct SampleRecord {
    std::size_t index = 0;
    Verdict verdict = Verdict::Skipped;
    std::string side;  // "split", "non-split" or empty
    std::string lhs;   // the two compared quantities, flattened for CSV
    std::string rhs;
    std::string detail;
    json data;  // datum, invariants and full results for reproduction

    json to_json() const;
};

struct SweepCounts {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    std::size_t overflow = 0;

    std::size_t total() const { return pass + fail + skipped + overflow; }
};

struct SweepReport {
    SweepConfig config;
    std::vector<SampleRecord> records;
    SweepCounts counts;
    double wall_clock_seconds = 0;

    bool ok() const { return counts.fail == 0; }
    json to_json() const;
    std::string to_csv() const;
};

/// Number of samples a config evaluates (the grid size for grid modes).
std::size_t planned_samples(const SweepConfig& cfg);

/// Evaluates sample `index` of `cfg`. Never throws: errors become verdicts.
SampleRecord evaluate_sample(const SweepConfig& cfg, std::size_t index);

/// OpenMP-parallel over samples.
SweepReport run_sweep(const SweepConfig& cfg);
/// Single-threaded reference; same records as run_sweep.
SweepReport run_sweep_serial(const SweepConfig& cfg);

SweepReport run_fl_sweep(SweepConfig cfg);
SweepReport run_induction_sweep(SweepConfig cfg);
SweepReport run_invariance_sweep(SweepConfig cfg);
SweepReport run_afl_n1_grid(SweepConfig cfg);

/// Single GL datum: OrbResult JSON.
json run_orb(const json& datum, const FieldParams& params, std::uint64_t threshold);

/// n = 1 grids. fl: gamma over four units, val u1, val u2 in [0, max_val].
/// afl-n1: odd val m_0 in [1, max_val], split between u1 and u2 in all ways.
std::vector<GLOrbitDatum> fl_grid_n1(long p, long max_val);
std::vector<GLOrbitDatum> afl_grid_n1(long p, long max_val);

/// Default threshold for the n = 1 grids: their lattice chains are short
/// even when the quotient is large.
inline constexpr std::uint64_t kGridEnumerationThreshold = 1'000'000'000'000'000ULL;

/// Threshold from ORBINT_ENUM_THRESHOLD if set and valid, else `fallback`.
std::uint64_t threshold_from_env(std::uint64_t fallback);

}  // namespace orbint
