#include "orbint/harness.hpp"

#include "orbint/errors.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <sstream>

namespace orbint {

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::Fl: return "fl";
        case Mode::Induction: return "induction";
        case Mode::Invariance: return "invariance";
        case Mode::AflN1: return "afl-n1";
        case Mode::Orb: return "orb";
    }
    return "?";
}

Mode mode_from_string(const std::string& s) {
    for (Mode m : {Mode::Fl, Mode::Induction, Mode::Invariance, Mode::AflN1, Mode::Orb})
        if (to_string(m) == s) return m;
    throw std::invalid_argument("unknown mode: " + s);
}

std::string to_string(Sampler s) {
    switch (s) {
        case Sampler::Uniform: return "uniform";
        case Sampler::Compact: return "compact";
        case Sampler::Mixed: return "mixed";
    }
    return "?";
}

Sampler sampler_from_string(const std::string& s) {
    for (Sampler m : {Sampler::Uniform, Sampler::Compact, Sampler::Mixed})
        if (to_string(m) == s) return m;
    throw std::invalid_argument("unknown sampler: " + s);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
        case Verdict::Overflow: return "overflow";
    }
    return "?";
}

void SweepConfig::validate() const {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (bound < 0) throw std::invalid_argument("bound must be non-negative");
    if (samples < 1) throw std::invalid_argument("samples must be at least 1");
    if (threshold < 1) throw std::invalid_argument("threshold must be positive");
    if (mode == Mode::Induction && n < 2) throw std::invalid_argument("induction needs n >= 2");
    if (mode == Mode::AflN1 && n != 1) throw std::invalid_argument("afl-n1 needs n = 1");
    if (grid && n != 1) throw std::invalid_argument("the exhaustive grid exists only for n = 1");
}

json SweepConfig::to_json() const {
    // jobs is left out: it never changes the records.
    return json{{"p", p},
                {"n", n},
                {"bound", bound},
                {"samples", planned_samples(*this)},
                {"seed", seed},
                {"threshold", threshold},
                {"mode", to_string(mode)},
                {"sampler", to_string(sampler)},
                {"grid", grid}};
}

json SampleRecord::to_json() const {
    return json{{"index", index}, {"verdict", to_string(verdict)}, {"side", side}, {"lhs", lhs},
                {"rhs", rhs},     {"detail", detail},                {"data", data}};
}

json SweepReport::to_json() const {
    json recs = json::array();
    for (const auto& r : records) recs.push_back(r.to_json());
    return json{{"config", config.to_json()},
                {"counts",
                 {{"pass", counts.pass},
                  {"fail", counts.fail},
                  {"skipped", counts.skipped},
                  {"overflow", counts.overflow},
                  {"samples", counts.total()}}},
                {"wall_clock_seconds", wall_clock_seconds},
                {"records", std::move(recs)}};
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string SweepReport::to_csv() const {
    std::ostringstream os;
    os << "index,verdict,side,lhs,rhs,detail\n";
    for (const auto& r : records)
        os << r.index << ',' << to_string(r.verdict) << ',' << csv_field(r.side) << ',' << csv_field(r.lhs) << ','
           << csv_field(r.rhs) << ',' << csv_field(r.detail) << '\n';
    return os.str();
}

std::vector<GLOrbitDatum> fl_grid_n1(long p, long max_val) {
    std::vector<GLOrbitDatum> out;
    for (long g : unit_pool(p))
        for (long a = 0; a <= max_val; ++a)
            for (long b = 0; b <= max_val; ++b)
                out.push_back(GLOrbitDatum{QMat{{Rational(g)}}, QMat{{p_power(p, a)}}, QMat{{p_power(p, b)}}});
    return out;
}

std::vector<GLOrbitDatum> afl_grid_n1(long p, long max_val) {
    std::vector<GLOrbitDatum> out;
    const auto pool = unit_pool(p);
    for (long g : pool)
        for (long v = 1; v <= max_val; v += 2)
            for (long a = 0; a <= v; ++a)
                for (long w : pool)
                    out.push_back(
                        GLOrbitDatum{QMat{{Rational(g)}}, QMat{{p_power(p, a) * w}}, QMat{{p_power(p, v - a)}}});
    return out;
}

std::size_t planned_samples(const SweepConfig& cfg) {
    if (cfg.mode == Mode::AflN1) return afl_grid_n1(cfg.p, cfg.bound).size();
    if (cfg.mode == Mode::Fl && cfg.grid) return fl_grid_n1(cfg.p, cfg.bound).size();
    return cfg.samples;
}

namespace {

std::string side_name(Side s) { return s == Side::Split ? "split" : "non-split"; }

GLOrbitDatum draw_gl(const SweepConfig& cfg, const FieldParams& params, std::size_t index) {
    const std::uint64_t s = stream_seed(cfg.seed, index);
    bool compact = cfg.sampler == Sampler::Compact || (cfg.sampler == Sampler::Mixed && index % 2 == 1);
    return compact ? random_compact_rs_gl(params, cfg.n, cfg.bound, s) : random_rs_gl(params, cfg.n, cfg.bound, s);
}

void check_fl(const GLOrbitDatum& x, const FieldParams& params, std::uint64_t threshold, SampleRecord& rec) {
    const OrbitInvariants inv = invariants_gl(x);
    const Side side = match_side(inv, params);
    rec.side = side_name(side);
    rec.data["datum"] = to_json_value(x);
    rec.data["invariants"] = to_json_value(inv);
    const OrbResult gl = orb_gl(x, params, threshold);
    rec.data["orb_gl"] = to_json_value(gl);
    rec.lhs = std::to_string(gl.value_at_0);
    if (side == Side::NonSplit) {
        rec.rhs = "0";
        rec.verdict = gl.value_at_0 == 0 ? Verdict::Pass : Verdict::Fail;
        return;
    }
    const UOrbitDatum y = build_matched_u_datum(x, params);
    rec.data["matched"] = to_json_value(y, params.epsilon);
    const std::uint64_t count = orb_u(y, params, threshold);
    rec.data["orb_u"] = count;
    rec.rhs = std::to_string(count);
    rec.verdict = gl.value_at_0 == static_cast<long long>(count) ? Verdict::Pass : Verdict::Fail;
}

void check_induction(const SweepConfig& cfg, const FieldParams& params, std::size_t index, SampleRecord& rec) {
    Rng rng(stream_seed(cfg.seed, index));
    const std::size_t n = cfg.n;
    constexpr int kBudget = 5000;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        GLOrbitDatum x{QMat(n, n), QMat::unit_column(n, n - 1), QMat::unit_column(n, n - 1).transpose()};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x.gamma(i, j) = random_entry(rng, params.p, cfg.bound);
        if (is_zero(determinant(x.gamma))) continue;
        InductionReport r = verify_induction(x, params, cfg.threshold);
        if (r.skipped) continue;
        rec.data["datum"] = to_json_value(x);
        rec.data["reduced_datum"] = to_json_value(*r.reduced_datum);
        rec.data["attempts"] = attempt + 1;
        rec.data["compact"] = is_compact(x.gamma, params.p);
        rec.data["reduced_compact"] = is_compact(r.reduced_datum->gamma, params.p);
        rec.data["full"] = to_json_value(r.full);
        rec.data["reduced"] = to_json_value(r.reduced);
        rec.side = side_name(match_side(invariants_gl(x), params));
        rec.lhs = r.full.to_string();
        rec.rhs = r.reduced.to_string();
        rec.verdict = r.equal ? Verdict::Pass : Verdict::Fail;
        return;
    }
    rec.verdict = Verdict::Skipped;
    rec.detail = "no admissible datum within the resample budget";
}

void check_invariance(const SweepConfig& cfg, const FieldParams& params, std::size_t index, SampleRecord& rec) {
    const GLOrbitDatum x = draw_gl(cfg, params, index);
    Rng rng(splitmix64(stream_seed(cfg.seed, index)));
    const QMat h = random_invertible(rng, params.p, cfg.n, cfg.bound);
    const GLOrbitDatum hx = act_gl(h, x);
    const Valuation vdet = val_p(determinant(h), params.p);
    rec.data["datum"] = to_json_value(x);
    rec.data["h"] = to_json_value(h);

    std::vector<std::string> broken;
    const OrbitInvariants inv = invariants_gl(x);
    const Side side = match_side(inv, params);
    rec.side = side_name(side);
    if (!(invariants_gl(hx) == inv)) broken.push_back("invariants");
    if (match_side(invariants_gl(hx), params) != side) broken.push_back("side");
    const int eta_h = vdet.value() % 2 == 0 ? 1 : -1;
    if (transfer_factor(hx, params) != eta_h * transfer_factor(x, params)) broken.push_back("transfer factor");

    const OrbResult a = orb_gl(x, params, cfg.threshold);
    const OrbResult b = orb_gl(hx, params, cfg.threshold);
    const LaurentPoly expected = a.poly.shifted(static_cast<int>(-vdet.value()));
    rec.data["orb_gl"] = to_json_value(a);
    rec.data["orb_gl_translate"] = to_json_value(b);
    rec.lhs = b.poly.to_string();
    rec.rhs = expected.to_string();
    if (!(b.poly == expected)) broken.push_back("monomial shift");

    if (side == Side::Split) {
        const UOrbitDatum y = build_matched_u_datum(x, params);
        const FMat g = random_unitary(rng, y.J, params, 1);
        const UOrbitDatum gy = act_u(g, y);
        const std::uint64_t cy = orb_u(y, params, cfg.threshold);
        const std::uint64_t cgy = orb_u(gy, params, cfg.threshold);
        rec.data["unitary"] = to_json_value(g);
        rec.data["orb_u"] = cy;
        rec.data["orb_u_translate"] = cgy;
        if (cy != cgy) broken.push_back("unitary count");
    }
    rec.verdict = broken.empty() ? Verdict::Pass : Verdict::Fail;
    for (const auto& s : broken) rec.detail += (rec.detail.empty() ? "" : "; ") + s;
}

void check_afl(const GLOrbitDatum& x, const FieldParams& params, std::uint64_t threshold, SampleRecord& rec) {
    const OrbitInvariants inv = invariants_gl(x);
    rec.side = side_name(match_side(inv, params));
    rec.data["datum"] = to_json_value(x);
    rec.data["invariants"] = to_json_value(inv);
    const OrbResult r = orb_gl(x, params, threshold);
    const Rational predicted = predicted_int_n1(inv, params);
    rec.data["orb_gl"] = to_json_value(r);
    rec.data["predicted"] = rational_to_string(predicted);
    rec.lhs = std::to_string(r.derivative_normalized);
    rec.rhs = predicted.get_str();
    const bool ok = r.value_at_0 == 0 && Rational(static_cast<long>(r.derivative_normalized)) == predicted;
    rec.verdict = ok ? Verdict::Pass : Verdict::Fail;
}

}  // namespace

SampleRecord evaluate_sample(const SweepConfig& cfg, std::size_t index) {
    SampleRecord rec;
    rec.index = index;
    rec.data = json::object();
    try {
        const FieldParams params = FieldParams::make(cfg.p);
        switch (cfg.mode) {
            case Mode::Fl: {
                GLOrbitDatum x = cfg.grid ? fl_grid_n1(cfg.p, cfg.bound).at(index) : draw_gl(cfg, params, index);
                check_fl(x, params, cfg.threshold, rec);
                break;
            }
            case Mode::Induction: check_induction(cfg, params, index, rec); break;
            case Mode::Invariance: check_invariance(cfg, params, index, rec); break;
            case Mode::AflN1: check_afl(afl_grid_n1(cfg.p, cfg.bound).at(index), params, cfg.threshold, rec); break;
            case Mode::Orb: {
                const GLOrbitDatum x = draw_gl(cfg, params, index);
                rec.data["datum"] = to_json_value(x);
                const OrbResult r = orb_gl(x, params, cfg.threshold);
                rec.data["orb_gl"] = to_json_value(r);
                rec.side = side_name(match_side(invariants_gl(x), params));
                rec.lhs = r.poly.to_string();
                rec.verdict = Verdict::Pass;
                break;
            }
        }
    } catch (const InstanceTooLarge& e) {
        rec.verdict = Verdict::Overflow;
        rec.detail = e.what();
    } catch (const ResampleExhausted& e) {
        rec.verdict = Verdict::Skipped;
        rec.detail = e.what();
    } catch (const std::exception& e) {
        rec.verdict = Verdict::Fail;
        rec.detail = std::string("error: ") + e.what();
    }
    return rec;
}

namespace {

SweepReport assemble(const SweepConfig& cfg, std::vector<SampleRecord> records, double seconds) {
    SweepReport rep;
    rep.config = cfg;
    rep.records = std::move(records);
    rep.wall_clock_seconds = seconds;
    for (const auto& r : rep.records) {
        switch (r.verdict) {
            case Verdict::Pass: ++rep.counts.pass; break;
            case Verdict::Fail: ++rep.counts.fail; break;
            case Verdict::Skipped: ++rep.counts.skipped; break;
            case Verdict::Overflow: ++rep.counts.overflow; break;
        }
    }
    return rep;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const long count = static_cast<long>(planned_samples(cfg));
    std::vector<SampleRecord> records(static_cast<std::size_t>(count));
    const int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < count; ++i) records[static_cast<std::size_t>(i)] = evaluate_sample(cfg, static_cast<std::size_t>(i));
    return assemble(cfg, std::move(records), seconds_since(t0));
}

SweepReport run_sweep_serial(const SweepConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t count = planned_samples(cfg);
    std::vector<SampleRecord> records;
    records.reserve(count);
    for (std::size_t i = 0; i < count; ++i) records.push_back(evaluate_sample(cfg, i));
    return assemble(cfg, std::move(records), seconds_since(t0));
}

SweepReport run_fl_sweep(SweepConfig cfg) {
    cfg.mode = Mode::Fl;
    return run_sweep(cfg);
}

SweepReport run_induction_sweep(SweepConfig cfg) {
    cfg.mode = Mode::Induction;
    return run_sweep(cfg);
}

SweepReport run_invariance_sweep(SweepConfig cfg) {
    cfg.mode = Mode::Invariance;
    return run_sweep(cfg);
}

SweepReport run_afl_n1_grid(SweepConfig cfg) {
    cfg.mode = Mode::AflN1;
    cfg.n = 1;
    return run_sweep(cfg);
}

json run_orb(const json& datum, const FieldParams& params, std::uint64_t threshold) {
    return to_json_value(orb_gl(gl_datum_from_json(datum), params, threshold));
}

std::uint64_t threshold_from_env(std::uint64_t fallback) {
    const char* s = std::getenv("ORBINT_ENUM_THRESHOLD");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (*end != '\0' || v == 0) return fallback;
    return v;
}

}  // namespace orbint
