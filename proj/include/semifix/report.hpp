#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace semifix {

struct ProbeRecord {
    std::string stage;
    std::int64_t probe_id = 0;
    double residual = 0.0;
    bool pass = true;
    std::string note;
};

struct StageSummary {
    std::string name;
    std::int64_t samples = 0;
    std::int64_t soft_failures = 0;
    double max_residual = 0.0;
    bool pass = true;
    std::string note;
};

/// Pointwise verification record: named stages, per-probe residuals, and
/// free-form exact facts (identities verified in exact arithmetic).
/// Serializes to a deterministic text report and to CSV rows
/// `stage,probe_id,residual,pass`.
struct StructuredReport {
    std::string title;
    std::vector<std::string> facts;
    std::vector<StageSummary> stages;
    std::vector<ProbeRecord> probes;
    bool verdict = true;

    StageSummary& stage(const std::string& name);
    void add_probe(const std::string& stage_name, std::int64_t probe_id, double residual,
                   bool pass, const std::string& note = "");
    void add_soft_failure(const std::string& stage_name, std::int64_t probe_id,
                          const std::string& note);
    /// Recomputes the verdict as the conjunction of stage passes.
    void finalize();

    std::string to_text() const;
    void write_csv(std::ostream& out) const;
};

/// Deterministic float formatting shared by every CSV writer.
std::string format_double(double x);

} // namespace semifix
