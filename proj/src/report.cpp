#include "semifix/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace semifix {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

StageSummary& StructuredReport::stage(const std::string& name) {
    for (auto& s : stages)
        if (s.name == name) return s;
    stages.push_back(StageSummary{name});
    return stages.back();
}

void StructuredReport::add_probe(const std::string& stage_name, std::int64_t probe_id,
                                 double residual, bool pass, const std::string& note) {
    probes.push_back(ProbeRecord{stage_name, probe_id, residual, pass, note});
    StageSummary& s = stage(stage_name);
    ++s.samples;
    s.max_residual = std::max(s.max_residual, residual);
    if (!pass) s.pass = false;
}

void StructuredReport::add_soft_failure(const std::string& stage_name, std::int64_t probe_id,
                                        const std::string& note) {
    probes.push_back(ProbeRecord{stage_name, probe_id, 0.0, true, "soft-failure: " + note});
    ++stage(stage_name).soft_failures;
}

void StructuredReport::finalize() {
    verdict = true;
    for (const auto& s : stages)
        if (!s.pass) verdict = false;
}

std::string StructuredReport::to_text() const {
    std::ostringstream out;
    out << "== " << title << " ==\n";
    for (const auto& f : facts) out << "  " << f << "\n";
    for (const auto& s : stages) {
        out << "  stage " << s.name << ": " << (s.pass ? "pass" : "FAIL") << "  samples=" << s.samples
            << "  max_residual=" << format_double(s.max_residual);
        if (s.soft_failures) out << "  soft_failures=" << s.soft_failures;
        if (!s.note.empty()) out << "  (" << s.note << ")";
        out << "\n";
    }
    out << "verdict: " << (verdict ? "PASS" : "FAIL") << "\n";
    return out.str();
}

void StructuredReport::write_csv(std::ostream& out) const {
    out << "stage,probe_id,residual,pass\n";
    for (const auto& p : probes)
        out << p.stage << "," << p.probe_id << "," << format_double(p.residual) << ","
            << (p.pass ? 1 : 0) << "\n";
}

} // namespace semifix
