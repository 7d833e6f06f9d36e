#pragma once

#include <string>
#include <vector>

#include "specinf/hodge.hpp"
#include "specinf/spectrum.hpp"

namespace specinf {

// Current JSON schema version; the schema itself lives in docs/report-schema.json.
inline constexpr const char* kReportSchemaVersion = "1";

// Everything cmd_analyze emits. Every numeric field here is recomputable from
// the spectrum; build_analysis_report asserts the cross-checks before returning.
struct AnalysisReport {
    std::string input;
    int arity = 0;
    bool convenient = false;
    bool nondegenerate = false; // false when skipped via force
    bool force = false;         // "unverified hypotheses" stamp
    long milnor = 0;
    long volume = 0; // n! vol(Gamma(f))
    SpectrumTable spectrum;
    IrregularHodgeTable hodge;

    struct Bundle {
        BundleType type;
        long degree = 0;
        std::vector<std::pair<long, long>> hn; // (slope, cumulative rank)
    };
    std::vector<Bundle> bundles; // one K^n(alpha) per alpha, ascending alpha

    struct AlphaData {
        Rational alpha;
        long nearby_dimension = 0;
        std::vector<std::pair<Rational, long>> residues;
    };
    std::vector<AlphaData> alphas;

    struct Checks {
        bool symmetry = false;
        bool volume_equals_milnor = false;
        bool spectrum_sum = false;
        bool hodge_sum = false;
        bool degree_recompute = false;
    } checks;

    bool all_checks() const {
        return checks.symmetry && checks.volume_equals_milnor && checks.spectrum_sum &&
               checks.hodge_sum && checks.degree_recompute;
    }
};

AnalysisReport build_analysis_report(const LaurentPolynomial& f, const std::string& input,
                                     MonomialOrder order = MonomialOrder::Grevlex,
                                     bool force = false);

// Deterministic serializations; rationals always appear as "p" / "p/q" strings.
std::string report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

struct CatalogReport {
    std::vector<MirrorReport> entries;
    bool all_match() const {
        for (const auto& e : entries)
            if (!e.match) return false;
        return true;
    }
};

CatalogReport run_catalog(MonomialOrder order = MonomialOrder::Grevlex);
std::string catalog_to_json(const CatalogReport& r);
std::string catalog_to_text(const CatalogReport& r);

} // namespace specinf
