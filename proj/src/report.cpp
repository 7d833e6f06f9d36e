#include "specinf/report.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "specinf/errors.hpp"

namespace specinf {

AnalysisReport build_analysis_report(const LaurentPolynomial& f, const std::string& input,
                                     MonomialOrder order, bool force) {
    AnalysisReport r;
    r.input = input;
    r.arity = f.arity();
    r.force = force;

    NewtonPolytope P = newton_polytope(f);
    r.convenient = is_convenient(P);
    if (!r.convenient) throw NotConvenient();
    if (!force) {
        r.nondegenerate = is_nondegenerate(f);
        if (!r.nondegenerate) throw Degenerate();
    }

    r.volume = normalized_volume(P);
    r.spectrum = spectrum_at_infinity(f, order, /*check_nondegenerate=*/false);
    r.milnor = r.spectrum.total_multiplicity();
    r.hodge = irregular_hodge_numbers(r.spectrum);

    std::set<Rational> alphas;
    for (const auto& [key, h] : r.hodge.entries) alphas.insert(std::get<0>(key));

    const long n = r.arity;
    for (const Rational& a : alphas) {
        AnalysisReport::Bundle b;
        b.type = kontsevich_bundle_type(r.hodge, n, a);
        b.degree = bundle_degree(b.type);
        b.hn = hn_jumps(b.type);
        r.bundles.push_back(std::move(b));

        AnalysisReport::AlphaData ad;
        ad.alpha = a;
        ad.nearby_dimension = nearby_cycle_dimension(r.spectrum, a);
        ad.residues = residue_classes(r.spectrum, a);
        r.alphas.push_back(std::move(ad));
    }

    // cross-checks; cmd_analyze refuses to emit a report that fails any
    r.checks.symmetry = check_spectrum_symmetry(r.spectrum);
    r.checks.volume_equals_milnor = force || r.volume == r.milnor;
    r.checks.spectrum_sum = r.spectrum.total_multiplicity() == r.milnor;
    r.checks.hodge_sum = r.hodge.total() == r.milnor;
    r.checks.degree_recompute = true;
    for (const auto& b : r.bundles) {
        long d = 0;
        for (const auto& [p, m] : b.type.summands) d += p * m;
        if (d != b.degree) r.checks.degree_recompute = false;
    }
    return r;
}

namespace {

using nlohmann::ordered_json;

ordered_json spectrum_json(const SpectrumTable& S) {
    ordered_json arr = ordered_json::array();
    for (const auto& [g, d] : S.entries)
        arr.push_back({{"gamma", to_string(g)}, {"multiplicity", d}});
    return arr;
}

ordered_json hodge_json(const IrregularHodgeTable& T) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, h] : T.entries) {
        const auto& [a, p, q] = key;
        arr.push_back({{"alpha", to_string(a)}, {"p", p}, {"q", q}, {"h", h}});
    }
    return arr;
}

} // namespace

std::string report_to_json(const AnalysisReport& r) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["input"] = r.input;
    j["arity"] = r.arity;
    j["convenient"] = r.convenient;
    j["nondegenerate"] = r.nondegenerate;
    if (r.force) j["unverified_hypotheses"] = {"nondegenerate"};
    j["milnor_number"] = r.milnor;
    j["newton_volume"] = r.volume;
    j["spectrum"] = spectrum_json(r.spectrum);
    j["irregular_hodge_numbers"] = hodge_json(r.hodge);

    ordered_json bundles = ordered_json::array();
    for (const auto& b : r.bundles) {
        ordered_json summands = ordered_json::array();
        for (const auto& [p, m] : b.type.summands)
            summands.push_back({{"slope", p}, {"multiplicity", m}});
        ordered_json hn = ordered_json::array();
        for (const auto& [p, c] : b.hn) hn.push_back({{"slope", p}, {"rank", c}});
        bundles.push_back({{"k", b.type.k},
                           {"alpha", to_string(b.type.alpha)},
                           {"summands", summands},
                           {"rank", b.type.rank()},
                           {"degree", b.degree},
                           {"hn_jumps", hn}});
    }
    j["kontsevich_bundles"] = bundles;

    ordered_json alphas = ordered_json::array();
    for (const auto& ad : r.alphas) {
        ordered_json res = ordered_json::array();
        for (const auto& [c, m] : ad.residues)
            res.push_back({{"value", to_string(c)}, {"multiplicity", m}});
        alphas.push_back({{"alpha", to_string(ad.alpha)},
                          {"nearby_cycle_dimension", ad.nearby_dimension},
                          {"residue_classes", res}});
    }
    j["nearby_cycles"] = alphas;

    j["checks"] = {{"spectrum_symmetry", r.checks.symmetry},
                   {"volume_equals_milnor", r.checks.volume_equals_milnor},
                   {"spectrum_sum", r.checks.spectrum_sum},
                   {"hodge_sum", r.checks.hodge_sum},
                   {"degree_recompute", r.checks.degree_recompute}};
    return j.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "input: " << r.input << "\n";
    os << "variables: " << r.arity << "\n";
    os << "convenient: " << (r.convenient ? "yes" : "no")
       << ", nondegenerate: " << (r.nondegenerate ? "yes" : (r.force ? "unchecked" : "no"))
       << "\n";
    os << "milnor number: " << r.milnor << " (newton volume " << r.volume << ")\n";
    os << "spectrum at infinity:";
    for (const auto& [g, d] : r.spectrum.entries) {
        os << " " << to_string(g);
        if (d > 1) os << "x" << d;
    }
    os << "\n";
    os << "irregular hodge numbers:\n";
    for (const auto& [key, h] : r.hodge.entries) {
        const auto& [a, p, q] = key;
        os << "  h_{" << to_string(a) << "}^{" << p << "," << q << "} = " << h << "\n";
    }
    for (const auto& b : r.bundles) {
        os << "K^" << b.type.k << "(" << to_string(b.type.alpha) << ") =";
        bool first = true;
        for (const auto& [p, m] : b.type.summands)
            for (long i = 0; i < m; ++i) {
                os << (first ? " " : " + ") << "O(" << p << ")";
                first = false;
            }
        os << "  (degree " << b.degree << ")\n";
    }
    for (const auto& ad : r.alphas) {
        os << "V_" << to_string(ad.alpha) << ": nearby dim " << ad.nearby_dimension
           << ", residues";
        for (const auto& [c, m] : ad.residues) {
            os << " " << to_string(c);
            if (m > 1) os << "x" << m;
        }
        os << "\n";
    }
    os << "checks: " << (r.all_checks() ? "all passed" : "FAILED") << "\n";
    return os.str();
}

CatalogReport run_catalog(MonomialOrder order) {
    CatalogReport r;
    for (const auto& entry : mirror_catalog()) {
        LaurentPolynomial f = parse_laurent(entry.mirror, default_variables(entry.fan.dim));
        (void)order; // mirror_check computes the spectrum internally
        r.entries.push_back(mirror_check(f, entry.name));
    }
    return r;
}

std::string catalog_to_json(const CatalogReport& r) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : r.entries)
        arr.push_back({{"fano", e.fano},
                       {"fano_hodge", e.fano_hodge},
                       {"mirror_hodge", e.mirror_hodge},
                       {"match", e.match}});
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["catalog"] = arr;
    j["all_match"] = r.all_match();
    return j.dump(2) + "\n";
}

std::string catalog_to_text(const CatalogReport& r) {
    std::ostringstream os;
    for (const auto& e : r.entries) {
        os << e.fano << ": " << (e.match ? "match" : "MISMATCH") << " (";
        for (std::size_t i = 0; i < e.mirror_hodge.size(); ++i)
            os << (i ? "," : "") << e.mirror_hodge[i];
        os << ")\n";
    }
    return os.str();
}

} // namespace specinf
