#pragma once

#include <map>
#include <string>
#include <vector>

#include "specinf/spectrum.hpp"

namespace specinf {

// h_alpha^{p,q} counts, keyed by (alpha in [0,1), p, q) with p+q = n.
struct IrregularHodgeTable {
    int arity = 0;
    std::map<std::tuple<Rational, long, long>, long> entries;

    long total() const {
        long s = 0;
        for (const auto& [k, h] : entries) s += h;
        return s;
    }
    long h(const Rational& alpha, long p, long q) const {
        auto it = entries.find({alpha, p, q});
        return it == entries.end() ? 0 : it->second;
    }
};

// Birkhoff-Grothendieck splitting type of K^k(alpha): O(p)^mult summands.
struct BundleType {
    long k = 0;
    Rational alpha = 0;
    std::vector<std::pair<long, long>> summands; // (slope p, multiplicity), descending p

    long rank() const {
        long r = 0;
        for (const auto& [p, m] : summands) r += m;
        return r;
    }
};

// delta_{alpha+q} = h_alpha^{n-q,q}. Throws SpectrumOutOfRange.
IrregularHodgeTable irregular_hodge_numbers(const SpectrumTable& S);

BundleType kontsevich_bundle_type(const IrregularHodgeTable& T, long k, const Rational& alpha);

long bundle_degree(const BundleType& B);

// Harder-Narasimhan jumps: (slope, cumulative rank of F^p) from the top slope down.
std::vector<std::pair<long, long>> hn_jumps(const BundleType& B);

// sum_q delta_{alpha+q}.
long nearby_cycle_dimension(const SpectrumTable& S, const Rational& alpha);

// Predicted residue classes of Res_{v=0} on the V_alpha lattice: for each
// spectrum class alpha' the representative of -alpha' (mod 1) in
// [-alpha, -alpha+1), with multiplicity nearby_cycle_dimension(S, alpha').
std::vector<std::pair<Rational, long>> residue_classes(const SpectrumTable& S,
                                                       const Rational& alpha);

// Complete smooth toric fan, desk-scale: rays and maximal cones.
struct ToricFan {
    int dim = 0;
    std::vector<ExponentVector> rays;
    std::vector<std::vector<std::size_t>> max_cones; // ray index sets
};

// Even Betti numbers (b_0, b_2, ..., b_{2n}) from the cone counts of the fan.
// For the catalog's Hodge-Tate varieties these are the h^{q,q}.
std::vector<long> toric_betti_numbers(const ToricFan& fan);

struct CatalogEntry {
    std::string name;       // "P1", "P2", "P1xP1"
    std::string mirror;     // Laurent polynomial expression
    ToricFan fan;
};

const std::vector<CatalogEntry>& mirror_catalog();

struct MirrorReport {
    std::string fano;
    bool match = false;
    std::vector<long> fano_hodge;   // h^{q,q}(Y), q = 0..n
    std::vector<long> mirror_hodge; // sum_alpha h_alpha^{n-q,q}, q = 0..n
};

// Compares the catalog Hodge numbers of the named Fano with the irregular
// Hodge numbers of f. Throws UnknownCatalogEntry.
MirrorReport mirror_check(const LaurentPolynomial& f, const std::string& fano);

} // namespace specinf
