#include "specinf/hodge.hpp"

#include <algorithm>
#include <set>

#include "specinf/errors.hpp"

namespace specinf {

IrregularHodgeTable irregular_hodge_numbers(const SpectrumTable& S) {
    IrregularHodgeTable T;
    T.arity = S.arity;
    for (const auto& [gamma, delta] : S.entries) {
        if (gamma < 0 || gamma > Rational(S.arity)) throw SpectrumOutOfRange(to_string(gamma));
        Rational alpha = frac_part(gamma);
        long q = floor_long(gamma);
        T.entries[{alpha, S.arity - q, q}] += delta;
    }
    return T;
}

BundleType kontsevich_bundle_type(const IrregularHodgeTable& T, long k, const Rational& alpha) {
    BundleType B;
    B.k = k;
    B.alpha = alpha;
    for (const auto& [key, h] : T.entries) {
        const auto& [a, p, q] = key;
        if (a == alpha && p + q == k && h > 0) B.summands.emplace_back(p, h);
    }
    std::sort(B.summands.begin(), B.summands.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    return B;
}

long bundle_degree(const BundleType& B) {
    long d = 0;
    for (const auto& [p, m] : B.summands) d += p * m;
    return d;
}

std::vector<std::pair<long, long>> hn_jumps(const BundleType& B) {
    std::vector<std::pair<long, long>> jumps;
    long cum = 0;
    for (const auto& [p, m] : B.summands) {
        cum += m;
        jumps.emplace_back(p, cum);
    }
    return jumps;
}

long nearby_cycle_dimension(const SpectrumTable& S, const Rational& alpha) {
    long s = 0;
    for (const auto& [gamma, delta] : S.entries)
        if (frac_part(gamma) == alpha) s += delta;
    return s;
}

std::vector<std::pair<Rational, long>> residue_classes(const SpectrumTable& S,
                                                       const Rational& alpha) {
    std::set<Rational> classes;
    for (const auto& [gamma, delta] : S.entries) classes.insert(frac_part(gamma));
    std::vector<std::pair<Rational, long>> out;
    for (const Rational& ap : classes) {
        // representative of -ap (mod 1) in [-alpha, -alpha+1)
        Rational r = frac_part(-ap); // in [0,1)
        while (r >= -alpha + 1) r -= 1;
        while (r < -alpha) r += 1;
        out.emplace_back(r, nearby_cycle_dimension(S, ap));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> toric_betti_numbers(const ToricFan& fan) {
    const int n = fan.dim;
    // d[j] = number of cones of dimension j (fans here are simplicial)
    std::set<std::vector<std::size_t>> cones;
    cones.insert(std::vector<std::size_t>{}); // the origin
    for (const auto& mc : fan.max_cones) {
        std::size_t k = mc.size();
        for (std::size_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<std::size_t> face;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1u << b)) face.push_back(mc[b]);
            std::sort(face.begin(), face.end());
            cones.insert(face);
        }
    }
    std::vector<long> d(n + 1, 0);
    for (const auto& c : cones) d[c.size()] += 1;

    auto binom = [](long a, long b) {
        if (b < 0 || b > a) return 0L;
        long r = 1;
        for (long i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    std::vector<long> betti(n + 1, 0);
    for (long k = 0; k <= n; ++k) {
        long b = 0;
        for (long i = k; i <= n; ++i) {
            long term = binom(i, k) * d[n - i];
            b += ((i - k) % 2 == 0) ? term : -term;
        }
        betti[k] = b;
    }
    return betti;
}

const std::vector<CatalogEntry>& mirror_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        std::vector<CatalogEntry> c;
        c.push_back({"P1",
                     "x + x^-1",
                     {1, {{1}, {-1}}, {{0}, {1}}}});
        c.push_back({"P2",
                     "x + y + x^-1*y^-1",
                     {2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}}});
        c.push_back({"P1xP1",
                     "x + x^-1 + y + y^-1",
                     {2,
                      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
                      {{0, 2}, {2, 1}, {1, 3}, {3, 0}}}});
        return c;
    }();
    return catalog;
}

MirrorReport mirror_check(const LaurentPolynomial& f, const std::string& fano) {
    const CatalogEntry* entry = nullptr;
    for (const auto& e : mirror_catalog())
        if (e.name == fano) entry = &e;
    if (!entry) throw UnknownCatalogEntry(fano);

    MirrorReport rep;
    rep.fano = fano;
    rep.fano_hodge = toric_betti_numbers(entry->fan);

    SpectrumTable S = spectrum_at_infinity(f);
    IrregularHodgeTable T = irregular_hodge_numbers(S);
    const int n = S.arity;
    rep.mirror_hodge.assign(n + 1, 0);
    for (const auto& [key, h] : T.entries) {
        const auto& [a, p, q] = key;
        rep.mirror_hodge[q] += h;
    }
    rep.match = (n == entry->fan.dim) && (rep.fano_hodge == rep.mirror_hodge);
    return rep;
}

} // namespace specinf
