#include "specinf/local_model.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

#include "specinf/errors.hpp"
#include "specinf/matrix.hpp"

namespace specinf {

void ChartSection::add_term(const ExponentVector& m, long j, const Rational& c) {
    if (c == 0) return;
    Key k{m, j};
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ChartSection ChartSection::operator+(const ChartSection& o) const {
    ChartSection r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

ChartSection ChartSection::operator-(const ChartSection& o) const {
    ChartSection r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

ChartSection ChartSection::scaled(const Rational& c) const {
    ChartSection r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

ChartSection ChartSection::shifted(const ExponentVector& m, long j) const {
    ChartSection r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(Key{k.first + m, k.second + j}, v);
    return r;
}

bool ChartSection::within(const Truncation& t) const {
    for (const auto& [k, v] : terms_) {
        if (k.second < 0 || k.second > t.v_max) return false;
        for (long x : k.first)
            if (x < t.x_min || x > t.x_max) return false;
    }
    return true;
}

ChartSection unit_section(const ChartSpec& spec) {
    ChartSection s;
    s.add_term(ExponentVector(spec.ell, 0), 0, Rational(1));
    return s;
}

OperatorPolynomial OperatorPolynomial::constant(const Rational& c) {
    return term(0, 0, c);
}

OperatorPolynomial OperatorPolynomial::term(long sdeg, long hdeg, const Rational& c) {
    OperatorPolynomial p;
    p.add(sdeg, hdeg, c);
    return p;
}

void OperatorPolynomial::add(long sdeg, long hdeg, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(sdeg, hdeg), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

OperatorPolynomial OperatorPolynomial::operator*(const OperatorPolynomial& o) const {
    OperatorPolynomial r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

OperatorPolynomial OperatorPolynomial::operator+(const OperatorPolynomial& o) const {
    OperatorPolynomial r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
    return r;
}

long OperatorPolynomial::s_degree() const {
    long d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

bool OperatorPolynomial::is_monic_in_s() const {
    long d = s_degree();
    if (d < 0) return false;
    Rational lead = 0;
    for (const auto& [k, c] : terms_)
        if (k.first == d) {
            if (k.second != 0) return false; // hbar in the leading coefficient
            lead = c;
        }
    return lead == 1;
}

bool OperatorPolynomial::is_hbar_free() const {
    for (const auto& [k, c] : terms_)
        if (k.second != 0) return false;
    return true;
}

std::vector<Rational> OperatorPolynomial::univariate() const {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(s_degree() + 1, 1L)),
                            Rational(0));
    for (const auto& [k, c] : terms_) v[static_cast<std::size_t>(k.first)] = c;
    return v;
}

OperatorPolynomial p_poly(const ExponentVector& a, const ExponentVector& e,
                          const Rational& beta) {
    OperatorPolynomial P = OperatorPolynomial::constant(Rational(1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        long fl = floor_long(beta * Rational(e[i]));
        for (long k = 1; k <= a[i]; ++k) {
            OperatorPolynomial lin = OperatorPolynomial::term(1, 0, Rational(1));
            lin.add(0, 0, rational(fl + k, e[i]));
            P = P * lin;
        }
    }
    return P;
}

OperatorPolynomial p_poly_lambda(const ExponentVector& a, long lambda,
                                 const ExponentVector& e, const Rational& beta) {
    OperatorPolynomial P = p_poly(a, e, beta);
    for (long l = 0; l < lambda; ++l) {
        OperatorPolynomial lin = OperatorPolynomial::term(1, 0, Rational(1));
        lin.add(0, 0, beta);
        P = P * lin;
    }
    return P;
}

OperatorPolynomial p_poly_hbar(const ExponentVector& a, const ExponentVector& e,
                               const Rational& alpha, HbarVariant variant) {
    OperatorPolynomial P = OperatorPolynomial::constant(Rational(1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (variant == HbarVariant::Alpha) {
            long fl = floor_long(alpha * Rational(e[i]));
            for (long j = 1; j <= a[i]; ++j) {
                OperatorPolynomial lin = OperatorPolynomial::term(1, 0, Rational(1));
                lin.add(0, 1, rational(j + fl, e[i]));
                P = P * lin;
            }
        } else {
            long cl = ceil_long(alpha * Rational(e[i]));
            for (long j = 0; j < a[i]; ++j) {
                OperatorPolynomial lin = OperatorPolynomial::term(1, 0, Rational(1));
                lin.add(0, 1, rational(j + cl, e[i]));
                P = P * lin;
            }
        }
    }
    return P;
}

// v d/dv without truncation checks (used on intermediates).
static ChartSection vpartial_raw(const ChartSection& sec, const ChartSpec& spec) {
    ChartSection r;
    for (const auto& [k, c] : sec.terms()) {
        const auto& [m, j] = k;
        if (j != 0) r.add_term(m, j, c * Rational(j));
        r.add_term(m - spec.e, j + 1, c);
    }
    return r;
}

ChartSection vpartial_apply(const ChartSection& sec, const ChartSpec& spec) {
    ChartSection r = vpartial_raw(sec, spec);
    if (!r.within(spec.trunc))
        throw TruncationOverflow("v d/dv left the truncation box");
    return r;
}

ChartSection apply_operator(const OperatorPolynomial& P, const ChartSection& sec,
                            const ChartSpec& spec) {
    std::vector<Rational> coeffs = P.univariate();
    ChartSection result;
    ChartSection power = sec; // (v d/dv)^k sec
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) power = vpartial_raw(power, spec);
        result = result + power.scaled(coeffs[k]);
    }
    return result;
}

std::vector<Rational> pq_convert(const std::vector<Rational>& P) {
    auto apply_T = [](const std::vector<Rational>& q) {
        std::vector<Rational> r(q.size() + 1, Rational(0));
        for (std::size_t k = 0; k < q.size(); ++k) {
            r[k] += Rational(static_cast<long>(k)) * q[k];
            r[k + 1] += q[k];
        }
        return r;
    };
    std::vector<Rational> result(1, Rational(0));
    std::vector<Rational> tk(1, Rational(1)); // T^k(1)
    for (std::size_t k = 0; k < P.size(); ++k) {
        if (k > 0) tk = apply_T(tk);
        if (result.size() < tk.size()) result.resize(tk.size(), Rational(0));
        for (std::size_t i = 0; i < tk.size(); ++i) result[i] += P[k] * tk[i];
    }
    while (result.size() > 1 && result.back() == 0) result.pop_back();
    return result;
}

ChartSection eval_at_vf(const std::vector<Rational>& Q, const ChartSpec& spec) {
    ChartSection r;
    for (std::size_t k = 0; k < Q.size(); ++k) {
        long kk = static_cast<long>(k);
        r.add_term((-kk) * spec.e, kk, Q[k]);
    }
    return r;
}

namespace {

ExponentVector beta_floor(const ChartSpec& spec, const Rational& beta) {
    ExponentVector f(spec.ell);
    for (int i = 0; i < spec.ell; ++i) f[i] = floor_long(beta * Rational(spec.e[i]));
    return f;
}

// enumerate nonnegative vectors with per-coordinate bounds
void enumerate_boxes(const ExponentVector& hi, const std::function<void(const ExponentVector&)>& fn) {
    ExponentVector v(hi.size(), 0);
    for (;;) {
        fn(v);
        std::size_t i = 0;
        while (i < hi.size() && v[i] == hi[i]) {
            v[i] = 0;
            ++i;
        }
        if (i == hi.size()) break;
        ++v[i];
    }
}

} // namespace

namespace {

// Window top at weight w: v-degrees j with w - j*e inside the x-range and
// j <= v_max. Since the prefix w stays <= x_max and e >= 1, the window is
// always of the form {0, ..., J}.
long window_top(const ChartSpec& spec, const ExponentVector& w) {
    long J = spec.trunc.v_max;
    for (int i = 0; i < spec.ell; ++i) J = std::min(J, (w[i] - spec.trunc.x_min) / spec.e[i]);
    return J;
}

// Basis candidates of V_beta at a fixed weight w (the image of a generator is
// weight-homogeneous: every term x^{w-je} v^j shares w = c - [beta e] - 1 - a).
// Candidates are kept in increasing operator degree, and only while they
// enlarge the span of the window: the retained columns have full rank by
// construction, which is the truncated-space uniqueness.
std::vector<VBasisElement> weight_basis(const ChartSpec& spec, const Rational& beta,
                                        const ExponentVector& w, long max_op_degree) {
    const ExponentVector bf = beta_floor(spec, beta);
    long J = window_top(spec, w);
    if (J < 0) return {};
    long deg_cap = std::min(max_op_degree, spec.trunc.op_degree_max);

    struct Candidate {
        ExponentVector a, c;
        long lambda;
    };
    std::vector<Candidate> cands;
    ExponentVector a_hi(spec.ell, deg_cap);
    enumerate_boxes(a_hi, [&](const ExponentVector& a) {
        long na = plus_norm(a);
        if (na > deg_cap) return;
        ExponentVector c = w + bf;
        for (int i = 0; i < spec.ell; ++i) c[i] += 1 + a[i];
        for (int i = 0; i < spec.ell; ++i)
            if (c[i] < 0 || (a[i] > 0 && c[i] != 0)) return; // c supported on I(a)
        for (long lambda = 0; na + lambda <= deg_cap; ++lambda)
            cands.push_back({a, c, lambda});
    });
    std::sort(cands.begin(), cands.end(), [](const Candidate& l, const Candidate& r) {
        long dl = plus_norm(l.a) + l.lambda, dr = plus_norm(r.a) + r.lambda;
        if (dl != dr) return dl < dr;
        if (l.a != r.a) return l.a < r.a;
        return l.lambda < r.lambda;
    });

    std::vector<VBasisElement> out;
    IncrementalRank rk;
    for (const auto& cd : cands) {
        if (rk.rank() == static_cast<std::size_t>(J) + 1) break; // window already full
        ChartSection img = apply_operator(p_poly_lambda(cd.a, cd.lambda, spec.e, beta),
                                          unit_section(spec), spec);
        std::vector<Rational> col(static_cast<std::size_t>(J) + 1, Rational(0));
        for (const auto& [key, coef] : img.terms())
            if (key.second <= J) col[static_cast<std::size_t>(key.second)] = coef;
        if (!rk.add_row(col)) continue; // dependent after truncation; skip
        ChartSection sec;
        for (long j = 0; j <= J; ++j)
            sec.add_term(w - j * spec.e, j, col[static_cast<std::size_t>(j)]);
        out.push_back({cd.a, cd.lambda, cd.c, std::move(sec)});
    }
    return out;
}

} // namespace

std::vector<VBasisElement> v_basis_elements(const ChartSpec& spec, const Rational& beta,
                                            long max_op_degree) {
    const Truncation& t = spec.trunc;
    std::vector<VBasisElement> out;
    ExponentVector w(spec.ell, t.x_min);
    for (;;) {
        for (auto& b : weight_basis(spec, beta, w, max_op_degree)) out.push_back(std::move(b));
        int i = 0;
        while (i < spec.ell && w[i] == t.x_max) {
            w[i] = t.x_min;
            ++i;
        }
        if (i == spec.ell) break;
        ++w[i];
    }
    return out;
}

VDecomposition decompose_Vbeta(const ChartSection& sec, const Rational& beta,
                               const ChartSpec& spec) {
    if (!sec.within(spec.trunc))
        throw TruncationOverflow("section outside the truncation box");

    // split the section by weight; each weight gives an independent small solve
    std::map<ExponentVector, std::vector<Rational>> by_weight; // w -> window coefficients
    for (const auto& [key, coef] : sec.terms()) {
        const auto& [m, j] = key;
        ExponentVector w = m + j * spec.e;
        auto& win = by_weight[w];
        long J = window_top(spec, w);
        if (win.empty()) win.assign(static_cast<std::size_t>(J) + 1, Rational(0));
        win[static_cast<std::size_t>(j)] = coef;
    }

    VDecomposition dec;
    dec.beta = beta;
    for (const auto& [w, rhs] : by_weight) {
        std::vector<VBasisElement> basis =
            weight_basis(spec, beta, w, spec.trunc.op_degree_max);
        QMatrix A(rhs.size(), basis.size());
        for (std::size_t col = 0; col < basis.size(); ++col)
            for (const auto& [key, coef] : basis[col].section.terms())
                A.at(static_cast<std::size_t>(key.second), col) = coef;
        auto sol = A.solve(rhs);
        if (!sol) throw NotRepresentable("section is not in V_beta within the truncation");
        for (std::size_t col = 0; col < basis.size(); ++col) {
            if ((*sol)[col] == 0) continue;
            dec.coeffs[{basis[col].a, basis[col].lambda}][basis[col].c] += (*sol)[col];
        }
    }
    return dec;
}

ChartSection reexpand(const VDecomposition& dec, const ChartSpec& spec) {
    ChartSection r;
    const ExponentVector bf = beta_floor(spec, dec.beta);
    for (const auto& [al, poly] : dec.coeffs) {
        const auto& [a, lambda] = al;
        ChartSection base =
            apply_operator(p_poly_lambda(a, lambda, spec.e, dec.beta), unit_section(spec), spec);
        for (const auto& [c, coef] : poly) {
            ExponentVector shift = c - bf;
            for (int i = 0; i < spec.ell; ++i) shift[i] -= 1 + a[i];
            r = r + base.shifted(shift, 0).scaled(coef);
        }
    }
    // decomposition coefficients are relative to the truncated basis images
    ChartSection boxed;
    for (const auto& [key, coef] : r.terms()) {
        bool in = key.second <= spec.trunc.v_max;
        for (int i = 0; in && i < spec.ell; ++i)
            in = key.first[i] >= spec.trunc.x_min && key.first[i] <= spec.trunc.x_max;
        if (in) boxed.add_term(key.first, key.second, coef);
    }
    return boxed;
}

bool in_V_strictly_less(const VDecomposition& dec, const ChartSpec& spec) {
    long threshold;
    if (dec.beta > 0) {
        threshold = 0;
        for (int i = 0; i < spec.ell; ++i) {
            Rational be = dec.beta * Rational(spec.e[i]);
            if (be.get_den() == 1) ++threshold;
        }
    } else {
        threshold = spec.ell + 1;
    }
    for (const auto& [al, poly] : dec.coeffs) {
        if (poly.empty()) continue;
        if (al.second < threshold) return false;
    }
    return true;
}

bool precision_lemma_check(const ExponentVector& a, const ExponentVector& e, long k) {
    for (long j = 0; j <= k; ++j) {
        if (plus_norm(a - (k - j) * e) > j) return false;
    }
    return true;
}

bool filtration_compare(const ChartSpec& spec, const Rational& alpha, long p) {
    if (p < 0) return true; // both filtration steps vanish
    const Truncation& t = spec.trunc;
    if (t.v_max < p)
        throw TruncationOverflow("v-degree bound too small for the requested p");

    // Everything here is graded by the weight w = m + j*e, which v d/dv
    // preserves, so the comparison splits into independent finite problems in
    // the single coordinate j (the x-exponent within weight w is m = w - j*e).
    //
    // Within weight w:
    //   F_{alpha+p}: the monomial set {v^j : |-m - [(alpha+p)e] - 1|_+ <= min(j,p)}
    //                with m = w - j*e; the plus-norm couples the coordinates
    //                (a componentwise bound would be correct only for ell = 1),
    //                and the set is a downward-closed range {0, ..., J}.
    //   F'_{alpha+p} = C[v](G_p cap V_alpha) + sum_{j'=1..p} G_{p-j'} cap V_{alpha+j'},
    //                with G_k cap V_beta spanned by x^c x^{-[beta e]-1-a}
    //                P_{a,lambda,beta}(v d/dv) e for |a|+lambda <= k, c >= 0
    //                supported on I(a); within weight w the exponent c is
    //                determined by (a, lambda, v-shift d).
    //
    // Every generator is monic at its top v-degree, so the generators are
    // triangular by top degree and truncating at v_max loses nothing.
    const ExponentVector ap_floor = beta_floor(spec, alpha + Rational(p));

    // v-degree coefficient profile of P_{a,lambda,beta}(v d/dv) e
    auto profile = [&](const ExponentVector& a, long lambda,
                       const Rational& beta) -> std::vector<Rational> {
        ChartSection img =
            apply_operator(p_poly_lambda(a, lambda, spec.e, beta), unit_section(spec), spec);
        std::vector<Rational> prof(static_cast<std::size_t>(plus_norm(a) + lambda) + 1,
                                   Rational(0));
        for (const auto& [key, c] : img.terms())
            prof[static_cast<std::size_t>(key.second)] = c;
        return prof;
    };

    // multi-indices a with |a| <= k
    std::vector<std::pair<ExponentVector, long>> index_pairs; // (a, lambda), |a|+lambda <= p
    {
        ExponentVector hi(spec.ell, p);
        enumerate_boxes(hi, [&](const ExponentVector& a) {
            long na = plus_norm(a);
            if (na > p) return;
            for (long lambda = 0; na + lambda <= p; ++lambda) index_pairs.push_back({a, lambda});
        });
    }

    ExponentVector w(spec.ell, t.x_min);
    for (;;) {
        // F side within weight w
        std::vector<long> f_set;
        for (long j = 0; j <= t.v_max; ++j) {
            ExponentVector excess(spec.ell);
            for (int i = 0; i < spec.ell; ++i)
                excess[i] = -(w[i] - j * spec.e[i]) - ap_floor[i] - 1;
            if (plus_norm(excess) <= std::min(j, p)) f_set.push_back(j);
        }

        // F' generators within weight w, as coefficient vectors over j = 0..v_max
        std::vector<std::vector<Rational>> gens;
        auto emit = [&](const ExponentVector& a, long lambda, const Rational& beta, long k,
                        long d) {
            if (plus_norm(a) + lambda > k) return;
            // weight of the shifted image is c - [beta e] - 1 - a + d*e
            ExponentVector c = w + beta_floor(spec, beta);
            for (int i = 0; i < spec.ell; ++i) {
                c[i] += 1 + a[i] - d * spec.e[i];
                if (c[i] < 0 || (a[i] > 0 && c[i] != 0)) return;
            }
            std::vector<Rational> prof = profile(a, lambda, beta);
            if (d + static_cast<long>(prof.size()) - 1 > t.v_max) return;
            std::vector<Rational> row(static_cast<std::size_t>(t.v_max) + 1, Rational(0));
            for (std::size_t q = 0; q < prof.size(); ++q)
                row[static_cast<std::size_t>(d) + q] = prof[q];
            gens.push_back(std::move(row));
        };
        for (const auto& [a, lambda] : index_pairs) {
            for (long d = 0; d <= t.v_max; ++d) emit(a, lambda, alpha, p, d);
            for (long jp = 1; jp <= p; ++jp)
                emit(a, lambda, alpha + Rational(jp), p - jp, 0);
        }

        // support check (F' inside F), then rank check (F inside F')
        std::set<long> allowed(f_set.begin(), f_set.end());
        IncrementalRank rk;
        for (const auto& row : gens) {
            for (long j = 0; j <= t.v_max; ++j)
                if (row[static_cast<std::size_t>(j)] != 0 && !allowed.count(j)) return false;
            rk.add_row(row);
        }
        if (rk.rank() != f_set.size()) return false;

        int i = 0;
        while (i < spec.ell && w[i] == t.x_max) {
            w[i] = t.x_min;
            ++i;
        }
        if (i == spec.ell) break;
        ++w[i];
    }
    return true;
}

} // namespace specinf
