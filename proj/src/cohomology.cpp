#include "hv/cohomology.hpp"

#include "hv/linalg.hpp"
#include "hv/sampling.hpp"

namespace hv {

void LinearFunctional::set(const BasisSymbol& sym, const Scalar& value) {
    AlgebraElement::check_admissible(AlgebraTag::D1, sym);
    if (value.is_zero())
        values_.erase(sym);
    else
        values_[sym] = value;
}

Scalar LinearFunctional::eval(const AlgebraElement& u) const {
    Scalar out(0);
    for (const auto& [sym, c] : u.terms()) {
        auto it = values_.find(sym);
        if (it != values_.end()) out += c * it->second;
    }
    return out;
}

Cocycle::Cocycle(GroupInstance g, Scalar a, Scalar b, Scalar c, Scalar cprime, LinearFunctional boundary)
    : group_(std::move(g)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
      cprime_(std::move(cprime)), boundary_(std::move(boundary)) {}

Scalar Cocycle::eval(const AlgebraElement& u, const AlgebraElement& v) const {
    if (u.tag() != AlgebraTag::D1 || v.tag() != AlgebraTag::D1)
        throw error("cocycles evaluate on D1 elements");
    Scalar out(0);
    bool canonical = !a_.is_zero() || !b_.is_zero() || !c_.is_zero() || !cprime_.is_zero();
    if (canonical) {
        for (const auto& [su, cu] : u.terms()) {
            for (const auto& [sv, cv] : v.terms()) {
                if (!(su.x + sv.x).is_zero()) continue;
                Scalar coeff = cu * cv;
                Scalar dx = group_.pairing_eval(su.x);
                if (su.is_I() && sv.is_I()) {
                    // psi1(t^x, t^y) = delta d(y) = -delta d(x)
                    out += a_ * coeff * (-dx);
                } else if (su.is_L() && sv.is_L()) {
                    out += b_ * coeff * (dx.pow(3) - dx);
                } else if (su.is_L() && sv.is_I()) {
                    out += coeff * (c_ * dx.pow(2) + cprime_ * dx);
                } else {  // I, L: antisymmetric extension
                    Scalar dy = group_.pairing_eval(sv.x);
                    out -= coeff * (c_ * dy.pow(2) + cprime_ * dy);
                }
            }
        }
    }
    if (!boundary_.values().empty()) out += boundary_.eval(commutator(group_, u, v));
    return out;
}

BilinearMap Cocycle::as_map() const {
    return [cocycle = *this](const AlgebraElement& u, const AlgebraElement& v) {
        return cocycle.eval(u, v);
    };
}

Cocycle coboundary(const GroupInstance& g, LinearFunctional functional) {
    return Cocycle(g, Scalar(0), Scalar(0), Scalar(0), Scalar(0), std::move(functional));
}

BilinearMap witt_cubic_cocycle(const GroupInstance& g) {
    return [g](const AlgebraElement& u, const AlgebraElement& v) {
        Scalar out(0);
        for (const auto& [su, cu] : u.terms()) {
            if (!su.is_L()) continue;
            for (const auto& [sv, cv] : v.terms()) {
                if (!sv.is_L() || !(su.x + sv.x).is_zero()) continue;
                out += cu * cv * g.pairing_eval(su.x).pow(3);
            }
        }
        return out;
    };
}

CocycleCheckReport verify_cocycle(const GroupInstance& g, const BilinearMap& alpha, int samples,
                                  uint64_t seed) {
    CocycleCheckReport report;
    report.samples = samples;
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        AlgebraElement u = random_element(g, AlgebraTag::D1, rng);
        AlgebraElement v = random_element(g, AlgebraTag::D1, rng);
        AlgebraElement w = random_element(g, AlgebraTag::D1, rng);
        Scalar anti = alpha(u, v) + alpha(v, u);
        if (!anti.is_zero()) report.antisymmetry_ok = false;
        Scalar identity = alpha(commutator(g, u, v), w) + alpha(commutator(g, v, w), u) +
                          alpha(commutator(g, w, u), v);
        if (!identity.is_zero()) report.identity_ok = false;
        if (!report.pass()) {
            report.failed_value = (anti.is_zero() ? identity : anti).to_string();
            report.witness = {u.to_text(), v.to_text(), w.to_text()};
            report.samples = i + 1;
            return report;
        }
    }
    return report;
}

namespace {

AlgebraElement probe_L(const GroupInstance& g, long long k) {
    return AlgebraElement::single(AlgebraTag::D1, BasisSymbol::L(g.scale(k, g.probe_base())));
}

AlgebraElement probe_I(const GroupInstance& g, long long k) {
    return AlgebraElement::single(AlgebraTag::D1, BasisSymbol::I(g.scale(k, g.probe_base())));
}

}  // namespace

CohomologyClass extract_class(const GroupInstance& g, const BilinearMap& alpha) {
    Scalar d0 = g.pairing_eval(g.probe_base());
    if (d0.is_zero()) throw error("probe base point pairs to zero");

    // a: coboundaries and psi2/psi3/psi3' all vanish on I-I pairs, so
    // alpha(t^{x0}, t^{-x0}) = a * psi1(t^{x0}, t^{-x0}) = -a * d(x0).
    Scalar a = alpha(probe_I(g, 1), probe_I(g, -1)) / (-d0);

    // b: h(k) = alpha(L(k x0), L(-k x0)) is an odd cubic B k^3 + C k; the
    // linear part is coboundary noise, the cubic coefficient is b d(x0)^3.
    Scalar h1 = alpha(probe_L(g, 1), probe_L(g, -1));
    Scalar h2 = alpha(probe_L(g, 2), probe_L(g, -2));
    Scalar h3 = alpha(probe_L(g, 3), probe_L(g, -3));
    Scalar six(6);
    Scalar cubic = (h2 - Scalar(2) * h1) / six;
    Scalar linear = h1 - cubic;
    if (!(Scalar(27) * cubic + Scalar(3) * linear == h3))
        throw error("L-L probes are not an odd cubic: input is not a 2-cocycle");
    Scalar b = cubic / d0.pow(3);

    // c: p(k) = alpha(L(k x0), I(-k x0)) = c d(x0)^2 k^2 + (linear in k).
    Scalar p1 = alpha(probe_L(g, 1), probe_I(g, -1));
    Scalar p2 = alpha(probe_L(g, 2), probe_I(g, -2));
    Scalar quad = (p2 - Scalar(2) * p1) / Scalar(2);
    Scalar c = quad / d0.pow(2);

    return CohomologyClass{a, b, c};
}

namespace {

// Shared null-space driver over the unknowns f(-N) .. f(N).
FeOracleResult solve_window_system(int window, ScalarMatrix rows) {
    FeOracleResult out;
    out.window = window;
    std::vector<ScalarVector> basis = null_space(std::move(rows));
    out.dimension = static_cast<int>(basis.size());
    out.basis = std::move(basis);
    return out;
}

}  // namespace

Scalar cubic_fe_residual(const std::function<Scalar(long long)>& f, long long k, long long l) {
    return Scalar(k - l) * f(k + l) - Scalar(k + l) * (f(k) - f(l));
}

Scalar linear_fe_residual(const GroupInstance& g, const std::function<Scalar(long long)>& f,
                          long long k, long long l) {
    GroupElement x0 = g.probe_base();
    Scalar dk = g.pairing_eval(g.scale(k, x0));
    Scalar dl = g.pairing_eval(g.scale(l, x0));
    return (dl - dk) * f(k + l) - dl * f(l) + dk * f(k);
}

FeOracleResult solve_cubic_fe(int window) {
    if (window < 3) throw error("window must be >= 3");
    int n = 2 * window + 1;
    auto idx = [&](long long k) { return static_cast<size_t>(k + window); };
    ScalarMatrix rows;
    {
        ScalarVector fix0(n, Scalar(0));
        fix0[idx(0)] = Scalar(1);
        rows.push_back(std::move(fix0));  // f(0) = 0
    }
    for (long long k = -window; k <= window; ++k) {
        for (long long l = k + 1; l <= window; ++l) {
            if (k + l < -window || k + l > window) continue;
            ScalarVector row(n, Scalar(0));
            row[idx(k + l)] += Scalar(k - l);
            row[idx(k)] -= Scalar(k + l);
            row[idx(l)] += Scalar(k + l);
            rows.push_back(std::move(row));
        }
    }
    return solve_window_system(window, std::move(rows));
}

FeOracleResult solve_linear_fe(int window, const GroupInstance& g) {
    if (window < 3) throw error("window must be >= 3");
    if (g.kind() != GroupKind::Z) throw error("linear functional-equation oracle runs on kind Z");
    int n = 2 * window + 1;
    auto idx = [&](long long k) { return static_cast<size_t>(k + window); };
    GroupElement x0 = g.probe_base();
    auto d = [&](long long k) { return g.pairing_eval(g.scale(k, x0)); };
    ScalarMatrix rows;
    for (long long k = -window; k <= window; ++k) {
        for (long long l = k; l <= window; ++l) {
            if (k + l < -window || k + l > window) continue;
            ScalarVector row(n, Scalar(0));
            row[idx(k + l)] += d(l) - d(k);
            row[idx(l)] -= d(l);
            row[idx(k)] += d(k);
            bool nonzero = false;
            for (const auto& e : row) nonzero = nonzero || !e.is_zero();
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    return solve_window_system(window, std::move(rows));
}

bool in_span(const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& candidate) {
    if (basis.empty()) {
        for (const auto& e : candidate)
            if (!e.is_zero()) return false;
        return true;
    }
    size_t n = candidate.size();
    // rank comparison: candidate is in the span iff appending it does not
    // increase the rank
    ScalarMatrix with, without;
    for (const auto& v : basis) {
        if (v.size() != n) throw error("span dimension mismatch");
        without.push_back(v);
        with.push_back(v);
    }
    with.push_back(candidate);
    return rref(with).size() == rref(without).size();
}

}  // namespace hv
