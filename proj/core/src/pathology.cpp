#include "tpb/pathology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tpb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

std::string_view to_string(ScanVerdict v) noexcept {
    switch (v) {
        case ScanVerdict::Bounded: return "bounded";
        case ScanVerdict::MonotoneBlowup: return "monotone-blowup";
        case ScanVerdict::Oscillatory: return "oscillatory";
        case ScanVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::vector<cplx> dyadic_zeros(int count) {
    std::vector<cplx> z;
    for (int k = 1; k <= count; ++k) z.emplace_back(1.0 - std::ldexp(1.0, -k), 0.0);
    return z;
}

SymbolExpr pole_order_function(const std::vector<cplx>& zeros, int n) {
    if (n < 0) throw DomainError("pole order must be non-negative");
    for (cplx a : zeros) {
        if (!(std::abs(a) < 1.0)) throw DomainError("Blaschke zero must lie inside the disk");
    }
    const SymbolExpr theta = SymbolExpr::blaschke(zeros);
    const cplx c = std::conj(theta(1.0));
    const SymbolExpr quotient = (SymbolExpr::constant(1.0) - c * theta) * SymbolExpr::linear(1.0, -1.0);
    return quotient.pow(n);
}

ArcScanResult oscillation_scan(const std::function<cplx(cplx)>& f, cplx zeta, int n, const ScanOptions& opt) {
    if (!(opt.eps > 0.0)) throw DomainError("eps must be positive");
    if (opt.arcs < 1 || opt.samples_per_arc < 2) throw DomainError("scan needs at least one arc and two samples");
    if (!(std::abs(std::abs(zeta) - 1.0) < 1e-12)) throw DomainError("scan point must lie on the unit circle");

    ArcScanResult res;
    res.zeta = zeta;
    res.exponent = n;

    std::vector<ArcSample> samples;
    const int S = opt.samples_per_arc;
    for (int k = 0; k < opt.arcs; ++k) {
        ArcStats st;
        st.arc = k;
        st.outer = opt.eps * std::ldexp(1.0, -k);
        st.inner = 0.5 * st.outer;
        st.sup = 0.0;
        st.inf = std::numeric_limits<double>::infinity();
        const double step = (st.outer - st.inner) / S;
        st.resolvable = step > 1e-12 && st.outer <= 2.0;
        std::vector<ArcSample> local;
        for (int s = S - 1; s >= 0 && st.resolvable; --s) {
            const double d = st.inner + (s + 0.5) * step;
            const double phi = 2.0 * std::asin(0.5 * d);
            const cplx z = zeta * std::polar(1.0, phi);
            const cplx val = std::pow(z - zeta, n) * f(z);
            const double m = std::abs(val);
            if (!std::isfinite(m)) {
                st.resolvable = false;
                break;
            }
            st.sup = std::max(st.sup, m);
            st.inf = std::min(st.inf, m);
            local.push_back({k, d, 0.5 * step, m});
        }
        if (!st.resolvable) {
            st.sup = st.inf = std::numeric_limits<double>::quiet_NaN();
        } else {
            samples.insert(samples.end(), local.begin(), local.end());
        }
        res.arcs.push_back(st);
    }

    std::vector<double> ks, logs;
    for (const auto& st : res.arcs) {
        if (!st.resolvable) continue;
        ks.push_back(st.arc);
        logs.push_back(std::log2(std::max(st.sup, 1e-300)));
    }
    if (ks.size() < 4) {
        res.too_few_arcs = true;
        res.verdict = ScanVerdict::Inconclusive;
        return res;
    }
    res.sup_slope = fit_slope(ks, logs);

    // Greedy interleaved chain, walking toward zeta.
    bool want_small = true;
    for (const auto& s : samples) {
        const double sup = res.arcs[static_cast<std::size_t>(s.arc)].sup;
        if (!(sup > 0.0)) continue;
        if (want_small && s.value <= opt.small_fraction * sup) {
            res.small.push_back(s);
            want_small = false;
        } else if (!want_small && s.value >= opt.large_fraction * sup) {
            res.large.push_back(s);
            want_small = true;
        }
    }

    if (res.sup_slope <= opt.bounded_slope) {
        res.verdict = ScanVerdict::Bounded;
    } else if (static_cast<int>(res.interleaved_pairs()) >= opt.min_pairs) {
        res.verdict = ScanVerdict::Oscillatory;
    } else {
        res.verdict = ScanVerdict::MonotoneBlowup;
    }
    return res;
}

ArcScanResult oscillation_scan(const SymbolExpr& f, cplx zeta, int n, const ScanOptions& opt) {
    return oscillation_scan(
        [&f](cplx z) {
            try {
                return f(z);
            } catch (const PoleHit&) {
                const double nan = std::numeric_limits<double>::quiet_NaN();
                return cplx{nan, nan};
            }
        },
        zeta, n, opt);
}

// ---------------------------------------------------------------- step function

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

StepArc make_arc(int k) {
    StepArc a;
    a.k = k;
    a.center_angle = 2.0 * std::asin(1.0 / (2.0 * k));
    a.value = factorial(k);
    a.measure = 1.0 / (a.value * a.value * k * k);
    return a;
}

bool representable(const StepArc& a) {
    const double half = std::numbers::pi * a.measure;
    const double lo = a.center_angle - half;
    const double hi = a.center_angle + half;
    return std::abs((hi - lo) - 2.0 * half) <= 0.01 * 2.0 * half;
}

}  // namespace

int max_feasible_step_K() {
    int K = 3;
    while (representable(make_arc(K + 1))) ++K;
    return K;
}

StepFunctionSpec infinite_pole_step_function(int K) {
    if (K < 4) throw DomainError("K must be >= 4");
    StepFunctionSpec spec;
    for (int k = 3; k <= K; ++k) {
        StepArc a = make_arc(k);
        if (!representable(a)) {
            throw DomainError("arc for k = " + std::to_string(k) +
                              " is too short for double precision; max feasible K = " +
                              std::to_string(max_feasible_step_K()));
        }
        if (!spec.arcs.empty()) {
            const StepArc& prev = spec.arcs.back();
            const double gap = prev.center_angle - a.center_angle;
            if (!(gap > std::numbers::pi * (prev.measure + a.measure))) {
                throw DomainError("arcs overlap at k = " + std::to_string(k) +
                                  "; max feasible K = " + std::to_string(k - 1));
            }
        }
        spec.arcs.push_back(a);
        spec.norm_squared += 1.0 / (static_cast<double>(k) * k);
    }
    return spec;
}

std::vector<double> StepFunctionSpec::growth(int n) const {
    std::vector<double> g;
    for (const auto& a : arcs) g.push_back(a.value / std::pow(static_cast<double>(a.k), n));
    return g;
}

double StepFunctionSpec::value_at(double theta) const {
    theta = std::remainder(theta, kTwoPi);
    for (const auto& a : arcs) {
        if (std::abs(theta - a.center_angle) < std::numbers::pi * a.measure) return a.value;
    }
    return 0.0;
}

// ---------------------------------------------------------------- H^p estimate

std::vector<std::size_t> default_hp_grids() {
    std::vector<std::size_t> g;
    for (std::size_t L = 1024; L <= (1u << 18); L *= 2) g.push_back(L);
    return g;
}

HpTable hp_norm_estimate(const SymbolExpr& f, double p, const std::vector<std::size_t>& grids,
                         const TrendThresholds& th) {
    if (!(p > 0.0)) throw DomainError("p must be positive");
    HpTable t;
    t.p = p;
    std::vector<double> values;
    for (std::size_t L : grids) {
        const auto s = boundary_sample(f, L);
        double acc = 0.0;
        for (cplx z : s) {
            const double m = std::abs(z);
            if (std::isfinite(m)) acc += std::pow(m, p);
        }
        HpRow row;
        row.grid = L;
        row.integral = acc / static_cast<double>(L);
        row.norm = std::pow(row.integral, 1.0 / p);
        t.rows.push_back(row);
        values.push_back(row.integral);
    }
    t.trend = classify_trend(values, th);
    return t;
}

}  // namespace tpb
