#include <cmath>
#include <limits>
#include <sstream>

#include "tpb/analyzer.hpp"

namespace tpb {

std::string_view to_string(ClauseStatus s) noexcept {
    switch (s) {
        case ClauseStatus::Holds: return "holds";
        case ClauseStatus::Fails: return "fails";
        case ClauseStatus::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Net exponent at t of an expression; +inf for the zero function.
double net_exponent(const SymbolExpr& e, cplx t) {
    if (e.is_zero()) return kInf;
    double a = kInf;
    for (const auto& term : e.terms()) a = std::min(a, term.exponent_at(t));
    return a;
}

std::string point_text(cplx t) { return format_complex(t); }

enum class Limit { Zero, Finite, Infinite };

struct PartLimit {
    Limit kind = Limit::Zero;
    cplx value{};
    bool radial = false;
};

// Limit of g along the path j -> point(j), j = 1..20, with one Richardson step.
PartLimit path_limit(const std::function<cplx(cplx)>& g, const std::function<cplx(int)>& point, cplx reference) {
    cplx prev{};
    cplx extrapolated{};
    double scale = 0.0;
    for (int j = 1; j <= 20; ++j) {
        const cplx cur = g(point(j));
        scale = std::max(scale, std::abs(cur));
        if (j > 1) extrapolated = 2.0 * cur - prev;
        prev = cur;
    }
    PartLimit out;
    out.radial = true;
    if (!std::isfinite(std::abs(extrapolated)) || std::abs(extrapolated) > 1e6 * (1.0 + std::abs(reference))) {
        out.kind = Limit::Infinite;
    } else if (std::abs(extrapolated) <= 1e-6 * (1.0 + scale)) {
        out.kind = Limit::Zero;
    } else {
        out.kind = Limit::Finite;
        out.value = extrapolated;
    }
    return out;
}

// Radial limit of g(r t) on r = 1 - 2^-j.
PartLimit radial_limit(const std::function<cplx(cplx)>& g, cplx t) {
    return path_limit(g, [t](int j) { return (1.0 - std::ldexp(1.0, -j)) * t; }, g(0.5 * t));
}

// Limit of g(t e^{i 2^-j}) along the circle.
PartLimit circle_limit(const std::function<cplx(cplx)>& g, cplx t) {
    return path_limit(g, [t](int j) { return t * std::polar(1.0, std::ldexp(1.0, -j)); }, g(t * std::polar(1.0, 0.5)));
}

// Limit of part(z)/(z-t)^i (or conj(part(z))/(z-t)^i) as z -> t along the circle.
PartLimit part_limit(const SymbolExpr& part, cplx t, int i, bool conjugate) {
    PartLimit out;
    if (part.is_zero()) return out;
    const LocalBehaviour lb = part.behaviour_at(t);
    if (lb.cancelled) {
        // The analytic quotient has the same limit along every nontangential path.
        auto g = [&](cplx z) { return part(z) / std::pow(z - t, i); };
        out = radial_limit(g, t);
        if (conjugate && out.kind == Limit::Finite) out.value = std::conj(out.value) * std::pow(-std::conj(t) * std::conj(t), i);
        return out;
    }
    if (lb.exponent > i + 1e-12) return out;
    if (lb.exponent < i - 1e-12) {
        out.kind = Limit::Infinite;
        return out;
    }
    // Exponent equals the integer i. On the circle conj(z - t) ~ -conj(t)^2 (z - t).
    out.kind = Limit::Finite;
    out.value = conjugate ? std::conj(lb.coefficient) * std::pow(-std::conj(t) * std::conj(t), i) : lb.coefficient;
    if (std::abs(out.value) == 0.0) out.kind = Limit::Zero;
    return out;
}

}  // namespace

AdmissibilityReport check_admissible(const SymbolExpr& u, const L2Symbol& v) {
    AdmissibilityReport rep;
    rep.a.clause = "a";
    rep.b.clause = "b";
    rep.c.clause = "c";
    rep.d.clause = "d";

    if (!u.analytic_in_disk()) {
        rep.a.status = ClauseStatus::Fails;
        rep.a.note = "u has a singularity inside the disk";
        rep.b.status = rep.c.status = rep.d.status = ClauseStatus::NotApplicable;
        return rep;
    }

    rep.u_poles = detect_poles(u, SymbolPart::Analytic);
    rep.v_poles = detect_poles(v);

    // (a) The factor structure admits finitely many boundary roots, each with a finite exponent.
    rep.a.note = "finitely many poles, each of finite order";

    // (b) u is analytic at every pole of v.
    rep.b.note = rep.v_poles.empty() ? "v has no poles" : "u is bounded at every pole of v";
    for (const auto& p : rep.v_poles) {
        if (net_exponent(u, p.location) < 0) {
            rep.b.status = ClauseStatus::Fails;
            rep.b.pole = p.location;
            rep.b.order = p.order;
            rep.b.note = "u has a pole at " + point_text(p.location) + ", which is a pole of v";
            break;
        }
    }

    // (c) v_plus and v_minus are analytic at every pole of u.
    rep.c.note = rep.u_poles.empty() ? "u has no poles" : "v_plus and v_minus are bounded at every pole of u";
    for (const auto& p : rep.u_poles) {
        const double ap = net_exponent(v.plus(), p.location);
        const double am = net_exponent(v.minus(), p.location);
        if (ap < 0 || am < 0) {
            rep.c.status = ClauseStatus::Fails;
            rep.c.pole = p.location;
            rep.c.order = p.order;
            rep.c.note = std::string(am < 0 ? "v_minus" : "v_plus") + " has a pole at " + point_text(p.location) +
                         ", which is a pole of u";
            break;
        }
    }

    // (d)(1): v lies in conj(H^2), i.e. its analytic part is constant.
    if (v.co_analytic()) {
        rep.d.clause = "d1";
        rep.d.note = "v is co-analytic";
    } else {
        rep.d.clause = "d2";
        rep.d.note = rep.u_poles.empty() ? "u has no poles" : "vanishing orders of v_plus and conj(v_minus) match v";
        for (const auto& p : rep.u_poles) {
            const cplx t = p.location;
            for (int i = 0; i < p.order; ++i) {
                const PartLimit lp = part_limit(v.plus(), t, i, false);
                const PartLimit lm = part_limit(v.minus(), t, i, true);
                if (lp.radial || lm.radial) rep.d.radial_fallback = true;

                // Limit of v/(z-t)^i.
                bool v_zero;
                if (lp.kind == Limit::Infinite || lm.kind == Limit::Infinite) {
                    v_zero = false;  // the parts cannot cancel a pure blow-up of different order
                    if (lp.kind == Limit::Infinite && lm.kind == Limit::Infinite) {
                        // v mixes analytic and conjugate-analytic parts, so take the limit on the circle.
                        auto g = [&](cplx z) { return v(z) / std::pow(z - t, i); };
                        const PartLimit lv = circle_limit(g, t);
                        rep.d.radial_fallback = true;
                        v_zero = lv.kind == Limit::Zero;
                    }
                } else {
                    const cplx sum = lp.value + lm.value;
                    const double scale = std::abs(lp.value) + std::abs(lm.value);
                    v_zero = std::abs(sum) <= 1e-12 * scale || (lp.kind == Limit::Zero && lm.kind == Limit::Zero);
                }
                if (!v_zero) continue;
                if (lp.kind != Limit::Zero || lm.kind != Limit::Zero) {
                    rep.d.status = ClauseStatus::Fails;
                    rep.d.pole = t;
                    rep.d.order = p.order;
                    rep.d.power = i;
                    std::ostringstream msg;
                    msg << "v/(z-t)^" << i << " vanishes at t = " << point_text(t)
                        << " but v_plus/(z-t)^" << i << " and conj(v_minus)/(z-t)^" << i << " do not";
                    rep.d.note = msg.str();
                    break;
                }
            }
            if (rep.d.status == ClauseStatus::Fails) break;
        }
        if (rep.d.radial_fallback) rep.d.note += "; radial limits used where leading terms cancelled";
    }

    rep.overall = rep.a.status == ClauseStatus::Holds && rep.b.status == ClauseStatus::Holds &&
                  rep.c.status == ClauseStatus::Holds && rep.d.status == ClauseStatus::Holds;
    return rep;
}

}  // namespace tpb
