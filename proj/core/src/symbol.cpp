#include "tpb/symbol.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

namespace tpb {

namespace {

constexpr double kSameSlopeTol = 1e-13;

cplx ipow(cplx base, long long n) {
    if (n < 0) return 1.0 / ipow(base, -n);
    cplx result{1.0, 0.0};
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

bool is_integral(double x) noexcept { return std::isfinite(x) && x == std::round(x); }

cplx blaschke_factor(cplx a, cplx z) {
    if (a == cplx{}) return z;
    const double r = std::abs(a);
    return (r / a) * (a - z) / (1.0 - std::conj(a) * z);
}

bool same_factor_shape(const Factor& a, const Factor& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case FactorKind::Z: return true;
        case FactorKind::Linear: return std::abs(a.slope - b.slope) <= kSameSlopeTol;
        case FactorKind::Blaschke: return a.zeros == b.zeros;
    }
    return false;
}

bool same_term_shape(const Term& a, const Term& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (!same_factor_shape(a.factors[i], b.factors[i])) return false;
        if (a.factors[i].exponent != b.factors[i].exponent) return false;
    }
    return true;
}

int kind_rank(FactorKind k) {
    switch (k) {
        case FactorKind::Z: return 0;
        case FactorKind::Linear: return 1;
        case FactorKind::Blaschke: return 2;
    }
    return 3;
}

bool factor_less(const Factor& a, const Factor& b) {
    if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind);
    if (a.kind == FactorKind::Linear) {
        if (a.slope.real() != b.slope.real()) return a.slope.real() < b.slope.real();
        return a.slope.imag() < b.slope.imag();
    }
    if (a.kind == FactorKind::Blaschke) {
        return std::lexicographical_compare(
            a.zeros.begin(), a.zeros.end(), b.zeros.begin(), b.zeros.end(),
            [](cplx x, cplx y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); });
    }
    return false;
}

// Merge equal-shape factors, drop zero exponents, sort.
void canonicalize_factors(Term& t) {
    std::vector<Factor> merged;
    for (auto& f : t.factors) {
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const Factor& g) { return same_factor_shape(f, g); });
        if (it == merged.end()) {
            merged.push_back(f);
        } else {
            it->exponent += f.exponent;
        }
    }
    std::erase_if(merged, [](const Factor& f) { return std::abs(f.exponent) < 1e-14; });
    std::sort(merged.begin(), merged.end(), factor_less);
    t.factors = std::move(merged);
}

void validate_factor(const Factor& f) {
    switch (f.kind) {
        case FactorKind::Z:
            if (!is_integral(f.exponent)) throw DomainError("real exponent on a non-boundary factor: z");
            break;
        case FactorKind::Blaschke:
            if (!is_integral(f.exponent)) throw DomainError("real exponent on a non-boundary factor: blaschke");
            for (cplx a : f.zeros) {
                if (!(std::abs(a) < 1.0)) throw DomainError("Blaschke zero with modulus >= 1");
            }
            break;
        case FactorKind::Linear:
            if (f.slope == cplx{}) throw DomainError("degenerate linear factor");
            if (!is_integral(f.exponent) && !f.on_boundary()) {
                throw DomainError("real exponent on a non-boundary factor: root " + format_complex(f.root()));
            }
            break;
    }
}

}  // namespace

bool same_point(cplx a, cplx b) noexcept { return std::abs(a - b) <= 1e-12; }

// ---------------------------------------------------------------------------

bool Factor::integral_exponent() const noexcept { return is_integral(exponent); }

bool Factor::on_boundary() const noexcept {
    return kind == FactorKind::Linear && std::abs(std::abs(slope) - 1.0) <= kUnitCircleTol;
}

cplx Factor::eval(cplx z) const {
    switch (kind) {
        case FactorKind::Z:
            if (z == cplx{} && exponent < 0) throw PoleHit(z);
            return ipow(z, static_cast<long long>(exponent));
        case FactorKind::Linear: {
            const cplx w = 1.0 - slope * z;
            if (w == cplx{}) {
                if (exponent < 0) throw PoleHit(root());
                return exponent > 0 ? cplx{} : cplx{1.0, 0.0};
            }
            if (integral_exponent()) return ipow(w, static_cast<long long>(exponent));
            return std::pow(w, exponent);
        }
        case FactorKind::Blaschke: {
            cplx prod{1.0, 0.0};
            for (cplx a : zeros) prod *= blaschke_factor(a, z);
            if (prod == cplx{} && exponent < 0) throw PoleHit(z);
            return ipow(prod, static_cast<long long>(exponent));
        }
    }
    return {};
}

cplx Term::eval(cplx z) const {
    cplx v = coefficient;
    for (const auto& f : factors) v *= f.eval(z);
    return v;
}

double Term::exponent_at(cplx t) const noexcept {
    for (const auto& f : factors) {
        if (f.kind == FactorKind::Linear && same_point(f.root(), t)) return f.exponent;
    }
    return 0.0;
}

cplx Term::cofactor_at(cplx t) const {
    cplx v = coefficient;
    for (const auto& f : factors) {
        if (f.kind == FactorKind::Linear && same_point(f.root(), t)) continue;
        v *= f.eval(t);
    }
    return v;
}

// ---------------------------------------------------------------------------

SymbolExpr::SymbolExpr(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

SymbolExpr SymbolExpr::constant(cplx c) {
    return SymbolExpr(std::vector<Term>{Term{c, {}}});
}

SymbolExpr SymbolExpr::z_power(int k) {
    Factor f;
    f.kind = FactorKind::Z;
    f.exponent = k;
    return SymbolExpr(std::vector<Term>{Term{1.0, {f}}});
}

SymbolExpr SymbolExpr::linear(cplx slope, double exponent) {
    Factor f;
    f.kind = FactorKind::Linear;
    f.slope = slope;
    if (std::abs(std::abs(slope) - 1.0) <= kUnitCircleTol) f.slope = slope / std::abs(slope);
    f.exponent = exponent;
    validate_factor(f);
    return SymbolExpr(std::vector<Term>{Term{1.0, {f}}});
}

SymbolExpr SymbolExpr::blaschke(std::vector<cplx> zeros, int exponent) {
    if (zeros.empty()) return constant(1.0);
    Factor f;
    f.kind = FactorKind::Blaschke;
    f.zeros = std::move(zeros);
    f.exponent = exponent;
    validate_factor(f);
    return SymbolExpr(std::vector<Term>{Term{1.0, {f}}});
}

void SymbolExpr::normalize() {
    for (auto& t : terms_) canonicalize_factors(t);

    std::vector<Term> combined;
    for (auto& t : terms_) {
        auto it = std::find_if(combined.begin(), combined.end(),
                               [&](const Term& c) { return same_term_shape(c, t); });
        if (it == combined.end()) {
            combined.push_back(std::move(t));
        } else {
            it->coefficient += t.coefficient;
        }
    }
    std::erase_if(combined, [](const Term& t) { return t.coefficient == cplx{}; });

    // alpha + beta*z is stored as the single factor alpha*(1 - slope*z).
    if (combined.size() == 2) {
        Term* c = nullptr;
        Term* lin = nullptr;
        for (auto& t : combined) {
            if (t.factors.empty()) c = &t;
            else if (t.factors.size() == 1 && t.factors[0].kind == FactorKind::Z && t.factors[0].exponent == 1.0)
                lin = &t;
        }
        if (c != nullptr && lin != nullptr) {
            Factor f;
            f.kind = FactorKind::Linear;
            f.slope = -lin->coefficient / c->coefficient;
            if (std::abs(std::abs(f.slope) - 1.0) <= kUnitCircleTol) f.slope /= std::abs(f.slope);
            f.exponent = 1.0;
            combined = {Term{c->coefficient, {f}}};
        }
    }
    terms_ = std::move(combined);
}

bool SymbolExpr::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].factors.empty());
}

cplx SymbolExpr::operator()(cplx z) const {
    cplx v{};
    for (const auto& t : terms_) v += t.eval(z);
    return v;
}

SymbolExpr SymbolExpr::pow(double p) const {
    if (!std::isfinite(p)) throw DomainError("non-finite exponent");
    if (is_integral(p) && p >= 0) {
        SymbolExpr result = constant(1.0);
        SymbolExpr base = *this;
        auto n = static_cast<long long>(p);
        while (n > 0) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return result;
    }
    if (terms_.empty()) throw DomainError("negative or fractional power of zero");
    if (terms_.size() != 1) {
        throw DomainError("negative or fractional power of a sum that is not a linear factor");
    }
    Term t = terms_[0];
    t.coefficient = is_integral(p) ? ipow(t.coefficient, static_cast<long long>(p)) : std::pow(t.coefficient, p);
    for (auto& f : t.factors) {
        f.exponent *= p;
        validate_factor(f);
    }
    return SymbolExpr(std::vector<Term>{std::move(t)});
}

SymbolExpr SymbolExpr::operator-() const { return cplx{-1.0, 0.0} * *this; }

SymbolExpr operator+(const SymbolExpr& a, const SymbolExpr& b) {
    std::vector<Term> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return SymbolExpr(std::move(terms));
}

SymbolExpr operator-(const SymbolExpr& a, const SymbolExpr& b) { return a + (-b); }

SymbolExpr operator*(const SymbolExpr& a, const SymbolExpr& b) {
    std::vector<Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            Term t{x.coefficient * y.coefficient, x.factors};
            t.factors.insert(t.factors.end(), y.factors.begin(), y.factors.end());
            terms.push_back(std::move(t));
        }
    }
    return SymbolExpr(std::move(terms));
}

SymbolExpr operator*(cplx c, const SymbolExpr& a) {
    std::vector<Term> terms = a.terms_;
    for (auto& t : terms) t.coefficient *= c;
    return SymbolExpr(std::move(terms));
}

std::vector<cplx> SymbolExpr::boundary_points() const {
    std::vector<cplx> pts;
    for (const auto& t : terms_) {
        for (const auto& f : t.factors) {
            if (!f.on_boundary()) continue;
            const cplx r = f.root();
            if (std::none_of(pts.begin(), pts.end(), [&](cplx p) { return same_point(p, r); })) pts.push_back(r);
        }
    }
    return pts;
}

std::vector<cplx> SymbolExpr::boundary_singularities() const {
    std::vector<cplx> pts;
    for (const auto& t : terms_) {
        for (const auto& f : t.factors) {
            if (!f.on_boundary() || f.exponent >= 0) continue;
            const cplx r = f.root();
            if (std::none_of(pts.begin(), pts.end(), [&](cplx p) { return same_point(p, r); })) pts.push_back(r);
        }
    }
    return pts;
}

bool SymbolExpr::analytic_in_disk() const noexcept {
    for (const auto& t : terms_) {
        for (const auto& f : t.factors) {
            if (f.exponent >= 0) continue;
            if (f.kind != FactorKind::Linear) return false;
            if (std::abs(f.root()) < 1.0 - kUnitCircleTol) return false;
        }
    }
    return true;
}

bool SymbolExpr::h2_claimed() const noexcept {
    if (!analytic_in_disk()) return false;
    for (const auto& t : terms_) {
        for (const auto& f : t.factors) {
            if (f.on_boundary() && !(f.exponent > -0.5)) return false;
        }
    }
    return true;
}

LocalBehaviour SymbolExpr::behaviour_at(cplx t) const {
    LocalBehaviour lb;
    if (terms_.empty()) {
        lb.exponent = std::numeric_limits<double>::infinity();
        return lb;
    }
    lb.exponent = std::numeric_limits<double>::infinity();
    for (const auto& term : terms_) lb.exponent = std::min(lb.exponent, term.exponent_at(t));

    // (1 - z/t)^a = (-1/t)^a (z - t)^a
    cplx sum{};
    double scale = 0.0;
    int contributing = 0;
    for (const auto& term : terms_) {
        const double a = term.exponent_at(t);
        if (std::abs(a - lb.exponent) > 1e-12) continue;
        const cplx lead = (is_integral(a) ? ipow(-1.0 / t, static_cast<long long>(a)) : std::pow(-1.0 / t, a)) *
                          term.cofactor_at(t);
        sum += lead;
        scale += std::abs(lead);
        ++contributing;
    }
    lb.coefficient = sum;
    lb.cancelled = contributing > 1 && std::abs(sum) <= 1e-12 * scale;
    return lb;
}

// ---------------------------------------------------------------------------

L2Symbol::L2Symbol(SymbolExpr plus, SymbolExpr minus) : plus_(std::move(plus)), minus_(std::move(minus)) {
    if (!plus_.h2_claimed()) throw DomainError("plus part is not an analytic H^2 symbol");
    if (!minus_.h2_claimed()) throw DomainError("minus part is not an analytic H^2 symbol");
    if (std::abs(minus_(0.0)) > 1e-13) throw DomainError("minus part must vanish at 0");
}

cplx L2Symbol::operator()(cplx z) const { return plus_(z) + std::conj(minus_(z)); }

// ---------------------------------------------------------------------------

std::string format_number(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string format_complex(cplx c) {
    if (c.imag() == 0.0) return format_number(c.real());
    std::string s = format_number(c.real());
    if (std::signbit(c.imag())) {
        s += "-" + format_number(-c.imag());
    } else {
        s += "+" + format_number(c.imag());
    }
    return s + "i";
}

namespace {

std::string format_factor(const Factor& f) {
    std::string base;
    switch (f.kind) {
        case FactorKind::Z: base = "z"; break;
        case FactorKind::Linear:
            if (f.slope == cplx{1.0, 0.0}) base = "(1-z)";
            else if (f.slope == cplx{-1.0, 0.0}) base = "(1+z)";
            else if (f.slope.imag() == 0.0 && f.slope.real() < 0) base = "(1+" + format_number(-f.slope.real()) + "*z)";
            else if (f.slope.imag() == 0.0) base = "(1-" + format_number(f.slope.real()) + "*z)";
            else base = "(1-(" + format_complex(f.slope) + ")*z)";
            break;
        case FactorKind::Blaschke: {
            base = "blaschke(";
            for (std::size_t i = 0; i < f.zeros.size(); ++i) {
                if (i) base += ",";
                base += format_complex(f.zeros[i]);
            }
            base += ")";
            break;
        }
    }
    if (f.exponent != 1.0) base += "^" + format_number(f.exponent);
    return base;
}

}  // namespace

std::string to_string(const SymbolExpr& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : e.terms()) {
        cplx c = t.coefficient;
        bool negative = c.imag() == 0.0 && c.real() < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string body;
        const bool unit = c == cplx{1.0, 0.0};
        if (!unit || t.factors.empty()) {
            body = c.imag() == 0.0 ? format_number(c.real()) : "(" + format_complex(c) + ")";
        }
        for (const auto& f : t.factors) {
            if (!body.empty()) body += "*";
            body += format_factor(f);
        }
        out += body;
    }
    return out;
}

cplx eval_symbol(const SymbolExpr& e, cplx z) { return e(z); }

namespace {

template <typename Eval>
std::vector<cplx> sample_on_grid(std::size_t n, const std::vector<cplx>& singular, Eval&& eval) {
    std::vector<cplx> out(n);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const cplx zeta = std::polar(1.0, step * static_cast<double>(j));
        bool hit = std::any_of(singular.begin(), singular.end(),
                               [&](cplx p) { return std::abs(p - zeta) < 1e-10; });
        if (hit) {
            out[j] = {nan, nan};
            continue;
        }
        try {
            out[j] = eval(zeta);
        } catch (const PoleHit&) {
            out[j] = {nan, nan};
        }
    }
    return out;
}

void require_grid(std::size_t n) {
    if (n < 8 || (n & (n - 1)) != 0) throw DomainError("grid size must be a power of two >= 8");
}

}  // namespace

std::vector<cplx> boundary_sample(const SymbolExpr& e, std::size_t grid_size) {
    require_grid(grid_size);
    return sample_on_grid(grid_size, e.boundary_singularities(), [&](cplx z) { return e(z); });
}

std::vector<cplx> boundary_sample(const L2Symbol& v, std::size_t grid_size) {
    require_grid(grid_size);
    auto sing = v.plus().boundary_singularities();
    for (cplx p : v.minus().boundary_singularities()) sing.push_back(p);
    return sample_on_grid(grid_size, sing, [&](cplx z) { return v(z); });
}

std::vector<PoleRecord> detect_poles(const SymbolExpr& e, SymbolPart part) {
    std::vector<PoleRecord> poles;
    for (cplx t : e.boundary_singularities()) {
        double worst = 0.0;
        for (const auto& term : e.terms()) worst = std::min(worst, term.exponent_at(t));
        if (worst >= 0) continue;
        PoleRecord rec;
        rec.location = t;
        rec.order = static_cast<int>(std::ceil(-worst - 1e-12));
        rec.part = part;
        poles.push_back(rec);
    }
    return poles;
}

std::vector<PoleRecord> detect_poles(const L2Symbol& v) {
    auto poles = detect_poles(v.plus(), SymbolPart::Analytic);
    auto minus = detect_poles(v.minus(), SymbolPart::CoAnalytic);
    poles.insert(poles.end(), minus.begin(), minus.end());
    return poles;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<cplx> truncated_product(const std::vector<cplx>& a, const std::vector<cplx>& b, int degree) {
    std::vector<cplx> out(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) {
        if (a[i] == cplx{}) continue;
        for (int j = 0; i + j <= degree; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<cplx> series_power(std::vector<cplx> base, long long n, int degree) {
    std::vector<cplx> result(static_cast<std::size_t>(degree) + 1);
    result[0] = 1.0;
    while (n > 0) {
        if (n & 1) result = truncated_product(result, base, degree);
        n >>= 1;
        if (n > 0) base = truncated_product(base, base, degree);
    }
    return result;
}

std::vector<cplx> factor_series(const Factor& f, int degree) {
    std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
    switch (f.kind) {
        case FactorKind::Z: {
            const auto k = static_cast<long long>(f.exponent);
            if (k <= degree) c[static_cast<std::size_t>(k)] = 1.0;
            return c;
        }
        case FactorKind::Linear: {
            // (1 - s z)^a = sum_n binom(a, n) (-s)^n z^n
            c[0] = 1.0;
            for (int n = 1; n <= degree; ++n) {
                c[n] = c[n - 1] * (static_cast<double>(n - 1) - f.exponent) / static_cast<double>(n) * f.slope;
            }
            return c;
        }
        case FactorKind::Blaschke: {
            std::vector<cplx> prod(static_cast<std::size_t>(degree) + 1);
            prod[0] = 1.0;
            for (cplx a : f.zeros) {
                std::vector<cplx> b(static_cast<std::size_t>(degree) + 1);
                if (a == cplx{}) {
                    if (degree >= 1) b[1] = 1.0;
                } else {
                    const double r = std::abs(a);
                    const cplx ac = std::conj(a);
                    b[0] = r;
                    cplx p{1.0, 0.0};  // conj(a)^(n-1)
                    for (int n = 1; n <= degree; ++n) {
                        b[n] = (r / a) * p * (r * r - 1.0);
                        p *= ac;
                    }
                }
                prod = truncated_product(prod, b, degree);
            }
            return series_power(std::move(prod), static_cast<long long>(f.exponent), degree);
        }
    }
    return c;
}

}  // namespace

std::vector<cplx> taylor_coefficients(const SymbolExpr& e, int degree) {
    if (degree < 0) throw DomainError("degree must be non-negative");
    if (!e.analytic_in_disk()) throw DomainError("symbol has a singularity inside the disk");
    std::vector<cplx> total(static_cast<std::size_t>(degree) + 1);
    for (const auto& t : e.terms()) {
        std::vector<cplx> acc(static_cast<std::size_t>(degree) + 1);
        acc[0] = t.coefficient;
        for (const auto& f : t.factors) acc = truncated_product(acc, factor_series(f, degree), degree);
        for (int n = 0; n <= degree; ++n) total[n] += acc[n];
    }
    return total;
}

}  // namespace tpb
