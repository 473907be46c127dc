#include "rhcurve/curve.hpp"

#include "rhcurve/errors.hpp"
#include "rhcurve/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

namespace rhc {

PlaneCurve::PlaneCurve(Polynomial2 f) : f_(std::move(f))
{
    if (f_.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "curve equation is the zero polynomial");
    }
    if (!f_.constant_term().is_zero()) {
        throw Error(ErrorKind::InvalidArgument,
                    "curve does not pass through the origin: f(0,0) = " +
                        f_.constant_term().to_string());
    }
    fx_ = p2_partial(f_, Var::X);
    fy_ = p2_partial(f_, Var::Y);
}

CurvePtr make_curve(Polynomial2 f)
{
    return std::make_shared<const PlaneCurve>(std::move(f));
}

std::size_t exponent_gcd(const USeries& x, const USeries& y)
{
    std::size_t g = 0;
    for (const USeries* s : {&x, &y}) {
        for (std::size_t k = 0; k < s->order(); ++k) {
            if (!(*s)[k].is_zero()) {
                g = std::gcd(g, k);
            }
        }
    }
    return g;
}

Branch::Branch(USeries x, USeries y, std::size_t order) : order_(order)
{
    if (order == 0) {
        throw Error(ErrorKind::InvalidBranch, "branch order must be positive");
    }
    if (x.order() < order || y.order() < order) {
        throw Error(ErrorKind::InvalidBranch,
                    "branch series known only mod s^" +
                        std::to_string(std::min(x.order(), y.order())) + ", requested order " +
                        std::to_string(order));
    }
    x_ = x.truncated(order);
    y_ = y.truncated(order);
    if (!x_[0].is_zero() || !y_[0].is_zero()) {
        throw Error(ErrorKind::InvalidBranch, "branch is not centered at the origin");
    }
    std::size_t g = exponent_gcd(x_, y_);
    if (g == 0) {
        throw Error(ErrorKind::InvalidBranch, "branch is identically zero mod s^order");
    }
    if (g != 1) {
        throw Error(ErrorKind::InvalidBranch,
                    "branch is not primitive: all exponents divisible by " + std::to_string(g));
    }
}

Branch Branch::truncated(std::size_t order) const
{
    return Branch(x_, y_, std::min(order, order_));
}

ResidualOrder verify_branch(const PlaneCurve& c, const Branch& b)
{
    USeries r = p2_eval_on_branch(c.f(), b.x(), b.y());
    auto v = r.valuation();
    if (!v) {
        return {true, b.order()};
    }
    return {false, *v};
}

Normalization::Normalization(CurvePtr curve, std::vector<Branch> branches)
    : curve_(std::move(curve)), branches_(std::move(branches))
{
    if (!curve_) {
        throw Error(ErrorKind::InvalidArgument, "normalization without a curve");
    }
    if (branches_.empty()) {
        throw Error(ErrorKind::InvalidBranch, "normalization needs at least one branch");
    }
    for (std::size_t j = 0; j < branches_.size(); ++j) {
        auto res = verify_branch(*curve_, branches_[j]);
        if (!res.infinite) {
            throw Error(ErrorKind::InvalidBranch,
                        "branch " + std::to_string(j) + " leaves residual of order " +
                            std::to_string(res.order) + " < " +
                            std::to_string(branches_[j].order()));
        }
    }
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        for (std::size_t j = i + 1; j < branches_.size(); ++j) {
            std::size_t n = std::min(branches_[i].order(), branches_[j].order());
            if (agree_mod(branches_[i].x(), branches_[j].x(), n) &&
                agree_mod(branches_[i].y(), branches_[j].y(), n)) {
                throw Error(ErrorKind::InvalidBranch, "branches " + std::to_string(i) + " and " +
                                                          std::to_string(j) + " coincide");
            }
        }
    }
}

std::size_t Normalization::order() const
{
    std::size_t n = branches_.front().order();
    for (const auto& b : branches_) {
        n = std::min(n, b.order());
    }
    return n;
}

Normalization Normalization::truncated(std::size_t order) const
{
    std::vector<Branch> out;
    for (const auto& b : branches_) {
        out.push_back(b.truncated(order));
    }
    return Normalization(curve_, std::move(out));
}

// ---------------------------------------------------------------------------
// Newton-Puiseux

namespace {

struct Point {
    int a;  // exponent of the parameter variable
    int b;  // exponent of the unknown
};

struct Edge {
    Point start;  // larger a, smaller b
    Point end;
    int m;        // slope m/n, gcd(m, n) = 1
    int n;
    UPoly psi;    // edge polynomial in z = c^n / mu^m
};

std::vector<Point> support(const Polynomial2& g)
{
    std::vector<Point> pts;
    for (const auto& [mono, c] : g.terms()) {
        pts.push_back({mono.a, mono.b});
    }
    return pts;
}

// Compact edges of the Newton polygon with finite positive slope, walked
// from the lowest-b vertex to the lowest-a vertex.
std::vector<Edge> newton_edges(const Polynomial2& g)
{
    auto pts = support(g);
    Point first = pts.front();
    Point last = pts.front();
    for (const auto& p : pts) {
        if (p.b < first.b || (p.b == first.b && p.a < first.a)) {
            first = p;
        }
        if (p.a < last.a || (p.a == last.a && p.b < last.b)) {
            last = p;
        }
    }
    std::vector<Edge> edges;
    Point cur = first;
    while (cur.a > last.a) {
        // Steepest edge first: maximise (cur.a - a) / (b - cur.b); ties go to
        // the farthest point.
        std::optional<Point> best;
        for (const auto& p : pts) {
            if (p.a >= cur.a || p.b <= cur.b) {
                continue;
            }
            if (!best) {
                best = p;
                continue;
            }
            long lhs = static_cast<long>(cur.a - p.a) * (best->b - cur.b);
            long rhs = static_cast<long>(cur.a - best->a) * (p.b - cur.b);
            if (lhs > rhs || (lhs == rhs && p.b > best->b)) {
                best = p;
            }
        }
        if (!best) {
            break;
        }
        int da = cur.a - best->a;
        int db = best->b - cur.b;
        int g0 = std::gcd(da, db);
        Edge e{cur, *best, da / g0, db / g0, {}};
        for (int k = 0; k <= g0; ++k) {
            e.psi.push_back(g.coeff({cur.a - e.m * k, cur.b + e.n * k}));
        }
        edges.push_back(std::move(e));
        cur = *best;
    }
    return edges;
}

// u*n + v*m = 1
std::pair<long, long> bezout(long n, long m)
{
    long old_r = n, r = m;
    long old_u = 1, u = 0;
    long old_v = 0, v = 1;
    while (r != 0) {
        long q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_u, u) = std::make_pair(u, old_u - q * u);
        std::tie(old_v, v) = std::make_pair(v, old_v - q * v);
    }
    return {old_u, old_v};
}

long binomial(long n, long k)
{
    long r = 1;
    for (long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// g(mu*T^n, T^m*(c + w)) / T^val as a polynomial in (T, w).
Polynomial2 substitute_edge(const Polynomial2& g, const GR& mu, int n, int m, const GR& c)
{
    int val = -1;
    for (const auto& [mono, coef] : g.terms()) {
        int v = n * mono.a + m * mono.b;
        val = val < 0 ? v : std::min(val, v);
    }
    Polynomial2 acc;
    for (const auto& [mono, coef] : g.terms()) {
        int shift = n * mono.a + m * mono.b - val;
        GR base = coef * mu.pow(mono.a);
        for (int j = 0; j <= mono.b; ++j) {
            GR term = base * GR(binomial(mono.b, j)) * c.pow(mono.b - j);
            acc += Polynomial2::monomial({shift, j}, term);
        }
    }
    return acc;
}

struct PuiseuxState {
    GR lambda{1};
    long e = 1;                  // x = lambda * S^e
    std::map<long, GR> y_known;  // y = sum y_j S^j + kappa * S^k * w
    GR kappa{1};
    long k = 0;
    Polynomial2 g;               // remaining equation in (S, w)
};

class PuiseuxSolver {
public:
    PuiseuxSolver(const PlaneCurve& curve, std::size_t order) : curve_(curve), order_(order) {}

    std::vector<Branch> run()
    {
        PuiseuxState top;
        top.g = curve_.f();
        // The y-axis is invisible to expansions of y in powers of x.
        auto pts = support(top.g);
        int a_min = pts.front().a;
        for (const auto& p : pts) {
            a_min = std::min(a_min, p.a);
        }
        if (a_min > 0) {
            emit(USeries(order_), USeries::monomial(order_, 1));
        }
        process(top, 0);
        return std::move(branches_);
    }

private:
    void process(const PuiseuxState& st, int depth)
    {
        if (static_cast<std::size_t>(st.k) >= order_) {
            emit_known(st);
            return;
        }
        auto pts = support(st.g);
        int b_min = pts.front().b;
        for (const auto& p : pts) {
            b_min = std::min(b_min, p.b);
        }
        if (b_min > 0) {
            // w = 0 solves the remaining equation exactly.
            emit_known(st);
        }
        for (const Edge& edge : newton_edges(st.g)) {
            RootSplit split = gaussian_rational_roots(edge.psi);
            if (split.remainder.size() > 1) {
                std::ostringstream msg;
                msg << "edge from (" << edge.start.a << "," << edge.start.b << ") to ("
                    << edge.end.a << "," << edge.end.b << ") with slope " << edge.m << "/"
                    << edge.n << " at depth " << depth << ": edge polynomial";
                for (std::size_t i = 0; i < edge.psi.size(); ++i) {
                    msg << (i ? ", " : " [") << edge.psi[i].to_string();
                }
                msg << "] has roots outside Q(i)";
                throw Error(ErrorKind::IrrationalLeadingCoefficient, msg.str());
            }
            for (const auto& [z0, mult] : split.roots) {
                if (z0.is_zero()) {
                    continue;
                }
                auto [u, v] = bezout(edge.n, edge.m);  // u*n + v*m = 1
                GR mu = z0.pow(-v);
                GR c = z0.pow(u);
                PuiseuxState next;
                next.lambda = st.lambda * mu.pow(st.e);
                next.e = st.e * edge.n;
                for (const auto& [j, yj] : st.y_known) {
                    next.y_known[edge.n * j] += yj * mu.pow(j);
                }
                next.kappa = st.kappa * mu.pow(st.k);
                next.k = edge.n * st.k + edge.m;
                next.y_known[next.k] += next.kappa * c;
                next.g = substitute_edge(st.g, mu, edge.n, edge.m, c);
                if (mult == 1) {
                    finish_simple(next);
                } else {
                    process(next, depth + 1);
                }
            }
        }
    }

    USeries x_series(const PuiseuxState& st) const
    {
        return USeries::monomial(order_, static_cast<std::size_t>(st.e), st.lambda);
    }

    USeries y_known_series(const PuiseuxState& st) const
    {
        USeries y(order_);
        for (const auto& [j, yj] : st.y_known) {
            y = y + USeries::monomial(order_, static_cast<std::size_t>(j), yj);
        }
        return y;
    }

    void emit_known(const PuiseuxState& st) { emit(x_series(st), y_known_series(st)); }

    // Simple root: the remaining equation has nonzero w-derivative at the
    // origin, so w(S) follows by Newton iteration on series.
    void finish_simple(const PuiseuxState& st)
    {
        const Polynomial2 gw = p2_partial(st.g, Var::Y);
        const USeries s = USeries::monomial(order_, 1);
        USeries w(order_);
        for (int iter = 0; iter < 64; ++iter) {
            USeries val = p2_eval_on_branch(st.g, s, w);
            if (val.is_zero()) {
                break;
            }
            USeries deriv = p2_eval_on_branch(gw, s, w);
            w = w - val * u_inverse(deriv);
        }
        USeries tail = USeries::monomial(order_, static_cast<std::size_t>(st.k), st.kappa) * w;
        emit(x_series(st), y_known_series(st) + tail);
    }

    void emit(const USeries& x, const USeries& y)
    {
        Branch b(x, y, order_);
        auto res = verify_branch(curve_, b);
        if (!res.infinite) {
            throw Error(ErrorKind::InvalidBranch,
                        "Newton-Puiseux produced a branch with residual order " +
                            std::to_string(res.order) + "; is f square-free?");
        }
        for (const auto& other : branches_) {
            if (other == b) {
                return;
            }
        }
        branches_.push_back(std::move(b));
    }

    const PlaneCurve& curve_;
    std::size_t order_;
    std::vector<Branch> branches_;
};

}  // namespace

Normalization newton_puiseux(const CurvePtr& c, std::size_t order)
{
    if (order == 0) {
        throw Error(ErrorKind::InvalidArgument, "order must be positive");
    }
    PuiseuxSolver solver(*c, order);
    return Normalization(c, solver.run());
}

std::pair<CurvePtr, Normalization> make_line_union(const std::vector<std::pair<GR, GR>>& directions,
                                                   std::size_t order)
{
    if (directions.empty()) {
        throw Error(ErrorKind::InvalidArgument, "line union needs at least one direction");
    }
    for (std::size_t i = 0; i < directions.size(); ++i) {
        const auto& [ai, bi] = directions[i];
        if (ai.is_zero() && bi.is_zero()) {
            throw Error(ErrorKind::DuplicateDirection, "direction (0,0) is not a line");
        }
        for (std::size_t j = i + 1; j < directions.size(); ++j) {
            const auto& [aj, bj] = directions[j];
            if ((ai * bj - aj * bi).is_zero()) {
                throw Error(ErrorKind::DuplicateDirection,
                            "directions " + std::to_string(i) + " and " + std::to_string(j) +
                                " are proportional");
            }
        }
    }
    Polynomial2 f(GR(1));
    std::vector<Branch> branches;
    for (const auto& [a, b] : directions) {
        f = f * (b * Polynomial2::x() - a * Polynomial2::y());
        branches.emplace_back(USeries::monomial(order, 1, a), USeries::monomial(order, 1, b), order);
    }
    CurvePtr curve = make_curve(std::move(f));
    Normalization nz(curve, std::move(branches));
    return {curve, std::move(nz)};
}

namespace {

// Compositional inverse r of a series with a[0] = 0, a[1] != 0.
USeries revert(const USeries& a)
{
    std::size_t n = a.order();
    GR a1inv = a[1].inverse();
    USeries id = USeries::monomial(n, 1);
    USeries r = a1inv * id;
    for (std::size_t iter = 0; iter < n; ++iter) {
        r = r - a1inv * (u_compose(a, r) - id);
    }
    return r;
}

// u^(1/e) for u(0) = 1.
USeries unit_root(const USeries& u, std::size_t e)
{
    USeries log_u = u_integrate(u_derive(u) * u_inverse(u), GR());
    return u_exp(GR::fraction(1, static_cast<long>(e)) * log_u.truncated(u.order()));
}

struct NormalForm {
    USeries x;
    USeries y;
    GR lead;  // the chosen coordinate is lead * s^e
};

// Reparametrizes so that the chosen coordinate becomes a monomial.
std::optional<NormalForm> normal_form(const USeries& x, const USeries& y, bool use_x,
                                      std::size_t e)
{
    const USeries& w = use_x ? x : y;
    std::size_t n = w.order();
    if (n <= e + 1) {
        return std::nullopt;
    }
    GR lead = w[e];
    std::vector<GR> tail;
    for (std::size_t k = e; k < n; ++k) {
        tail.push_back(w[k] / lead);
    }
    USeries u(n - e, std::move(tail));
    USeries root = unit_root(u, e);
    std::vector<GR> shifted{GR()};
    shifted.insert(shifted.end(), root.coeffs().begin(), root.coeffs().end());
    USeries sigma(n - e + 1, std::move(shifted));
    USeries inv = revert(sigma);
    return NormalForm{u_compose(x, inv), u_compose(y, inv), lead};
}

}  // namespace

bool same_branch_image(const Branch& a, const Branch& b)
{
    std::size_t n = std::min(a.order(), b.order());
    const USeries ax = a.x().truncated(n), ay = a.y().truncated(n);
    const USeries bx = b.x().truncated(n), by = b.y().truncated(n);
    auto vx = bx.valuation();
    auto vy = by.valuation();
    bool use_x = vx && (!vy || *vx <= *vy);
    std::size_t e = use_x ? *vx : *vy;
    auto va = (use_x ? ax : ay).valuation();
    if (!va || *va != e) {
        return false;
    }
    auto na = normal_form(ax, ay, use_x, e);
    auto nb = normal_form(bx, by, use_x, e);
    if (!na || !nb) {
        return ax == bx && ay == by;
    }
    // a = b(rho * t) with rho^e = lead_a / lead_b
    UPoly eq(e + 1);
    eq[0] = -(na->lead / nb->lead);
    eq[e] = GR(1);
    for (const auto& [rho, mult] : gaussian_rational_roots(eq).roots) {
        if (rho.is_zero()) {
            continue;
        }
        USeries scaled = USeries::monomial(nb->x.order(), 1, rho);
        if (u_compose(nb->x, scaled) == na->x.truncated(nb->x.order()) &&
            u_compose(nb->y, scaled) == na->y.truncated(nb->y.order())) {
            return true;
        }
    }
    return false;
}

namespace nontame {

CurvePtr curve()
{
    Polynomial2 x = Polynomial2::x();
    Polynomial2 y = Polynomial2::y();
    return make_curve(x.pow(4) + x * y.pow(4) + y.pow(5));
}

Branch branch(std::size_t order)
{
    if (order < 6) {
        throw Error(ErrorKind::InvalidArgument, "the example branch needs order >= 6");
    }
    USeries inv = USeries::geometric_alternating(order);
    USeries x = USeries::monomial(order, 5, GR(-1)) * inv;
    USeries y = USeries::monomial(order, 4, GR(-1)) * inv;
    return Branch(x, y, order);
}

Polynomial2 t4_lift()
{
    return -(Polynomial2::x() + Polynomial2::y());
}

}  // namespace nontame

}  // namespace rhc
