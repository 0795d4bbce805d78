#include "dictlp/simplex.hpp"

#include <algorithm>
#include <set>

namespace dictlp {

std::string_view to_string(PivotRule rule) { return rule == PivotRule::Bland ? "bland" : "dantzig"; }

std::optional<PivotRule> parse_pivot_rule(std::string_view name) {
    if (name == "bland") return PivotRule::Bland;
    if (name == "dantzig") return PivotRule::Dantzig;
    return std::nullopt;
}

std::string_view to_string(PhaseKind kind) {
    switch (kind) {
        case PhaseKind::PrimalSimplex: return "primal simplex";
        case PhaseKind::DualSimplex: return "dual simplex";
        case PhaseKind::AuxiliaryDual: return "phase 1: dual simplex on auxiliary objective";
        case PhaseKind::PrimalAfterPhaseOne: return "phase 2: primal simplex";
    }
    return "";
}

namespace {

// Index of the best candidate: Bland picks the smallest variable index,
// Dantzig the largest score with the smallest index on ties.
template <typename Eligible, typename Score>
std::optional<std::size_t> select(const std::vector<std::size_t>& vars, PivotRule rule, Eligible eligible,
                                  Score score) {
    std::optional<std::size_t> best;
    Rational best_score;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (!eligible(k)) continue;
        if (!best) {
            best = k;
            best_score = score(k);
            continue;
        }
        if (rule == PivotRule::Bland) {
            if (vars[k] < vars[*best]) best = k;
        } else {
            Rational sc = score(k);
            if (sc > best_score || (sc == best_score && vars[k] < vars[*best])) {
                best = k;
                best_score = std::move(sc);
            }
        }
    }
    if (!best) return std::nullopt;
    return vars[*best];
}

// Minimum ratio over eligible positions, ties to the smallest variable index.
template <typename Eligible, typename Ratio>
std::optional<std::size_t> min_ratio(const std::vector<std::size_t>& vars, Eligible eligible, Ratio ratio) {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (!eligible(k)) continue;
        Rational rt = ratio(k);
        if (!best || rt < best_ratio || (rt == best_ratio && vars[k] < vars[*best])) {
            best = k;
            best_ratio = std::move(rt);
        }
    }
    if (!best) return std::nullopt;
    return vars[*best];
}

std::vector<std::size_t> basis_key(const Dictionary& d) {
    auto key = d.basis();
    std::sort(key.begin(), key.end());
    return key;
}

enum class Method { Primal, Dual };

SimplexRun run_simplex(const Dictionary& start, PivotRule rule, Method method) {
    SimplexRun run{Termination::Optimal, PivotTrace{start, {}}, std::nullopt};
    std::set<std::vector<std::size_t>> visited{basis_key(start)};
    PivotRule active = rule;
    for (;;) {
        const Dictionary& d = run.trace.last();
        std::size_t enter = 0;
        std::size_t leave = 0;
        if (method == Method::Primal) {
            auto e = choose_entering(d, active);
            if (!e) return run;
            auto l = choose_leaving(d, d.nonbasis_position(*e), active);
            if (!l) {
                run.terminal = Termination::Unbounded;
                run.witness = e;
                return run;
            }
            enter = *e;
            leave = *l;
        } else {
            auto l = choose_dual_leaving(d, active);
            if (!l) return run;
            auto e = choose_dual_entering(d, d.basis_position(*l), active);
            if (!e) {
                run.terminal = Termination::Infeasible;
                run.witness = l;
                return run;
            }
            enter = *e;
            leave = *l;
        }
        Dictionary next = pivot(d, enter, leave);
        // Dantzig can cycle on degenerate problems; Bland cannot.
        if (!visited.insert(basis_key(next)).second) active = PivotRule::Bland;
        run.trace.steps.push_back(PivotStep{enter, leave, std::move(next)});
    }
}

}  // namespace

std::optional<std::size_t> choose_entering(const Dictionary& d, PivotRule rule) {
    const QVector& q = d.objective();
    return select(
        d.nonbasis(), rule, [&](std::size_t k) { return q[k].is_positive(); }, [&](std::size_t k) { return q[k]; });
}

std::optional<std::size_t> choose_leaving(const Dictionary& d, std::size_t s, PivotRule /*rule*/) {
    if (s >= d.cols()) throw std::out_of_range("choose_leaving: entering position out of range");
    const QMatrix& a = d.coefficients();
    const QVector& p = d.constants();
    return min_ratio(
        d.basis(), [&](std::size_t r) { return a(r, s).is_positive(); }, [&](std::size_t r) { return p[r] / a(r, s); });
}

std::optional<std::size_t> choose_dual_leaving(const Dictionary& d, PivotRule rule) {
    const QVector& p = d.constants();
    return select(
        d.basis(), rule, [&](std::size_t r) { return p[r].is_negative(); }, [&](std::size_t r) { return -p[r]; });
}

std::optional<std::size_t> choose_dual_entering(const Dictionary& d, std::size_t r, PivotRule /*rule*/) {
    if (r >= d.rows()) throw std::out_of_range("choose_dual_entering: leaving position out of range");
    const QMatrix& a = d.coefficients();
    const QVector& q = d.objective();
    return min_ratio(
        d.nonbasis(), [&](std::size_t k) { return a(r, k).is_negative(); },
        [&](std::size_t k) { return q[k] / a(r, k); });
}

SimplexRun primal_simplex(const Dictionary& d, PivotRule rule) {
    if (!is_primal_feasible(d)) throw PreconditionError("primal simplex requires a primal feasible dictionary");
    return run_simplex(d, rule, Method::Primal);
}

SimplexRun dual_simplex(const Dictionary& d, PivotRule rule) {
    if (!is_dual_feasible(d)) throw PreconditionError("dual simplex requires a dual feasible dictionary");
    return run_simplex(d, rule, Method::Dual);
}

std::size_t SolveReport::pivot_count() const {
    std::size_t total = 0;
    for (const auto& ph : phases) total += ph.run.trace.steps.size();
    return total;
}

namespace {

QVector decision_part(const QVector& full, std::size_t n) {
    QVector out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = full[j];
    return out;
}

SolveOutcome optimal_outcome(const Dictionary& d, std::size_t n) {
    return Optimal{decision_part(basic_solution(d), n), d.objective_value()};
}

SolveOutcome unbounded_outcome(const Dictionary& d, std::size_t entering, std::size_t n) {
    const std::size_t s = d.nonbasis_position(entering);
    QVector ray(d.var_count());
    ray[entering - 1] = 1;
    for (std::size_t i = 0; i < d.rows(); ++i) ray[d.basis()[i] - 1] = -d.coefficients()(i, s);
    return Unbounded{decision_part(basic_solution(d), n), decision_part(ray, n)};
}

// Row r of A_B^{-1}: u with A_B^T u = e_r. Then u^T A >= 0 and u^T b = p_r < 0.
SolveOutcome infeasible_outcome(const AugmentedLP& aug, const Dictionary& d, std::size_t leaving) {
    const std::size_t m = aug.m();
    std::vector<std::size_t> cols(m);
    for (std::size_t i = 0; i < m; ++i) cols[i] = d.basis()[i] - 1;
    QVector unit(m);
    unit[d.basis_position(leaving)] = 1;
    auto u = solve_linear(aug.a.select_columns(cols).transpose(), unit);
    if (!u) throw NotABasisError("infeasibility row refers to a singular basis");
    if (dot(*u, aug.base.b()).is_positive()) *u = Rational(-1) * *u;
    return Infeasible{std::move(*u)};
}

}  // namespace

SolveReport solve(const StandardLP& lp, PivotRule rule) {
    const AugmentedLP aug = augment(lp);
    const Dictionary start = initial_dictionary(lp);
    SolveReport report{Optimal{}, {}};

    auto finish_primal = [&](PhaseKind kind, const Dictionary& from) {
        SimplexRun run = primal_simplex(from, rule);
        const Dictionary& last = run.final_dictionary();
        report.outcome = run.terminal == Termination::Unbounded ? unbounded_outcome(last, *run.witness, lp.n())
                                                                : optimal_outcome(last, lp.n());
        report.phases.push_back(Phase{kind, std::move(run)});
    };

    if (is_primal_feasible(start)) {
        finish_primal(PhaseKind::PrimalSimplex, start);
        return report;
    }

    if (is_dual_feasible(start)) {
        SimplexRun run = dual_simplex(start, rule);
        const Dictionary& last = run.final_dictionary();
        report.outcome = run.terminal == Termination::Infeasible ? infeasible_outcome(aug, last, *run.witness)
                                                                 : optimal_outcome(last, lp.n());
        report.phases.push_back(Phase{PhaseKind::DualSimplex, std::move(run)});
        return report;
    }

    QVector minus_ones(lp.n());
    for (auto& v : minus_ones) v = -1;
    SimplexRun phase_one = dual_simplex(start.with_objective(std::move(minus_ones), Rational(0)), rule);
    const Dictionary feasible = phase_one.final_dictionary();
    const bool infeasible = phase_one.terminal == Termination::Infeasible;
    if (infeasible) report.outcome = infeasible_outcome(aug, feasible, *phase_one.witness);
    report.phases.push_back(Phase{PhaseKind::AuxiliaryDual, std::move(phase_one)});
    if (infeasible) return report;

    finish_primal(PhaseKind::PrimalAfterPhaseOne, dictionary_from_basis(aug, feasible.basis()));
    return report;
}

namespace {

bool point_feasible(const StandardLP& lp, const QVector& x) {
    if (x.size() != lp.n() || !is_nonnegative(x)) return false;
    const QVector ax = lp.a0() * x;
    for (std::size_t i = 0; i < lp.m(); ++i)
        if (ax[i] > lp.b()[i]) return false;
    return true;
}

}  // namespace

bool certificate_holds(const StandardLP& lp, const SolveOutcome& outcome) {
    if (const auto* opt = std::get_if<Optimal>(&outcome))
        return point_feasible(lp, opt->point) && dot(lp.c(), opt->point) == opt->value;
    if (const auto* unb = std::get_if<Unbounded>(&outcome)) {
        if (!point_feasible(lp, unb->point) || unb->ray.size() != lp.n() || !is_nonnegative(unb->ray)) return false;
        return is_nonpositive(lp.a0() * unb->ray) && dot(lp.c(), unb->ray).is_positive();
    }
    const auto& inf = std::get<Infeasible>(outcome);
    if (inf.farkas.size() != lp.m() || !is_nonnegative(inf.farkas)) return false;
    return is_nonnegative(lp.a0().transpose() * inf.farkas) && dot(inf.farkas, lp.b()).is_negative();
}

}  // namespace dictlp
