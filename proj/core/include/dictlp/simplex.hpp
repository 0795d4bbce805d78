#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "dictlp/dictionary.hpp"
#include "dictlp/model.hpp"

namespace dictlp {

/// Bland: smallest eligible index. Dantzig: best coefficient, smallest index on ties.
enum class PivotRule { Bland, Dantzig };

std::string_view to_string(PivotRule rule);
std::optional<PivotRule> parse_pivot_rule(std::string_view name);

struct PivotStep {
    std::size_t entering;
    std::size_t leaving;
    Dictionary after;
};

/// A dictionary followed by a sequence of single pivots.
struct PivotTrace {
    Dictionary start;
    std::vector<PivotStep> steps;

    const Dictionary& last() const { return steps.empty() ? start : steps.back().after; }
};

enum class Termination { Optimal, Unbounded, Infeasible };

struct SimplexRun {
    Termination terminal;
    PivotTrace trace;
    /// Unbounded: the entering variable with no blocking row.
    /// Infeasible: the basic variable whose row proves infeasibility.
    std::optional<std::size_t> witness;

    const Dictionary& final_dictionary() const { return trace.last(); }
};

/// Raised when a simplex method is started from a dictionary that does not
/// meet its feasibility precondition.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Nonbasic variable with positive objective coefficient, or nullopt when optimal.
std::optional<std::size_t> choose_entering(const Dictionary& d, PivotRule rule);

/// Ratio test on nonbasic position s: among rows with positive coefficient,
/// minimize constant/coefficient, ties to the smallest basic index. The rule
/// does not change this choice. nullopt means the column is unbounded.
std::optional<std::size_t> choose_leaving(const Dictionary& d, std::size_t s, PivotRule rule);

/// Dual simplex row choice among negative constants: Bland takes the smallest
/// basic index, Dantzig the most negative constant (smallest index on ties).
std::optional<std::size_t> choose_dual_leaving(const Dictionary& d, PivotRule rule);

/// Dual ratio test on basis position r: among columns with negative
/// coefficient minimize objective/coefficient, ties to the smallest index.
/// nullopt means row r proves primal infeasibility.
std::optional<std::size_t> choose_dual_entering(const Dictionary& d, std::size_t r, PivotRule rule);

/**
 * Primal simplex from a primal feasible dictionary; throws PreconditionError
 * otherwise. Terminates with Optimal or Unbounded. Under Dantzig's rule a
 * repeated basis switches the remainder of the run to Bland's rule.
 */
SimplexRun primal_simplex(const Dictionary& d, PivotRule rule = PivotRule::Bland);

/**
 * Dual simplex from a dual feasible dictionary; throws PreconditionError
 * otherwise. Terminates with Optimal or Infeasible.
 */
SimplexRun dual_simplex(const Dictionary& d, PivotRule rule = PivotRule::Bland);

struct Optimal {
    QVector point;
    Rational value;
};

struct Unbounded {
    QVector point;
    QVector ray;
};

struct Infeasible {
    QVector farkas;
};

using SolveOutcome = std::variant<Optimal, Unbounded, Infeasible>;

enum class PhaseKind {
    PrimalSimplex,       // initial dictionary primal feasible
    DualSimplex,         // initial dictionary dual feasible
    AuxiliaryDual,       // phase 1: objective replaced by -1 everywhere
    PrimalAfterPhaseOne  // phase 2 on the rebuilt dictionary
};

std::string_view to_string(PhaseKind kind);

struct Phase {
    PhaseKind kind;
    SimplexRun run;
};

struct SolveReport {
    SolveOutcome outcome;
    std::vector<Phase> phases;

    std::size_t pivot_count() const;
};

/**
 * Two-phase driver. Primal feasible start: primal simplex. Otherwise dual
 * feasible start: dual simplex. Otherwise the objective is replaced by the
 * all -1 vector, dual simplex reaches a feasible basis (or a Farkas row), the
 * dictionary is rebuilt on that basis with the true objective and primal
 * simplex finishes.
 */
SolveReport solve(const StandardLP& lp, PivotRule rule = PivotRule::Bland);

/// Checks the outcome against its defining inequalities by direct substitution.
bool certificate_holds(const StandardLP& lp, const SolveOutcome& outcome);

}  // namespace dictlp
