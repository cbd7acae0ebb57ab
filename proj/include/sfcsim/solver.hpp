#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sfcsim/mano.hpp"

namespace sfcsim {

using Rng = std::mt19937_64;

// Unbiased integer in [0, n) using only raw engine output, so sequences are
// identical across standard library implementations.
std::size_t uniform_index(Rng& rng, std::size_t n);

enum class SolveMode { Embed, Migrate };

struct SolverInput {
    const SfcRequest& request;
    const VnfCatalog& catalog;
    const SubstrateSnapshot& snapshot;
    const ResourceLedger& residual;
    SolveMode mode = SolveMode::Embed;
    const EmbeddingPlan* old_plan = nullptr;  // set in Migrate mode
};

struct Accept {
    EmbeddingPlan plan;
};

struct Reject {
    FailureReason reason;
};

using SolverDecision = std::variant<Accept, Reject>;

inline bool accepted(const SolverDecision& d) { return std::holds_alternative<Accept>(d); }

/// Contract every embedding algorithm implements. An Accept must pass
/// check_plan against the same residual and snapshot; results must be a pure
/// function of (input, rng state).
class Solver {
public:
    virtual ~Solver() = default;
    virtual std::string_view name() const = 0;
    virtual SolverDecision solve(const SolverInput& input, Rng& rng) = 0;
};

/// Position-by-position placement with tentative residual decrements and no
/// backtracking. Subclasses only pick a node among feasible candidates.
class SequentialSolver : public Solver {
public:
    SolverDecision solve(const SolverInput& input, Rng& rng) final;

protected:
    struct Residual {
        std::vector<Amount> cpu, ram;
        SquareMatrix<Amount> band;
        Amount max_cpu_capacity, max_ram_capacity;
    };

    // candidates is non-empty and ascending.
    virtual NodeId choose(const std::vector<NodeId>& candidates, const Residual& residual, Rng& rng) = 0;
};

class RandomSolver final : public SequentialSolver {
public:
    std::string_view name() const override { return "random"; }

protected:
    NodeId choose(const std::vector<NodeId>& candidates, const Residual& residual, Rng& rng) override;
};

// Picks the node with the largest free share (free cpu / largest node cpu
// capacity + free ram / largest node ram capacity); ties go to the smaller id.
class GreedySolver final : public SequentialSolver {
public:
    std::string_view name() const override { return "greedy"; }

protected:
    NodeId choose(const std::vector<NodeId>& candidates, const Residual& residual, Rng& rng) override;
};

std::vector<std::string> known_solvers();
bool is_known_solver(std::string_view name);
// Throws ValidationError ("UnknownSolver") for names outside known_solvers().
std::unique_ptr<Solver> make_solver(std::string_view name);

}  // namespace sfcsim
