#ifndef PERMUTA_PROPAGATE_HPP
#define PERMUTA_PROPAGATE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "permuta/core.hpp"

namespace permuta {

// Observes first-touch domain overwrites so a search trail can restore them.
struct TrailHook {
    virtual ~TrailHook() = default;
    virtual void saving(int var, const Domain& old) = 0;
};

// Mutable domains for one solver run.  Domains only shrink while propagating.
class DomainStore {
public:
    DomainStore() = default;
    explicit DomainStore(std::vector<Domain> domains)
        : dom_(std::move(domains)), rev_(dom_.size(), 0) {}
    static DomainStore from_problem(const Problem& p) {
        return DomainStore(p.all_domains());
    }

    int size() const { return static_cast<int>(dom_.size()); }
    const Domain& operator[](int v) const { return dom_[static_cast<std::size_t>(v)]; }
    const std::vector<Domain>& domains() const { return dom_; }
    std::uint32_t revision(int v) const { return rev_[static_cast<std::size_t>(v)]; }

    void set_trail(TrailHook* t) { trail_ = t; }

    // Mutators return true when the domain changed.
    bool remove(int var, int value) {
        Domain& d = dom_[static_cast<std::size_t>(var)];
        if (!d.contains(value)) return false;
        touch(var, d);
        d.erase(value);
        ++rev_[static_cast<std::size_t>(var)];
        return true;
    }
    bool intersect(int var, const Domain& with) {
        Domain& d = dom_[static_cast<std::size_t>(var)];
        if (d.is_subset_of(with)) return false;
        touch(var, d);
        d.intersect(with);
        ++rev_[static_cast<std::size_t>(var)];
        return true;
    }
    bool assign(int var, int value) {
        Domain& d = dom_[static_cast<std::size_t>(var)];
        if (d.is_singleton() && d.single() == value) return false;
        touch(var, d);
        d = Domain::of({value});
        ++rev_[static_cast<std::size_t>(var)];
        return true;
    }
    // Restores a saved domain; used only by the trail.
    void restore(int var, const Domain& d) {
        dom_[static_cast<std::size_t>(var)] = d;
        ++rev_[static_cast<std::size_t>(var)];
    }

private:
    void touch(int var, const Domain& old) {
        if (trail_) trail_->saving(var, old);
    }

    std::vector<Domain> dom_;
    std::vector<std::uint32_t> rev_;
    TrailHook* trail_ = nullptr;
};

enum class PropStatus { Fixpoint, Wipeout };

struct Removal {
    int var;    // flat id; Problem::unflat names it
    int value;
    int cause;  // index into Problem::constraints, or -1
};

struct PropOutcome {
    PropStatus status = PropStatus::Fixpoint;
    int wipeout_var = -1;  // flat id, valid when status == Wipeout
    std::vector<Removal> pruned;

    bool ok() const { return status == PropStatus::Fixpoint; }
};

struct PropOptions {
    bool gac_alldiff = true;   // false: all-different decomposes to singleton elimination
    bool record_pruned = true;
    // Test-only: < 0 keeps deterministic FIFO order; >= 0 randomizes the
    // revision order with this seed (fixpoints must agree either way).
    long shuffle_seed = -1;
};

// Compiled adjacency for a problem; reusable across stores.
class PropagationContext {
public:
    explicit PropagationContext(const Problem& p);

    const Problem& problem() const { return *p_; }
    const std::vector<int>& constraints_of(int var) const {
        return var_ctrs_[static_cast<std::size_t>(var)];
    }
    // Precomputed support masks for BinaryTable constraints.
    const std::vector<Domain>& table_sup_a(int ctr) const { return sup_a_.at(ctr); }
    const std::vector<Domain>& table_sup_b(int ctr) const { return sup_b_.at(ctr); }

private:
    const Problem* p_;
    std::vector<std::vector<int>> var_ctrs_;
    std::unordered_map<int, std::vector<Domain>> sup_a_, sup_b_;
};

// Runs every propagator registered for the problem's constraints to a joint
// fixpoint.  The result is independent of revision order.
PropOutcome propagate_fixpoint(const PropagationContext& ctx, DomainStore& store,
                               const PropOptions& opts = {});

// Same, seeding the queue with the constraints adjacent to `var` only (the
// rest of the store is assumed to already be at fixpoint).
PropOutcome propagate_from(const PropagationContext& ctx, DomainStore& store, int var,
                           const PropOptions& opts = {});

// Individual propagators, driven to fixpoint over their own constraint set.
PropOutcome enforce_ac_neq(const Problem& p, DomainStore& store);
PropOutcome enforce_ac_channel(const Problem& p, DomainStore& store);
PropOutcome enforce_gac_alldiff(const Problem& p, DomainStore& store, const Constraint& c);

// Matching-based filter on one all-different scope over `store`; returns
// false on wipeout (no matching covers the scope).  Exposed for tests.
bool regin_filter(const std::vector<int>& scope, DomainStore& store, int cause,
                  std::vector<Removal>* pruned, int* wiped_var);

// CSV trace of a pruning list: varref,value,cause per row.
std::string pruned_to_csv(const Problem& p, const std::vector<Removal>& pruned);

}  // namespace permuta

#endif
