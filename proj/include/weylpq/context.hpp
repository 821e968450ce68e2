#pragma once

/**
 * @file context.hpp
 * @brief Bundles one (root system, Levi subset) pair with its Weyl groups and memo caches.
 *
 * A context is not thread-safe: its engines and caches mutate on lookup.
 * Concurrent workers each own a private context; the Weyl group can be
 * shared between them since it is immutable.
 */

#include "weylpq/kostant.hpp"
#include "weylpq/poly.hpp"
#include "weylpq/rootsys.hpp"

#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace weylpq {

struct WeightPairHash {
    std::size_t operator()(const std::pair<Weight, Weight>& k) const {
        return k.first.hash() * 1000003u ^ k.second.hash();
    }
};

using PolyCache = std::unordered_map<std::pair<Weight, Weight>, BiPoly, WeightPairHash>;

class DeformationContext {
public:
    DeformationContext(RootSystem rs, LeviMask levi,
                       std::shared_ptr<const std::vector<WeylElement>> weyl = nullptr)
        : rs_(std::move(rs)),
          par_(parabolic(rs_, levi)),
          weyl_(weyl ? std::move(weyl) : std::make_shared<const std::vector<WeylElement>>(weyl_group(rs_))),
          pq_(make_pq_engine(rs_, par_)),
          hat_(make_hat_engine(rs_, par_)),
          bar_(make_bar_engine(rs_, par_)) {}

    const RootSystem& system() const { return rs_; }
    const ParabolicData& parabolic_data() const { return par_; }
    const std::vector<WeylElement>& weyl() const { return *weyl_; }
    std::shared_ptr<const std::vector<WeylElement>> shared_weyl() const { return weyl_; }
    LeviMask levi() const { return par_.levi; }

    KostantEngine& pq() { return pq_; }
    KostantEngine& hat() { return hat_; }
    KostantEngine& bar() { return bar_; }

    KostantEngine& single_variable() {
        if (!single_) single_ = make_single_variable_engine(rs_);
        return *single_;
    }

    /// Colored-root engines: (v+1)^m and admissible v(v+1)^{m-1} per-root factors.
    ShiftedEngine& colored_n() {
        if (!colored_n_) colored_n_ = ShiftedEngine(tagged_roots(rs_, par_), rs_.rank());
        return *colored_n_;
    }
    AdmissibleEngine& colored_r() {
        if (!colored_r_) colored_r_ = AdmissibleEngine(tagged_roots(rs_, par_), rs_.rank());
        return *colored_r_;
    }

    PolyCache& kpq_cache() { return kpq_cache_; }
    PolyCache& branch_cache() { return branch_cache_; }
    PolyCache& kbar_cache() { return kbar_cache_; }

    void check_weight(const Weight& v, const char* what) const {
        require(v.size() == rs_.rank(), std::string(what) + " has length " + std::to_string(v.size()) +
                                            ", expected " + std::to_string(rs_.rank()));
    }

private:
    RootSystem rs_;
    ParabolicData par_;
    std::shared_ptr<const std::vector<WeylElement>> weyl_;
    KostantEngine pq_;
    KostantEngine hat_;
    KostantEngine bar_;
    std::optional<KostantEngine> single_;
    std::optional<ShiftedEngine> colored_n_;
    std::optional<AdmissibleEngine> colored_r_;
    PolyCache kpq_cache_;
    PolyCache branch_cache_;
    PolyCache kbar_cache_;
};

}  // namespace weylpq
