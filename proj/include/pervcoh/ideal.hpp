#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "pervcoh/poly.hpp"

namespace pervcoh {

namespace detail {
template <typename Element>
struct GbCache {
    std::once_flag once;
    std::vector<Element> basis;
};
}  // namespace detail

// Finitely generated ideal of the ring. Generators are fixed at construction;
// the default-order Groebner basis is computed once on demand and shared
// across copies.
class Ideal {
  public:
    Ideal() = default;
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
    Ideal(RingPtr ring, std::vector<Polynomial> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {
        for (const auto& g : gens_)
            if (!g.ring() || !g.ring()->same_as(*ring_))
                throw std::invalid_argument("ideal generator over wrong ring");
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    detail::GbCache<Polynomial>& cache() const { return *cache_; }

  private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<detail::GbCache<Polynomial>> cache_ =
        std::make_shared<detail::GbCache<Polynomial>>();
};

// Submodule of a free module S^ambient_rank given by generators.
class Submodule {
  public:
    Submodule() = default;
    Submodule(RingPtr ring, int ambient_rank)
        : ring_(std::move(ring)), ambient_rank_(ambient_rank) {
        if (ambient_rank < 0) throw std::invalid_argument("negative ambient rank");
    }
    Submodule(RingPtr ring, int ambient_rank, std::vector<FreeElement> gens)
        : ring_(std::move(ring)), ambient_rank_(ambient_rank), gens_(std::move(gens)) {
        if (ambient_rank < 0) throw std::invalid_argument("negative ambient rank");
        for (const auto& g : gens_)
            if (g.rank() != ambient_rank_)
                throw std::invalid_argument("submodule generator rank mismatch");
    }

    const RingPtr& ring() const { return ring_; }
    int ambient_rank() const { return ambient_rank_; }
    const std::vector<FreeElement>& gens() const { return gens_; }

    detail::GbCache<FreeElement>& cache() const { return *cache_; }

  private:
    RingPtr ring_;
    int ambient_rank_ = 0;
    std::vector<FreeElement> gens_;
    mutable std::shared_ptr<detail::GbCache<FreeElement>> cache_ =
        std::make_shared<detail::GbCache<FreeElement>>();
};

}  // namespace pervcoh
