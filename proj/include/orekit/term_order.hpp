#ifndef OREKIT_TERM_ORDER_HPP
#define OREKIT_TERM_ORDER_HPP

#include <string>
#include <vector>

#include "orekit/ore.hpp"

namespace orekit {

enum class MonoOrder { degrevlex, deglex, lex };

MonoOrder parse_mono_order(const std::string& s);
std::string to_string(MonoOrder o);

// Ranking of jets. Variables are ranked by `priority` (highest first, 0-based
// indices). Components carry a block number (smaller blocks dominate) and a
// rank within the block; inside a block the monomial decides first (term over
// position) unless `pot` is set.
class TermOrder {
public:
    TermOrder() = default;
    TermOrder(int n, MonoOrder kind = MonoOrder::degrevlex, std::vector<int> priority = {});

    int n() const { return n_; }
    MonoOrder kind() const { return kind_; }
    const std::vector<int>& priority() const { return prio_; }

    void set_pot(bool pot) { pot_ = pot; }
    bool pot() const { return pot_; }
    void set_component_ranks(std::vector<int> rank) { rank_ = std::move(rank); }
    void set_component_blocks(std::vector<int> block) { block_ = std::move(block); }
    int block(std::uint16_t comp) const { return comp < block_.size() ? block_[comp] : 0; }

    int compare_mono(const MultiIndex& a, const MultiIndex& b) const;
    int compare(const Jet& a, const Jet& b) const;
    bool greater(const Jet& a, const Jet& b) const { return compare(a, b) > 0; }

    // Leading jet of a nonzero row.
    const Row::Term& leading(const Row& r) const;

    // Lowest-priority variable occurring in mu; n for the zero index (1-based).
    int cls(const MultiIndex& mu) const;

private:
    int rank(std::uint16_t comp) const { return comp < rank_.size() ? rank_[comp] : comp; }

    int n_ = 0;
    MonoOrder kind_ = MonoOrder::degrevlex;
    std::vector<int> prio_;
    bool pot_ = false;
    std::vector<int> rank_, block_;
};

// Priority given as a 1-based permutation listed from lowest to highest,
// e.g. "1 3 2" means x2 is ranked highest and x1 lowest.
std::vector<int> priority_from_listing(const std::vector<int>& lowest_first);

}  // namespace orekit

#endif
