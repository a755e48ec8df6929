#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "toric/bits.hpp"
#include "toric/perm.hpp"

namespace toric {

/// Finite poset stored as up-set/down-set bitsets over a fixed linear
/// extension (element indices must already be topologically sorted:
/// x <= y implies index(x) <= index(y)).
class Poset {
public:
    /// leq(i, j) must define a partial order compatible with the index order.
    Poset(int m, const std::function<bool(int, int)>& leq);

    int size() const { return m_; }
    bool leq(int x, int y) const { return up_[x].test(y); }
    const Bits& up(int x) const { return up_[x]; }
    const Bits& down(int x) const { return down_[x]; }

    /// Join of x and y if it exists.
    std::optional<int> join(int x, int y) const;
    std::optional<int> meet(int x, int y) const;

    struct LatticeCheck {
        bool is_lattice = true;
        int x = -1, y = -1;     // witness pair on failure
        bool missing_join = false;  // otherwise missing meet
    };
    /// Scans all pairs for meets and joins; returns the first failure.
    LatticeCheck check_lattice() const;


private:
    int m_;
    std::vector<Bits> up_, down_;
};

/// The poset Int[v,w]: all subintervals [v',w'] of [v,w] ordered by
/// containment, with an adjoined bottom element for the empty set.
struct IntervalPoset {
    // Element 0 is the empty set; element i >= 1 is pairs[i-1].
    std::vector<std::pair<Permutation, Permutation>> pairs;
    Poset poset;
};

IntervalPoset interval_poset(const BruhatInterval& I);

}  // namespace toric
