#pragma once

#include <numeric>
#include <vector>

namespace imst {

// Disjoint-set forest with path compression and union by rank.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), rank_(n, 0), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool connected(int a, int b) { return find(a) == find(b); }

    // Returns false when a and b were already in the same set.
    bool unite(int a, int b) {
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) {
            return false;
        }
        if (rank_[ra] < rank_[rb]) {
            std::swap(ra, rb);
        }
        parent_[rb] = ra;
        if (rank_[ra] == rank_[rb]) {
            ++rank_[ra];
        }
        --components_;
        return true;
    }

    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    int components_;
};

}  // namespace imst
