#pragma once

#include <functional>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

using Blocks = std::vector<std::vector<int>>;

// Visits every set partition of `items` exactly once. Elements are placed one
// at a time into an existing block or a fresh one, so the enumeration order is
// deterministic.
inline void for_each_set_partition(const std::vector<int>& items,
                                   const std::function<void(const Blocks&)>& visit) {
    Blocks blocks;
    blocks.reserve(items.size());
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == items.size()) {
            visit(blocks);
            return;
        }
        // index-based: the recursive call below grows `blocks`
        size_t open = blocks.size();
        for (size_t bi = 0; bi < open; ++bi) {
            blocks[bi].push_back(items[i]);
            self(self, i + 1);
            blocks[bi].pop_back();
        }
        blocks.push_back({items[i]});
        self(self, i + 1);
        blocks.pop_back();
    };
    if (items.empty()) {
        visit(blocks);
        return;
    }
    rec(rec, 0);
}

// When `anchor_singleton` is set, the first listed item is forced into a block
// of its own; the rest are partitioned freely.
inline std::vector<Blocks> set_partitions(const std::vector<int>& items, bool anchor_singleton = false) {
    std::vector<Blocks> out;
    if (anchor_singleton) {
        if (items.empty()) return out;
        std::vector<int> rest(items.begin() + 1, items.end());
        for_each_set_partition(rest, [&](const Blocks& b) {
            Blocks full;
            full.push_back({items.front()});
            full.insert(full.end(), b.begin(), b.end());
            out.push_back(std::move(full));
        });
    } else {
        for_each_set_partition(items, [&](const Blocks& b) { out.push_back(b); });
    }
    return out;
}

inline Int bell_number(int n) {
    // Bell triangle.
    std::vector<Int> row = {1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const Int& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace hurwitz
