#pragma once

#include <vector>

#include "kohnert/core.hpp"
#include "kohnert/types.hpp"

namespace kt {

using kohnert::Cell;
using kohnert::Composition;
using kohnert::Diagram;

inline Diagram diag(std::vector<Cell> cells) { return Diagram(std::move(cells)); }

// the 16-cell rectified diagram used throughout the threading and labeling
// figures; thread weight (0,5,2,0,5,4)
inline Diagram big_example_diagram() {
    return diag({{1, 6}, {2, 6}, {1, 5}, {2, 5}, {3, 4}, {1, 3}, {3, 3}, {4, 3}, {5, 3},
                 {1, 2}, {2, 2}, {3, 2}, {4, 2}, {2, 1}, {4, 1}, {5, 1}});
}

// 9-cell starting diagram of the worked 4-insertion example (appendix run)
inline Diagram appendix_start_diagram() {
    return diag({{1, 1}, {3, 1}, {4, 1}, {3, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {1, 6}});
}

// 9-cell starting diagram of the iterated-insertion figure
inline Diagram iterated_figure_diagram() {
    return diag({{1, 1}, {2, 1}, {3, 1}, {4, 2}, {1, 3}, {3, 3}, {1, 4}, {2, 5}, {1, 6}});
}

// all weak compositions of the given length with parts bounded by max_part
inline std::vector<Composition> all_compositions(int length, int max_part) {
    std::vector<Composition> out;
    Composition cur(length, 0);
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < length && cur[i] == max_part) cur[i++] = 0;
        if (i == length) break;
        cur[i] += 1;
    }
    return out;
}

// weak compositions of total n and given length
inline std::vector<Composition> compositions_of(int n, int length) {
    std::vector<Composition> out;
    Composition cur(length, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == length - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (length == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, n);
    return out;
}

}  // namespace kt
