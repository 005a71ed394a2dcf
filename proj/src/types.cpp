#include "kohnert/types.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kohnert {

Diagram::Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    auto last = std::unique(cells_.begin(), cells_.end());
    cells_.erase(last, cells_.end());
    for (const Cell& c : cells_) {
        if (c.col < 1 || c.row < 1) throw std::invalid_argument("cell outside first quadrant");
    }
}

bool Diagram::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

int Diagram::max_col() const {
    return cells_.empty() ? 0 : cells_.back().col;
}

int Diagram::max_row() const {
    int m = 0;
    for (const Cell& c : cells_) m = std::max(m, c.row);
    return m;
}

int Diagram::column_count(int col) const {
    int n = 0;
    for (const Cell& c : cells_) n += (c.col == col);
    return n;
}

int Diagram::row_count(int row) const {
    int n = 0;
    for (const Cell& c : cells_) n += (c.row == row);
    return n;
}

int Diagram::rightmost_in_row(int row) const {
    int best = 0;
    for (const Cell& c : cells_) {
        if (c.row == row) best = std::max(best, c.col);
    }
    return best;
}

Diagram Diagram::with_cell(Cell c) const {
    std::vector<Cell> v = cells_;
    v.push_back(c);
    return Diagram(std::move(v));
}

Diagram Diagram::without_cell(Cell c) const {
    std::vector<Cell> v;
    v.reserve(cells_.size());
    for (const Cell& x : cells_) {
        if (!(x == c)) v.push_back(x);
    }
    return Diagram(std::move(v));
}

int total(const Composition& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

std::string to_string(const Composition& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    os << ')';
    return os.str();
}

std::string to_string(const Cell& c) {
    std::ostringstream os;
    os << '(' << c.col << ',' << c.row << ')';
    return os.str();
}

}  // namespace kohnert
