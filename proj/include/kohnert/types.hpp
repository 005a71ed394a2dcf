#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kohnert {

// Cells live in the first quadrant: column >= 1 (leftmost = 1),
// row >= 1 (bottom = 1).
struct Cell {
    int col = 0;
    int row = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Fixed-length sequence of nonnegative integers, index 0 = bottom row.
// Trailing zeros are significant: length is part of the value.
using Composition = std::vector<int>;

// Finite set of cells, kept sorted by (col, row). This sorted form is the
// canonical serialization; all set operations hash it.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(Cell c) const;

    int max_col() const;  // 0 when empty
    int max_row() const;  // 0 when empty

    // number of cells in the given column / row
    int column_count(int col) const;
    int row_count(int row) const;
    // rightmost occupied column of a row, 0 if the row is empty
    int rightmost_in_row(int row) const;

    Diagram with_cell(Cell c) const;
    Diagram without_cell(Cell c) const;

    friend auto operator<=>(const Diagram&, const Diagram&) = default;

private:
    std::vector<Cell> cells_;
};

struct CellHash {
    std::size_t operator()(const Cell& c) const {
        return std::hash<std::uint64_t>{}((std::uint64_t(c.col) << 32) ^ std::uint64_t(c.row));
    }
};

struct DiagramHash {
    std::size_t operator()(const Diagram& d) const {
        std::uint64_t h = 1469598103934665603ull;
        for (const Cell& c : d.cells()) {
            h = (h ^ std::uint64_t(c.col)) * 1099511628211ull;
            h = (h ^ std::uint64_t(c.row)) * 1099511628211ull;
        }
        return std::size_t(h);
    }
};

struct CompositionHash {
    std::size_t operator()(const Composition& a) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : a) h = (h ^ std::uint64_t(v + 1)) * 1099511628211ull;
        return std::size_t(h);
    }
};

// Thrown when a closure would exceed the configured cell budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

int total(const Composition& a);
std::string to_string(const Composition& a);
std::string to_string(const Cell& c);

}  // namespace kohnert
