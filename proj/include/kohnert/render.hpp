#pragma once

#include <string>

#include "kohnert/core.hpp"
#include "kohnert/insertion.hpp"
#include "kohnert/labeling.hpp"
#include "kohnert/tableaux.hpp"
#include "kohnert/types.hpp"

namespace kohnert {

// Rows print top (max row) to bottom, '*' for cells, '.' for vacancies,
// closed by a baseline of '-'. width/height expand the frame when positive.
std::string render_diagram(const Diagram& d, int width = 0, int height = 0);

// Label grid in the same orientation; '.' marks vacancies.
std::string render_labeling(const Labeling& l, int width = 0, int height = 0);

// Reverse tableau, largest row on top.
std::string render_tableau(const ReverseTableau& t);

// Skew tableau: skew entries bracketed, remaining cells of the ambient
// shape show their labels.
std::string render_skew(const SkewTableau& t);

// Diagram with the bumping path of a trace: 'x' at the insertion position,
// 'o' at passed positions, '*' cells, landing cell shown as its label.
std::string render_trace_panel(const Diagram& before, const RectTrace& trace, Cell start,
                               int width = 0, int height = 0);

std::string render_threads(const Diagram& d);

}  // namespace kohnert
