#include "kohnert/render.hpp"

#include <algorithm>
#include <sstream>

namespace kohnert {

namespace {

std::string grid_to_string(const std::vector<std::string>& rows_top_down, int width) {
    std::ostringstream os;
    for (const std::string& r : rows_top_down) os << r << '\n';
    os << std::string(std::size_t(std::max(width, 1)), '-') << '\n';
    return os.str();
}

}  // namespace

std::string render_diagram(const Diagram& d, int width, int height) {
    int w = std::max(width, std::max(d.max_col(), 1));
    int h = std::max(height, std::max(d.max_row(), 1));
    std::vector<std::string> rows;
    for (int r = h; r >= 1; --r) {
        std::string line(std::size_t(w), '.');
        for (const Cell& c : d.cells()) {
            if (c.row == r) line[std::size_t(c.col - 1)] = '*';
        }
        rows.push_back(line);
    }
    return grid_to_string(rows, w);
}

std::string render_labeling(const Labeling& l, int width, int height) {
    const Diagram& d = l.diagram;
    int w = std::max(width, std::max(d.max_col(), 1));
    int h = std::max(height, std::max(d.max_row(), 1));
    std::vector<std::string> rows;
    for (int r = h; r >= 1; --r) {
        std::ostringstream line;
        for (int c = 1; c <= w; ++c) {
            if (c > 1) line << ' ';
            if (d.contains({c, r}))
                line << l.label_of({c, r});
            else
                line << '.';
        }
        rows.push_back(line.str());
    }
    return grid_to_string(rows, 2 * w - 1);
}

std::string render_tableau(const ReverseTableau& t) {
    std::ostringstream os;
    int m = int(t.shape.size());
    int w = 0;
    for (int v : t.shape) w = std::max(w, v);
    for (int r = m; r >= 1; --r) {
        for (std::size_t j = 0; j < t.rows[r - 1].size(); ++j) {
            if (j) os << ' ';
            os << t.rows[r - 1][j];
        }
        os << '\n';
    }
    os << std::string(std::size_t(std::max(2 * w - 1, 1)), '-') << '\n';
    return os.str();
}

std::string render_skew(const SkewTableau& t) {
    std::ostringstream os;
    Diagram amb = composition_diagram(t.ambient);
    ProperLabelingResult labels;
    bool have_labels = false;
    if (!t.chain.empty()) {
        labels = proper_labeling(amb, t.chain.back().after);
        have_labels = labels.ok();
    } else {
        labels = proper_labeling(amb, t.ambient);
        have_labels = labels.ok();
    }
    int w = std::max(amb.max_col(), 1);
    int h = std::max(amb.max_row(), 1);
    for (int r = h; r >= 1; --r) {
        for (int c = 1; c <= w; ++c) {
            if (c > 1) os << ' ';
            Cell cell{c, r};
            auto it = t.entries.find(cell);
            if (it != t.entries.end())
                os << '[' << it->second << ']';
            else if (amb.contains(cell))
                os << ' ' << (have_labels ? std::to_string(labels.labeling.label_of(cell)) : "*") << ' ';
            else
                os << " . ";
        }
        os << '\n';
    }
    os << std::string(std::size_t(std::max(4 * w - 1, 1)), '-') << '\n';
    return os.str();
}

std::string render_trace_panel(const Diagram& before, const RectTrace& trace, Cell start, int width,
                               int height) {
    int w = std::max({width, before.max_col(), start.col, 1});
    int h = std::max({height, before.max_row(), start.row, 1});
    std::vector<std::string> rows;
    for (int r = h; r >= 1; --r) {
        std::string line(std::size_t(w), '.');
        for (const Cell& c : before.cells()) {
            if (c.row == r) line[std::size_t(c.col - 1)] = '*';
        }
        rows.push_back(line);
    }
    auto put = [&](Cell c, char ch) { rows[std::size_t(h - c.row)][std::size_t(c.col - 1)] = ch; };
    for (const RectStep& s : trace.steps) {
        if (s.kind == RectStep::Kind::pass) put(s.position, 'o');
        if (s.kind == RectStep::Kind::bump) put(s.position, '+');
    }
    put(start, 'x');
    put(trace.landing, '@');
    return grid_to_string(rows, w);
}

std::string render_threads(const Diagram& d) {
    auto threads = thread_decomposition(d);
    int w = std::max(d.max_col(), 1);
    int h = std::max(d.max_row(), 1);
    std::ostringstream os;
    for (int r = h; r >= 1; --r) {
        for (int c = 1; c <= w; ++c) {
            if (c > 1) os << ' ';
            int id = 0;
            for (std::size_t i = 0; i < threads.size(); ++i) {
                for (const Cell& cell : threads[i].cells) {
                    if (cell == Cell{c, r}) id = int(i) + 1;
                }
            }
            if (id)
                os << id;
            else
                os << '.';
        }
        os << '\n';
    }
    os << std::string(std::size_t(std::max(2 * w - 1, 1)), '-') << '\n';
    return os.str();
}

}  // namespace kohnert
