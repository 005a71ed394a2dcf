#include "kohnert/io.hpp"

#include <sstream>

namespace kohnert {

json to_json(const Diagram& d) {
    json cells = json::array();
    for (const Cell& c : d.cells()) cells.push_back({c.col, c.row});
    return json{{"cells", cells}};
}

json to_json(const Labeling& l) {
    json entries = json::array();
    const auto& cells = l.diagram.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        entries.push_back({cells[i].col, cells[i].row, l.labels[i]});
    }
    return json{{"shape", l.shape}, {"entries", entries}};
}

json to_json(const RectTrace& t) {
    json steps = json::array();
    for (const RectStep& s : t.steps) {
        json step;
        switch (s.kind) {
            case RectStep::Kind::pass: step["kind"] = "pass"; break;
            case RectStep::Kind::bump: step["kind"] = "bump"; break;
            case RectStep::Kind::land: step["kind"] = "land"; break;
        }
        step["position"] = {s.position.col, s.position.row};
        if (s.bumped) step["bumped"] = {s.bumped->col, s.bumped->row};
        if (s.label) step["label"] = *s.label;
        steps.push_back(step);
    }
    return json{{"steps", steps},
                {"landing", {t.landing.col, t.landing.row}},
                {"landing_column", t.landing_column}};
}

json to_json(const KChainStep& s) {
    return json{{"added_column", s.added_column},
                {"extended_row", s.extended_row},
                {"before", s.before},
                {"after", s.after}};
}

json to_json(const SkewTableau& t) {
    json chain = json::array();
    for (const KChainStep& s : t.chain) chain.push_back(to_json(s));
    json cells = json::array();
    for (const auto& [c, e] : t.entries) cells.push_back({c.col, c.row, e});
    return json{{"chain", chain},
                {"base", t.base},
                {"ambient", t.ambient},
                {"k", t.k},
                {"kind", t.key_variant ? "key" : "atomic"},
                {"cells", cells}};
}

json to_json(const ReverseTableau& t) {
    return json{{"shape", t.shape}, {"rows", t.rows}};
}

json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exponents", e}, {"coefficient", c.str()}});
    }
    return json{{"nvars", p.nvars()}, {"terms", terms}};
}

Diagram diagram_from_json(const json& j) {
    std::vector<Cell> cells;
    for (const auto& c : j.at("cells")) {
        cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    }
    return Diagram(std::move(cells));
}

Composition composition_from_json(const json& j) {
    return j.get<Composition>();
}

Composition parse_composition(const std::string& s) {
    return parse_int_list(s);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

}  // namespace kohnert
