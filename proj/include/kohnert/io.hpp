#pragma once

#include <string>

#include "json.hpp"
#include "kohnert/expansions.hpp"
#include "kohnert/insertion.hpp"
#include "kohnert/labeling.hpp"
#include "kohnert/tableaux.hpp"
#include "kohnert/types.hpp"

namespace kohnert {

using nlohmann::json;

json to_json(const Diagram& d);              // {"cells": [[c,r],...]}
json to_json(const Labeling& l);             // {"shape": [...], "entries": [[c,r,label],...]}
json to_json(const RectTrace& t);
json to_json(const KChainStep& s);
json to_json(const SkewTableau& t);          // {"chain": [...], "ambient": [...], "cells": [[c,r,e],...]}
json to_json(const ReverseTableau& t);
json to_json(const Polynomial& p);           // {"nvars": m, "terms": [{"exponents": [...], "coefficient": n}]}

Diagram diagram_from_json(const json& j);
Composition composition_from_json(const json& j);

// "0,2,1" -> {0,2,1}
Composition parse_composition(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);

}  // namespace kohnert
