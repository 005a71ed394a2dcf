#pragma once

#include <string>
#include <vector>

namespace kohnert::golden {

// Names of the reproducible paper artifacts.
std::vector<std::string> artifact_names();

// Regenerate one artifact as plain text. Throws on unknown names.
std::string artifact(const std::string& name);

}  // namespace kohnert::golden
