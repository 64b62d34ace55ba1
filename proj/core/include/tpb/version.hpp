#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tpb {

std::string version();

/// (name, version) of the numerical libraries linked into the core.
std::vector<std::pair<std::string, std::string>> dependency_versions();

}  // namespace tpb
