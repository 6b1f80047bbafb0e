#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace manin::detail {

// (name, JSON text) for every dataset under core/data, sorted by name.
const std::vector<std::pair<std::string_view, std::string_view>>& bundled_dataset_texts();

}  // namespace manin::detail
