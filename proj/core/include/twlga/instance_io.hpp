#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "twlga/task_model.hpp"

namespace twlga {

// JSON layout (see docs/instance.schema.json):
//   { "tasks":   { "count": N, "sizes_mb": [..N] },        sizes_mb optional
//     "nodes":   { "count": R, "usage": [[cpu, mem, disk, net], ..R] },
//     "etc":     [[..R], ..N],                              tasks x nodes, seconds
//     "weights": { "cpu": .., "mem": .., "disk": .., "net": .. } }

std::string instance_to_json(const Instance& inst, int indent = 2);
Instance instance_from_json(std::string_view text);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& inst, const std::filesystem::path& path);

}  // namespace twlga
