#include "twlga/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "twlga/error.hpp"

namespace twlga {

using nlohmann::json;

std::string instance_to_json(const Instance& inst, int indent) {
    inst.validate();
    json doc;
    doc["tasks"]["count"] = inst.tasks.count;
    if (inst.tasks.sizes_mb) doc["tasks"]["sizes_mb"] = *inst.tasks.sizes_mb;

    doc["nodes"]["count"] = inst.nodes.count;
    json usage = json::array();
    for (const auto& u : inst.nodes.usage) usage.push_back({u.cpu, u.mem, u.disk, u.net});
    doc["nodes"]["usage"] = std::move(usage);

    json etc = json::array();
    for (std::size_t t = 0; t < inst.etc.tasks(); ++t) {
        auto row = inst.etc.row(t);
        etc.push_back(std::vector<double>(row.begin(), row.end()));
    }
    doc["etc"] = std::move(etc);

    doc["weights"] = {{"cpu", inst.weights.cpu},
                      {"mem", inst.weights.mem},
                      {"disk", inst.weights.disk},
                      {"net", inst.weights.net}};
    return doc.dump(indent) + "\n";
}

Instance instance_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("instance JSON: ") + e.what());
    }

    Instance inst;
    try {
        const auto& tasks = doc.at("tasks");
        inst.tasks.count = tasks.at("count").get<std::size_t>();
        if (tasks.contains("sizes_mb")) {
            inst.tasks.sizes_mb = tasks.at("sizes_mb").get<std::vector<double>>();
        }

        const auto& nodes = doc.at("nodes");
        const auto& usage = nodes.at("usage");
        inst.nodes.count = nodes.contains("count") ? nodes.at("count").get<std::size_t>()
                                                   : usage.size();
        for (const auto& u : usage) {
            if (!u.is_array() || u.size() != 4) {
                throw InvalidArgument("instance JSON: nodes.usage entries must be 4-tuples");
            }
            inst.nodes.usage.push_back(ResourceUsage{u[0].get<double>(), u[1].get<double>(),
                                                     u[2].get<double>(), u[3].get<double>()});
        }

        inst.etc = EtcMatrix(doc.at("etc").get<std::vector<std::vector<double>>>());

        if (doc.contains("weights")) {
            const auto& w = doc.at("weights");
            inst.weights = WorkloadWeights{w.at("cpu").get<double>(), w.at("mem").get<double>(),
                                           w.at("disk").get<double>(), w.at("net").get<double>()};
        }
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("instance JSON: ") + e.what());
    }
    inst.validate();
    return inst;
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path.string(), "cannot open instance file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return instance_from_json(ss.str());
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError(path.string(), "cannot write instance file");
    out << instance_to_json(inst);
    if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace twlga
