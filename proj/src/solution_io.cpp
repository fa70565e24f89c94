#include "besovclaw/solution_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "besovclaw/version.hpp"

namespace besovclaw {

namespace {

using ordered_json = nlohmann::ordered_json;

int schema_major(const std::string& version) {
    const auto dot = version.find('.');
    return std::stoi(dot == std::string::npos ? version : version.substr(0, dot));
}

}  // namespace

std::string solution_to_json(const SolutionRecord& rec) {
    const Grid2D& g = rec.field.grid();
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["grid"] = {{"t0", g.t0()}, {"t1", g.t1()}, {"x0", g.x0()},
                 {"x1", g.x1()}, {"nt", g.nt()}, {"nx", g.nx()}};
    j["flux"] = rec.flux_id;
    j["scheme"] = rec.scheme;
    j["cfl"] = rec.cfl;
    j["boundary"] = rec.boundary;
    j["init"] = rec.init_tag;
    j["supnorm"] = rec.field.supnorm();
    j["values"] = rec.field.values();
    j["initial_values"] = rec.initial_samples;
    return j.dump();
}

SolutionRecord solution_from_json(const std::string& text) {
    const auto j = ordered_json::parse(text);
    const std::string version = j.at("schema_version").get<std::string>();
    if (schema_major(version) != kSchemaMajor)
        throw std::runtime_error("unsupported schema major in version " + version);
    const auto& jg = j.at("grid");
    const Grid2D g(jg.at("t0").get<double>(), jg.at("t1").get<double>(),
                   jg.at("x0").get<double>(), jg.at("x1").get<double>(),
                   jg.at("nt").get<int>(), jg.at("nx").get<int>());
    SpaceTimeField field(g, j.at("values").get<std::vector<double>>());
    std::vector<double> init_vals;
    if (j.contains("initial_values"))
        init_vals = j.at("initial_values").get<std::vector<double>>();
    SolutionRecord rec{std::move(field),
                       j.at("flux").get<std::string>(),
                       j.at("scheme").get<std::string>(),
                       j.at("cfl").get<double>(),
                       j.value("boundary", std::string("outflow")),
                       j.value("init", std::string("unknown")),
                       std::move(init_vals),
                       0.0,
                       0.0};
    return rec;
}

void write_solution(const SolutionRecord& rec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << solution_to_json(rec) << '\n';
}

SolutionRecord read_solution(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return solution_from_json(text);
}

}  // namespace besovclaw
