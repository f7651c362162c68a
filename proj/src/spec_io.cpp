#include "polarmem/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "polarmem/errors.hpp"
#include "polarmem/geometry.hpp"

namespace polarmem {

using nlohmann::json;

std::string code_spec_to_json(const CodeSpec& spec) {
    json j;
    j["m"] = spec.m;
    j["n"] = spec.n;
    if (spec.design_channel.kind == ChannelKind::Bec)
        j["channel"] = {{"kind", "BEC"}, {"eps", spec.design_channel.parameter}};
    else
        j["channel"] = {{"kind", "BSC"}, {"p", spec.design_channel.parameter}};
    j["K"] = spec.K();
    j["info_set"] = spec.info_set;
    const auto mask = spec.info_mask();
    json frozen = json::array();
    for (std::uint64_t i = 1; i <= spec.N; ++i)
        if (!mask[i - 1]) frozen.push_back({{"index", i}, {"value", spec.frozen[i - 1]}});
    j["frozen"] = frozen;
    return j.dump(2) + "\n";
}

CodeSpec code_spec_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        const auto m = j.at("m").get<unsigned>();
        const auto n = j.at("n").get<int>();
        const auto& ch = j.at("channel");
        const auto kind = ch.at("kind").get<std::string>();
        NoiseModel design;
        if (kind == "BEC" || kind == "bec")
            design = NoiseModel::bec(ch.at("eps").get<double>());
        else if (kind == "BSC" || kind == "bsc")
            design = NoiseModel::bsc(ch.at("p").get<double>());
        else
            throw ValidationError("unknown channel kind '" + kind + "'");

        CodeSpec spec = CodeSpec::make(m, n, design, j.at("info_set").get<std::vector<std::uint64_t>>());
        if (j.contains("K") && j.at("K").get<std::size_t>() != spec.K())
            throw ValidationError("K does not match the size of info_set");
        if (j.contains("frozen")) {
            for (const auto& f : j.at("frozen")) {
                const auto idx = f.at("index").get<std::uint64_t>();
                const auto val = f.at("value").get<unsigned>();
                if (idx < 1 || idx > spec.N) throw ValidationError("frozen index outside 1..N");
                if (val > 1) throw ValidationError("frozen value must be 0 or 1");
                spec.frozen[idx - 1] = static_cast<std::uint8_t>(val);
            }
        }
        spec.validate();
        return spec;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed code spec: ") + e.what());
    } catch (const DomainError& e) {
        throw ValidationError(e.what());
    } catch (const OverflowError& e) {
        throw ValidationError(e.what());
    }
}

void write_code_spec(const std::string& path, const CodeSpec& spec) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << code_spec_to_json(spec);
}

CodeSpec read_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return code_spec_from_json(buf.str());
}

}  // namespace polarmem
