#include "aritylab/json_io.hpp"

#include <fstream>

namespace aritylab {

json structure_to_json(const Structure& s, u64 row_cap) {
    json j;
    json sig = json::array();
    for (const auto& r : s.signature().relations()) {
        json rel;
        rel["name"] = r.name;
        rel["arity"] = r.arity;
        if (!r.sorts.empty()) rel["sorts"] = r.sorts;
        sig.push_back(rel);
    }
    j["signature"] = sig;
    j["universe"] = s.universe_size();
    if (!s.sort_names().empty()) {
        std::vector<std::string> sorts(s.universe_size());
        for (u32 e = 0; e < s.universe_size(); ++e) sorts[e] = s.sort_names()[s.sort_of(e)];
        j["sort_of"] = sorts;
    }
    json rels = json::object();
    for (std::size_t rel = 0; rel < s.signature().size(); ++rel)
        rels[s.signature().at(rel).name] = s.table(rel).sorted_tuples(row_cap);
    j["relations"] = rels;
    return j;
}

Structure structure_from_json(const json& j) {
    if (!j.is_object() || !j.contains("signature") || !j.contains("universe"))
        throw InputError("structure json: missing 'signature' or 'universe'");
    std::vector<RelationInfo> rels;
    for (const auto& r : j.at("signature")) {
        RelationInfo info;
        info.name = r.at("name").get<std::string>();
        info.arity = r.at("arity").get<u32>();
        if (r.contains("sorts")) info.sorts = r.at("sorts").get<std::vector<std::string>>();
        rels.push_back(std::move(info));
    }
    Signature sig(std::move(rels));
    u32 n = j.at("universe").get<u32>();

    Structure s;
    if (j.contains("sort_of")) {
        auto names_per_el = j.at("sort_of").get<std::vector<std::string>>();
        if (names_per_el.size() != n) throw InputError("structure json: sort_of length != universe");
        std::vector<std::string> sort_names;
        std::vector<u32> sort_of(n);
        for (u32 e = 0; e < n; ++e) {
            auto it = std::find(sort_names.begin(), sort_names.end(), names_per_el[e]);
            if (it == sort_names.end()) {
                sort_of[e] = static_cast<u32>(sort_names.size());
                sort_names.push_back(names_per_el[e]);
            } else {
                sort_of[e] = static_cast<u32>(it - sort_names.begin());
            }
        }
        s = Structure(std::move(sig), n, std::move(sort_names), std::move(sort_of));
    } else {
        s = Structure(std::move(sig), n);
    }

    if (j.contains("relations")) {
        for (const auto& [name, rows] : j.at("relations").items()) {
            std::size_t rel = s.signature().index_of(name);
            for (const auto& row : rows) {
                std::vector<u32> t = row.get<std::vector<u32>>();
                s.insert(rel, t);
            }
        }
    }
    return s;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("invalid json in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << dump_json(j);
}

}  // namespace aritylab
