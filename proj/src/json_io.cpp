#include "covrough/json_io.hpp"

#include "json.hpp"

namespace covrough {

using nlohmann::ordered_json;

Covering parse_covering(const std::string& text, int cap) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("universe") || !doc.contains("blocks")) {
        throw error("covering document needs \"universe\" and \"blocks\" fields");
    }
    const auto& ju = doc["universe"];
    const auto& jb = doc["blocks"];
    if (!ju.is_array() || !jb.is_array()) {
        throw error("\"universe\" and \"blocks\" must be arrays");
    }
    std::vector<std::string> labels;
    for (const auto& l : ju) {
        if (!l.is_string()) throw error("universe labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    Universe u(std::move(labels), cap);
    std::vector<std::vector<std::string>> blocks;
    for (const auto& b : jb) {
        if (!b.is_array()) throw error("each block must be an array of labels");
        std::vector<std::string> block;
        for (const auto& l : b) {
            if (!l.is_string()) throw error("block labels must be strings");
            block.push_back(l.get<std::string>());
        }
        blocks.push_back(std::move(block));
    }
    return Covering::make(u, blocks);
}

std::string print_covering(const Covering& c) {
    ordered_json doc;
    doc["universe"] = c.universe().labels();
    ordered_json blocks = ordered_json::array();
    for (int i = 0; i < c.block_count(); ++i) {
        blocks.push_back(c.block(i).labels());
    }
    doc["blocks"] = std::move(blocks);
    return doc.dump();
}

}  // namespace covrough
