#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "multiseg/error.hpp"
#include "multiseg/multisegment.hpp"

namespace mseg {

using json = nlohmann::json;

inline json to_json(const Multisegment& a) {
    json arr = json::array();
    for (const auto& s : a) arr.push_back(json::array({s.begin, s.end}));
    return json{{"segments", arr}};
}

/// Accepts {"segments": [[b,e], ...]}; a one-element pair [k] means [k,k].
inline Multisegment multisegment_from_json(const json& j) {
    if (!j.is_object() || !j.contains("segments") || !j["segments"].is_array())
        throw ParseError("expected an object with a \"segments\" array");
    std::vector<Segment> v;
    for (const auto& p : j["segments"]) {
        if (!p.is_array() || p.empty() || p.size() > 2)
            throw ParseError("segment must be [b,e] or [k]: " + p.dump());
        for (const auto& x : p)
            if (!x.is_number_integer()) throw ParseError("segment endpoints must be integers: " + p.dump());
        int b = p[0].get<int>();
        int e = p.size() == 2 ? p[1].get<int>() : b;
        if (b > e) throw ParseError("segment with begin > end: " + p.dump());
        v.push_back({b, e});
    }
    return Multisegment(std::move(v));
}

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

inline Multisegment read_multisegment(const std::string& path) {
    return multisegment_from_json(read_json_file(path));
}

}  // namespace mseg
