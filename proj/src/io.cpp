#include "cqrel/io.hpp"

#include <cmath>
#include <cstdint>

namespace cqrel::io {

namespace {

double finite_number(const json& j, std::string_view what) {
    if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number, got " + j.dump());
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(std::string(what) + ": not finite");
    return v;
}

}  // namespace

json number(double v) {
    if (v == 0.0) return 0;
    if (std::isfinite(v) && std::abs(v) < 0x1.0p53 && std::trunc(v) == v) return static_cast<std::int64_t>(v);
    return v;
}

json to_json(const CQNumber& v) {
    json arr = json::array();
    for (double c : v.c) arr.push_back(number(c));
    return arr;
}

json to_json(const Event& e) { return {{"t", number(e.t)}, {"x", number(e.x)}, {"y", number(e.y)}, {"z", number(e.z)}}; }

CQNumber cq_from_json(const json& j, std::string_view what) {
    if (!j.is_array() || j.size() != kBasisSize) {
        throw ParseError(std::string(what) + ": expected an array of 8 numbers in basis order [1,@,i,j,k,@i,@j,@k]");
    }
    CQNumber v;
    for (std::size_t n = 0; n < kBasisSize; ++n) {
        v[n] = finite_number(j[n], std::string(what) + "[" + std::to_string(n) + "]");
    }
    return v;
}

Event event_from_json(const json& j, std::string_view what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object {\"t\",\"x\",\"y\",\"z\"}");
    Event e;
    constexpr std::array<const char*, 4> keys{"t", "x", "y", "z"};
    for (std::size_t a = 0; a < 4; ++a) {
        const std::string field = std::string(what) + "." + keys[a];
        if (!j.contains(keys[a])) throw ParseError(field + ": missing");
        e[a] = finite_number(j.at(keys[a]), field);
    }
    return e;
}

json parse(std::string_view text, std::string_view what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string(what) + ": invalid JSON (" + err.what() + ")");
    }
}

}  // namespace cqrel::io
