#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "enumerate.hpp"
#include "plane_graph.hpp"

namespace pw {

inline constexpr std::string_view planar_code_header = ">>planar_code<<";

inline std::string encode_planar_code(const std::vector<PlaneGraph>& graphs, bool with_header) {
    std::string out;
    if (with_header) out.append(planar_code_header);
    for (const auto& g : graphs) {
        if (g.order() > 255) throw Error(Errc::OrderTooLarge, "n = " + std::to_string(g.order()));
        out.push_back(static_cast<char>(g.order()));
        for (int v = 1; v <= g.order(); ++v) {
            for (int u : g.neighbors(v)) out.push_back(static_cast<char>(u));
            out.push_back('\0');
        }
    }
    return out;
}

inline std::string encode_planar_code(const PlaneGraph& g, bool with_header = false) {
    return encode_planar_code(std::vector<PlaneGraph>{g}, with_header);
}

inline std::vector<PlaneGraph> decode_planar_code(std::string_view bytes) {
    std::size_t pos = 0;
    if (bytes.size() >= 2 && bytes.substr(0, 2) == ">>") {
        if (bytes.substr(0, planar_code_header.size()) != planar_code_header)
            throw Error(Errc::BadHeader, "expected >>planar_code<<");
        pos = planar_code_header.size();
    }
    std::vector<PlaneGraph> out;
    while (pos < bytes.size()) {
        int n = static_cast<unsigned char>(bytes[pos++]);
        if (n == 0) throw Error(Errc::InvalidNeighborByte, "order byte 0 (wide format unsupported)");
        Rotation rot(n);
        for (int v = 0; v < n; ++v) {
            for (;;) {
                if (pos >= bytes.size()) throw Error(Errc::TruncatedStream, "stream ends inside graph");
                int x = static_cast<unsigned char>(bytes[pos++]);
                if (x == 0) break;
                if (x > n) throw Error(Errc::InvalidNeighborByte, "neighbor " + std::to_string(x) + " > n");
                rot[v].push_back(x);
            }
        }
        out.push_back(PlaneGraph::from_rotation(rot));
    }
    return out;
}

enum class ReportFormat { CSV, JSON };

inline std::vector<ExtremalRecord> sorted_records(std::vector<ExtremalRecord> recs) {
    std::stable_sort(recs.begin(), recs.end(), [](const auto& a, const auto& b) {
        return std::make_tuple(std::string(plane_class_name(a.cls)), a.kappa, a.order) <
               std::make_tuple(std::string(plane_class_name(b.cls)), b.kappa, b.order);
    });
    return recs;
}

inline std::string write_records(const std::vector<ExtremalRecord>& records, ReportFormat format) {
    auto recs = sorted_records(records);
    auto opt = [](const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : std::string(); };
    if (format == ReportFormat::CSV) {
        std::ostringstream os;
        os << "order,class,kappa,max_wiener,wiener_count,max_transmission,transmission_count,total_classes\n";
        for (const auto& r : recs)
            os << r.order << ',' << plane_class_name(r.cls) << ',' << r.kappa << ',' << opt(r.max_wiener) << ','
               << r.wiener_count << ',' << opt(r.max_transmission) << ',' << r.transmission_count << ','
               << r.total_classes << '\n';
        return os.str();
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : recs) {
        nlohmann::ordered_json j;
        j["order"] = r.order;
        j["class"] = plane_class_name(r.cls);
        j["kappa"] = r.kappa;
        j["max_wiener"] = r.max_wiener ? nlohmann::ordered_json(*r.max_wiener) : nlohmann::ordered_json(nullptr);
        j["wiener_count"] = r.wiener_count;
        j["max_transmission"] =
            r.max_transmission ? nlohmann::ordered_json(*r.max_transmission) : nlohmann::ordered_json(nullptr);
        j["transmission_count"] = r.transmission_count;
        j["total_classes"] = r.total_classes;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

} // namespace pw
