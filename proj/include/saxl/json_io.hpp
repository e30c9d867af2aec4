#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "saxl/certificate.hpp"
#include "saxl/contraction.hpp"
#include "saxl/error.hpp"
#include "saxl/hypergraph.hpp"
#include "saxl/partition.hpp"
#include "saxl/tableau.hpp"

// JSON forms of the saxl value types. Partitions are text ("5,3,1,1"),
// scalars are decimal strings, keys are emitted in a fixed order so output
// is byte-deterministic.

namespace saxl::json {

using Json = nlohmann::ordered_json;

inline constexpr int certificate_schema = 1;

inline Json to_json(const Partition& p) { return p.to_string(); }

inline Partition partition_from_json(const Json& j) {
    if (!j.is_string())
        throw Error(ErrorCode::Parse, "partition must be a string");
    return Partition::parse(j.get<std::string>());
}

inline Json scalar_to_json(const ExactScalar& x) { return x.str(); }

inline ExactScalar scalar_from_json(const Json& j) {
    if (!j.is_string())
        throw Error(ErrorCode::Parse, "scalar must be a decimal string");
    const auto s = j.get<std::string>();
    const std::size_t digits = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == digits || s.find_first_not_of("0123456789", digits) != std::string::npos)
        throw Error(ErrorCode::Parse, "bad scalar '" + s + "'");
    return ExactScalar(s);
}

inline Json to_json(const Filling& f) { return f.rows(); }

inline Filling filling_from_json(const Json& j) {
    try {
        return Filling(j.get<std::vector<std::vector<int>>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("filling: ") + e.what());
    }
}

inline Json to_json(const YoungHypergraph& h) {
    Json j;
    j["d"] = h.d;
    j["type"] = Json::array({to_json(h.type[0]), to_json(h.type[1]), to_json(h.type[2])});
    j["layers"] = Json::array({h.layers[0], h.layers[1], h.layers[2]});
    return j;
}

inline YoungHypergraph hypergraph_from_json(const Json& j) {
    try {
        YoungHypergraph h;
        h.d = j.at("d").get<int>();
        const auto& type = j.at("type");
        const auto& layers = j.at("layers");
        if (type.size() != 3 || layers.size() != 3)
            throw Error(ErrorCode::Parse, "hypergraph needs three type partitions and three layers");
        for (std::size_t k = 0; k < 3; ++k) {
            h.type[k] = partition_from_json(type[k]);
            h.layers[k] = layers[k].get<Layer>();
        }
        return h;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("hypergraph: ") + e.what());
    }
}

inline Json to_json(const Triple& t) { return Json::array({to_json(t.lambda), to_json(t.mu), to_json(t.nu)}); }

inline Triple triple_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3)
        throw Error(ErrorCode::Parse, "triple must be an array of three partitions");
    return {partition_from_json(j[0]), partition_from_json(j[1]), partition_from_json(j[2])};
}

namespace detail {

inline Json node_to_json(const Certificate& c) {
    Json j;
    j["kind"] = std::string(to_string(c.kind));
    j["triple"] = to_json(c.triple);
    switch (c.kind) {
    case CertificateKind::constructive:
        j["n"] = c.n;
        j["filling"] = to_json(c.filling);
        j["hypergraph"] = to_json(c.hypergraph);
        j["scalar"] = scalar_to_json(c.scalar);
        break;
    case CertificateKind::oracle_leaf:
        j["value"] = scalar_to_json(c.scalar);
        break;
    case CertificateKind::transposed:
    case CertificateKind::semigroup:
        j["n"] = c.n;
        j["children"] = Json::array();
        for (const auto& child : c.children)
            j["children"].push_back(node_to_json(child));
        break;
    }
    return j;
}

inline Certificate node_from_json(const Json& j) {
    try {
        Certificate c;
        const auto kind = j.at("kind").get<std::string>();
        c.triple = triple_from_json(j.at("triple"));
        if (kind == "constructive") {
            c.kind = CertificateKind::constructive;
            c.n = j.at("n").get<int>();
            c.filling = filling_from_json(j.at("filling"));
            c.hypergraph = hypergraph_from_json(j.at("hypergraph"));
            c.scalar = scalar_from_json(j.at("scalar"));
        } else if (kind == "oracle") {
            c.kind = CertificateKind::oracle_leaf;
            c.scalar = scalar_from_json(j.at("value"));
        } else if (kind == "transposed" || kind == "semigroup") {
            c.kind = kind == "transposed" ? CertificateKind::transposed : CertificateKind::semigroup;
            c.n = j.at("n").get<int>();
            for (const auto& child : j.at("children"))
                c.children.push_back(node_from_json(child));
        } else {
            throw Error(ErrorCode::Parse, "unknown certificate kind '" + kind + "'");
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("certificate: ") + e.what());
    }
}

} // namespace detail

inline Json to_json(const Certificate& c) {
    Json j;
    j["schema"] = certificate_schema;
    j.update(detail::node_to_json(c));
    return j;
}

inline Certificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("schema") || j["schema"] != certificate_schema)
        throw Error(ErrorCode::Parse, "certificate must carry \"schema\": " + std::to_string(certificate_schema));
    return detail::node_from_json(j);
}

inline Json to_json(const SweepReport& r, bool timings = false) {
    Json j;
    j["n"] = r.n;
    j["total"] = r.total;
    j["comparable"] = r.comparable;
    j["certified"] = r.certified;
    j["failures"] = Json::array();
    j["entries"] = Json::array();
    for (const auto& e : r.entries) {
        Json entry;
        entry["nu"] = to_json(e.nu);
        entry["kind"] = e.kind ? Json(std::string(to_string(*e.kind))) : Json(nullptr);
        entry["kronecker"] = e.kronecker >= 0 ? scalar_to_json(e.kronecker) : Json(nullptr);
        if (timings)
            entry["millis"] = e.millis;
        j["entries"].push_back(entry);
        if (!e.failure.empty())
            j["failures"].push_back(Json{{"nu", to_json(e.nu)}, {"reason", e.failure}});
    }
    return j;
}

} // namespace saxl::json
