#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "ekr/complex.hpp"
#include "ekr/graph.hpp"
#include "ekr/io.hpp"

namespace ekr {

using nlohmann::json;

inline json to_json(Face f) {
    json a = json::array();
    for (int v : f.vertices()) a.push_back(v);
    return a;
}

inline json to_json(const std::vector<Face>& faces) {
    json a = json::array();
    for (Face f : faces) a.push_back(to_json(f));
    return a;
}

inline json to_json(const SimplicialComplex& cx) {
    std::vector<Face> fs(cx.facets().begin(), cx.facets().end());
    return json{{"type", "complex"}, {"n", cx.vertex_count()}, {"facets", to_json(fs)}};
}

inline json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"type", "graph"}, {"n", g.vertex_count()}, {"edges", edges}};
}

inline Face face_from_json(const json& a) {
    std::vector<int> vs;
    for (const auto& v : a) vs.push_back(v.get<int>());
    return Face::of(vs);
}

inline SimplicialComplex complex_from_json(const json& j) {
    if (j.value("type", "") == "graph") {
        Graph g(j.at("n").get<int>());
        for (const auto& e : j.at("edges")) g.add_edge(e[0].get<int>(), e[1].get<int>());
        return independence_complex(g);
    }
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) facets.push_back(face_from_json(f));
    return SimplicialComplex::from_facets(std::move(facets), j.at("n").get<int>());
}

/// One record per checked claim instance.  Records are self-contained: the
/// instance payload allows standalone re-verification.
struct VerificationReport {
    std::string claim;
    std::string instance_digest;
    std::string instance_source;
    json instance_data;
    std::optional<int> r;
    std::optional<int> t;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    std::string verdict; // "pass" | "fail" | "skipped"
    std::string reason;  // populated for skipped verdicts
    json witness;        // populated for fail verdicts
    long long runtime_ms = 0;

    json to_json() const {
        json params{{"prime", prime}, {"seed", seed}};
        if (r) params["r"] = *r;
        if (t) params["t"] = *t;
        json j{{"claim", claim},
               {"instance", json{{"digest", instance_digest}, {"source", instance_source}, {"data", instance_data}}},
               {"params", params},
               {"verdict", verdict},
               {"runtime_ms", runtime_ms}};
        if (!reason.empty()) j["reason"] = reason;
        if (!witness.is_null()) j["witness"] = witness;
        return j;
    }

    static VerificationReport from_json(const json& j) {
        VerificationReport rep;
        rep.claim = j.at("claim").get<std::string>();
        rep.instance_digest = j.at("instance").at("digest").get<std::string>();
        rep.instance_source = j.at("instance").at("source").get<std::string>();
        rep.instance_data = j.at("instance").at("data");
        const json& params = j.at("params");
        if (params.contains("r")) rep.r = params.at("r").get<int>();
        if (params.contains("t")) rep.t = params.at("t").get<int>();
        rep.prime = params.at("prime").get<std::uint64_t>();
        rep.seed = params.at("seed").get<std::uint64_t>();
        rep.verdict = j.at("verdict").get<std::string>();
        rep.reason = j.value("reason", "");
        rep.witness = j.value("witness", json());
        rep.runtime_ms = j.value("runtime_ms", 0LL);
        return rep;
    }

    /// Deduplication key: one logical check per (claim, instance, params).
    std::string key() const {
        return claim + "|" + instance_digest + "|" + (r ? std::to_string(*r) : "-") + "|" +
               (t ? std::to_string(*t) : "-") + "|" + std::to_string(prime) + "|" + std::to_string(seed);
    }

    /// Instance-level key: marks an instance as already processed for a
    /// claim under given global parameters.
    std::string instance_key() const {
        return claim + "|" + instance_digest + "|" + std::to_string(prime) + "|" + std::to_string(seed);
    }
};

/// Append-only JSONL store with resume support.
class JsonlLog {
public:
    explicit JsonlLog(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        if (in) {
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                VerificationReport rep = VerificationReport::from_json(json::parse(line));
                keys_.insert(rep.key());
                instance_keys_.insert(rep.instance_key());
                ++count_;
            }
        }
        out_.open(path_, std::ios::app);
        if (!out_) throw input_error("cannot open log '" + path_ + "' for appending");
    }

    bool has_record(const VerificationReport& rep) const { return keys_.contains(rep.key()); }
    bool has_instance(const std::string& instance_key) const { return instance_keys_.contains(instance_key); }
    long long existing_count() const { return count_; }

    /// Appends unless an identical key is already present; returns whether
    /// the record was written.
    bool append(const VerificationReport& rep) {
        if (has_record(rep)) return false;
        out_ << rep.to_json().dump() << "\n";
        out_.flush();
        keys_.insert(rep.key());
        instance_keys_.insert(rep.instance_key());
        return true;
    }

    static std::vector<VerificationReport> load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw input_error("cannot open log '" + path + "'");
        std::vector<VerificationReport> out;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            out.push_back(VerificationReport::from_json(json::parse(line)));
        }
        return out;
    }

private:
    std::string path_;
    std::ofstream out_;
    std::unordered_set<std::string> keys_;
    std::unordered_set<std::string> instance_keys_;
    long long count_ = 0;
};

} // namespace ekr
