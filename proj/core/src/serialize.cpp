#include "rcx/serialize.hpp"

#include <array>
#include <stdexcept>

#include <json.hpp>

#include "rcx/io.hpp"

namespace rcx {

using nlohmann::json;

namespace {

json subset_json(const std::vector<int>& subset) {
    json arr = json::array();
    for (int v : subset) arr.push_back(v + 1);
    return arr;
}

json cycle_json(const Cycle& c) {
    json arr = json::array();
    for (int v : c.vertices) arr.push_back(v + 1);
    return arr;
}

constexpr std::array<std::pair<RoleTag, const char*>, 15> role_names{{
    {RoleTag::original, "original"},
    {RoleTag::hub, "hub"},
    {RoleTag::path_aux, "path_aux"},
    {RoleTag::edge_aux, "edge_aux"},
    {RoleTag::wedge, "wedge"},
    {RoleTag::extra_v, "extra_v"},
    {RoleTag::s_hat, "s_hat"},
    {RoleTag::t_hat, "t_hat"},
    {RoleTag::s_orig, "s_orig"},
    {RoleTag::t_orig, "t_orig"},
    {RoleTag::ladder, "ladder"},
    {RoleTag::bridge, "bridge"},
    {RoleTag::apex, "apex"},
    {RoleTag::u_aux, "u_aux"},
    {RoleTag::w_aux, "w_aux"},
}};

}  // namespace

std::string role_tag_name(RoleTag tag) {
    for (auto [t, name] : role_names)
        if (t == tag) return name;
    throw std::logic_error("unknown role tag");
}

RoleTag role_tag_from_name(std::string_view name) {
    for (auto [t, n] : role_names)
        if (name == n) return t;
    throw std::invalid_argument("unknown role tag: " + std::string(name));
}

std::string verdict_json(const Verdict& v) {
    json out;
    out["ok"] = v.ok;
    out["failing_subset"] = v.ok ? json(nullptr) : subset_json(v.failing_subset);
    if (v.witnesses) {
        json ws = json::array();
        for (const Witness& w : *v.witnesses)
            ws.push_back({{"subset", subset_json(w.subset)}, {"cycle", cycle_json(w.cycle)}});
        out["witnesses"] = std::move(ws);
    } else {
        out["witnesses"] = nullptr;
    }
    return out.dump(2) + "\n";
}

std::string fk_evidence_json(const FkEvidence& e, int k) {
    json out;
    out["k"] = k;
    switch (e.verdict) {
        case FkVerdict::exact_yes:
            out["verdict"] = "exact_yes";
            out["subset"] = subset_json(e.subset);
            out["witness_cycle"] = cycle_json(*e.witness);
            out["connectivity"] = nullptr;
            break;
        case FkVerdict::exact_no:
            out["verdict"] = "exact_no";
            out["subset"] = subset_json(e.subset);
            out["witness_cycle"] = nullptr;
            out["connectivity"] = nullptr;
            break;
        case FkVerdict::sufficient_k_connected:
            out["verdict"] = "sufficient_k_connected";
            out["subset"] = nullptr;
            out["witness_cycle"] = nullptr;
            out["connectivity"] = e.connectivity;
            break;
    }
    return out.dump(2) + "\n";
}

std::string crx_outcome_json(const CrxOutcome& o, int k) {
    json out;
    if (const CrxResult* r = std::get_if<CrxResult>(&o)) {
        out["crx"] = r->value;
        out["k"] = k;
        switch (r->method) {
            case CrxMethod::exact_search: out["method"] = "exact-search"; break;
            case CrxMethod::recognizer: out["method"] = "recognizer"; break;
            case CrxMethod::constructive: out["method"] = "constructive"; break;
        }
        out["colouring"] = write_colouring(r->witness);
    } else if (const NotInFk* nf = std::get_if<NotInFk>(&o)) {
        out["error"] = "not_in_Fk";
        out["witness_subset"] = subset_json(nf->witness_subset);
    } else {
        out["error"] = "above_cap";
        out["upper"] = std::get<AboveCap>(o).cap;
        out["k"] = k;
    }
    return out.dump(2) + "\n";
}

std::string instance_sidecar_json(const ReductionInstance& inst) {
    json source;
    source["problem"] = inst.source.problem;
    source["graph"] = write_graph(inst.source.graph);
    source["colouring"] =
        inst.source.colouring ? json(write_colouring(*inst.source.colouring)) : json(nullptr);
    source["l"] = inst.source.l ? json(*inst.source.l) : json(nullptr);
    source["k"] = inst.source.k ? json(*inst.source.k) : json(nullptr);
    source["s"] = inst.source.s ? json(*inst.source.s + 1) : json(nullptr);
    source["t"] = inst.source.t ? json(*inst.source.t + 1) : json(nullptr);

    json roles;
    for (std::size_t v = 0; v < inst.roles.size(); ++v) {
        json role;
        role["tag"] = role_tag_name(inst.roles[v].tag);
        role["params"] = inst.roles[v].params;
        roles[std::to_string(v + 1)] = std::move(role);
    }

    json classes;
    for (int i = 0; i < inst.graph.edge_count(); ++i) {
        auto [u, v] = inst.graph.edges()[i];
        classes[std::to_string(u + 1) + "-" + std::to_string(v + 1)] = inst.edge_classes[i];
    }

    json out;
    out["source"] = std::move(source);
    out["roles"] = std::move(roles);
    out["edge_classes"] = std::move(classes);
    out["base_colouring"] =
        inst.base_colouring ? json(write_colouring(*inst.base_colouring)) : json(nullptr);
    return out.dump(2) + "\n";
}

ReductionInstance parse_instance(std::string_view graph_text, std::string_view sidecar_json) {
    ReductionInstance inst;
    inst.graph = parse_graph(graph_text);

    json doc = json::parse(sidecar_json);
    const json& source = doc.at("source");
    inst.source.problem = source.at("problem").get<std::string>();
    inst.source.graph = parse_graph(source.at("graph").get<std::string>());
    if (!source.at("colouring").is_null())
        inst.source.colouring = parse_colouring(source.at("colouring").get<std::string>());
    if (!source.at("l").is_null()) inst.source.l = source.at("l").get<int>();
    if (!source.at("k").is_null()) inst.source.k = source.at("k").get<int>();
    if (!source.at("s").is_null()) inst.source.s = source.at("s").get<int>() - 1;
    if (!source.at("t").is_null()) inst.source.t = source.at("t").get<int>() - 1;

    inst.roles.resize(inst.graph.order());
    const json& roles = doc.at("roles");
    if (static_cast<int>(roles.size()) != inst.graph.order())
        throw std::invalid_argument("sidecar roles do not cover every vertex");
    for (auto it = roles.begin(); it != roles.end(); ++it) {
        const int v = std::stoi(it.key()) - 1;
        if (v < 0 || v >= inst.graph.order())
            throw std::invalid_argument("sidecar role vertex out of range");
        VertexRole role;
        role.tag = role_tag_from_name(it.value().at("tag").get<std::string>());
        role.params = it.value().at("params").get<std::vector<int>>();
        inst.roles[v] = std::move(role);
    }

    inst.edge_classes.assign(inst.graph.edge_count(), {});
    const json& classes = doc.at("edge_classes");
    if (static_cast<int>(classes.size()) != inst.graph.edge_count())
        throw std::invalid_argument("sidecar edge classes do not cover every edge");
    for (auto it = classes.begin(); it != classes.end(); ++it) {
        const std::string& key = it.key();
        const auto dash = key.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("bad edge class key");
        const int u = std::stoi(key.substr(0, dash)) - 1;
        const int v = std::stoi(key.substr(dash + 1)) - 1;
        const int idx = inst.graph.edge_index(u, v);
        if (idx < 0) throw std::invalid_argument("edge class for a non-edge");
        inst.edge_classes[idx] = it.value().get<std::string>();
    }

    if (!doc.at("base_colouring").is_null()) {
        EdgeColouring base = parse_colouring(doc.at("base_colouring").get<std::string>());
        if (!(base.host() == inst.graph))
            throw std::invalid_argument("base colouring host mismatch");
        inst.base_colouring = std::move(base);
    }
    return inst;
}

}  // namespace rcx
