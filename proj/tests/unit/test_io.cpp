#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "rcx/oracle.hpp"
#include "rcx/reductions.hpp"
#include "rcx/io.hpp"
#include "rcx/serialize.hpp"
#include "rcx/solver.hpp"
#include "test_util.hpp"

using namespace rcx;
using nlohmann::json;

TEST_CASE("verdict JSON carries 1-indexed ids") {
    Verdict fail;
    fail.ok = false;
    fail.failing_subset = {0, 2};
    const json doc = json::parse(verdict_json(fail));
    CHECK(doc.at("ok") == false);
    CHECK(doc.at("failing_subset") == json::array({1, 3}));
    CHECK(doc.at("witnesses").is_null());

    Verdict ok;
    ok.ok = true;
    ok.witnesses = std::vector<Witness>{{{0, 1}, Cycle{{0, 1, 2}}}};
    const json doc2 = json::parse(verdict_json(ok));
    CHECK(doc2.at("ok") == true);
    CHECK(doc2.at("failing_subset").is_null());
    CHECK(doc2.at("witnesses")[0].at("cycle") == json::array({1, 2, 3}));
    CHECK(doc2.at("witnesses")[0].at("subset") == json::array({1, 2}));
}

TEST_CASE("family evidence JSON") {
    const json yes =
        json::parse(fk_evidence_json(check_fk_membership(Graph::cycle(4), 2, FkMode::exact), 2));
    CHECK(yes.at("verdict") == "exact_yes");
    CHECK(yes.at("k") == 2);
    CHECK(yes.at("subset").is_array());
    CHECK(yes.at("witness_cycle").is_array());
    CHECK(yes.at("connectivity").is_null());

    const json fast =
        json::parse(fk_evidence_json(check_fk_membership(Graph::complete(5), 3, FkMode::fast), 3));
    CHECK(fast.at("verdict") == "sufficient_k_connected");
    CHECK(fast.at("connectivity") == 4);

    const json no = json::parse(
        fk_evidence_json(check_fk_membership(Graph(3, {{0, 1}}), 1, FkMode::exact), 1));
    CHECK(no.at("verdict") == "exact_no");
    CHECK(no.at("subset") == json::array({1}));
}

TEST_CASE("crx outcome JSON embeds the colouring payload") {
    const json ok = json::parse(crx_outcome_json(crx_exact(Graph::complete(4), 2), 2));
    CHECK(ok.at("crx") == 3);
    CHECK(ok.at("k") == 2);
    CHECK(ok.at("method") == "exact-search");
    const EdgeColouring witness = parse_colouring(ok.at("colouring").get<std::string>());
    CHECK(witness.host() == Graph::complete(4));
    CHECK(verify_k_rainbow(witness, 2).ok);

    const json nf = json::parse(crx_outcome_json(crx_exact(Graph(3, {{0, 1}}), 1), 1));
    CHECK(nf.at("error") == "not_in_Fk");
    CHECK(nf.at("witness_subset") == json::array({1}));

    const json above = json::parse(crx_outcome_json(crx_exact(Graph::complete(5), 3, 3), 3));
    CHECK(above.at("error") == "above_cap");
    CHECK(above.at("upper") == 3);
}

TEST_CASE("sidecar JSON structure") {
    const Graph g = Graph::complete(3);
    const ReductionInstance inst = reduce_vc_to_crx2_le4(g);
    const json doc = json::parse(instance_sidecar_json(inst));
    CHECK(doc.at("source").at("problem") == "vertex-colouring");
    CHECK(doc.at("source").at("l") == 4);
    CHECK(parse_graph(doc.at("source").at("graph").get<std::string>()) == g);
    CHECK(doc.at("base_colouring").is_null());
    CHECK(doc.at("roles").size() == static_cast<std::size_t>(inst.graph.order()));
    CHECK(doc.at("edge_classes").size() == static_cast<std::size_t>(inst.graph.edge_count()));

    // vertex 1 is an original with 1-indexed params
    CHECK(doc.at("roles").at("1").at("tag") == "original");
    CHECK(doc.at("roles").at("1").at("params") == json::array({1}));

    // every class key is "<u>-<v>" with u < v, 1-indexed
    for (auto it = doc.at("edge_classes").begin(); it != doc.at("edge_classes").end(); ++it) {
        const auto dash = it.key().find('-');
        REQUIRE(dash != std::string::npos);
        const int u = std::stoi(it.key().substr(0, dash));
        const int v = std::stoi(it.key().substr(dash + 1));
        CHECK(u >= 1);
        CHECK(u < v);
        CHECK(v <= inst.graph.order());
    }
}

TEST_CASE("role tag names round trip") {
    for (RoleTag tag : {RoleTag::original, RoleTag::hub, RoleTag::path_aux, RoleTag::edge_aux,
                        RoleTag::wedge, RoleTag::extra_v, RoleTag::s_hat, RoleTag::t_hat,
                        RoleTag::s_orig, RoleTag::t_orig, RoleTag::ladder, RoleTag::bridge,
                        RoleTag::apex, RoleTag::u_aux, RoleTag::w_aux})
        CHECK(role_tag_from_name(role_tag_name(tag)) == tag);
    CHECK_THROWS_AS(role_tag_from_name("nonsense"), std::invalid_argument);
}

TEST_CASE("serialization is byte-stable") {
    test::Rng rng(51);
    const Graph g = Graph::random(5, 0.5, rng.next());
    const EdgeColouring c = test::random_colouring(g, 3, rng);
    const ReductionInstance inst = reduce_kpathconn_to_kverify(g, c, 2);
    CHECK(instance_sidecar_json(inst) == instance_sidecar_json(inst));
    CHECK(write_graph(g) == write_graph(parse_graph(write_graph(g))));
    const Verdict v = verify_k_rainbow(*inst.base_colouring, 2);
    CHECK(verdict_json(v) == verdict_json(v));
}
