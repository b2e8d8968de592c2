#include "support.hpp"

#include "wrg/errors.hpp"
#include "wrg/families.hpp"
#include "wrg/structure.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace wrg;

namespace {

GraphFamily ex_p3() { return GraphFamily::excluding("ex-p3", {path_graph(3)}); }
GraphFamily ex_k4() { return GraphFamily::excluding("ex-k4", {complete_graph(4)}); }
GraphFamily ex_c3_c4() { return GraphFamily::excluding("ex-c3+c4", {disjoint_union(cycle_graph(3), cycle_graph(4))}); }

} // namespace

TEST_CASE("membership")
{
	std::mt19937_64 rng(7);
	auto forests = GraphFamily::forests();
	for (int i = 0; i < 20; ++i) CHECK(forests.member(testing::random_tree(rng, 12)));
	CHECK_FALSE(ex_k4().member(complete_graph(4)));
	CHECK_FALSE(GraphFamily::disjoint_cycles(1).member(repeat_union(cycle_graph(3), 2)));
	CHECK(GraphFamily::disjoint_cycles(1).member(complete_graph(4)));
	CHECK(GraphFamily::planar().member(complete_graph(4)));
	CHECK_FALSE(GraphFamily::planar().member(complete_bipartite(3, 3)));
	CHECK(GraphFamily::trees().member(Graph(0)));
	CHECK_FALSE(GraphFamily::trees().member(Graph(2)));
	CHECK(GraphFamily::edgeless().member(Graph(4)));
	CHECK_FALSE(GraphFamily::edgeless().member(path_graph(2)));
	CHECK(GraphFamily::all_graphs().member(complete_graph(7)));
}

TEST_CASE("built-in predicates agree with their excluded minors")
{
	std::mt19937_64 rng(13);
	const GraphFamily families[] = {GraphFamily::forests(), GraphFamily::series_parallel(), GraphFamily::planar(),
		GraphFamily::edgeless()};
	for (const auto& f : families)
		for (int i = 0; i < 80; ++i) {
			Graph g = testing::any_graph(rng, 1, 7);
			CHECK(f.member(g) == f.member_by_minors(g));
		}
}

TEST_CASE("families by name and from JSON")
{
	CHECK(GraphFamily::builtin("series-parallel").predicate() == GraphFamily::Predicate::no_k4);
	CHECK(GraphFamily::builtin("ex-k-disjoint-cycles:2").excluded_minors().front().order() == 9);
	CHECK_THROWS(GraphFamily::builtin("nope"));
	CHECK_THROWS(GraphFamily::builtin("ex-k-disjoint-cycles:x"));

	auto dir = std::filesystem::temp_directory_path() / "wrg_family_test";
	std::filesystem::create_directories(dir);
	{
		std::ofstream(dir / "k4.txt") << "4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
		std::ofstream(dir / "fam.json") << R"({"name": "sp", "excluded_minors": ["k4.txt", {"n": 3, "edges": []}],
			"flags": {"bridge_addable": true, "trimmable": "unknown"}})";
	}
	auto f = GraphFamily::resolve((dir / "fam.json").string());
	CHECK(f.name() == "sp");
	REQUIRE(f.excluded_minors().size() == 2);
	CHECK(f.excluded_minors()[0] == complete_graph(4));
	CHECK(f.flags().bridge_addable == Declared::yes);
	CHECK(f.flags().trimmable == Declared::unknown);
	CHECK(f.member(Graph(2)));
	CHECK_FALSE(f.member(Graph(3)));
	auto j = to_json(f);
	CHECK(j.at("name") == "sp");
	CHECK_THROWS(GraphFamily::from_json(nlohmann::json{{"name", "x"}, {"excluded_minors", {"missing.txt"}}}, dir.string()));
	std::filesystem::remove_all(dir);
}

TEST_CASE("bridge-addability")
{
	CHECK(verify_bridge_addable(GraphFamily::forests(), 6).holds);
	auto r = verify_bridge_addable(ex_p3(), 4);
	CHECK_FALSE(r.holds);
	REQUIRE(r.counterexample);
	// least counterexample: an edge and an isolated vertex, joined into P3
	CHECK(r.counterexample->order() == 3);
	CHECK(r.counterexample->size() == 1);
	REQUIRE(r.edge);
	Graph joined = *r.counterexample;
	joined.add_edge(r.edge->first, r.edge->second);
	CHECK(ex_p3().member(*r.counterexample));
	CHECK_FALSE(ex_p3().member(joined));
	// two disjoint edges fail the same way once joined
	Graph two = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
	CHECK(ex_p3().member(two));
	two.add_edge(1, 2);
	CHECK_FALSE(ex_p3().member(two));
	CHECK(verify_bridge_addable(ex_k4(), 6, 4).holds);
	CHECK_THROWS(verify_bridge_addable(GraphFamily::forests(), 8));
}

TEST_CASE("decomposability")
{
	CHECK(verify_decomposable(GraphFamily::forests(), 6).holds);
	auto r = verify_decomposable(GraphFamily::disjoint_cycles(1), 6);
	CHECK_FALSE(r.holds);
	REQUIRE(r.counterexample);
	CHECK(isomorphic(*r.counterexample, repeat_union(cycle_graph(3), 2)));
	CHECK(verify_decomposable(GraphFamily::planar(), 6, 4).holds);
}

TEST_CASE("trimmability")
{
	auto forests = verify_trimmable(GraphFamily::forests(), 6);
	CHECK(forests.trimmable());
	CHECK(forests.shortcut == true);
	auto p3 = verify_trimmable(ex_p3(), 5);
	CHECK(p3.shortcut == false);
	auto k4 = verify_trimmable(ex_k4(), 6);
	CHECK(k4.trimmable());
	CHECK(k4.agree);
	CHECK(excluded_minors_two_connected(ex_k4()));
	CHECK_FALSE(excluded_minors_two_connected(GraphFamily::disjoint_cycles(1)));
}

TEST_CASE("limited and freely addable graphs")
{
	auto c3 = limited_at_scale(cycle_graph(3), GraphFamily::disjoint_cycles(1), 4);
	CHECK(c3.limited_with_k == 2);
	CHECK_FALSE(limited_at_scale(path_graph(2), GraphFamily::forests(), 4).limited_with_k);
	CHECK_FALSE(limited_at_scale(cycle_graph(3), GraphFamily::planar(), 3).limited_with_k);

	for (const char* name : {"forests", "planar", "series-parallel", "all", "edgeless"})
		CHECK(freely_addable_at_scale(Graph(1), GraphFamily::builtin(name), 5).holds);
	auto r = freely_addable_at_scale(cycle_graph(3), GraphFamily::disjoint_cycles(1), 3);
	CHECK_FALSE(r.holds);
	REQUIRE(r.counterexample);
	CHECK(isomorphic(*r.counterexample, cycle_graph(3)));
	CHECK(freely_addable_at_scale(star_graph(3), GraphFamily::forests(), 5).holds);
}

TEST_CASE("dichotomy scans")
{
	auto forests = dichotomy_scan(GraphFamily::forests(), 5, 3);
	CHECK(forests.conflict_free);
	CHECK(forests.entries.size() == 1 + 2 + 3 + 6 + 10); // unlabelled forests with 1..5 vertices
	for (const auto& e : forests.entries) CHECK(e.verdict == Dichotomy::freely_addable);

	auto one_cycle = dichotomy_scan(GraphFamily::disjoint_cycles(1), 4, 3);
	CHECK(one_cycle.conflict_free);
	for (const auto& e : one_cycle.entries) {
		bool acyclic = cyclomatic_number(e.representative) == 0;
		CHECK(e.verdict == (acyclic ? Dichotomy::freely_addable : Dichotomy::limited));
		if (isomorphic(e.representative, cycle_graph(3))) CHECK(e.limited_with_k == 2);
	}

	auto mixed = dichotomy_scan(ex_c3_c4(), 4, 3);
	bool seen = false;
	for (const auto& e : mixed.entries)
		if (isomorphic(e.representative, cycle_graph(3))) {
			seen = true;
			CHECK(e.verdict == Dichotomy::undetermined);
		}
	CHECK(seen);
}

TEST_CASE("unlabelled members")
{
	auto all = unlabelled_members(GraphFamily::all_graphs(), 5);
	const std::size_t counts[] = {1, 1, 2, 4, 11, 34};
	for (int n = 0; n <= 5; ++n) CHECK(all[n].size() == counts[n]);
	auto connected = unlabelled_graphs(6, [](const Graph&) { return true; }, true);
	const std::size_t conn[] = {1, 1, 1, 2, 6, 21, 112};
	for (int n = 0; n <= 6; ++n) CHECK(connected[n].size() == conn[n]);
	auto trees = unlabelled_members(GraphFamily::trees(), 7);
	const std::size_t tree_counts[] = {1, 1, 1, 1, 2, 3, 6, 11};
	for (int n = 0; n <= 7; ++n) CHECK(trees[n].size() == tree_counts[n]);
}
