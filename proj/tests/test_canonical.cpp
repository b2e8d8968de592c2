#include "support.hpp"

#include "wrg/canonical.hpp"
#include "wrg/errors.hpp"
#include "wrg/structure.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace wrg;

TEST_CASE("automorphism counts of small graphs")
{
	CHECK(automorphism_count(Graph(1)) == 1);
	CHECK(automorphism_count(cycle_graph(3)) == 6);
	CHECK(automorphism_count(path_graph(3)) == 2);
	CHECK(automorphism_count(Graph(0)) == 1);
	CHECK(automorphism_count(complete_bipartite(3, 3)) == 72);
	CHECK(automorphism_count(cycle_graph(7)) == 14);
	CHECK(automorphism_count(Graph(9)) == 362880);
	CHECK_THROWS_AS(automorphism_count(Graph(10)), ResourceError);
	CHECK_THROWS_AS(canonicalize(Graph(11)), ResourceError);
}

TEST_CASE("codes separate and identify")
{
	CHECK(canonicalize(path_graph(3)) != canonicalize(cycle_graph(3)));
	CHECK(canonicalize(Graph(2)) != canonicalize(path_graph(2)));
	CHECK(canonicalize(Graph(0)) != canonicalize(Graph(1)));
	auto code = canonicalize(star_graph(4));
	CHECK(CanonicalCode::from_hex(code.hex()) == code);
	CHECK(canonicalize(code.graph()) == code);
	CHECK(code.order() == 5);
}

TEST_CASE("relabellings of a tree share a code")
{
	std::mt19937_64 rng(5);
	for (int i = 0; i < 50; ++i) {
		Graph t = testing::random_tree(rng, 9);
		Graph u = testing::relabel(t, testing::random_permutation(rng, 9));
		CHECK(canonicalize(t) == canonicalize(u));
	}
}

TEST_CASE("eleven graphs on four vertices")
{
	std::set<CanonicalCode> codes;
	for (std::uint64_t m = 0; m < 64; ++m) codes.insert(canonicalize(Graph::from_edge_mask(4, m)));
	CHECK(codes.size() == 11);
}

TEST_CASE("unlabelled counts up to six vertices")
{
	// 1, 2, 4, 11, 34, 156 graphs on 1..6 vertices
	const std::size_t expected[] = {0, 1, 2, 4, 11, 34, 156};
	for (int n = 1; n <= 6; ++n) {
		std::set<CanonicalCode> codes;
		for (std::uint64_t m = 0; m < (1ull << pair_count(n)); ++m) codes.insert(canonicalize(Graph::from_edge_mask(n, m)));
		CHECK(codes.size() == expected[n]);
	}
}

TEST_CASE("orbit-stabiliser: aut times labelled copies is n!")
{
	for (int n = 1; n <= 6; ++n) {
		std::map<CanonicalCode, std::uint64_t> copies;
		std::map<CanonicalCode, Graph> sample;
		for (std::uint64_t m = 0; m < (1ull << pair_count(n)); ++m) {
			Graph g = Graph::from_edge_mask(n, m);
			auto c = canonicalize(g);
			++copies[c];
			sample.emplace(c, g);
		}
		std::uint64_t fact = 1;
		for (int i = 2; i <= n; ++i) fact *= i;
		for (const auto& [c, k] : copies) CHECK(automorphism_count(sample.at(c)) * k == fact);
	}
}

TEST_CASE("codes agree with the permutation oracle")
{
	std::mt19937_64 rng(17);
	for (int i = 0; i < 400; ++i) {
		Graph g = testing::any_graph(rng, 1, 7);
		// half the pairs are relabellings, the rest usually are not isomorphic
		Graph h = i % 2 ? testing::relabel(g, testing::random_permutation(rng, g.order()))
		                : testing::random_graph(rng, g.order(), static_cast<double>(g.size()) / std::max(1, pair_count(g.order())));
		bool same = testing::isomorphic_oracle(g, h);
		CHECK(isomorphic(g, h) == same);
		CHECK((canonicalize(g) == canonicalize(h)) == same);
	}
}

TEST_CASE("automorphisms agree with the permutation oracle")
{
	std::mt19937_64 rng(23);
	for (int i = 0; i < 150; ++i) {
		Graph g = testing::any_graph(rng, 1, 7);
		CHECK(automorphism_count(g) == testing::automorphisms_oracle(g));
	}
	// regular graphs defeat colour refinement
	CHECK(automorphism_count(cycle_graph(8)) == 16);
	Graph prism = disjoint_union(cycle_graph(3), cycle_graph(3));
	for (int i = 0; i < 3; ++i) prism.add_edge(i, i + 3);
	CHECK(automorphism_count(prism) == 12);
	Graph two_squares = disjoint_union(cycle_graph(4), cycle_graph(4));
	CHECK_FALSE(isomorphic(two_squares, cycle_graph(8)));
	CHECK(automorphism_count(two_squares) == 128);
}

TEST_CASE("colour refinement ranks are invariant")
{
	std::mt19937_64 rng(29);
	for (int i = 0; i < 50; ++i) {
		Graph g = testing::any_graph(rng, 2, 9);
		auto perm = testing::random_permutation(rng, g.order());
		auto a = refine_colours(g);
		auto b = refine_colours(testing::relabel(g, perm));
		for (int v = 0; v < g.order(); ++v) CHECK(a[v] == b[perm[v]]);
	}
}
