#pragma once

#include "wrg/graph.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wrg {

inline constexpr int kDefaultCanonicalCap = 10;
inline constexpr int kDefaultAutomorphismCap = 9;

/// Byte string identifying an unlabelled graph: the order, followed by the
/// upper-triangle adjacency bits of the canonical relabelling.
class CanonicalCode
{
public:
	CanonicalCode() = default;
	explicit CanonicalCode(std::vector<std::uint8_t> bytes)
		: bytes_(std::move(bytes))
	{
	}

	const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
	int order() const noexcept { return bytes_.empty() ? 0 : bytes_.front(); }

	std::string hex() const;
	static CanonicalCode from_hex(const std::string& hex);
	/// The canonical relabelling this code encodes.
	Graph graph() const;

	auto operator<=>(const CanonicalCode&) const = default;
	bool operator==(const CanonicalCode&) const = default;

private:
	std::vector<std::uint8_t> bytes_;
};

struct CanonicalCodeHash
{
	std::size_t operator()(const CanonicalCode& c) const noexcept;
};

/// Isomorphism-invariant code. Vertices are first split by colour
/// refinement; a branch-and-bound over refinement-respecting orderings then
/// picks the lexicographically greatest adjacency string.
CanonicalCode canonicalize(const Graph& g, int max_order = kDefaultCanonicalCap);

/// |Aut(g)| by backtracking over refinement-respecting bijections.
std::uint64_t automorphism_count(const Graph& g, int max_order = kDefaultAutomorphismCap);

bool isomorphic(const Graph& g, const Graph& h, int max_order = kDefaultCanonicalCap);

/// Stable colour-refinement classes (ranks are isomorphism invariant).
std::vector<int> refine_colours(const Graph& g);

} // namespace wrg
