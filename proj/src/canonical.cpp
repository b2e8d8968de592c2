#include "wrg/canonical.hpp"

#include "wrg/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace wrg {

std::string CanonicalCode::hex() const
{
	static constexpr char digits[] = "0123456789abcdef";
	std::string out;
	out.reserve(bytes_.size() * 2);
	for (auto b : bytes_) {
		out.push_back(digits[b >> 4]);
		out.push_back(digits[b & 15]);
	}
	return out;
}

CanonicalCode CanonicalCode::from_hex(const std::string& hex)
{
	if (hex.size() % 2 != 0) throw std::invalid_argument("canonical code hex has odd length");
	auto nibble = [](char c) -> int {
		if (c >= '0' && c <= '9') return c - '0';
		if (c >= 'a' && c <= 'f') return c - 'a' + 10;
		if (c >= 'A' && c <= 'F') return c - 'A' + 10;
		throw std::invalid_argument("bad hex digit in canonical code");
	};
	std::vector<std::uint8_t> bytes;
	for (std::size_t i = 0; i < hex.size(); i += 2)
		bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
	return CanonicalCode(std::move(bytes));
}

Graph CanonicalCode::graph() const
{
	const int n = order();
	Graph g(n);
	std::size_t bit = 0;
	for (int p = 1; p < n; ++p) {
		for (int i = 0; i < p; ++i, ++bit) {
			std::size_t byte = 1 + bit / 8;
			if (byte >= bytes_.size()) throw std::invalid_argument("truncated canonical code");
			if ((bytes_[byte] >> (7 - bit % 8)) & 1U) g.add_edge(i, p);
		}
	}
	return g;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept
{
	std::size_t h = 1469598103934665603ULL;
	for (auto b : c.bytes()) {
		h ^= b;
		h *= 1099511628211ULL;
	}
	return h;
}

std::vector<int> refine_colours(const Graph& g)
{
	const int n = g.order();
	std::vector<int> colour(n);
	for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
	// rank initial degrees so colours are dense
	{
		auto sorted = colour;
		std::sort(sorted.begin(), sorted.end());
		sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
		for (auto& c : colour) c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
	}
	int classes = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
	while (true) {
		std::vector<std::vector<int>> sig(n);
		for (int v = 0; v < n; ++v) {
			sig[v].push_back(colour[v]);
			std::vector<int> nb;
			for (int u : g.neighbors(v)) nb.push_back(colour[u]);
			std::sort(nb.begin(), nb.end());
			sig[v].insert(sig[v].end(), nb.begin(), nb.end());
		}
		auto distinct = sig;
		std::sort(distinct.begin(), distinct.end());
		distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
		for (int v = 0; v < n; ++v)
			colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
		int next = static_cast<int>(distinct.size());
		if (next == classes) break;
		classes = next;
	}
	return colour;
}

namespace {

class CanonicalSearch
{
public:
	explicit CanonicalSearch(const Graph& g)
		: g_(g)
		, n_(g.order())
		, colour_(refine_colours(g))
		, order_(n_)
		, rows_(n_)
		, best_(n_)
	{
		slot_colour_ = colour_;
		std::sort(slot_colour_.begin(), slot_colour_.end());
		twin_.assign(n_, 0);
		for (int u = 0; u < n_; ++u)
			for (int v = 0; v < n_; ++v) {
				if (u == v || colour_[u] != colour_[v]) continue;
				std::uint64_t mu = g.row_mask(u) & ~(std::uint64_t{1} << v);
				std::uint64_t mv = g.row_mask(v) & ~(std::uint64_t{1} << u);
				if (mu == mv) twin_[u] |= std::uint64_t{1} << v;
			}
	}

	CanonicalCode run()
	{
		descend(0, 0, false);
		std::vector<std::uint8_t> bytes(1 + (pair_count(n_) + 7) / 8, 0);
		bytes[0] = static_cast<std::uint8_t>(n_);
		std::size_t bit = 0;
		for (int p = 1; p < n_; ++p)
			for (int i = 0; i < p; ++i, ++bit)
				if ((best_[p] >> (p - 1 - i)) & 1U) bytes[1 + bit / 8] |= static_cast<std::uint8_t>(1U << (7 - bit % 8));
		return CanonicalCode(std::move(bytes));
	}

private:
	void descend(int p, std::uint64_t used, bool greater)
	{
		if (p == n_) {
			if (greater || !have_best_) {
				best_ = rows_;
				have_best_ = true;
				++updates_;
			}
			return;
		}
		const std::uint64_t updates_at_entry = updates_;
		std::uint64_t tried = 0;
		for (int v = 0; v < n_; ++v) {
			// a leaf below this node replaced best_, so our prefix now equals it
			if (updates_ != updates_at_entry) greater = false;
			if ((used >> v) & 1U) continue;
			if (colour_[v] != slot_colour_[p]) continue;
			if (twin_[v] & tried) continue;
			tried |= std::uint64_t{1} << v;
			std::uint64_t row = 0;
			std::uint64_t adj = g_.row_mask(v);
			for (int i = 0; i < p; ++i) row = (row << 1) | ((adj >> order_[i]) & 1U);
			bool next_greater = greater || !have_best_;
			if (!next_greater) {
				if (row < best_[p]) continue;
				if (row > best_[p]) next_greater = true;
			}
			order_[p] = v;
			rows_[p] = row;
			descend(p + 1, used | (std::uint64_t{1} << v), next_greater);
		}
	}

	const Graph& g_;
	int n_;
	std::vector<int> colour_;
	std::vector<int> slot_colour_;
	std::vector<std::uint64_t> twin_;
	std::vector<int> order_;
	std::vector<std::uint64_t> rows_;
	std::vector<std::uint64_t> best_;
	bool have_best_ = false;
	std::uint64_t updates_ = 0;
};

} // namespace

CanonicalCode canonicalize(const Graph& g, int max_order)
{
	if (g.order() > max_order || g.order() > 64)
		throw ResourceError("canonicalize: order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(max_order));
	return CanonicalSearch(g).run();
}

std::uint64_t automorphism_count(const Graph& g, int max_order)
{
	const int n = g.order();
	if (n > max_order || n > 64)
		throw ResourceError("automorphism_count: order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order));
	auto colour = refine_colours(g);
	std::vector<int> image(n, -1);
	std::uint64_t count = 0;
	auto extend = [&](auto&& self, int v, std::uint64_t used) -> void {
		if (v == n) {
			++count;
			return;
		}
		for (int w = 0; w < n; ++w) {
			if ((used >> w) & 1U || colour[w] != colour[v]) continue;
			bool ok = true;
			for (int u = 0; u < v && ok; ++u)
				ok = (((g.row_mask(v) >> u) & 1U) == ((g.row_mask(w) >> image[u]) & 1U));
			if (!ok) continue;
			image[v] = w;
			self(self, v + 1, used | (std::uint64_t{1} << w));
		}
	};
	extend(extend, 0, 0);
	return count;
}

bool isomorphic(const Graph& g, const Graph& h, int max_order)
{
	if (g.order() != h.order() || g.size() != h.size()) return false;
	return canonicalize(g, max_order) == canonicalize(h, max_order);
}

} // namespace wrg
