#include "poramsey/poset_enum.hpp"

#include "poramsey/error.hpp"
#include "poramsey/parallel.hpp"

#include <array>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

namespace poramsey {

namespace {

constexpr std::size_t shard_prefix_order = 4;

// Strict order as per-element masks of elements below / above.
struct StrictOrder {
    std::size_t n = 0;
    std::array<std::uint32_t, max_enumerable_order> below{};
    std::array<std::uint32_t, max_enumerable_order> above{};
};

void check_order(std::size_t order)
{
    if (order > max_enumerable_order)
        throw Error(Errc::CapExceeded,
            "poset enumeration order " + std::to_string(order) + " exceeds " + std::to_string(max_enumerable_order));
}

bool is_ideal(const StrictOrder & s, std::uint32_t set)
{
    for (auto rest = set; rest; rest &= rest - 1)
        if (s.below[std::countr_zero(rest)] & ~set)
            return false;
    return true;
}

bool is_filter(const StrictOrder & s, std::uint32_t set)
{
    for (auto rest = set; rest; rest &= rest - 1)
        if (s.above[std::countr_zero(rest)] & ~set)
            return false;
    return true;
}

template <typename Visit>
void extend(StrictOrder & s, std::size_t target, Visit & visit)
{
    if (s.n == target) {
        visit(s);
        return;
    }

    const auto k = s.n;
    const std::uint32_t bit = std::uint32_t{1} << k;
    const std::uint32_t all = bit - 1;
    for (std::uint32_t down = 0; down <= all; ++down) {
        if (! is_ideal(s, down))
            continue;
        std::uint32_t candidates = all;
        for (auto rest = down; rest; rest &= rest - 1)
            candidates &= s.above[std::countr_zero(rest)];

        for (std::uint32_t up = candidates;; up = (up - 1) & candidates) {
            if (is_filter(s, up)) {
                s.below[k] = down;
                s.above[k] = up;
                for (auto rest = down; rest; rest &= rest - 1)
                    s.above[std::countr_zero(rest)] |= bit;
                for (auto rest = up; rest; rest &= rest - 1)
                    s.below[std::countr_zero(rest)] |= bit;
                s.n = k + 1;

                extend(s, target, visit);

                s.n = k;
                for (auto rest = down; rest; rest &= rest - 1)
                    s.above[std::countr_zero(rest)] &= ~bit;
                for (auto rest = up; rest; rest &= rest - 1)
                    s.below[std::countr_zero(rest)] &= ~bit;
                s.below[k] = 0;
                s.above[k] = 0;
            }
            if (up == 0)
                break;
        }
    }
}

std::vector<StrictOrder> prefixes(std::size_t order)
{
    std::vector<StrictOrder> out;
    StrictOrder start;
    auto collect = [&](const StrictOrder & s) { out.push_back(s); };
    extend(start, std::min(order, shard_prefix_order), collect);
    return out;
}

Poset to_poset(const StrictOrder & s)
{
    BitMatrix leq(s.n);
    for (std::size_t a = 0; a < s.n; ++a) {
        leq.set(a, a);
        for (auto rest = s.above[a]; rest; rest &= rest - 1)
            leq.set(a, static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return Poset::from_trusted(std::move(leq));
}

} // namespace

std::size_t poset_shard_count(std::size_t order)
{
    check_order(order);
    return prefixes(order).size();
}

void for_each_poset_in_shard(std::size_t order, std::size_t shard, const std::function<void(const Poset &)> & visit)
{
    check_order(order);
    auto starts = prefixes(order);
    if (shard >= starts.size())
        throw Error(Errc::InvalidArgument, "shard " + std::to_string(shard) + " of " + std::to_string(starts.size()));
    auto s = starts[shard];
    auto emit = [&](const StrictOrder & leaf) { visit(to_poset(leaf)); };
    extend(s, order, emit);
}

void for_each_labeled_poset(std::size_t order, const std::function<void(const Poset &)> & visit)
{
    check_order(order);
    StrictOrder s;
    auto emit = [&](const StrictOrder & leaf) { visit(to_poset(leaf)); };
    extend(s, order, emit);
}

std::uint64_t count_labeled_posets(std::size_t order, unsigned workers)
{
    check_order(order);
    auto starts = prefixes(order);
    auto counts = map_shards<std::uint64_t>(starts.size(), workers, [&](std::size_t i) {
        std::uint64_t c = 0;
        auto s = starts[i];
        auto tally = [&](const StrictOrder &) { ++c; };
        extend(s, order, tally);
        return c;
    });
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

} // namespace poramsey
