#pragma once

#include "poramsey/poset.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>

namespace poramsey {

/// Hard ceiling on enumeration order; counts beyond it are astronomically
/// out of reach anyway.
inline constexpr std::size_t max_enumerable_order = 16;

/// Labeled posets on {0, ..., order-1} are generated by inserting elements in
/// index order: element k picks a down-set D and an up-set U of the order on
/// {0, ..., k-1} with D an ideal, U a filter and every element of D below
/// every element of U. Each labeled poset arises exactly once.
///
/// Shards are the distinct posets on the first min(order, 4) elements, in
/// generation order; shard i enumerates every extension of prefix i.
std::size_t poset_shard_count(std::size_t order);

void for_each_poset_in_shard(std::size_t order, std::size_t shard, const std::function<void(const Poset &)> & visit);
void for_each_labeled_poset(std::size_t order, const std::function<void(const Poset &)> & visit);

/// Counts without materialising Poset values. Order 0 counts the empty order.
std::uint64_t count_labeled_posets(std::size_t order, unsigned workers = 1);

} // namespace poramsey
