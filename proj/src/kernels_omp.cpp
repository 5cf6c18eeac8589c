#include <omp.h>

#include <algorithm>

#include "gotzmann/kernels.hpp"

namespace gotzmann::parallel {

std::vector<Mask> select(const SubsetSpace& space, const MaskPredicate& keep) {
  const std::uint64_t count = space.count();
  if (count == 0) return {};
  // Several chunks per thread so uneven predicate cost still balances.
  const std::uint64_t chunks =
      std::min<std::uint64_t>(count, static_cast<std::uint64_t>(omp_get_max_threads()) * 8);
  const std::uint64_t chunk_len = (count + chunks - 1) / chunks;
  std::vector<std::vector<Mask>> partial(chunks);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk_len;
    const std::uint64_t end = std::min(count, begin + chunk_len);
    if (begin >= end) continue;
    auto& local = partial[static_cast<std::size_t>(c)];
    Mask m = space.at(begin);
    for (std::uint64_t rank = begin;; ++rank) {
      if (keep(m)) local.push_back(m);
      if (rank + 1 == end) break;
      m = space.next(m, rank);
    }
  }

  // Chunks are contiguous rank ranges, so concatenation preserves the order.
  std::vector<Mask> out;
  for (auto& local : partial) out.insert(out.end(), local.begin(), local.end());
  return out;
}

}  // namespace gotzmann::parallel
