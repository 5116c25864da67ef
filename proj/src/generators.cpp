#include "kfrob/generators.hpp"

#include "kfrob/errors.hpp"

namespace kfrob {

long ClassGenerator::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

SplitClass ClassGenerator::split_class(const RingDescriptor& ring, int max_terms,
                                       int max_exp, int max_mult,
                                       bool effective) {
  SplitClass out(ring);
  const long terms = uniform(1, max_terms);
  for (long i = 0; i < terms; ++i) {
    std::vector<int> exps;
    for (std::size_t j = 0; j < ring.factors.size(); ++j) {
      exps.push_back(static_cast<int>(uniform(-max_exp, max_exp)));
    }
    const int chi =
        ring.equivariant() ? static_cast<int>(uniform(0, ring.characters() - 1)) : 0;
    long m = uniform(1, max_mult);
    if (!effective && uniform(0, 1) == 1) m = -m;
    out.add(std::move(exps), chi, m);
  }
  if (out.terms().empty()) out.add(std::vector<int>(ring.factors.size(), 0), 0, 1);
  return out;
}

SplitClass ClassGenerator::effective_of_rank(const RingDescriptor& ring,
                                             long rank, int max_exp) {
  SplitClass out(ring);
  for (long i = 0; i < rank; ++i) {
    std::vector<int> exps;
    for (std::size_t j = 0; j < ring.factors.size(); ++j) {
      exps.push_back(static_cast<int>(uniform(-max_exp, max_exp)));
    }
    out.add(std::move(exps), 0, 1);
  }
  return out;
}

SplitClass ClassGenerator::perturb_by_relation(const SplitClass& x, int max_exp) {
  const auto& ring = x.ring();
  if (ring.factors.empty()) {
    throw InvalidArgument("a point has no relation to perturb by");
  }
  const auto j = static_cast<std::size_t>(
      uniform(0, static_cast<long>(ring.factors.size()) - 1));
  const int n = ring.factors[j];
  std::vector<int> shift;
  for (std::size_t i = 0; i < ring.factors.size(); ++i) {
    shift.push_back(static_cast<int>(uniform(-max_exp, max_exp)));
  }
  long scale = uniform(1, 2);
  if (uniform(0, 1) == 1) scale = -scale;
  SplitClass out = x;
  // (h_j - 1)^{n+1} = sum_i C(n+1, i) (-1)^{n+1-i} h_j^i
  for (int i = 0; i <= n + 1; ++i) {
    std::vector<int> exps = shift;
    exps[j] += i;
    const long sign = ((n + 1 - i) % 2 == 0) ? 1 : -1;
    out.add(std::move(exps), 0, scale * sign * binomial(n + 1, i).get_si());
  }
  return out;
}

}  // namespace kfrob
