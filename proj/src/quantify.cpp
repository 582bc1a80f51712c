#include "nondet_agg/quantify.hpp"

#include "nondet_agg/carrier.hpp"
#include "nondet_agg/error.hpp"
#include "nondet_agg/parallel.hpp"

namespace nda {

std::size_t domain_size(const std::vector<std::size_t>& dims) {
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) return 0;
    if (total > kMaxInstances / d) {
      throw UsageError("quantification domain exceeds " + std::to_string(kMaxInstances) +
                       " instances; lower the bounds");
    }
    total *= d;
  }
  return total;
}

Instance decode(std::size_t flat, const std::vector<std::size_t>& dims) {
  Instance idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = flat % dims[k];
    flat /= dims[k];
  }
  return idx;
}

std::size_t count_sequences(std::size_t n, std::size_t max_count) { return count_lists(n, max_count); }

std::vector<std::size_t> decode_sequence(std::size_t flat, std::size_t n, std::size_t max_count) {
  std::size_t level = 1;
  for (std::size_t len = 0; len <= max_count; ++len) {
    if (flat < level) {
      std::vector<std::size_t> out(len);
      for (std::size_t k = len; k-- > 0;) {
        out[k] = flat % n;
        flat /= n;
      }
      return out;
    }
    flat -= level;
    level *= n;
  }
  throw UsageError("sequence index out of range");
}

CheckRecord quantify(std::string id, std::string anchor, const std::vector<std::size_t>& dims,
                     const InstanceCheck& check) {
  const std::size_t n = domain_size(dims);
  CheckRecord rec;
  rec.id = std::move(id);
  rec.anchor = std::move(anchor);
  auto first = find_first(n, [&](std::size_t i) { return check(decode(i, dims)).has_value(); });
  if (!first) {
    rec.verdict = Verdict::Pass;
    rec.instances = n;
    rec.detail = "holds on all " + std::to_string(n) + " instances";
    return rec;
  }
  rec.verdict = Verdict::Fail;
  rec.instances = *first + 1;
  rec.witnesses = *check(decode(*first, dims));
  rec.detail = "first counterexample at instance " + std::to_string(*first + 1) + " of " + std::to_string(n);
  return rec;
}

}  // namespace nda
