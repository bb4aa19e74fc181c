#include <algorithm>
#include <bit>

#include "ipdyn/errors.hpp"
#include "ipdyn/ipsets.hpp"

namespace ipdyn {

std::string format_index_set(IndexSet alpha) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; alpha != 0; ++i, alpha >>= 1) {
    if (alpha & 1U) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

bool precedes_strictly(IndexSet alpha, IndexSet beta) {
  if (alpha == 0 || beta == 0) return false;
  const int max_alpha = 31 - std::countl_zero(alpha);
  const int min_beta = std::countr_zero(beta);
  return max_alpha < min_beta;
}

FSTruncation FSTruncation::enumerate(std::vector<std::int64_t> generators,
                                     std::size_t max_generators) {
  if (generators.empty()) fail(ErrorCode::InvalidArgument, "an FS truncation needs generators");
  const std::size_t bound = std::min<std::size_t>(max_generators, 30);
  if (generators.size() > bound) {
    fail(ErrorCode::TruncationTooLarge, std::to_string(generators.size()) +
                                            " generators exceed the bound of " +
                                            std::to_string(bound));
  }
  FSTruncation fs;
  fs.generators_ = std::move(generators);
  const std::size_t count = (std::size_t{1} << fs.generators_.size()) - 1;
  fs.table_.resize(count);
  // n_alpha = n_{alpha minus lowest bit} + n_{lowest bit}
  for (std::size_t alpha = 1; alpha <= count; ++alpha) {
    const std::size_t low = alpha & (~alpha + 1);
    const std::size_t rest = alpha ^ low;
    const std::int64_t g = fs.generators_[static_cast<std::size_t>(std::countr_zero(low))];
    fs.table_[alpha - 1] = rest == 0 ? g : fs.table_[rest - 1] + g;
  }
  return fs;
}

std::int64_t FSTruncation::sum(IndexSet alpha) const {
  if (alpha == 0 || alpha > table_.size()) {
    fail(ErrorCode::IndexOutOfRange, format_index_set(alpha) + " is not a nonempty subset of {1.." +
                                         std::to_string(k()) + "}");
  }
  return table_[alpha - 1];
}

std::vector<std::int64_t> FSTruncation::values() const {
  std::vector<std::int64_t> out = table_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string FSTruncation::describe() const {
  std::string out = "FS(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(generators_[i]);
  }
  return out + ")";
}

IPRingTruncation::IPRingTruncation(std::vector<IndexSet> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) fail(ErrorCode::InvalidArgument, "an IP-ring truncation needs blocks");
  if (blocks_.size() > 30) fail(ErrorCode::TruncationTooLarge, "more than 30 blocks");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] == 0) fail(ErrorCode::InvalidArgument, "empty block");
    if (i > 0 && !precedes_strictly(blocks_[i - 1], blocks_[i])) {
      fail(ErrorCode::InvalidArgument, "blocks " + format_index_set(blocks_[i - 1]) + " and " +
                                           format_index_set(blocks_[i]) + " are not increasing");
    }
  }
}

std::vector<IndexSet> IPRingTruncation::unions() const {
  const std::size_t count = (std::size_t{1} << blocks_.size()) - 1;
  std::vector<IndexSet> out(count);
  for (std::size_t beta = 1; beta <= count; ++beta) {
    IndexSet u = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (beta & (std::size_t{1} << i)) u |= blocks_[i];
    }
    out[beta - 1] = u;
  }
  return out;
}

FSTruncation restrict_to_ring(const FSTruncation& fs, const IPRingTruncation& ring) {
  std::vector<std::int64_t> block_sums;
  block_sums.reserve(ring.blocks().size());
  for (IndexSet block : ring.blocks()) {
    if (static_cast<std::size_t>(std::bit_width(block)) > fs.k()) {
      fail(ErrorCode::IndexOutOfRange, "block " + format_index_set(block) + " exceeds " +
                                           std::to_string(fs.k()) + " generators");
    }
    block_sums.push_back(fs.sum(block));
  }
  return FSTruncation::enumerate(std::move(block_sums), 30);
}

std::optional<IPWitness> ip_witness(const MembershipPredicate& member, const FSTruncation& fs) {
  for (IndexSet alpha = 1; alpha <= fs.size(); ++alpha) {
    const std::int64_t v = fs.sum(alpha);
    if (member(v)) return IPWitness{alpha, v};
  }
  return std::nullopt;
}

}  // namespace ipdyn
