#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipdyn/numeric.hpp"

namespace ipdyn {

/// Nonempty finite index set alpha, bit i standing for generator i+1.
using IndexSet = std::uint32_t;

/// "{1,3}"
std::string format_index_set(IndexSet alpha);

/// max alpha < min beta.
bool precedes_strictly(IndexSet alpha, IndexSet beta);

/// All finite sums n_alpha over nonempty alpha of a generator list (repeats
/// allowed), tabulated by alpha.
class FSTruncation {
 public:
  static constexpr std::size_t kDefaultMaxGenerators = 20;

  /// Throws TruncationTooLarge when there are more than max_generators
  /// generators, InvalidArgument when there are none.
  static FSTruncation enumerate(std::vector<std::int64_t> generators,
                                std::size_t max_generators = kDefaultMaxGenerators);

  const std::vector<std::int64_t>& generators() const noexcept { return generators_; }
  std::size_t k() const noexcept { return generators_.size(); }
  /// 2^k - 1.
  std::size_t size() const noexcept { return table_.size(); }
  /// n_alpha; alpha must be a nonempty subset of {1..k}.
  std::int64_t sum(IndexSet alpha) const;
  /// Distinct values, ascending.
  std::vector<std::int64_t> values() const;

  /// "FS(1,3,9)"
  std::string describe() const;

 private:
  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> table_;  // table_[alpha - 1]
};

/// Blocks alpha_1 < alpha_2 < ... < alpha_m of generator indices.
class IPRingTruncation {
 public:
  /// Throws InvalidArgument unless each block is nonempty and
  /// max alpha_i < min alpha_{i+1}.
  explicit IPRingTruncation(std::vector<IndexSet> blocks);

  const std::vector<IndexSet>& blocks() const noexcept { return blocks_; }
  /// Every union over a nonempty beta of {1..m}; bit i of the position
  /// (beta - 1) selects block i+1.
  std::vector<IndexSet> unions() const;

 private:
  std::vector<IndexSet> blocks_;
};

/// The truncation generated by block sums n_{alpha_i}. Throws
/// IndexOutOfRange when a block mentions a generator beyond k.
FSTruncation restrict_to_ring(const FSTruncation& fs, const IPRingTruncation& ring);

struct IPWitness {
  IndexSet alpha = 0;
  std::int64_t value = 0;
};

using MembershipPredicate = std::function<bool(std::int64_t)>;

/// First alpha (ascending as an integer mask) with n_alpha in the set.
/// Absence says nothing about the infinite IP-set: it is evidence over this
/// truncation only.
std::optional<IPWitness> ip_witness(const MembershipPredicate& member, const FSTruncation& fs);

/// A subset of the integer interval [lo, hi].
class WindowSet {
 public:
  WindowSet(std::int64_t lo, std::int64_t hi, std::vector<std::int64_t> members);

  static WindowSet from_predicate(std::int64_t lo, std::int64_t hi,
                                  const MembershipPredicate& member);
  static WindowSet full(std::int64_t lo, std::int64_t hi);

  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }
  std::int64_t length() const noexcept { return hi_ - lo_ + 1; }
  const std::vector<std::int64_t>& members() const noexcept { return members_; }
  bool contains(std::int64_t n) const;
  MembershipPredicate predicate() const;

  friend bool operator==(const WindowSet&, const WindowSet&) = default;

 private:
  std::int64_t lo_;
  std::int64_t hi_;
  std::vector<std::int64_t> members_;  // sorted, distinct, inside [lo, hi]
};

/// Built-in predicates: "evens", "odds", "squares", "multiples:k",
/// "all". Throws InvalidArgument for unknown names.
MembershipPredicate catalog_predicate(std::string_view name);

/// One integer per line; blank lines and '#' comments are skipped. Values
/// outside [lo, hi] are rejected with ValidationError.
WindowSet parse_window_set_csv(std::string_view text, std::int64_t lo, std::int64_t hi);

struct Density {
  Rational upper;
  Rational lower;
};

/// Max and min of |S cap I| / L over all length-L intervals I inside the
/// window. Throws BadLength unless 1 <= L <= window length.
Density window_density(const WindowSet& set, std::int64_t length);

struct StructureThresholds {
  std::int64_t syndetic_gap = 10;  // gap bound accepted as "bounded"
  std::int64_t thick_run = 10;     // run length accepted as "long"
};

struct StructureReport {
  /// Smallest G such that every length-G subinterval of the window meets
  /// the set; absent for the empty set.
  std::optional<std::int64_t> max_gap;
  std::int64_t max_run = 0;
  std::int64_t thick_runs = 0;  // maximal runs of length >= thick_run
  StructureThresholds thresholds;
  bool syndetic = false;            // max_gap <= syndetic_gap
  bool thick = false;               // max_run >= thick_run
  bool piecewise_syndetic = false;  // some stretch of length >= thick_run with gaps <= syndetic_gap
  bool thickly_syndetic = false;    // run starts of length thick_run have gaps <= syndetic_gap
};

StructureReport structure_classify(const WindowSet& set, const StructureThresholds& thresholds = {});

// --- Hindman / Schur-type searches over {1..N} -------------------------

/// colors[i] is the cell of i+1.
using Coloring = std::vector<int>;

struct MonochromaticFS {
  int cell = 0;
  std::vector<std::int64_t> generators;  // FS(generators) inside cell and [1..N]
};

/// Depth-m generators a_1..a_m whose finite sums (distinct indices) all lie
/// in [1..N] and in one cell. Strictly increasing generators are searched
/// first; repeated generators (allowed for IP-sets) are the fallback.
std::optional<MonochromaticFS> find_monochromatic_fs(const Coloring& coloring, int depth);

struct HindmanCertificate {
  bool verified = false;              // every coloring has a monochromatic FS
  std::optional<Coloring> failing;    // lexicographically least failing coloring
  std::uint64_t colorings_checked = 0;
};

/// Exhausts all r^N colorings. Throws BudgetExceeded when r^N > budget.
HindmanCertificate hindman_all(int n, int r, int depth, std::uint64_t budget = 1ULL << 24);

std::string format_coloring(const Coloring& coloring);

}  // namespace ipdyn
