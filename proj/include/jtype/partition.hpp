#ifndef JTYPE_PARTITION_HPP
#define JTYPE_PARTITION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace jtype {

/// Weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; rejects zeros.
  explicit Partition(std::vector<std::size_t> parts);
  /// Parses "(4,2^3,1^2)" or "4,2,2,2,1,1".
  static Partition parse(const std::string& text);

  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  std::size_t total() const;
  /// Number of parts >= k.
  std::size_t count_at_least(std::size_t k) const;

  /// Exponent notation, e.g. "(4,2^3,1^2)".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> parts_;
};

enum class Dominance { greater, less, equal, incomparable };

const char* to_string(Dominance d);

/// Prefix-sum comparison with zero padding. Throws Errc::incomparable when
/// the partitions have different totals.
Dominance dominance_compare(const Partition& p, const Partition& q);

Partition conjugate_partition(const Partition& p);

/// Multiset of (string length, starting degree) pairs.
class JordanDegreeType {
 public:
  using Entry = std::pair<std::size_t, int>;

  JordanDegreeType() = default;
  /// Sorted by length descending, then start degree ascending.
  explicit JordanDegreeType(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  Partition partition() const;
  /// Beads sitting in each degree 0..top.
  std::vector<std::size_t> bead_counts(int top) const;
  /// "4_0,2_1^3,1_1,1_2"
  std::string to_string() const;

  friend bool operator==(const JordanDegreeType&, const JordanDegreeType&) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace jtype

#endif
