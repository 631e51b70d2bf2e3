#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sato {

/// Weakly decreasing list of positive parts. The empty partition is the
/// unit class.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Validates weak decrease and positivity; trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);

  /// Parses "2,1,1" (spaces allowed, empty string is the empty partition).
  static Partition parse(std::string_view text);
  /// (1^r)
  static Partition column(int r);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;  // |lambda|
  /// lambda_i with 1-based index, zero past the length.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  bool contains(const Partition& mu) const;
  bool fits_in_box(int rows, int cols) const;
  bool is_column() const;

  std::string str() const;  // "(2,1)"; "()" for the empty partition

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Plain lexicographic order on parts; used only as a map key order.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Canonical output order: by size, then reverse lexicographic, so (2)
/// comes before (1,1).
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

/// All partitions of n, in PartitionOrder.
std::vector<Partition> partitions_of(int n);
/// All partitions inside a rows x cols box, in PartitionOrder.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Characteristic sequence s_1 > s_2 > ... of index d, stored as a finite
/// head; the tail is s_n = -n + d. The head is trimmed so its last entry is
/// never already standard, making equality structural.
class MayaSequence {
 public:
  MayaSequence(long d, std::vector<long> head);

  long d() const { return d_; }
  const std::vector<long>& head() const { return head_; }
  /// s_n with 1-based index, following the tail past the head.
  long at(std::size_t n) const;

  friend bool operator==(const MayaSequence&, const MayaSequence&) = default;

 private:
  long d_;
  std::vector<long> head_;
};

Partition partition_from_maya(const MayaSequence& s);
MayaSequence maya_from_partition(const Partition& lambda, long d);
/// Complex codimension of the Schubert cell: sum of (s_i + i - d).
long codimension(const MayaSequence& s);

}  // namespace sato
