#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

// Integer partition: weakly decreasing positive parts, trailing zeros trimmed.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  // 1-based part access; parts beyond length() are 0.
  int part(int k) const;
  bool empty() const { return parts_.empty(); }
  bool fits_box(int rows, int cols) const;
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;

  bool operator==(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

// Total order used everywhere a canonical enumeration is needed:
// weight ascending, then reverse-lexicographic within a weight
// (so (d) comes before (d-1,1), ..., before (1^d)).
bool partition_less(const Partition& a, const Partition& b);

struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return partition_less(a, b);
  }
};

// Removes the i-th part (1-based), treating absent parts as zero.
// i <= 0 is an argument error.
Partition remove_part(const Partition& lam, int i);

// Partwise sum lam + (1^j); requires length(lam) <= j.
Partition add_ones(const Partition& lam, int j);

// All partitions with at most `rows` parts, each at most `cols`, in the
// canonical order above; restricted to one weight when `degree` is given.
std::vector<Partition> enumerate_box(int rows, int cols,
                                     std::optional<int> degree = std::nullopt);

std::string to_text(const Partition&);

}
