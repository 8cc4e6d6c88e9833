#include "schubert/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

namespace {

void validate(const std::vector<int>& parts) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 0)
      throw std::invalid_argument("partition: negative part");
    if (k > 0 && parts[k] > parts[k - 1])
      throw std::invalid_argument("partition: parts must be weakly decreasing");
  }
}

void trim(std::vector<int>& parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  validate(parts_);
  trim(parts_);
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

int Partition::part(int k) const {
  if (k < 1) throw std::invalid_argument("partition: part index must be >= 1");
  return k <= length() ? parts_[k - 1] : 0;
}

bool Partition::fits_box(int rows, int cols) const {
  return length() <= rows && part(1) <= cols;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int k = 1; k <= part(1); ++k) {
    int count = 0;
    for (int p : parts_)
      if (p >= k) ++count;
    conj.push_back(count);
  }
  return Partition(std::move(conj));
}

bool partition_less(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  // reverse-lexicographic: lexicographically larger comes first
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

Partition remove_part(const Partition& lam, int i) {
  if (i <= 0) throw std::invalid_argument("remove_part: index must be >= 1");
  if (i > lam.length()) return lam;
  std::vector<int> parts = lam.parts();
  parts.erase(parts.begin() + (i - 1));
  return Partition(std::move(parts));
}

Partition add_ones(const Partition& lam, int j) {
  if (j < 0) throw std::invalid_argument("add_ones: j must be >= 0");
  if (lam.length() > j)
    throw std::invalid_argument("add_ones: partition longer than j");
  std::vector<int> parts(static_cast<std::size_t>(j), 0);
  for (int k = 1; k <= j; ++k) parts[k - 1] = lam.part(k) + 1;
  return Partition(std::move(parts));
}

namespace {

void gen_box(int d, int max_part, int max_len, std::vector<int>& acc,
             std::vector<Partition>& out) {
  if (d == 0) {
    out.emplace_back(acc);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(max_part, d); p >= 1; --p) {
    acc.push_back(p);
    gen_box(d - p, p, max_len - 1, acc, out);
    acc.pop_back();
  }
}

}

std::vector<Partition> enumerate_box(int rows, int cols,
                                     std::optional<int> degree) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("enumerate_box: negative box");
  std::vector<Partition> out;
  int lo = degree.value_or(0), hi = degree.value_or(rows * cols);
  if (lo > rows * cols) return out;
  for (int d = lo; d <= hi; ++d) {
    std::vector<int> acc;
    gen_box(d, cols, rows, acc, out);
  }
  return out;
}

std::string to_text(const Partition& lam) {
  if (lam.empty()) return "0";
  std::string s = "(";
  for (int k = 1; k <= lam.length(); ++k) {
    if (k > 1) s += ",";
    s += std::to_string(lam.part(k));
  }
  s += ")";
  return s;
}

}
