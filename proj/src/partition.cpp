#include "sato/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "sato/errors.hpp"

namespace sato {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must weakly decrease");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&](bool final_token) {
    std::string t;
    for (char ch : token)
      if (ch != ' ' && ch != '\t') t += ch;
    token.clear();
    if (t.empty()) {
      if (final_token && parts.empty()) return;
      throw std::invalid_argument("malformed partition: empty part");
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw std::invalid_argument("malformed partition part '" + t + "'");
    parts.push_back(v);
  };
  for (char ch : text) {
    if (ch == ',') flush(false);
    else token += ch;
  }
  flush(true);
  for (int v : parts)
    if (v < 0) throw std::invalid_argument("malformed partition: negative part");
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw std::invalid_argument(std::string("malformed partition: ") + e.what());
  }
}

Partition Partition::column(int r) {
  if (r < 0) throw DomainError("column length must be nonnegative");
  return Partition(std::vector<int>(static_cast<std::size_t>(r), 1));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

bool Partition::fits_in_box(int rows, int cols) const {
  return static_cast<int>(length()) <= rows && (empty() || parts_[0] <= cols);
}

bool Partition::is_column() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.parts() > b.parts();
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

namespace {

void generate(int remaining, int max_part, int max_rows, std::vector<int>& cur,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_rows == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, max_rows - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  generate(n, n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  for (int n = 0; n <= rows * cols; ++n) generate(n, cols, rows, cur, out);
  return out;
}

MayaSequence::MayaSequence(long d, std::vector<long> head) : d_(d), head_(std::move(head)) {
  for (std::size_t i = 1; i < head_.size(); ++i)
    if (head_[i] >= head_[i - 1]) throw DomainError("characteristic sequence must strictly decrease");
  const long k = static_cast<long>(head_.size());
  if (k > 0 && head_.back() <= -(k + 1) + d_)
    throw DomainError("characteristic sequence head does not lie above its tail");
  // Trim entries that already agree with the standard tail.
  while (!head_.empty() && head_.back() == -static_cast<long>(head_.size()) + d_) head_.pop_back();
}

long MayaSequence::at(std::size_t n) const {
  if (n >= 1 && n <= head_.size()) return head_[n - 1];
  return -static_cast<long>(n) + d_;
}

Partition partition_from_maya(const MayaSequence& s) {
  std::vector<int> parts;
  for (std::size_t n = 1; n <= s.head().size(); ++n)
    parts.push_back(static_cast<int>(s.at(n) + static_cast<long>(n) - s.d()));
  return Partition(std::move(parts));
}

MayaSequence maya_from_partition(const Partition& lambda, long d) {
  std::vector<long> head;
  for (std::size_t n = 1; n <= lambda.length(); ++n)
    head.push_back(lambda.part(n) - static_cast<long>(n) + d);
  return MayaSequence(d, std::move(head));
}

long codimension(const MayaSequence& s) {
  long total = 0;
  for (std::size_t i = 1; i <= s.head().size(); ++i) total += s.at(i) + static_cast<long>(i) - s.d();
  return total;
}

}  // namespace sato
