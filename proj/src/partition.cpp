#include "supernomial/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace supernomial {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0)
    parts_.pop_back();
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < length(); ++i)
    out << (i ? "," : "") << parts_[i];
  out << ')';
  return out.str();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_))
    throw std::invalid_argument("skew shape " + outer_.str() + "/" + inner_.str() +
                                ": inner is not contained in outer");
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int r = 1; r <= outer_.length(); ++r)
    for (int c = inner_.row(r) + 1; c <= outer_.row(r); ++c)
      out.push_back({r, c});
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(lambda.empty() ? 0 : lambda.row(1), 0);
  for (int part : lambda.parts())
    for (int c = 0; c < part; ++c)
      ++cols[c];
  return Partition(std::move(cols));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length())
    return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i])
      return false;
  return true;
}

bool is_horizontal_strip(const SkewShape& shape, int p) {
  if (shape.size() != p)
    return false;
  const auto& outer = shape.outer();
  const auto& inner = shape.inner();
  for (int i = 0; i < outer.length(); ++i)
    if (inner[i] < outer[i + 1])
      return false;
  return true;
}

long costat_n(const Partition& mu) {
  long total = 0;
  for (int i = 0; i < mu.length(); ++i)
    for (int j = i + 1; j < mu.length(); ++j)
      total += std::min(mu[i], mu[j]);
  return total;
}

namespace {

void subpartitions_rec(const Partition& bound, int index, int cap, int remaining,
                       std::vector<int>& parts,
                       const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(parts));
    return;
  }
  if (index >= bound.length())
    return;
  // Parts at index.. are each ≤ min(cap, bound[index]) and weakly decreasing
  // bounds, so this is an upper estimate of what can still be placed.
  int capacity = 0;
  int running = cap;
  for (int k = index; k < bound.length(); ++k) {
    running = std::min(running, bound[k]);
    capacity += running;
  }
  if (capacity < remaining)
    return;
  for (int part = std::min({cap, bound[index], remaining}); part >= 1; --part) {
    parts.push_back(part);
    subpartitions_rec(bound, index + 1, part, remaining - part, parts, visit);
    parts.pop_back();
  }
}

void strips_rec(const Partition& inner, const Partition& bound, int row,
                int rows, int remaining, std::vector<int>& parts,
                const std::function<void(const Partition&)>& visit) {
  if (row == rows) {
    if (remaining == 0)
      visit(Partition(parts));
    return;
  }
  int low = inner[row];
  int high = bound[row];
  if (row > 0)
    high = std::min(high, inner[row - 1]);
  int capacity = 0;
  for (int k = row; k < rows; ++k) {
    int h = bound[k];
    if (k > 0)
      h = std::min(h, inner[k - 1]);
    capacity += std::max(0, h - inner[k]);
  }
  if (capacity < remaining)
    return;
  for (int part = std::min(high, low + remaining); part >= low; --part) {
    parts.push_back(part);
    strips_rec(inner, bound, row + 1, rows, remaining - (part - low), parts, visit);
    parts.pop_back();
  }
}

} // namespace

void for_each_subpartition(const Partition& bound, int size,
                           const std::function<void(const Partition&)>& visit) {
  if (size < 0)
    return;
  std::vector<int> parts;
  subpartitions_rec(bound, 0, bound.empty() ? 0 : bound[0], size, parts, visit);
}

std::vector<Partition> enumerate_subpartitions(const Partition& bound, int size) {
  std::vector<Partition> out;
  for_each_subpartition(bound, size, [&](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_horizontal_strip(const Partition& inner, const Partition& bound,
                               int size,
                               const std::function<void(const Partition&)>& visit) {
  if (size < 0 || !contains(bound, inner))
    return;
  int rows = std::min(bound.length(), inner.length() + 1);
  std::vector<int> parts;
  strips_rec(inner, bound, 0, rows, size, parts, visit);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0)
    return out;
  for_each_subpartition(Partition(std::vector<int>(n, n)), n,
                        [&](const Partition& p) { out.push_back(p); });
  return out;
}

namespace {

void compositions_rec(int remaining, int slots, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur.push_back(v);
    compositions_rec(remaining - v, slots - 1, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (n < 0 || k < 0)
    return out;
  if (k == 0) {
    if (n == 0)
      out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  compositions_rec(n, k, cur, out);
  return out;
}

std::vector<std::vector<int>> positive_compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (int first = n; first >= 1; --first)
    for (auto tail : positive_compositions(n - first)) {
      tail.insert(tail.begin(), first);
      out.push_back(std::move(tail));
    }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string cleaned;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != '(' && ch != ')' && ch != ' ')
      cleaned += ch;
  std::vector<int> out;
  if (cleaned.empty())
    return out;
  std::stringstream in(cleaned);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer list '" + text + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("malformed integer list '" + text + "'");
    out.push_back(value);
  }
  return out;
}

} // namespace supernomial
