#include "calogero/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace calogero {

bool is_partition(const Partition& lam) {
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] < 0) return false;
    if (i + 1 < lam.size() && lam[i] < lam[i + 1]) return false;
  }
  return true;
}

int weight(const Partition& lam) {
  int w = 0;
  for (int p : lam) w += p;
  return w;
}

bool dominance_leq(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size())
    throw std::invalid_argument("dominance_leq: length mismatch");
  int sl = 0, sm = 0;
  for (std::size_t k = 0; k < lam.size(); ++k) {
    sl += lam[k];
    sm += mu[k];
    if (sl > sm) return false;
  }
  return true;
}

bool dominance_lt(const Partition& lam, const Partition& mu) {
  return lam != mu && dominance_leq(lam, mu);
}

namespace {

void gen_rec(int n, int pos, int remaining, int cap, Partition& cur,
             std::vector<Partition>& out, bool exact) {
  if (pos == n) {
    if (!exact || remaining == 0) out.push_back(cur);
    return;
  }
  int hi = std::min(cap, remaining);
  for (int v = hi; v >= 0; --v) {
    cur[pos] = v;
    gen_rec(n, pos + 1, remaining - v, v, cur, out, exact);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Partition> partitions_of_weight(int n, int w) {
  std::vector<Partition> out;
  Partition cur(n, 0);
  gen_rec(n, 0, w, w, cur, out, /*exact=*/true);
  return out;
}

std::vector<Partition> partitions_leq_weight(int n, int maxw) {
  std::vector<Partition> out;
  for (int w = 0; w <= maxw; ++w) {
    auto part = partitions_of_weight(n, w);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Partition> dominated_by(const Partition& lam) {
  std::vector<Partition> out;
  int n = static_cast<int>(lam.size());
  for (const auto& mu : partitions_leq_weight(n, weight(lam)))
    if (mu != lam && dominance_leq(mu, lam)) out.push_back(mu);
  return out;
}

Integer elementary_symmetric_parts(int r, const Partition& lam) {
  // e_r via the recurrence on prefixes: e[k] <- e[k] + lam_i * e[k-1].
  std::vector<Integer> e(static_cast<std::size_t>(r) + 1, Integer(0));
  e[0] = 1;
  for (int part : lam)
    for (int k = r; k >= 1; --k) e[k] += Integer(part) * e[k - 1];
  return e[r];
}

std::string partition_str(const Partition& lam) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (i) os << ',';
    os << lam[i];
  }
  os << ')';
  return os.str();
}

Partition parse_partition(const std::string& s) {
  Partition lam;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("bad partition: '" + s + "'");
    lam.push_back(std::stoi(item));
  }
  if (lam.empty() || !is_partition(lam))
    throw std::invalid_argument("not weakly decreasing nonnegative: '" + s + "'");
  return lam;
}

}  // namespace calogero
