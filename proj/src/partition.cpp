#include "gaudinlab/partition.hpp"

#include <algorithm>
#include <numeric>

#include "gaudinlab/errors.hpp"

namespace gaudinlab {

int weight(const Composition& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool is_partition(const Composition& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i > 0 && v[i] > v[i - 1]) return false;
  }
  return true;
}

Partition trimmed(const Partition& p) {
  Partition r = p;
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Partition padded(const Partition& p, int len) {
  Partition r = p;
  while (static_cast<int>(r.size()) < len) r.push_back(0);
  return r;
}

Partition sorted_decreasing(const Composition& v) {
  Partition r = v;
  std::sort(r.begin(), r.end(), std::greater<int>());
  return r;
}

static void gen_partitions(int remaining, int max_part, int max_len, Partition& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    gen_partitions(remaining - part, part, max_len - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of_weight(int k, int max_len) {
  std::vector<Partition> out;
  if (k < 0) return out;
  Partition cur;
  gen_partitions(k, k == 0 ? 1 : k, max_len < 0 ? k : max_len, cur, out);
  return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (weight(a) != weight(b)) throw WeightMismatch("dominance comparison across weights");
  int pa = 0, pb = 0;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    pa += i < a.size() ? a[i] : 0;
    pb += i < b.size() ? b[i] : 0;
    if (pa > pb) return false;
  }
  return true;
}

bool partition_total_less(const Partition& a, const Partition& b) {
  const int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const int ai = i < a.size() ? a[i] : 0;
    const int bi = i < b.size() ? b[i] : 0;
    if (ai != bi) return ai < bi;  // lex-smaller is dominance-smaller or incomparable
  }
  return false;
}

Rational z_lambda(const Partition& p) {
  Rational z(1);
  int run = 0;
  int prev = -1;
  for (int part : trimmed(p)) {
    if (part == prev) {
      ++run;
    } else {
      prev = part;
      run = 1;
    }
    z *= Rational(part) * Rational(run);
  }
  return z;
}

std::vector<int> part_multiplicities(const Partition& p, int n) {
  int maxpart = 0;
  for (int v : p) maxpart = std::max(maxpart, v);
  std::vector<int> m(maxpart + 1, 0);
  int nonzero = 0;
  for (int v : p) {
    if (v > 0) {
      ++m[v];
      ++nonzero;
    }
  }
  m[0] = std::max(0, n - nonzero);
  return m;
}

bool flag_contains(const Composition& outer, const Composition& inner) {
  if (outer.size() != inner.size()) throw WeightMismatch("flag length mismatch");
  for (std::size_t i = 0; i < outer.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

std::vector<std::vector<int>> distinct_permutations(const Partition& p, int n) {
  std::vector<int> v = padded(trimmed(p), n);
  if (static_cast<int>(v.size()) > n) throw BoundExceeded("partition longer than variable count");
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace gaudinlab
