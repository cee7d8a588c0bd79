#pragma once

// Coset enumeration over the trivial subgroup for two-generator
// presentations: the brute-force check that a relation set really presents
// the group it is claimed to present.

#include <array>
#include <deque>
#include <string>
#include <vector>

namespace arborlab::test {

class CosetEnumerator {
public:
  // words over x, X, y, Y; returns the coset count (= group order) or -1 on
  // table overflow
  long enumerate(const std::vector<std::string>& relators, std::size_t max_cosets) {
    cap_ = max_cosets;
    table_.clear();
    parent_.clear();
    dead_.clear();
    overflow_ = false;
    std::vector<std::vector<int>> rels;
    for (const auto& r : relators) {
      std::vector<int> w;
      for (char c : r) w.push_back(c == 'x' ? 0 : c == 'X' ? 1 : c == 'y' ? 2 : 3);
      rels.push_back(std::move(w));
    }
    new_coset();
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (find((int)c) != (int)c) continue;
      for (const auto& r : rels) {
        if (find((int)c) != (int)c) break;
        if (!scan_fill(find((int)c), r)) return -1;
      }
      if (find((int)c) != (int)c) continue;
      for (int a = 0; a < 4; ++a) {
        int cc = find((int)c);
        if (table_[cc][a] < 0) {
          int n = new_coset();
          if (n < 0) return -1;
          table_[cc][a] = n;
          table_[n][inv(a)] = cc;
        }
      }
    }
    long live = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (find((int)c) == (int)c) ++live;
    return live;
  }

private:
  std::vector<std::array<int, 4>> table_;
  std::vector<int> parent_;
  std::deque<int> dead_;
  std::size_t cap_ = 0;
  bool overflow_ = false;

  static int inv(int a) { return a ^ 1; }

  int find(int c) {
    while (parent_[c] != c) c = parent_[c] = parent_[parent_[c]];
    return c;
  }

  int new_coset() {
    if (table_.size() >= cap_) {
      overflow_ = true;
      return -1;
    }
    table_.push_back({-1, -1, -1, -1});
    parent_.push_back((int)table_.size() - 1);
    return (int)table_.size() - 1;
  }

  void queue_merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    dead_.push_back(b);
  }

  void coincide(int a, int b) {
    queue_merge(a, b);
    while (!dead_.empty()) {
      int d = dead_.front();
      dead_.pop_front();
      for (int a2 = 0; a2 < 4; ++a2) {
        int e = table_[d][a2];
        if (e < 0) continue;
        table_[d][a2] = -1;
        if (table_[e][inv(a2)] == d) table_[e][inv(a2)] = -1;
        int d2 = find(d), e2 = find(e);
        if (table_[d2][a2] >= 0)
          queue_merge(table_[d2][a2], e2);
        else if (table_[e2][inv(a2)] >= 0)
          queue_merge(table_[e2][inv(a2)], d2);
        else {
          table_[d2][a2] = e2;
          table_[e2][inv(a2)] = d2;
        }
      }
    }
  }

  bool scan_fill(int c, const std::vector<int>& w) {
    int f = c;
    std::size_t i = 0;
    int b = c;
    long j = (long)w.size() - 1;
    for (;;) {
      while ((long)i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i]], ++i;
      if ((long)i > j) {
        if (f != b) coincide(f, b);
        return true;
      }
      while (j >= (long)i && table_[b][inv(w[j])] >= 0) b = table_[b][inv(w[j])], --j;
      if (j < (long)i) {
        coincide(f, b);
        return true;
      }
      if ((long)i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return true;
      }
      int n = new_coset();
      if (n < 0) return false;
      table_[f][w[i]] = n;
      table_[n][inv(w[i])] = f;
    }
  }
};

} // namespace arborlab::test
