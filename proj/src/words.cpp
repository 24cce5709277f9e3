#include "oag/words.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oag {

bool DifferenceWord::in_domain(long long t) const {
  if (t < 0) return has_left();
  if (t < static_cast<long long>(middle.size())) return true;
  return has_right();
}

int DifferenceWord::at(long long t) const {
  if (t < 0) {
    if (!has_left()) throw Error("position before start of word");
    long long L = static_cast<long long>(left_tail->size());
    return (*left_tail)[static_cast<size_t>(((t % L) + L) % L)];
  }
  if (t < static_cast<long long>(middle.size())) return middle[static_cast<size_t>(t)];
  if (!has_right()) throw Error("position past end of word");
  long long r = t - static_cast<long long>(middle.size());
  return (*right_tail)[static_cast<size_t>(r % static_cast<long long>(right_tail->size()))];
}

int factor_count(const DifferenceWord& w, int k) {
  if (!w.has_right()) throw FiniteWord();
  if (k <= 0) throw Error("factor length must be positive");
  const auto& t = *w.right_tail;
  int L = static_cast<int>(t.size());
  // Infinitely recurring factors are exactly the k-factors of the repeated
  // tail starting at each phase.
  std::set<std::vector<int>> factors;
  for (int s = 0; s < L; ++s) {
    std::vector<int> f(k);
    for (int i = 0; i < k; ++i) f[i] = t[(s + i) % L];
    factors.insert(std::move(f));
  }
  return static_cast<int>(factors.size());
}

PeriodResult detect_period(const DifferenceWord& w, int M) {
  if (!w.has_right()) throw FiniteWord();
  const auto& t = *w.right_tail;
  int L = static_cast<int>(t.size());

  // f is nondecreasing and reaches its cap by k = L, so stabilization
  // occurs within L + 1 steps.
  int k = 1;
  int fk = factor_count(w, 1);
  if (fk > M) throw BoundViolated(1);
  while (true) {
    int fk1 = factor_count(w, k + 1);
    if (fk1 > M) throw BoundViolated(k + 1);
    if (fk1 == fk) break;
    fk = fk1;
    ++k;
    if (k > L + 1) throw Error("factor counts failed to stabilize");
  }

  // Recurring k-factors with their unique recurring (k+1)-extensions.
  auto factor_at = [&](int s, int len) {
    std::vector<int> f(len);
    for (int i = 0; i < len; ++i) f[i] = t[(s + i) % L];
    return f;
  };
  std::map<std::vector<int>, std::vector<int>> extend;
  for (int s = 0; s < L; ++s) {
    std::vector<int> f = factor_at(s, k);
    std::vector<int> g = factor_at(s, k + 1);
    auto it = extend.find(f);
    if (it == extend.end())
      extend.emplace(std::move(f), std::move(g));
    else if (it->second != g)
      throw Error("recurring factor with two recurring extensions at stabilization");
  }

  // Walk sigma -> sigma' (extend, drop first letter) until the orbit
  // repeats; the cycle length is an eventual period.
  std::vector<int> sigma = factor_at(0, k);
  std::map<std::vector<int>, int> seen;
  int step = 0, m = 0;
  while (true) {
    auto ins = seen.emplace(sigma, step);
    if (!ins.second) {
      m = step - ins.first->second;
      break;
    }
    const auto& ext = extend.at(sigma);
    sigma.assign(ext.begin() + 1, ext.end());
    ++step;
    if (step > M + 2) throw Error("extension walk failed to cycle");
  }

  // Cross-validate against the stored tail and compute the tight offset.
  // The extension walk is deterministic, so the tail itself is m-periodic
  // and violations can only sit in the middle.
  long long mid = static_cast<long long>(w.middle.size());
  long long horizon = mid + 2LL * L + m;
  long long last_violation = -1;
  for (long long j = 0; j + m <= horizon; ++j)
    if (w.at(j + m) != w.at(j)) last_violation = j;
  if (last_violation >= mid) throw Error("detected period fails on the periodic tail");
  return PeriodResult{m, last_violation + 1};
}

std::vector<int> primitive_generator(const std::vector<int>& sigma) {
  if (sigma.empty()) throw Error("primitive_generator needs a nonempty word");
  int n = static_cast<int>(sigma.size());
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int i = d; i < n && ok; ++i) ok = sigma[i] == sigma[i - d];
    if (ok) return std::vector<int>(sigma.begin(), sigma.begin() + d);
  }
  return sigma;
}

int minimal_period_of_tail(const std::vector<int>& tail) {
  return static_cast<int>(primitive_generator(tail).size());
}

bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  int n = static_cast<int>(a.size());
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == b[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace oag
