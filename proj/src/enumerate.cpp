#include "posets/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace posets {

namespace {

using Clock = std::chrono::steady_clock;

// Optional per-cell wall-clock deadline, installed by counts_table.
thread_local std::optional<Clock::time_point> tl_deadline;

struct BudgetScope {
  std::optional<Clock::time_point> saved;
  explicit BudgetScope(std::optional<std::chrono::milliseconds> budget) : saved(tl_deadline) {
    if (budget) tl_deadline = Clock::now() + *budget;
  }
  ~BudgetScope() { tl_deadline = saved; }
};

void budget_check() {
  if (tl_deadline && Clock::now() > *tl_deadline)
    throw BudgetExceeded("cell budget exhausted");
}

std::optional<std::chrono::milliseconds> env_budget() {
  if (const char* v = std::getenv("POSETS_CELL_BUDGET_MS")) {
    long ms = std::atol(v);
    if (ms > 0) return std::chrono::milliseconds(ms);
  }
  return std::nullopt;
}

std::size_t env_max_set() {
  if (const char* v = std::getenv("POSETS_MAX_SET")) {
    long n = std::atol(v);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  return 0;  // unlimited
}

}  // namespace

const std::vector<Poset>& all_posets_list(int n, int bound) {
  if (n < 0 || n > bound || bound > Poset::kMaxPoints)
    throw BoundExceeded("poset enumeration bound exceeded");
  static std::mutex mu;
  static std::map<int, std::vector<Poset>> cache;
  std::scoped_lock lock(mu);
  for (int k = 0; k <= n; ++k) {
    if (cache.contains(k)) continue;
    std::map<CanonForm, Poset> classes;
    if (k == 0) {
      classes.emplace(canonical_form(Poset()), Poset());
    } else {
      for (const Poset& q : cache.at(k - 1)) {
        budget_check();
        const int m = q.size();
        for (std::uint64_t d = 0; d < (1ull << m); ++d) {
          bool ideal = true;
          for (int x = 0; x < m && ideal; ++x)
            if ((d >> x) & 1u) ideal = (q.pred_mask(x) & ~d) == 0;
          if (!ideal) continue;
          std::vector<std::uint64_t> rows(m + 1, 0);
          for (int x = 0; x < m; ++x) {
            rows[x] = q.succ_mask(x);
            if ((d >> x) & 1u) rows[x] |= 1ull << m;
          }
          Poset ext = Poset::from_closed_rows(std::move(rows));
          classes.emplace(canonical_form(ext), std::move(ext));
        }
      }
    }
    std::vector<Poset> list;
    list.reserve(classes.size());
    for (auto& [c, p] : classes) list.push_back(std::move(p));
    cache.emplace(k, std::move(list));
  }
  return cache.at(n);
}

std::vector<CanonForm> all_posets(int n, int bound) {
  std::vector<CanonForm> out;
  for (const Poset& p : all_posets_list(n, bound)) out.push_back(canonical_form(p));
  return out;
}

std::vector<Iposet> all_iposets_list(int n, bool targets_allowed, int bound) {
  const auto& posets = all_posets_list(n, bound);
  std::map<CanonForm, Iposet> classes;
  for (const Poset& p : posets) {
    budget_check();
    auto srcs = detail::injective_sequences(minima(p));
    auto tgts = targets_allowed ? detail::injective_sequences(maxima(p))
                                : std::vector<std::vector<int>>{{}};
    for (const auto& s : srcs)
      for (const auto& t : tgts) {
        Iposet ip{p, s, t};
        classes.emplace(canonical_form(ip), ip);
      }
  }
  std::vector<Iposet> out;
  out.reserve(classes.size());
  for (auto& [c, ip] : classes) out.push_back(std::move(ip));
  return out;
}

std::vector<CanonForm> all_iposets(int n, bool targets_allowed, int bound) {
  std::vector<CanonForm> out;
  for (const Iposet& p : all_iposets_list(n, targets_allowed, bound))
    out.push_back(canonical_form(p));
  return out;
}

bool GpClosure::contains(const CanonForm& c) const {
  return std::ranges::binary_search(forms, c);
}

GpClosure gp_closure(int n, int jobs, int bound) {
  if (n < 0 || n > bound) throw BoundExceeded("closure bound exceeded");
  if (jobs < 1) jobs = 1;
  const std::size_t max_set = env_max_set();

  std::vector<Iposet> members;
  std::vector<std::string> keys;
  std::unordered_set<std::string> index;
  auto add = [&](const Iposet& ip, const std::string& key) {
    members.push_back(ip);
    keys.push_back(key);
    index.insert(key);
  };

  add(identity(0), canonical_form(identity(0)).bytes);
  if (n >= 1)
    for (const Iposet& s : singletons()) add(s, canonical_form(s).bytes);

  // Partner buckets by (size, source arity) and (size, target arity).
  auto bucket_id = [&](int size, int ar) { return size * (n + 1) + ar; };
  std::vector<std::vector<int>> by_src((n + 1) * (n + 1)), by_tgt((n + 1) * (n + 1));
  auto index_member = [&](int i) {
    by_src[bucket_id(members[i].size(), members[i].src_arity())].push_back(i);
    by_tgt[bucket_id(members[i].size(), members[i].tgt_arity())].push_back(i);
  };
  for (std::size_t i = 0; i < members.size(); ++i) index_member(static_cast<int>(i));

  std::vector<int> frontier(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) frontier[i] = static_cast<int>(i);

  while (!frontier.empty()) {
    budget_check();
    // Compose each frontier member with every compatible existing member,
    // in both roles and with both operations.
    auto work = [&](int lo, int hi) {
      std::vector<std::pair<std::string, Iposet>> found;
      auto emit = [&](Iposet&& ip) {
        std::string key = canonical_form(ip).bytes;
        if (!index.contains(key)) found.emplace_back(std::move(key), std::move(ip));
      };
      for (int fi = lo; fi < hi; ++fi) {
        const Iposet& x = members[frontier[fi]];
        budget_check();
        for (int ys = 0; x.size() + ys <= n; ++ys)
          for (int ya = 0; ya <= ys; ++ya)
            for (int yi : by_src[bucket_id(ys, ya)]) {
              const Iposet& y = members[yi];
              emit(par(x, y));
              emit(par(y, x));
            }
        // glue x * y: y's source arity matches x's target arity
        for (int ys = x.tgt_arity(); x.size() + ys - x.tgt_arity() <= n && ys <= n; ++ys)
          for (int yi : by_src[bucket_id(ys, x.tgt_arity())]) emit(glue(x, members[yi]));
        // glue y * x
        for (int ys = x.src_arity(); ys + x.size() - x.src_arity() <= n && ys <= n; ++ys)
          for (int yi : by_tgt[bucket_id(ys, x.src_arity())]) emit(glue(members[yi], x));
      }
      return found;
    };

    std::vector<std::pair<std::string, Iposet>> found;
    if (jobs == 1 || frontier.size() < 2) {
      found = work(0, static_cast<int>(frontier.size()));
    } else {
      const int chunks = std::min<int>(jobs, static_cast<int>(frontier.size()));
      std::vector<std::future<std::vector<std::pair<std::string, Iposet>>>> futs;
      for (int c = 0; c < chunks; ++c) {
        int lo = static_cast<int>(frontier.size()) * c / chunks;
        int hi = static_cast<int>(frontier.size()) * (c + 1) / chunks;
        futs.push_back(std::async(std::launch::async, work, lo, hi));
      }
      for (auto& f : futs) {
        auto part = f.get();
        found.insert(found.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
      }
    }

    std::ranges::sort(found, {}, &std::pair<std::string, Iposet>::first);
    frontier.clear();
    for (auto& [key, ip] : found) {
      if (index.contains(key)) continue;
      frontier.push_back(static_cast<int>(members.size()));
      add(ip, key);
      index_member(frontier.back());
      if (max_set && members.size() > max_set)
        throw BudgetExceeded("closure set size cap exceeded");
    }
  }

  std::vector<int> order(members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::ranges::sort(order, [&](int a, int b) { return keys[a] < keys[b]; });
  GpClosure out;
  out.count_by_size.assign(n + 1, 0);
  for (int i : order) {
    out.members.push_back(members[i]);
    out.forms.push_back(CanonForm{keys[i]});
    out.count_by_size[members[i].size()]++;
  }
  return out;
}

std::vector<CountsRow> counts_table(int max_n, bool stretch, int jobs) {
  if (max_n < 0 || max_n > kEnumBound) throw BoundExceeded("table bound exceeded");
  const auto budget = env_budget();
  auto cell = [&](auto f) -> std::optional<std::uint64_t> {
    try {
      BudgetScope scope(budget);
      return static_cast<std::uint64_t>(f());
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
  };

  std::optional<GpClosure> closure;
  auto closure_count = [&](int n) -> std::optional<std::uint64_t> {
    if (!closure) {
      try {
        BudgetScope scope(budget);
        closure = gp_closure(max_n, jobs);
      } catch (const BudgetExceeded&) {
        return std::nullopt;
      }
    }
    return closure->count_at(n);
  };

  std::vector<CountsRow> rows;
  for (int n = 0; n <= max_n; ++n) {
    CountsRow row;
    row.n = n;
    row.p = cell([&] { return all_posets_list(n).size(); });
    if (row.p) {
      const auto& list = all_posets_list(n);
      row.sp = cell([&] {
        return std::ranges::count_if(list, [](const Poset& p) { return is_sp(p); });
      });
      row.gp = cell([&] {
        std::uint64_t c = 0;
        for (const Poset& p : list) {
          budget_check();
          if (is_gp_poset(p)) ++c;
        }
        return c;
      });
      row.gpc = cell([&] {
        std::uint64_t c = 0;
        for (const Poset& p : list) {
          budget_check();
          if (is_connected(p) && is_gp_poset(p)) ++c;
        }
        return c;
      });
    }
    if (n <= 5 || stretch)
      row.sip = cell([&] { return all_iposets_list(n, false).size(); });
    if (n <= 4 || stretch)
      row.ip = cell([&] { return all_iposets_list(n, true).size(); });
    row.gpi = closure_count(n);
    rows.push_back(row);
  }
  return rows;
}

std::vector<DecompRow> decomposition_table(int n, bool connected_only, int bound) {
  if (n < 0 || n > bound) throw BoundExceeded("decomposition table bound exceeded");
  std::vector<DecompRow> rows;
  for (const Poset& p : all_posets_list(n)) {
    if (connected_only && !is_connected(p)) continue;
    rows.push_back({canonical_form(p), gp_decompose(embed(p))});
  }
  return rows;
}

}  // namespace posets
