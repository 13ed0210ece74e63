#include "riley/certifier.hpp"

#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

namespace riley {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::certified:
      return "certified";
    case Status::not_found:
      return "not_found";
    case Status::below_threshold:
      return "below_threshold";
  }
  return "unknown";
}

std::string OrderabilityVerdict::to_json_string() const {
  std::ostringstream os;
  os << "{\"n\":" << n << ",\"m\":" << m << ",\"r\":" << r
     << ",\"r_min_claimed\":";
  if (r_min_claimed) {
    os << *r_min_claimed;
  } else {
    os << "null";
  }
  os << ",\"status\":\"" << to_string(status) << "\",\"roots_found\":"
     << roots_found << ",\"certificate\":";
  if (certificate) {
    os << certificate->to_json_string();
  } else {
    os << "null";
  }
  os << ",\"error\":";
  if (error.empty()) {
    os << "null";
  } else {
    os << '"' << json_escape(error) << '"';
  }
  os << '}';
  return os.str();
}

std::string OrderabilityVerdict::to_csv_row() const {
  std::ostringstream os;
  os << n << ',' << m << ',' << r << ',' << to_string(status) << ',';
  if (r_min_claimed) os << *r_min_claimed;
  os << ',';
  if (certificate) os << fmt17(certificate->y_star);
  os << ',';
  if (certificate) os << fmt17(certificate->residual);
  return os.str();
}

std::optional<int> thm_lower_bound(const KnotParams& p) {
  const int n = p.n;
  const int m = p.m;
  if (n >= 3 || n <= -4) return 3;
  if (n == 2 || n == -3) return 4;
  if (n == 1) {
    if (m == 1 || m == 2) return 5;
    if (m >= 3) return 6;
    if (m <= -4) return 7;
    if (m == -2 || m == -3) return 8;
    return 9;  // m == -1
  }
  if (n == -2) {
    if (m == -1) return 5;
    if (m <= -2) return 6;
    if (m >= 6) return 7;
    return std::nullopt;  // 1 <= m <= 5
  }
  return std::nullopt;  // n == -1
}

OrderabilityVerdict certify(const KnotParams& p, int r,
                            const ScanConfig& cfg) {
  if (r < 2) throw std::invalid_argument("certify: r must be >= 2");
  OrderabilityVerdict v;
  v.n = p.n;
  v.m = p.m;
  v.r = r;
  v.r_min_claimed = thm_lower_bound(p);
  try {
    auto roots = scan_roots(p, r, cfg);
    v.roots_found = static_cast<int>(roots.size());
    if (v.r_min_claimed && r < *v.r_min_claimed) {
      v.status = Status::below_threshold;
    } else if (!roots.empty()) {
      v.status = Status::certified;
      v.certificate = roots.front();
    } else {
      v.status = Status::not_found;
    }
  } catch (const std::exception& e) {
    v.status = Status::not_found;
    v.error = e.what();
  }
  return v;
}

std::vector<OrderabilityVerdict> sweep(IntRange n_range, IntRange m_range,
                                       IntRange r_range,
                                       const ScanConfig& cfg,
                                       unsigned threads) {
  if (n_range.step <= 0 || m_range.step <= 0 || r_range.step <= 0) {
    throw std::invalid_argument("sweep: range steps must be positive");
  }
  if (!r_range.empty() && r_range.lo < 2) {
    throw std::invalid_argument("sweep: r values must be >= 2");
  }
  struct Task {
    int n, m, r;
  };
  std::vector<Task> tasks;
  for (int n = n_range.lo; n <= n_range.hi; n += n_range.step) {
    if (n == 0) continue;
    for (int m = m_range.lo; m <= m_range.hi; m += m_range.step) {
      if (m == 0) continue;
      for (int r = r_range.lo; r <= r_range.hi; r += r_range.step) {
        tasks.push_back({n, m, r});
      }
    }
  }
  std::vector<OrderabilityVerdict> results(tasks.size());
  if (tasks.empty()) return results;

  unsigned n_workers = threads != 0 ? threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min<unsigned>(n_workers, tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      results[i] = certify(KnotParams(t.n, t.m), t.r, cfg);
    }
  };
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

SweepSummary summarize(const std::vector<OrderabilityVerdict>& verdicts) {
  SweepSummary s;
  s.total = static_cast<int>(verdicts.size());
  for (const auto& v : verdicts) {
    switch (v.status) {
      case Status::certified:
        ++s.certified;
        break;
      case Status::not_found:
        ++s.not_found;
        break;
      case Status::below_threshold:
        ++s.below_threshold;
        break;
    }
    if (!v.error.empty()) ++s.errors;
    if (v.r_min_claimed && v.r >= *v.r_min_claimed &&
        v.status != Status::certified) {
      ++s.claim_mismatches;
    }
  }
  return s;
}

std::string verdicts_to_json(const std::vector<OrderabilityVerdict>& verdicts) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (i) os << ',';
    os << verdicts[i].to_json_string();
  }
  os << ']';
  return os.str();
}

std::string verdicts_to_csv(const std::vector<OrderabilityVerdict>& verdicts) {
  std::ostringstream os;
  os << "n,m,r,status,r_min_claimed,y_star,residual\n";
  for (const auto& v : verdicts) os << v.to_csv_row() << '\n';
  return os.str();
}

}  // namespace riley
