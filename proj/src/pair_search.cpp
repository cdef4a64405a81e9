#include "ramanujan/detail/pair_search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace ramanujan::detail {
namespace {

struct Worker {
  const SearchRequest& req;
  const Eigen::MatrixXd& w;
  std::atomic<bool>& stop;
  int n;
  int r;
  std::vector<Eigen::VectorXd> partial;  // partial[d] = 1 + sum of first d chosen columns
  std::vector<int> chosen;
  SearchResult out;

  Worker(const SearchRequest& request, std::atomic<bool>& stop_flag)
      : req(request), w(*request.weights), stop(stop_flag), n(static_cast<int>(w.cols())), r(request.choose) {
    partial.assign(r + 1, Eigen::VectorXd::Ones(w.rows()));
    chosen.resize(r);
  }

  void leaf() {
    if (req.generates && !req.generates(chosen)) {
      ++out.skipped;
      return;
    }
    ++out.examined;
    Eigen::Index c = 0;
    const double mu = partial[r].cwiseAbs().maxCoeff(&c);
    if (req.mode == SearchMode::maximum) {
      if (mu > out.best) {
        out.best = mu;
        out.best_set = chosen;
        out.best_character = c;
      }
      return;
    }
    if (mu - req.rb > req.band) {
      if (!out.violation) {
        out.violation = true;
        out.violation_set = chosen;
      }
      stop.store(true, std::memory_order_relaxed);
    } else if (mu - req.rb >= -req.band) {
      out.borderline.push_back(chosen);
    }
  }

  void descend(int depth, int start) {
    if (stop.load(std::memory_order_relaxed)) return;
    if (depth == r) {
      leaf();
      return;
    }
    const int last = n - (r - depth);
    for (int i = start; i <= last; ++i) {
      chosen[depth] = i;
      partial[depth + 1].noalias() = partial[depth] + w.col(i);
      descend(depth + 1, i + 1);
    }
  }

  void run_first(int first) {
    if (r == 0) {
      leaf();
      return;
    }
    chosen[0] = first;
    partial[1].noalias() = partial[0] + w.col(first);
    descend(1, first + 1);
  }
};

}  // namespace

double set_mu(const Eigen::MatrixXd& weights, std::span<const int> set, Eigen::Index* character) {
  Eigen::VectorXd acc = Eigen::VectorXd::Ones(weights.rows());
  for (int i : set) acc += weights.col(i);
  Eigen::Index c = 0;
  const double mu = acc.cwiseAbs().maxCoeff(&c);
  if (character) *character = c;
  return mu;
}

SearchResult pair_search(const SearchRequest& req) {
  const int n = static_cast<int>(req.weights->cols());
  const int r = req.choose;
  std::atomic<bool> stop{false};
  if (r == 0) {
    Worker worker(req, stop);
    worker.run_first(0);
    return worker.out;
  }
  const int tasks = n - r + 1;
  std::vector<SearchResult> slots(std::max(tasks, 0));
  std::atomic<int> next{0};
  auto body = [&] {
    Worker worker(req, stop);
    for (int t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) {
      worker.out = SearchResult{};
      worker.run_first(t);
      slots[t] = std::move(worker.out);
      if (stop.load(std::memory_order_relaxed)) break;
    }
  };
  const int workers = std::clamp(req.workers, 1, std::max(tasks, 1));
  if (workers == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }

  // Merge in leading-pair order so the outcome does not depend on scheduling.
  SearchResult merged;
  for (auto& s : slots) {
    merged.examined += s.examined;
    merged.skipped += s.skipped;
    if (s.best > merged.best) {
      merged.best = s.best;
      merged.best_set = std::move(s.best_set);
      merged.best_character = s.best_character;
    }
    if (s.violation && !merged.violation) {
      merged.violation = true;
      merged.violation_set = std::move(s.violation_set);
    }
    for (auto& b : s.borderline) merged.borderline.push_back(std::move(b));
  }
  return merged;
}

}  // namespace ramanujan::detail
