#include "ladderlab/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <thread>

#include "ladderlab/search.hpp"

namespace ladderlab {

namespace {

struct TaskCancelled {};

struct Shared {
    std::atomic<unsigned long long> nodes{0};
    std::atomic<long long> min_complete{LLONG_MAX}; // least task index with a full avoider
    unsigned long long budget = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
};

struct TaskResult {
    bool complete = false;      // reached a full avoider of [1,Nmax]
    std::vector<int> avoider;
    long long best_depth = 0;
    std::vector<int> snapshot;  // first coloring of [1,best_depth] seen
};

class Engine {
public:
    Engine(const SortedWindow& window, TargetKind target, long long param, int r,
           long long Nmax, Shared& shared)
        : window_(window), target_(target), param_(param), r_(r), Nmax_(Nmax),
          shared_(shared), colors_(static_cast<std::size_t>(Nmax), -1),
          chain_(static_cast<std::size_t>(Nmax), 0) {}

    // True iff coloring position x with c completes the target structure,
    // given positions 1..x-1 already assigned.
    bool completes(long long x, int c) {
        if (target_ == TargetKind::Walk) {
            long long best = 1;
            for (long long s : window_.elements()) {
                if (s >= x) break;
                if (colors_[static_cast<std::size_t>(x - s - 1)] == c)
                    best = std::max(best, chain_[static_cast<std::size_t>(x - s - 1)] + 1);
            }
            chain_[static_cast<std::size_t>(x - 1)] = best;
            return best >= param_;
        }
        for (long long d : window_.elements()) {
            if ((param_ - 1) * d >= x) break;
            bool mono = true;
            for (long long i = 1; i < param_; ++i)
                if (colors_[static_cast<std::size_t>(x - i * d - 1)] != c) {
                    mono = false;
                    break;
                }
            if (mono) return true;
        }
        return false;
    }

    void load_prefix(const std::vector<int>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            colors_[i] = prefix[i];
            if (target_ == TargetKind::Walk)
                completes(static_cast<long long>(i + 1), prefix[i]); // refresh chain
        }
    }

    TaskResult run(const std::vector<int>& prefix, int maxused, long long task_index) {
        task_index_ = task_index;
        load_prefix(prefix);
        result_ = TaskResult{};
        result_.best_depth = static_cast<long long>(prefix.size());
        result_.snapshot = prefix;
        dfs(static_cast<long long>(prefix.size()) + 1, maxused);
        shared_.nodes.fetch_add(local_nodes_ - flushed_, std::memory_order_relaxed);
        flushed_ = local_nodes_;
        return std::move(result_);
    }

private:
    void tick(long long depth) {
        if ((++local_nodes_ & 1023) == 0) {
            shared_.nodes.fetch_add(1024, std::memory_order_relaxed);
            flushed_ += 1024;
            if (shared_.nodes.load(std::memory_order_relaxed) > shared_.budget)
                throw Interrupted("node budget exhausted", depth - 1,
                                  shared_.nodes.load(std::memory_order_relaxed));
            if (shared_.has_deadline &&
                std::chrono::steady_clock::now() > shared_.deadline)
                throw Interrupted("time limit exceeded", depth - 1,
                                  shared_.nodes.load(std::memory_order_relaxed));
            if (shared_.min_complete.load(std::memory_order_relaxed) < task_index_)
                throw TaskCancelled{};
        }
    }

    bool dfs(long long x, int maxused) { // returns true when a full avoider is found
        if (x > Nmax_) {
            result_.complete = true;
            result_.avoider.assign(colors_.begin(),
                                   colors_.begin() + static_cast<std::ptrdiff_t>(Nmax_));
            return true;
        }
        tick(x);
        if (x - 1 > result_.best_depth) {
            result_.best_depth = x - 1;
            result_.snapshot.assign(colors_.begin(),
                                    colors_.begin() + static_cast<std::ptrdiff_t>(x - 1));
        }
        int limit = std::min(maxused + 1, r_ - 1);
        for (int c = 0; c <= limit; ++c) {
            if (completes(x, c)) continue;
            colors_[static_cast<std::size_t>(x - 1)] = c;
            if (dfs(x + 1, std::max(maxused, c))) return true;
        }
        return false;
    }

    const SortedWindow& window_;
    TargetKind target_;
    long long param_;
    int r_;
    long long Nmax_;
    Shared& shared_;
    std::vector<int> colors_;
    std::vector<long long> chain_;
    TaskResult result_;
    long long task_index_ = 0;
    unsigned long long local_nodes_ = 0;
    unsigned long long flushed_ = 0;
};

struct Task {
    std::vector<int> prefix;
    int maxused;
};

// Survivor prefixes at a fixed split depth, in canonical DFS order. The split
// rule depends only on the instance, never on the worker count.
struct SplitPlan {
    std::vector<Task> tasks;
    long long depth = 0;           // all tasks share this prefix length
    long long dead_depth = -1;     // >= 0 when the tree dies before the split depth
    std::vector<int> dead_snapshot;
};

SplitPlan split_tasks(const SortedWindow& window, TargetKind target, long long param, int r,
                      long long Nmax, Shared& shared) {
    constexpr long long kMaxSplitDepth = 12;
    constexpr std::size_t kEnoughTasks = 256;
    long long max_depth = std::min(kMaxSplitDepth, Nmax);

    Engine probe(window, target, param, r, Nmax, shared);
    SplitPlan plan;
    plan.tasks.push_back({{}, -1});
    while (plan.depth < max_depth && plan.tasks.size() < kEnoughTasks) {
        std::vector<Task> next;
        for (const Task& t : plan.tasks) {
            probe.load_prefix(t.prefix);
            long long x = plan.depth + 1;
            int limit = std::min(t.maxused + 1, r - 1);
            for (int c = 0; c <= limit; ++c) {
                if (probe.completes(x, c)) continue;
                Task child = t;
                child.prefix.push_back(c);
                child.maxused = std::max(t.maxused, c);
                next.push_back(std::move(child));
            }
        }
        if (next.empty()) {
            plan.dead_depth = plan.depth;
            plan.dead_snapshot = plan.tasks.front().prefix;
            plan.tasks.clear();
            return plan;
        }
        plan.tasks = std::move(next);
        ++plan.depth;
    }
    return plan;
}

ThresholdResult run_threshold(const SetExprPtr& expr, TargetKind target, long long param,
                              int r, long long Nmax, const EngineLimits& limits) {
    if (param < 1 || r < 1 || Nmax < 1)
        throw std::invalid_argument("threshold parameters must be positive");
    SortedWindow window = materialize(expr, Nmax);

    Shared shared;
    shared.budget = limits.node_budget;
    if (limits.time_limit_ms > 0) {
        shared.has_deadline = true;
        shared.deadline = std::chrono::steady_clock::now() +
                          std::chrono::milliseconds(limits.time_limit_ms);
    }

    ThresholdResult result;
    result.target = target;
    result.expr = render(expr);
    result.r = r;
    result.param = param;

    SplitPlan plan = split_tasks(window, target, param, r, Nmax, shared);
    std::vector<std::optional<TaskResult>> outcomes(plan.tasks.size());

    if (plan.dead_depth < 0) {
        long long ntasks = static_cast<long long>(plan.tasks.size());
        std::atomic<long long> next_task{0};
        std::exception_ptr error;
        std::mutex error_mutex;

        auto work = [&]() {
            Engine engine(window, target, param, r, Nmax, shared);
            for (;;) {
                long long i = next_task.fetch_add(1);
                if (i >= ntasks) return;
                if (shared.min_complete.load() < i) continue; // outcome already decided
                try {
                    TaskResult tr = engine.run(plan.tasks[static_cast<std::size_t>(i)].prefix,
                                               plan.tasks[static_cast<std::size_t>(i)].maxused,
                                               i);
                    if (tr.complete) {
                        long long cur = shared.min_complete.load();
                        while (i < cur && !shared.min_complete.compare_exchange_weak(cur, i)) {
                        }
                    }
                    outcomes[static_cast<std::size_t>(i)] = std::move(tr);
                } catch (const TaskCancelled&) {
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    shared.min_complete.store(-1); // stop everyone
                    return;
                }
            }
        };

        int workers = std::max(1, limits.workers);
        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
        if (error) std::rethrow_exception(error);
    }

    result.nodes = shared.nodes.load();

    // Merge in task order; identical to a sequential left-to-right search.
    long long complete_idx = -1;
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        if (outcomes[i] && outcomes[i]->complete) {
            complete_idx = static_cast<long long>(i);
            break;
        }
    if (complete_idx >= 0) {
        result.outcome = ThresholdResult::Outcome::Exceeded;
        result.N = Nmax;
        result.coloring.N = Nmax;
        result.coloring.r = r;
        result.coloring.colors = outcomes[static_cast<std::size_t>(complete_idx)]->avoider;
        return result;
    }

    long long best_depth = plan.dead_depth >= 0 ? plan.dead_depth : 0;
    std::vector<int> snapshot = plan.dead_snapshot;
    for (const auto& tr : outcomes) {
        if (tr && tr->best_depth > best_depth) {
            best_depth = tr->best_depth;
            snapshot = tr->snapshot;
        }
    }
    result.outcome = ThresholdResult::Outcome::Found;
    result.N = best_depth + 1;
    result.coloring.N = best_depth;
    result.coloring.r = r;
    result.coloring.colors = std::move(snapshot);
    return result;
}

} // namespace

ThresholdResult vdw_threshold(const SetExprPtr& expr, long long L, int r, long long Nmax,
                              const EngineLimits& limits) {
    return run_threshold(expr, TargetKind::Ap, L, r, Nmax, limits);
}

ThresholdResult walk_threshold(const SetExprPtr& expr, long long m, int r, long long Nmax,
                               const EngineLimits& limits) {
    return run_threshold(expr, TargetKind::Walk, m, r, Nmax, limits);
}

Certificate threshold_certificate(const ThresholdResult& result) {
    Certificate cert;
    cert.claim = Claim::Threshold;
    cert.expr = result.expr;
    cert.N = result.N;
    cert.r = result.r;
    cert.param = result.param;
    cert.coloring = result.coloring;
    cert.target = result.target == TargetKind::Ap ? "ap" : "walk";
    cert.outcome = result.outcome == ThresholdResult::Outcome::Found ? "found" : "exceeded";
    return cert;
}

WalkabilityReport walkability_report(const SetExprPtr& expr, long long k, long long Nmax,
                                     long long m, const EngineLimits& limits,
                                     long long window_cap) {
    WalkabilityReport report;
    SortedWindow window = materialize(expr, Nmax, window_cap);
    try {
        IntervalPartition part = interval_partition(window, k);
        Coloring col = adversarial_coloring(window, k, part);
        WalkWitness longest = longest_mono_walk(col, window);
        Certificate cert;
        cert.claim = Claim::NoMonoWalk;
        cert.expr = render(expr);
        cert.N = Nmax;
        cert.r = static_cast<int>(k) + 2;
        cert.param = static_cast<long long>(longest.vertices.size()) + 1;
        cert.coloring = std::move(col);
        cert.partition = part.intervals;
        report.adversarial = std::move(cert);
    } catch (const GapConditionUnverifiable& e) {
        report.refusal = e.what();
    } catch (const WindowTooSmall& e) {
        report.refusal = e.what();
    }
    report.threshold = walk_threshold(expr, m, static_cast<int>(k) + 1, Nmax, limits);
    report.threshold_cert = threshold_certificate(report.threshold);
    return report;
}

} // namespace ladderlab
