#include "perm321/avoiders.hpp"

#include <string>

#include "ordered_parallel.hpp"
#include "perm321/errors.hpp"

namespace perm321 {
namespace {

void check_length(int n, int cap) {
    if (n < 0) throw Error(ErrorKind::InvalidRange, "length must be non-negative, got " + std::to_string(n));
    if (n > cap) {
        throw Error(ErrorKind::CapExceeded,
                    "length " + std::to_string(n) + " exceeds generation cap " + std::to_string(cap));
    }
}

// Lexicographic backtracking over one-line prefixes. A prefix is kept only if
// it avoids 321 and every unused value exceeds the dominated maximum, which
// is exactly the condition for it to extend to a full avoider.
class AvoiderSearch {
public:
    AvoiderSearch(int n, const SequenceSink& sink)
        : n_(n), used_(static_cast<std::size_t>(n) + 1, false), sink_(sink) {
        prefix_.reserve(static_cast<std::size_t>(n));
    }

    void run_all() { descend(AvoidanceTracker{}); }

    void run_from(Value first) {
        AvoidanceTracker state;
        state.push(first);
        place(first);
        descend(state);
        unplace(first);
    }

private:
    void descend(const AvoidanceTracker& state) {
        if (static_cast<int>(prefix_.size()) == n_) {
            sink_(prefix_);
            return;
        }
        for (Value v = 1; v <= n_; ++v) {
            if (used_[static_cast<std::size_t>(v)] || state.closes_321(v)) continue;
            AvoidanceTracker next = state;
            next.push(v);
            place(v);
            if (smallest_unused() > next.dominated_max()) descend(next);
            unplace(v);
        }
    }

    Value smallest_unused() const {
        for (Value v = 1; v <= n_; ++v) {
            if (!used_[static_cast<std::size_t>(v)]) return v;
        }
        return n_ + 1;
    }

    void place(Value v) {
        used_[static_cast<std::size_t>(v)] = true;
        prefix_.push_back(v);
    }

    void unplace(Value v) {
        used_[static_cast<std::size_t>(v)] = false;
        prefix_.pop_back();
    }

    int n_;
    std::vector<bool> used_;
    std::vector<Value> prefix_;
    const SequenceSink& sink_;
};

}  // namespace

bool is_avoiding_321(std::span<const Value> values) {
    AvoidanceTracker state;
    for (const Value v : values) {
        if (state.closes_321(v)) return false;
        state.push(v);
    }
    return true;
}

bool is_avoiding_321(const Permutation& perm) { return is_avoiding_321(perm.values()); }

bool is_avoiding_321(const ValueSequence& seq) { return is_avoiding_321(seq.values()); }

bool extends_to_avoider(std::span<const Value> prefix, int n) {
    std::vector<bool> used(static_cast<std::size_t>(std::max(n, 0)) + 1, false);
    AvoidanceTracker state;
    for (const Value v : prefix) {
        if (v < 1 || v > n || used[static_cast<std::size_t>(v)]) {
            throw Error(ErrorKind::InvalidRange, "prefix is not a partial arrangement of 1.." + std::to_string(n));
        }
        used[static_cast<std::size_t>(v)] = true;
        if (state.closes_321(v)) return false;
        state.push(v);
    }
    for (Value v = 1; v <= n; ++v) {
        if (!used[static_cast<std::size_t>(v)]) return v > state.dominated_max();
    }
    return true;
}

void enumerate_avoiders(int n, const SequenceSink& sink, const GenerationOptions& options) {
    check_length(n, options.cap);
    if (n == 0 || detail::resolve_threads(options.threads) <= 1) {
        AvoiderSearch(n, sink).run_all();
        return;
    }
    const auto width = static_cast<std::size_t>(n);
    detail::run_ordered<std::vector<Value>>(
        width, options.threads,
        [n](std::size_t task) {
            std::vector<Value> flat;
            const SequenceSink collect = [&flat](std::span<const Value> item) {
                flat.insert(flat.end(), item.begin(), item.end());
            };
            AvoiderSearch(n, collect).run_from(static_cast<Value>(task + 1));
            return flat;
        },
        [&sink, width](std::size_t, std::vector<Value>&& flat) {
            const std::span<const Value> all(flat);
            for (std::size_t offset = 0; offset < all.size(); offset += width) {
                sink(all.subspan(offset, width));
            }
        });
}

void enumerate_sigma1(int b, const SequenceSink& sink, const GenerationOptions& options) {
    if (b < 2) throw Error(ErrorKind::InvalidB, "sigma1 requires b >= 2, got " + std::to_string(b));
    check_length(b, options.cap);
    enumerate_avoiders(
        b,
        [&sink, b](std::span<const Value> perm) {
            if (perm.back() != b) sink(perm);
        },
        options);
}

void enumerate_sigma2(int b, int n, const SequenceSink& sink, const GenerationOptions& options) {
    if (b < 2 || b > n - 1) {
        throw Error(ErrorKind::InvalidRange, "sigma2 requires 2 <= b <= n-1, got b = " + std::to_string(b) +
                                                 ", n = " + std::to_string(n));
    }
    const int length = n - b + 1;
    check_length(length, options.cap);
    std::vector<Value> shifted(static_cast<std::size_t>(length));
    enumerate_avoiders(
        length,
        [&](std::span<const Value> perm) {
            if (perm.front() == 1) return;
            for (std::size_t i = 0; i < perm.size(); ++i) shifted[i] = perm[i] + (b - 1);
            sink(shifted);
        },
        options);
}

std::vector<Permutation> collect_avoiders(int n, const GenerationOptions& options) {
    std::vector<Permutation> out;
    enumerate_avoiders(n, [&out](std::span<const Value> p) { out.push_back(Permutation::from_one_line(p)); },
                       options);
    return out;
}

std::vector<Permutation> collect_sigma1(int b, const GenerationOptions& options) {
    std::vector<Permutation> out;
    enumerate_sigma1(b, [&out](std::span<const Value> p) { out.push_back(Permutation::from_one_line(p)); },
                     options);
    return out;
}

std::vector<ValueSequence> collect_sigma2(int b, int n, const GenerationOptions& options) {
    std::vector<ValueSequence> out;
    enumerate_sigma2(b, n, [&out](std::span<const Value> s) { out.push_back(ValueSequence::from_values(s)); },
                     options);
    return out;
}

}  // namespace perm321
