#include "perm321/bijection.hpp"

#include <algorithm>
#include <optional>

#include "ordered_parallel.hpp"
#include "perm321/errors.hpp"
#include "perm321/patterns.hpp"

namespace perm321 {
namespace {

bool is_range(std::span<const Value> values, Value lo, Value hi) {
    if (static_cast<long long>(hi) - lo + 1 != static_cast<long long>(values.size())) return false;
    std::vector<bool> seen(values.size(), false);
    for (const Value v : values) {
        if (v < lo || v > hi) return false;
        const auto index = static_cast<std::size_t>(v - lo);
        if (seen[index]) return false;
        seen[index] = true;
    }
    return true;
}

std::optional<std::string> find_violation(int b, std::span<const Value> sigma1, std::span<const Value> sigma2,
                                          int n) {
    if (b < 2 || b > n - 1) {
        return "b = " + std::to_string(b) + " outside 2.." + std::to_string(n - 1);
    }
    if (!is_range(sigma1, 1, b)) return "sigma1 is not a permutation of 1.." + std::to_string(b);
    if (sigma1.back() == b) return "sigma1 ends with b";
    if (!is_avoiding_321(sigma1)) return "sigma1 contains 321";
    if (!is_range(sigma2, b, n)) {
        return "sigma2 support is not " + std::to_string(b) + ".." + std::to_string(n);
    }
    if (sigma2.front() == b) return "sigma2 starts with b";
    if (!is_avoiding_321(sigma2)) return "sigma2 contains 321";
    return std::nullopt;
}

// Writes p1 c p2 b p3 a p4 into out. Inputs must already be valid.
void splice(int b, std::span<const Value> sigma1, std::span<const Value> sigma2, std::vector<Value>& out) {
    out.clear();
    const auto b_in_first = std::find(sigma1.begin(), sigma1.end(), b);
    const auto b_in_second = std::find(sigma2.begin(), sigma2.end(), b);
    const Value a = sigma1.back();
    const Value c = sigma2.front();
    out.insert(out.end(), sigma1.begin(), b_in_first);
    out.push_back(c);
    out.insert(out.end(), b_in_first + 1, sigma1.end() - 1);
    out.push_back(b);
    out.insert(out.end(), sigma2.begin() + 1, b_in_second);
    out.push_back(a);
    out.insert(out.end(), b_in_second + 1, sigma2.end());
}

void compose_into(int b, std::span<const Value> sigma1, std::span<const Value> sigma2, int n,
                  std::vector<Value>& out) {
    if (const auto problem = find_violation(b, sigma1, sigma2, n)) {
        throw Error(ErrorKind::ConstraintViolation, *problem);
    }
    splice(b, sigma1, sigma2, out);
    if (detail::count_321_middle(out) != 1) {
        throw Error(ErrorKind::InternalConstraintViolation,
                    "composed permutation " + format_one_line(out) + " does not have exactly one 321");
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

std::string_view expect_field(std::string_view part, std::string_view key) {
    part = trim(part);
    if (part.substr(0, key.size()) != key) {
        throw Error(ErrorKind::ParseError, "expected field '" + std::string(key) + "'");
    }
    return part.substr(key.size());
}

}  // namespace

void validate(const Decomposition& d) {
    if (const auto problem = find_violation(d.b, d.sigma1.values(), d.sigma2.values(), d.n)) {
        throw Error(ErrorKind::ConstraintViolation, *problem);
    }
}

Decomposition decompose(const Permutation& perm) {
    Occurrence321 occ;
    try {
        occ = find_unique_321(perm);
    } catch (const Error& e) {
        throw Error(ErrorKind::NoUnique321, e.what());
    }
    const auto values = perm.values();
    const auto [i, j, k] = occ.positions;
    const auto at = [&values](int pos) { return values.begin() + pos; };

    std::vector<Value> sigma1(values.begin(), at(i - 1));
    sigma1.push_back(occ.b);
    sigma1.insert(sigma1.end(), at(i), at(j - 1));
    sigma1.push_back(occ.a);

    std::vector<Value> sigma2{occ.c};
    sigma2.insert(sigma2.end(), at(j), at(k - 1));
    sigma2.push_back(occ.b);
    sigma2.insert(sigma2.end(), at(k), values.end());

    const int n = perm.size();
    if (const auto problem = find_violation(occ.b, sigma1, sigma2, n)) {
        throw Error(ErrorKind::InternalConstraintViolation,
                    "decomposition of " + perm.to_text() + ": " + *problem);
    }
    return Decomposition{occ.b, Permutation::from_one_line(sigma1), ValueSequence::from_values(sigma2), n};
}

Permutation compose(const Decomposition& d) {
    std::vector<Value> out;
    compose_into(d.b, d.sigma1.values(), d.sigma2.values(), d.n, out);
    return Permutation::from_one_line(out);
}

void enumerate_noonan(int n, const SequenceSink& sink, const GenerationOptions& options) {
    if (n > options.cap) {
        throw Error(ErrorKind::CapExceeded,
                    "length " + std::to_string(n) + " exceeds generation cap " + std::to_string(options.cap));
    }
    if (n < 3) return;

    const auto width = static_cast<std::size_t>(n);
    GenerationOptions inner = options;
    inner.threads = 1;

    // One task per middle value b = task + 2; each fills a flat buffer.
    const auto produce = [n, inner, width](std::size_t task) {
        const int b = static_cast<int>(task) + 2;
        std::vector<std::vector<Value>> firsts;
        enumerate_sigma1(b, [&firsts](std::span<const Value> s) { firsts.emplace_back(s.begin(), s.end()); },
                         inner);
        std::vector<Value> seconds;
        enumerate_sigma2(
            b, n, [&seconds](std::span<const Value> s) { seconds.insert(seconds.end(), s.begin(), s.end()); },
            inner);
        const auto second_width = static_cast<std::size_t>(n - b + 1);
        std::vector<Value> flat;
        flat.reserve(firsts.size() * (seconds.size() / second_width) * width);
        std::vector<Value> composed;
        for (const auto& first : firsts) {
            for (std::size_t off = 0; off < seconds.size(); off += second_width) {
                compose_into(b, first, std::span<const Value>(seconds).subspan(off, second_width), n, composed);
                flat.insert(flat.end(), composed.begin(), composed.end());
            }
        }
        return flat;
    };
    detail::run_ordered<std::vector<Value>>(
        static_cast<std::size_t>(n - 2), options.threads, produce,
        [&sink, width](std::size_t, std::vector<Value>&& flat) {
            const std::span<const Value> all(flat);
            for (std::size_t off = 0; off < all.size(); off += width) sink(all.subspan(off, width));
        });
}

std::vector<Permutation> collect_noonan(int n, const GenerationOptions& options) {
    std::vector<Permutation> out;
    enumerate_noonan(n, [&out](std::span<const Value> p) { out.push_back(Permutation::from_one_line(p)); },
                     options);
    return out;
}

std::string format_decomposition(const Decomposition& d) {
    return "b=" + std::to_string(d.b) + " | sigma1=" + d.sigma1.to_text() + " | sigma2=" + d.sigma2.to_text();
}

Decomposition parse_decomposition(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t bar = text.find('|'); bar != std::string_view::npos; bar = text.find('|', start)) {
        parts.push_back(text.substr(start, bar - start));
        start = bar + 1;
    }
    parts.push_back(text.substr(start));
    if (parts.size() != 3) {
        throw Error(ErrorKind::ParseError, "decomposition needs three '|'-separated fields");
    }
    const auto b_values = parse_integers(expect_field(parts[0], "b="));
    if (b_values.size() != 1) throw Error(ErrorKind::ParseError, "field b must hold one integer");

    Decomposition d;
    d.b = b_values.front();
    d.sigma1 = Permutation::from_text(expect_field(parts[1], "sigma1="));
    d.sigma2 = ValueSequence::from_text(expect_field(parts[2], "sigma2="));
    d.n = d.b + d.sigma2.size() - 1;
    return d;
}

}  // namespace perm321
