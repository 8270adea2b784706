#include "perm321/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>

#include "perm321/avoiders.hpp"
#include "perm321/bijection.hpp"
#include "perm321/catalan.hpp"
#include "perm321/errors.hpp"
#include "perm321/oracle.hpp"
#include "perm321/patterns.hpp"

namespace perm321::cli {
namespace {

struct Settings {
    int threads = 1;
    bool progress = false;

    std::string perm;
    std::string pattern = "3 2 1";
    int n = 0;
    std::optional<int> b;
    std::optional<int> cap;
    std::string method = "closed";
    std::string family;
    std::string what;
    int max_n = 0;
    bool summary = false;
    std::string sigma1;
    std::string sigma2;
    std::uint64_t k = 1;
};

class LineWriter {
public:
    LineWriter(std::ostream& out, std::ostream& err, bool progress)
        : out_(out), err_(err), progress_(progress) {}

    void operator()(std::span<const Value> values) {
        line_ = format_one_line(values);
        line_.push_back('\n');
        out_.write(line_.data(), static_cast<std::streamsize>(line_.size()));
        if (progress_ && ++emitted_ % 100000 == 0) err_ << "progress: " << emitted_ << " lines\n";
    }

    void finish() {
        out_.flush();
        if (progress_) err_ << "progress: done, " << emitted_ << " lines\n";
    }

private:
    std::ostream& out_;
    std::ostream& err_;
    bool progress_;
    std::uint64_t emitted_ = 0;
    std::string line_;
};

GenerationOptions generation_options(const Settings& s) {
    GenerationOptions opts;
    opts.threads = s.threads;
    if (s.cap) opts.cap = *s.cap;
    return opts;
}

OracleOptions oracle_options(const Settings& s, std::ostream& err) {
    OracleOptions opts;
    opts.threads = s.threads;
    if (s.cap) {
        opts.cap = *s.cap;
        if (opts.cap > kDefaultOracleCap) {
            err << "warning: oracle cap raised to " << opts.cap << "; enumerating n! permutations may take a long time\n";
        }
    }
    if (s.progress) {
        opts.on_progress = [&err](std::size_t done, std::size_t total) {
            err << "progress: " << done << "/" << total << " partitions\n";
        };
    }
    return opts;
}

int run_count(const Settings& s, std::ostream& out) {
    const auto perm = Permutation::from_text(s.perm);
    const auto pattern = Permutation::from_text(s.pattern);
    out << count_pattern(perm, pattern) << '\n';
    return kExitOk;
}

int run_noonan(const Settings& s, std::ostream& out, std::ostream& err) {
    BigInt value;
    if (s.method == "closed") {
        value = noonan_closed(s.n);
    } else if (s.method == "catalan") {
        value = noonan_catalan_form(s.n);
    } else if (s.method == "convolution") {
        value = noonan_convolution(s.n);
    } else if (s.method == "oracle") {
        if (s.n < 1) throw Error(ErrorKind::InvalidRange, "noonan requires n >= 1");
        value = brute_count_exactly_k(s.n, Permutation::from_one_line({3, 2, 1}), 1, oracle_options(s, err));
    } else {
        if (s.n < 1) throw Error(ErrorKind::InvalidRange, "noonan requires n >= 1");
        std::uint64_t count = 0;
        enumerate_noonan(s.n, [&count](std::span<const Value>) { ++count; }, generation_options(s));
        value = count;
    }
    out << value << '\n';
    return kExitOk;
}

int run_verify(const Settings& s, std::ostream& out, std::ostream& err) {
    if (s.max_n < 0) throw Error(ErrorKind::InvalidRange, "max-n must be non-negative");
    const auto table = catalan_table(std::max(s.max_n, 0));
    int checked = 0;
    int failed = 0;
    for (int n = 3; n <= s.max_n; ++n) {
        const BigInt convolution = noonan_convolution(n, table);
        const BigInt catalan_form = noonan_catalan_form(n);
        const BigInt closed = noonan_closed(n);
        const bool ok = convolution == catalan_form && catalan_form == closed;
        ++checked;
        if (!ok) ++failed;
        if (!s.summary || !ok) {
            out << n << ' ' << closed << ' ' << (ok ? "PASS" : "FAIL") << '\n';
        }
    }
    out << "identity chain 3.." << s.max_n << ": " << (failed == 0 ? "PASS" : "FAIL") << " (" << checked
        << " checked, " << failed << " failed)\n";
    if (failed != 0) {
        err << "IdentityMismatch: " << failed << " value(s) of n disagree\n";
        return kExitDomainError;
    }
    return kExitOk;
}

int run_enumerate(const Settings& s, std::ostream& out, std::ostream& err) {
    LineWriter writer(out, err, s.progress);
    const SequenceSink sink = std::ref(writer);
    const auto opts = generation_options(s);
    if (s.family == "avoiders") {
        enumerate_avoiders(s.n, sink, opts);
    } else if (s.family == "sigma1") {
        enumerate_sigma1(s.b.value_or(s.n), sink, opts);
    } else if (s.family == "sigma2") {
        if (!s.b) throw CLI::RequiredError("--b is required for --family sigma2");
        enumerate_sigma2(*s.b, s.n, sink, opts);
    } else {
        enumerate_noonan(s.n, sink, opts);
    }
    writer.finish();
    return kExitOk;
}

int run_decompose(const Settings& s, std::ostream& out) {
    out << format_decomposition(decompose(Permutation::from_text(s.perm))) << '\n';
    return kExitOk;
}

int run_compose(const Settings& s, std::ostream& out) {
    Decomposition d;
    d.b = *s.b;
    d.sigma1 = Permutation::from_text(s.sigma1);
    d.sigma2 = ValueSequence::from_text(s.sigma2);
    d.n = d.b + d.sigma2.size() - 1;
    out << compose(d) << '\n';
    return kExitOk;
}

int run_oracle(const Settings& s, std::ostream& out, std::ostream& err) {
    const auto pattern = Permutation::from_text(s.pattern);
    out << brute_count_exactly_k(s.n, pattern, s.k, oracle_options(s, err)) << '\n';
    return kExitOk;
}

int run_seq(const Settings& s, std::ostream& out) {
    if (s.max_n < 0) throw Error(ErrorKind::InvalidRange, "max-n must be non-negative");
    if (s.what == "catalan") {
        const auto table = catalan_table(s.max_n);
        for (int n = 0; n <= s.max_n; ++n) out << n << ' ' << table[static_cast<std::size_t>(n)] << '\n';
    } else {
        for (int n = 1; n <= s.max_n; ++n) out << n << ' ' << noonan_closed(n) << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Permutation-pattern toolkit for permutations with exactly one 321 occurrence", "perm321"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--threads", s.threads, "Worker threads for enumeration and oracle (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--progress", s.progress, "Write progress to the error stream");

    auto* count = app.add_subcommand("count", "Count occurrences of a pattern in a permutation");
    count->add_option("--perm", s.perm, "Permutation in one-line notation")->required();
    count->add_option("--pattern", s.pattern, "Pattern in one-line notation");

    auto* noonan = app.add_subcommand("noonan", "Number of n-permutations with exactly one 321");
    noonan->add_option("--n", s.n, "Length")->required();
    noonan->add_option("--method", s.method, "Counting route")
        ->check(CLI::IsMember({"closed", "catalan", "convolution", "oracle", "bijection"}));
    noonan->add_option("--cap", s.cap, "Override the oracle or generation cap");

    auto* verify = app.add_subcommand("verify", "Check convolution = Catalan form = closed form for 3..max-n");
    verify->add_option("--max-n", s.max_n, "Largest n to check")->required();
    verify->add_flag("--summary", s.summary, "Print only failures and the summary line");

    auto* enumerate = app.add_subcommand("enumerate", "Stream a permutation family, one per line");
    enumerate->add_option("--family", s.family, "avoiders, sigma1, sigma2 or noonan")
        ->required()
        ->check(CLI::IsMember({"avoiders", "sigma1", "sigma2", "noonan"}));
    enumerate->add_option("--n", s.n, "Length (for sigma1, the size b when --b is absent)")->required();
    enumerate->add_option("--b", s.b, "Middle value b for sigma1/sigma2");
    enumerate->add_option("--cap", s.cap, "Override the generation cap");

    auto* decompose_cmd = app.add_subcommand("decompose", "Split a permutation with exactly one 321");
    decompose_cmd->add_option("--perm", s.perm, "Permutation in one-line notation")->required();

    auto* compose_cmd = app.add_subcommand("compose", "Rebuild a permutation from (b, sigma1, sigma2)");
    compose_cmd->add_option("--b", s.b, "Middle value b")->required();
    compose_cmd->add_option("--sigma1", s.sigma1, "Permutation of 1..b")->required();
    compose_cmd->add_option("--sigma2", s.sigma2, "Arrangement of b..n")->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force count of n-permutations with exactly k occurrences");
    oracle->add_option("--n", s.n, "Length")->required();
    oracle->add_option("--k", s.k, "Occurrence count");
    oracle->add_option("--pattern", s.pattern, "Pattern in one-line notation");
    oracle->add_option("--cap", s.cap, "Override the oracle cap");

    auto* seq = app.add_subcommand("seq", "Print 'n value' pairs of a sequence");
    seq->add_option("--what", s.what, "catalan or noonan")
        ->required()
        ->check(CLI::IsMember({"catalan", "noonan"}));
    seq->add_option("--max-n", s.max_n, "Largest n")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) return run_count(s, out);
        if (noonan->parsed()) return run_noonan(s, out, err);
        if (verify->parsed()) return run_verify(s, out, err);
        if (enumerate->parsed()) return run_enumerate(s, out, err);
        if (decompose_cmd->parsed()) return run_decompose(s, out);
        if (compose_cmd->parsed()) return run_compose(s, out);
        if (oracle->parsed()) return run_oracle(s, out, err);
        if (seq->parsed()) return run_seq(s, out);
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::ParseError ? kExitUsage : kExitDomainError;
    }
    return kExitUsage;
}

}  // namespace perm321::cli
