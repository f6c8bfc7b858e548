#include "mhc/props.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "mhc/algebra.hpp"
#include "mhc/analysis.hpp"
#include "mhc/textio.hpp"
#include "mhc/trace.hpp"

namespace mhc {

std::pair<Automaton, Automaton> props_case(const PropsOptions& options, std::size_t index) {
    AutomatonGenerator gen(mix_seed(options.seed, index));
    Automaton a = gen.next(options.shape, "A");
    Automaton b = gen.next(options.shape, "B");
    return {std::move(a), std::move(b)};
}

namespace {

struct CaseResult {
    std::size_t checks = 0;
    std::vector<PropsFailure> failures;
};

void all_words(const std::vector<Symbol>& letters, std::size_t max_len, const auto& visit) {
    Word w;
    const auto rec = [&](const auto& self, std::size_t remaining) -> void {
        visit(static_cast<const Word&>(w));
        if (remaining == 0) return;
        for (const auto& x : letters) {
            w.push_back(x);
            self(self, remaining - 1);
            w.pop_back();
        }
    };
    rec(rec, max_len);
}

CaseResult run_case(const PropsOptions& options, std::size_t index) {
    auto [a, b] = props_case(options, index);
    const Automaton left = instantiate(a, kLeftSegment);
    const Automaton right = instantiate(b, kRightSegment);
    const Automaton seq = concat(left, right);
    const Automaton par = parallel(left, right);
    const std::vector<Symbol> letters(seq.alphabet().begin(), seq.alphabet().end());

    CaseResult result;
    std::vector<PropsFailure> found;
    all_words(letters, options.max_len, [&](const Word& w) {
        result.checks += 2;
        const bool seq_composite = accepts(seq, w);
        const bool seq_oracle = !splits(a, b, w).empty();
        if (seq_composite != seq_oracle) found.push_back({index, "concat-split", w, seq_composite, seq_oracle, a, b});
        const bool par_composite = accepts(par, w);
        const auto [in_a, in_b] = parallel_verdicts(a, b, w);
        if (par_composite != (in_a || in_b))
            found.push_back({index, "parallel-union", w, par_composite, in_a || in_b, a, b});
    });
    std::stable_sort(found.begin(), found.end(),
                     [](const auto& x, const auto& y) { return shortlex_less(x.input, y.input); });
    result.failures = std::move(found);
    return result;
}

}  // namespace

PropsReport run_closure_suite(const PropsOptions& options) {
    std::vector<CaseResult> results(options.cases);
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(options.cases, 1)));

    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t)
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < options.cases; i = next++) results[i] = run_case(options, i);
            });
    }

    PropsReport report;
    report.cases = options.cases;
    for (auto& r : results) {
        report.checks += r.checks;
        for (auto& f : r.failures) report.failures.push_back(std::move(f));
    }
    return report;
}

std::string render_report(const PropsReport& report) {
    std::ostringstream out;
    out << "cases: " << report.cases << '\n';
    out << "checks: " << report.checks << '\n';
    out << "failures: " << report.failures.size() << '\n';
    if (report.failures.empty()) return out.str();

    const auto& f = report.failures.front();
    std::set<Symbol> letters = f.left.alphabet();
    letters.insert(f.right.alphabet().begin(), f.right.alphabet().end());
    out << "first failure: case " << f.case_index << ", law " << f.law << ", input "
        << render_word(f.input, letters) << ", composite " << (f.composite ? "accept" : "reject") << ", oracle "
        << (f.oracle ? "accept" : "reject") << '\n';
    out << "--- left operand\n" << render_automaton(f.left);
    out << "--- right operand\n" << render_automaton(f.right);
    return out.str();
}

}  // namespace mhc
