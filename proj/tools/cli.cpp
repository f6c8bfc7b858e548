#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mhc/mhc.hpp"

namespace mhc::cli {

namespace {

/// Invalid invocation or input; reported on stderr with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError(path + ": cannot open file for writing");
    file << text;
    if (!file.flush()) throw UsageError(path + ": write failed");
}

std::string diagnostics_text(const std::string& source, const std::vector<ParseDiagnostic>& diagnostics) {
    std::string text;
    for (const auto& d : diagnostics) text += source + ":" + to_string(d) + "\n";
    return text;
}

Automaton load_automaton(const std::string& path) {
    auto parsed = parse_automaton(read_file(path));
    if (!parsed) {
        auto text = diagnostics_text(path, parsed.diagnostics);
        text.pop_back();
        throw UsageError(text);
    }
    return std::move(*parsed.value);
}

DeviceEnvironment load_devices(const std::vector<std::string>& paths) {
    // Every file is parsed before any binding so that all problems surface together.
    std::vector<Automaton> devices;
    std::string problems;
    for (const auto& path : paths) {
        try {
            devices.push_back(load_automaton(path));
        } catch (const UsageError& e) {
            problems += std::string(e.what()) + "\n";
        }
    }
    if (!problems.empty()) {
        problems.pop_back();
        throw UsageError(problems);
    }
    DeviceEnvironment env;
    for (const auto& a : devices) env.bind(a);
    return env;
}

CompositionExpr load_expression(const std::string& text) {
    auto parsed = parse_expression(text);
    if (!parsed) {
        auto msg = diagnostics_text("expression", parsed.diagnostics);
        msg.pop_back();
        throw UsageError(msg);
    }
    return *parsed.value;
}

Word load_word(const std::string& text, const std::set<Symbol>& alphabet) {
    auto parsed = parse_word(text, alphabet);
    if (!parsed) {
        auto msg = diagnostics_text("input", parsed.diagnostics);
        msg.pop_back();
        throw UsageError(msg);
    }
    return *parsed.value;
}

std::string device_text(const DeviceRef& d) {
    return d.label + " [" + (d.path.empty() ? std::string("root") : join_path(d.path)) + "]";
}

/// Shared flags of the commands that evaluate an expression.
struct ExprArgs {
    std::vector<std::string> devices;
    std::string expr;

    void add_to(CLI::App* cmd) {
        cmd->add_option("-d,--device", devices, "Automaton file; binds the device under its 'name'")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("-e,--expr", expr, "Composition expression, e.g. \"N1 ; N2 | N1\"")->required();
    }

    Automaton elaborated(DeviceEnvironment& env, CompositionExpr& e) const {
        env = load_devices(devices);
        e = load_expression(expr);
        return elaborate(e, env);
    }
};

std::string subset_text(const SubsetState& s) {
    std::string text = "{";
    for (std::size_t i = 0; i < s.size(); ++i) text += (i ? ", " : "") + to_string(s[i]);
    return text + "}";
}

}  // namespace

std::string render_trace_text(const ControlTrace& trace, const std::set<Symbol>& alphabet) {
    std::ostringstream out;
    out << "input: " << render_word(trace.input, alphabet) << '\n';
    for (const auto& ev : trace.events) {
        switch (ev.kind) {
            case TraceEvent::Kind::activate:
                out << "activate " << device_text(ev.device) << '\n';
                break;
            case TraceEvent::Kind::step:
                out << "step     " << device_text(ev.device) << ": " << to_string(ev.from) << " -" << ev.symbol.text()
                    << "-> " << to_string(ev.to) << '\n';
                break;
            case TraceEvent::Kind::handoff:
                out << "handoff  " << device_text(ev.device) << " => " << device_text(ev.target) << ": "
                    << to_string(ev.from) << " -eps-> " << to_string(ev.to) << '\n';
                break;
            case TraceEvent::Kind::verdict:
                out << "verdict  " << device_text(ev.device) << ": " << (ev.accepted ? "accept" : "reject") << '\n';
                break;
        }
    }
    out << "result: " << (trace.overall ? "accept" : "reject") << '\n';
    return out.str();
}

std::string render_trace_json(const ControlTrace& trace, const std::set<Symbol>& alphabet) {
    using nlohmann::json;
    json events = json::array();
    for (const auto& ev : trace.events) {
        json j;
        j["kind"] = std::string(to_string(ev.kind));
        j["device"] = join_path(ev.device.path);
        j["name"] = ev.device.label;
        switch (ev.kind) {
            case TraceEvent::Kind::step:
            case TraceEvent::Kind::handoff:
                j["from"] = to_string(ev.from);
                j["letter"] = std::string(ev.symbol.text());
                j["to"] = to_string(ev.to);
                if (ev.kind == TraceEvent::Kind::handoff) {
                    j["to_device"] = join_path(ev.target.path);
                    j["to_name"] = ev.target.label;
                }
                break;
            case TraceEvent::Kind::verdict:
                j["accepted"] = ev.accepted;
                break;
            case TraceEvent::Kind::activate:
                break;
        }
        events.push_back(std::move(j));
    }
    json doc;
    doc["input"] = render_word(trace.input, alphabet);
    doc["accepted"] = trace.overall;
    doc["events"] = std::move(events);
    return doc.dump(2) + "\n";
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compose epsilon-NFAs as black-box devices and analyse the composites", "mhc"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    std::vector<std::string> check_files;
    auto* check = app.add_subcommand("check", "Validate automaton files");
    check->add_option("files", check_files, "Automaton files")->required();

    ExprArgs accept_args;
    std::string accept_input;
    auto* accept = app.add_subcommand("accept", "Elaborate an expression and run it on an input");
    accept_args.add_to(accept);
    accept->add_option("-i,--input", accept_input, "Input word ('eps' for the empty word)")->required();

    ExprArgs trace_args;
    std::string trace_input;
    bool trace_json = false;
    auto* trace = app.add_subcommand("trace", "Show device activations and control handoffs");
    trace_args.add_to(trace);
    trace->add_option("-i,--input", trace_input, "Input word ('eps' for the empty word)")->required();
    trace->add_flag("--json", trace_json, "Emit JSON");

    ExprArgs equiv_args;
    std::string equiv_other;
    auto* equiv = app.add_subcommand("equiv", "Decide language equivalence of two expressions");
    equiv_args.add_to(equiv);
    equiv->add_option("--e2", equiv_other, "Second expression (also accepted as -e2)")->required();

    ExprArgs compose_args;
    std::string compose_out, compose_name;
    auto* compose = app.add_subcommand("compose", "Write the elaborated composite automaton");
    compose_args.add_to(compose);
    compose->add_option("-o,--output", compose_out, "Output file ('-' for stdout)");
    compose->add_option("-n,--name", compose_name, "Name recorded in the written file");

    ExprArgs dfa_args;
    std::string dfa_out, dfa_name;
    auto* dfa = app.add_subcommand("dfa", "Write the determinized composite automaton");
    dfa_args.add_to(dfa);
    dfa->add_option("-o,--output", dfa_out, "Output file ('-' for stdout)");
    dfa->add_option("-n,--name", dfa_name, "Name recorded in the written file");

    ExprArgs dot_args;
    std::string dot_out;
    bool dot_group = false;
    auto* dot = app.add_subcommand("dot", "Export the composite as a DOT graph");
    dot_args.add_to(dot);
    dot->add_flag("--group", dot_group, "Box each operand's states into a cluster");
    dot->add_option("-o,--output", dot_out, "Output file ('-' for stdout)");

    PropsOptions props_options;
    auto* props = app.add_subcommand("props", "Run the closure-law property suite on random automata");
    props->add_option("--seed", props_options.seed, "64-bit seed")->capture_default_str();
    props->add_option("--cases", props_options.cases, "Number of random automaton pairs")->capture_default_str();
    props->add_option("--max-len", props_options.max_len, "Longest word checked")
        ->capture_default_str()
        ->check(CLI::Range(0, 10));
    props->add_option("--threads", props_options.threads, "Worker threads (0 = all cores)")->capture_default_str();

    // "-e2" is spelled with a single dash; CLI11 only knows it as a long option.
    std::vector<std::string> args;
    for (const auto& a : raw_args) args.push_back(a == "-e2" ? "--e2" : a);
    std::reverse(args.begin(), args.end());

    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (*check) {
            int status = kSuccess;
            for (const auto& path : check_files) {
                try {
                    const auto a = load_automaton(path);
                    out << path << ": ok (" << a.name() << ", " << a.states().size() << " states, "
                        << a.transition_count() << " transitions)\n";
                } catch (const UsageError& e) {
                    err << e.what() << '\n';
                    status = kUsage;
                }
            }
            return status;
        }

        if (*accept) {
            DeviceEnvironment env;
            CompositionExpr e = CompositionExpr::device("_");
            const auto a = accept_args.elaborated(env, e);
            const bool ok = accepts(a, load_word(accept_input, a.alphabet()));
            out << (ok ? "accept" : "reject") << '\n';
            return ok ? kSuccess : kNegative;
        }

        if (*trace) {
            DeviceEnvironment env;
            CompositionExpr e = CompositionExpr::device("_");
            const auto a = trace_args.elaborated(env, e);
            const auto t = control_trace(e, env, load_word(trace_input, a.alphabet()));
            out << (trace_json ? render_trace_json(t, a.alphabet()) : render_trace_text(t, a.alphabet()));
            return t.overall ? kSuccess : kNegative;
        }

        if (*equiv) {
            DeviceEnvironment env;
            CompositionExpr e = CompositionExpr::device("_");
            const auto a = equiv_args.elaborated(env, e);
            const auto b = elaborate(load_expression(equiv_other), env);
            const auto verdict = equivalent(a, b);
            if (verdict.equivalent) {
                out << "equivalent\n";
                return kSuccess;
            }
            std::set<Symbol> letters = a.alphabet();
            letters.insert(b.alphabet().begin(), b.alphabet().end());
            const auto& w = *verdict.counterexample;
            const bool in_first = std::all_of(w.begin(), w.end(), [&](const Symbol& x) { return a.has_letter(x); }) &&
                                  accepts(a, w);
            out << "inequivalent\n";
            out << "counterexample: " << render_word(w, letters) << '\n';
            out << "accepted by: " << (in_first ? "first" : "second") << '\n';
            return kNegative;
        }

        if (*compose) {
            DeviceEnvironment env;
            CompositionExpr e = CompositionExpr::device("_");
            auto a = compose_args.elaborated(env, e);
            a = a.renamed(compose_name.empty() ? render_expression(e) : compose_name);
            // Names are single tokens in the file format.
            auto name = a.name();
            std::erase(name, ' ');
            write_output(compose_out, render_automaton(a.renamed(name)), out);
            return kSuccess;
        }

        if (*dfa) {
            DeviceEnvironment env;
            CompositionExpr e = CompositionExpr::device("_");
            const auto a = dfa_args.elaborated(env, e);
            const Dfa d = determinize(a);
            std::string name = dfa_name.empty() ? "dfa(" + render_expression(e) + ")" : dfa_name;
            std::erase(name, ' ');
            std::string text;
            for (std::size_t i = 0; i < d.size(); ++i)
                text += "# d" + std::to_string(i) + " = " + subset_text(d.labels[i]) + "\n";
            text += render_automaton(to_automaton(d, name));
            write_output(dfa_out, text, out);
            return kSuccess;
        }

        if (*dot) {
            DeviceEnvironment env;
            CompositionExpr e = CompositionExpr::device("_");
            const auto a = dot_args.elaborated(env, e);
            write_output(dot_out, render_dot(a, dot_group), out);
            return kSuccess;
        }

        if (*props) {
            const auto report = run_closure_suite(props_options);
            out << "seed: " << props_options.seed << '\n';
            out << "max-len: " << props_options.max_len << '\n';
            out << render_report(report);
            return report.passed() ? kSuccess : kNegative;
        }
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error[" << e.code() << "]: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace mhc::cli
