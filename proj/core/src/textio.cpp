#include "mhc/textio.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <tuple>

#include "mhc/error.hpp"

namespace mhc {

std::string to_string(const ParseDiagnostic& d) {
    return std::to_string(d.line) + ":" + std::to_string(d.column) + ": error[" + d.code + "]: " + d.message;
}

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize_line(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

struct StateRef {
    StateId id;
    std::size_t line;
    std::size_t column;
};

class AutomatonParser {
public:
    ParseResult<Automaton> run(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            const auto end = text.find('\n', start);
            auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            ++line_no;
            parse_line(tokenize_line(line), line_no);
            if (end == std::string_view::npos) break;
            start = end + 1;
        }
        last_line_ = std::max<std::size_t>(line_no, 1);
        return finish();
    }

private:
    void error(std::size_t line, std::size_t column, std::string code, std::string message) {
        diagnostics_.push_back({line, column, std::move(code), std::move(message)});
    }

    bool once(const char* section, bool& seen, std::size_t line, const Token& keyword) {
        if (seen) {
            error(line, keyword.column, "duplicate-section", std::string("section '") + section + "' appears more than once");
            return false;
        }
        seen = true;
        return true;
    }

    std::optional<StateId> state_token(const Token& t, std::size_t line) {
        try {
            return parse_state_id(t.text);
        } catch (const Error&) {
            error(line, t.column, "malformed-line", "'" + t.text + "' is not a valid state name");
            return std::nullopt;
        }
    }

    void parse_line(const std::vector<Token>& tokens, std::size_t line) {
        if (tokens.empty()) return;
        const Token& kw = tokens.front();
        const bool first_content = !any_content_;
        any_content_ = true;

        if (kw.text == "name") {
            if (!once("name", have_name_, line, kw)) return;
            if (tokens.size() != 2) {
                error(line, kw.column, "malformed-line", "expected 'name <ident>'");
                return;
            }
            name_ = tokens[1].text;
            return;
        }
        if (first_content) error(line, kw.column, "missing-name", "the first line must be 'name <ident>'");

        if (kw.text == "alphabet") {
            if (!once("alphabet", have_alphabet_, line, kw)) return;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const Token& t = tokens[i];
                if (t.text == kEpsilonToken) {
                    error(line, t.column, "reserved-token", "'eps' is implicit in every alphabet and cannot be declared");
                } else if (!Symbol::valid_token(t.text)) {
                    error(line, t.column, "malformed-line", "'" + t.text + "' is not a valid letter");
                } else if (!alphabet_.insert(Symbol::letter(t.text)).second) {
                    error(line, t.column, "duplicate-symbol", "letter '" + t.text + "' is declared twice");
                }
            }
        } else if (kw.text == "states") {
            if (!once("states", have_states_, line, kw)) return;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const auto q = state_token(tokens[i], line);
                if (q && !states_.insert(*q).second)
                    error(line, tokens[i].column, "duplicate-state", "state '" + tokens[i].text + "' is declared twice");
            }
        } else if (kw.text == "initial") {
            if (!once("initial", have_initial_, line, kw)) return;
            if (tokens.size() != 2) {
                error(line, kw.column, "malformed-line", "expected 'initial <state>'");
                return;
            }
            if (auto q = state_token(tokens[1], line)) initial_ = StateRef{*q, line, tokens[1].column};
        } else if (kw.text == "final") {
            if (!once("final", have_final_, line, kw)) return;
            for (std::size_t i = 1; i < tokens.size(); ++i)
                if (auto q = state_token(tokens[i], line)) finals_.push_back({*q, line, tokens[i].column});
        } else if (kw.text == "trans") {
            if (tokens.size() != 4) {
                error(line, kw.column, "malformed-line", "expected 'trans <from> <letter|eps> <to>'");
                return;
            }
            const auto from = state_token(tokens[1], line);
            const auto to = state_token(tokens[3], line);
            const Token& sym = tokens[2];
            std::optional<Symbol> x;
            if (sym.text == kEpsilonToken) {
                x = Symbol::epsilon();
            } else if (Symbol::valid_token(sym.text)) {
                x = Symbol::letter(sym.text);
            } else {
                error(line, sym.column, "malformed-line", "'" + sym.text + "' is not a valid letter");
            }
            if (from && to && x) edges_.push_back({{*from, line, tokens[1].column}, *x, sym.column, {*to, line, tokens[3].column}});
        } else {
            error(line, kw.column, "malformed-line", "unknown keyword '" + kw.text + "'");
        }
    }

    void check_state(const StateRef& r) {
        if (!states_.contains(r.id))
            error(r.line, r.column, "unknown-state", "state '" + to_string(r.id) + "' is not declared");
    }

    ParseResult<Automaton> finish() {
        if (!any_content_) error(1, 1, "missing-name", "the first line must be 'name <ident>'");
        if (any_content_ && !have_states_) error(last_line_, 1, "missing-states", "no 'states' line");
        if (any_content_ && !have_initial_) error(last_line_, 1, "missing-initial", "no 'initial' line");

        if (have_states_) {
            if (initial_) check_state(*initial_);
            for (const auto& r : finals_) check_state(r);
            for (const auto& e : edges_) {
                check_state(e.from);
                check_state(e.to);
                if (e.symbol.is_letter() && !alphabet_.contains(e.symbol))
                    error(e.from.line, e.symbol_column, "unknown-symbol",
                          "letter '" + std::string(e.symbol.text()) + "' is not in the alphabet");
            }
        }

        ParseResult<Automaton> result;
        if (!diagnostics_.empty()) {
            std::stable_sort(diagnostics_.begin(), diagnostics_.end(), [](const auto& a, const auto& b) {
                return std::tie(a.line, a.column) < std::tie(b.line, b.column);
            });
            result.diagnostics = std::move(diagnostics_);
            return result;
        }

        StateSet finals;
        for (const auto& r : finals_) finals.insert(r.id);
        std::vector<Transition> transitions;
        transitions.reserve(edges_.size());
        for (const auto& e : edges_) transitions.push_back({e.from.id, e.symbol, e.to.id});
        result.value.emplace(name_, alphabet_, states_, initial_->id, transitions, std::move(finals));
        return result;
    }

    struct EdgeRef {
        StateRef from;
        Symbol symbol;
        std::size_t symbol_column;
        StateRef to;
    };

    std::vector<ParseDiagnostic> diagnostics_;
    bool any_content_ = false;
    bool have_name_ = false, have_alphabet_ = false, have_states_ = false, have_initial_ = false, have_final_ = false;
    std::size_t last_line_ = 1;
    std::string name_;
    std::set<Symbol> alphabet_;
    StateSet states_;
    std::optional<StateRef> initial_;
    std::vector<StateRef> finals_;
    std::vector<EdgeRef> edges_;
};

}  // namespace

ParseResult<Automaton> parse_automaton(std::string_view text) { return AutomatonParser().run(text); }

std::string render_automaton(const Automaton& a) {
    std::ostringstream out;
    out << "name " << (a.name().empty() ? "anonymous" : a.name()) << '\n';
    out << "alphabet";
    for (const auto& x : a.alphabet()) out << ' ' << x.text();
    out << "\nstates";
    for (const auto& q : a.states()) out << ' ' << to_string(q);
    out << "\ninitial " << to_string(a.initial()) << '\n';
    out << "final";
    for (const auto& q : a.finals()) out << ' ' << to_string(q);
    out << '\n';
    for (const auto& t : a.transitions())
        out << "trans " << to_string(t.from) << ' ' << t.symbol.text() << ' ' << to_string(t.to) << '\n';
    return out.str();
}

// ---- expressions -----------------------------------------------------------

namespace {

struct ExprToken {
    enum class Kind { ident, semicolon, bar, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) { lex(text); }

    ParseResult<CompositionExpr> run() {
        ParseResult<CompositionExpr> result;
        if (tokens_.size() == 1) {
            fail(tokens_.front(), "empty-expression", "expression is empty");
        } else if (ok_) {
            auto e = parse_par();
            if (ok_ && peek().kind != ExprToken::Kind::end) {
                if (peek().kind == ExprToken::Kind::rparen)
                    fail(peek(), "unbalanced-parenthesis", "')' without matching '('");
                else
                    fail(peek(), "unexpected-token", "unexpected '" + peek().text + "'");
            }
            if (ok_) result.value = std::move(e);
        }
        result.diagnostics = std::move(diagnostics_);
        return result;
    }

private:
    void lex(std::string_view text) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < text.size();) {
            const char c = text[i];
            if (c == '\n') {
                ++line;
                column = 1;
                ++i;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                ++column;
                continue;
            }
            const auto single = [&](ExprToken::Kind k) {
                tokens_.push_back({k, std::string(1, c), line, column});
                ++i;
                ++column;
            };
            switch (c) {
                case ';': single(ExprToken::Kind::semicolon); continue;
                case '|': single(ExprToken::Kind::bar); continue;
                case '(': single(ExprToken::Kind::lparen); continue;
                case ')': single(ExprToken::Kind::rparen); continue;
                default: break;
            }
            const std::size_t start = i;
            while (i < text.size() && CompositionExpr::valid_device_name(text.substr(i, 1))) ++i;
            if (i == start) {
                if (ok_) fail({ExprToken::Kind::end, std::string(1, c), line, column}, "unexpected-character",
                              std::string("unexpected character '") + c + "'");
                ++i;
                ++column;
                continue;
            }
            tokens_.push_back({ExprToken::Kind::ident, std::string(text.substr(start, i - start)), line, column});
            column += i - start;
        }
        tokens_.push_back({ExprToken::Kind::end, "end of input", line, column});
    }

    const ExprToken& peek() const { return tokens_[pos_]; }
    const ExprToken& advance() { return tokens_[pos_++]; }

    void fail(const ExprToken& at, std::string code, std::string message) {
        if (!ok_) return;
        ok_ = false;
        diagnostics_.push_back({at.line, at.column, std::move(code), std::move(message)});
    }

    std::optional<CompositionExpr> parse_par() {
        auto left = parse_cat();
        while (ok_ && peek().kind == ExprToken::Kind::bar) {
            advance();
            auto right = parse_cat();
            if (!ok_) return std::nullopt;
            left = CompositionExpr::parallel(*left, *right);
        }
        return ok_ ? left : std::nullopt;
    }

    std::optional<CompositionExpr> parse_cat() {
        auto left = parse_atom();
        while (ok_ && peek().kind == ExprToken::Kind::semicolon) {
            advance();
            auto right = parse_atom();
            if (!ok_) return std::nullopt;
            left = CompositionExpr::concat(*left, *right);
        }
        return ok_ ? left : std::nullopt;
    }

    std::optional<CompositionExpr> parse_atom() {
        const ExprToken& t = peek();
        switch (t.kind) {
            case ExprToken::Kind::ident:
                advance();
                return CompositionExpr::device(t.text);
            case ExprToken::Kind::lparen: {
                const ExprToken& open = advance();
                auto inner = parse_par();
                if (!ok_) return std::nullopt;
                if (peek().kind != ExprToken::Kind::rparen) {
                    fail(open, "unbalanced-parenthesis", "'(' is never closed");
                    return std::nullopt;
                }
                advance();
                return inner;
            }
            default:
                fail(t, "expected-operand", "expected a device name or '(' before " +
                                                (t.kind == ExprToken::Kind::end ? t.text : "'" + t.text + "'"));
                return std::nullopt;
        }
    }

    std::vector<ExprToken> tokens_;
    std::size_t pos_ = 0;
    bool ok_ = true;
    std::vector<ParseDiagnostic> diagnostics_;
};

}  // namespace

ParseResult<CompositionExpr> parse_expression(std::string_view text) { return ExpressionParser(text).run(); }

std::string render_expression(const CompositionExpr& e) {
    using Kind = CompositionExpr::Kind;
    if (e.is_device()) return e.name();
    const auto wrap = [](const CompositionExpr& sub, bool parens) {
        auto s = render_expression(sub);
        return parens ? "(" + s + ")" : s;
    };
    const auto left = e.left();
    const auto right = e.right();
    if (e.kind() == Kind::concat)
        return wrap(left, left.kind() == Kind::parallel) + " ; " + wrap(right, !right.is_device());
    return wrap(left, false) + " | " + wrap(right, right.kind() == Kind::parallel);
}

// ---- DOT -------------------------------------------------------------------

namespace {

std::string quoted(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string node_line(const Automaton& a, const StateId& q, std::string_view label) {
    std::string line = quoted(to_string(q)) + " [label=" + quoted(label);
    if (a.is_final(q)) line += ", shape=doublecircle";
    return line + "];";
}

}  // namespace

std::string render_dot(const Automaton& a, bool group_by_namespace) {
    std::ostringstream out;
    out << "digraph " << quoted(a.name().empty() ? "automaton" : a.name()) << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  \"__start\" [shape=point, label=\"\"];\n";

    std::map<std::string, std::vector<StateId>> clusters;
    std::vector<StateId> loose;
    for (const auto& q : a.states()) {
        if (group_by_namespace && !q.ns.empty())
            clusters[q.ns.front()].push_back(q);
        else
            loose.push_back(q);
    }
    for (const auto& [segment, members] : clusters) {
        out << "  subgraph " << quoted("cluster_" + segment) << " {\n";
        out << "    label=" << quoted(segment) << ";\n";
        for (const auto& q : members) {
            const StateId inner(std::vector<std::string>(q.ns.begin() + 1, q.ns.end()), q.local);
            out << "    " << node_line(a, q, to_string(inner)) << '\n';
        }
        out << "  }\n";
    }
    for (const auto& q : loose) out << "  " << node_line(a, q, to_string(q)) << '\n';

    out << "  \"__start\" -> " << quoted(to_string(a.initial())) << ";\n";
    for (const auto& t : a.transitions()) {
        const std::string label = t.symbol.is_epsilon() ? "ε" : std::string(t.symbol.text());
        out << "  " << quoted(to_string(t.from)) << " -> " << quoted(to_string(t.to)) << " [label=" << quoted(label)
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

// ---- words -----------------------------------------------------------------

namespace {

bool single_character(const std::set<Symbol>& alphabet) {
    return std::all_of(alphabet.begin(), alphabet.end(), [](const Symbol& x) { return x.text().size() == 1; });
}

}  // namespace

ParseResult<Word> parse_word(std::string_view text, const std::set<Symbol>& alphabet) {
    ParseResult<Word> result;
    Word w;
    std::vector<std::pair<std::string, std::size_t>> pieces;  // token, column
    if (text.empty() || text == kEpsilonToken) {
        result.value = std::move(w);
        return result;
    }
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            const auto lead = piece.find_first_not_of(" \t");
            const auto trail = piece.find_last_not_of(" \t");
            const std::size_t column = start + 1 + (lead == std::string_view::npos ? 0 : lead);
            piece = lead == std::string_view::npos ? std::string_view{} : piece.substr(lead, trail - lead + 1);
            pieces.emplace_back(std::string(piece), column);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else if (single_character(alphabet)) {
        for (std::size_t i = 0; i < text.size(); ++i) pieces.emplace_back(std::string(1, text[i]), i + 1);
    } else {
        pieces.emplace_back(std::string(text), 1);
    }

    for (const auto& [token, column] : pieces) {
        if (!Symbol::valid_token(token)) {
            result.diagnostics.push_back({1, column, "malformed-word", "'" + token + "' is not a valid letter"});
            continue;
        }
        auto x = Symbol::letter(token);
        if (!alphabet.contains(x)) {
            result.diagnostics.push_back({1, column, "unknown-symbol", "letter '" + token + "' is not in the alphabet"});
            continue;
        }
        w.push_back(std::move(x));
    }
    if (result.diagnostics.empty()) result.value = std::move(w);
    return result;
}

std::string render_word(const Word& w, const std::set<Symbol>& alphabet) {
    if (w.empty()) return std::string(kEpsilonToken);
    const bool bare = single_character(alphabet) && to_string(w) != kEpsilonToken;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !bare) out += ',';
        out += w[i].text();
    }
    return out;
}

}  // namespace mhc
