#include "autoseq/formula.hpp"

#include <cctype>
#include <limits>

namespace autoseq {
namespace {

struct Token {
    enum class Kind { Ident, Number, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    std::int64_t number = 0;
    SourcePos pos;
};

class Lexer {
public:
    Lexer(std::string_view text, SourcePos start) : text_(text), pos_(start) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token tok;
            tok.pos = pos_;
            if (i_ >= text_.size()) {
                out.push_back(tok);
                return out;
            }
            char c = text_[i_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                tok.kind = Token::Kind::Ident;
                while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
                    tok.text += advance();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                tok.kind = Token::Kind::Number;
                while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
                    int d = advance() - '0';
                    if (tok.number > (std::numeric_limits<std::int64_t>::max() - d) / 10)
                        throw ParseError("integer literal too large", tok.pos);
                    tok.number = tok.number * 10 + d;
                    tok.text += static_cast<char>('0' + d);
                }
            } else {
                tok.kind = Token::Kind::Symbol;
                static const char* const multi[] = {"<=>", "=>", "<=", ">=", "!="};
                bool matched = false;
                for (const char* m : multi) {
                    std::string_view sv(m);
                    if (text_.substr(i_, sv.size()) == sv) {
                        for (std::size_t k = 0; k < sv.size(); ++k) advance();
                        tok.text = sv;
                        matched = true;
                        break;
                    }
                }
                if (!matched) {
                    if (std::string_view("()[],$?@~&|=<>+-*").find(c) == std::string_view::npos)
                        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
                    tok.text = std::string(1, advance());
                }
            }
            out.push_back(tok);
        }
    }

private:
    char advance() {
        char c = text_[i_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        return c;
    }
    void skip_space() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) advance();
    }

    std::string_view text_;
    std::size_t i_ = 0;
    SourcePos pos_;
};

bool is_relop(const Token& t) {
    if (t.kind != Token::Kind::Symbol) return false;
    return t.text == "=" || t.text == "!=" || t.text == "<" || t.text == "<=" || t.text == ">" || t.text == ">=";
}

Relation to_relation(const std::string& s) {
    if (s == "=") return Relation::Eq;
    if (s == "!=") return Relation::Ne;
    if (s == "<") return Relation::Lt;
    if (s == "<=") return Relation::Le;
    if (s == ">") return Relation::Gt;
    return Relation::Ge;
}

class FormulaParser {
public:
    FormulaParser(std::string_view text, SourcePos start) : toks_(Lexer(text, start).run()) {}

    FormulaPtr parse() {
        auto f = iff();
        if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(i_ + ahead, toks_.size() - 1)]; }
    const Token& take() {
        const Token& t = toks_[i_];
        if (i_ + 1 < toks_.size()) ++i_;
        return t;
    }
    bool at(const char* sym) const { return peek().kind == Token::Kind::Symbol && peek().text == sym; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(peek().kind == Token::Kind::End ? msg + " (at end of formula)" : msg, peek().pos);
    }
    void expect(const char* sym) {
        if (!at(sym)) fail(std::string("expected '") + sym + "'");
        take();
    }

    static FormulaPtr binary(BoolOp op, FormulaPtr a, FormulaPtr b, SourcePos pos) {
        auto f = std::make_shared<Formula>();
        f->kind = Formula::Kind::Binary;
        f->op = op;
        f->a = std::move(a);
        f->b = std::move(b);
        f->pos = pos;
        return f;
    }

    FormulaPtr iff() {
        auto f = implies();
        while (at("<=>")) {
            auto pos = take().pos;
            f = binary(BoolOp::Iff, f, implies(), pos);
        }
        return f;
    }

    FormulaPtr implies() {
        auto f = disjunction();
        if (at("=>")) {
            auto pos = take().pos;
            return binary(BoolOp::Implies, f, implies(), pos);
        }
        return f;
    }

    FormulaPtr disjunction() {
        auto f = conjunction();
        while (at("|")) {
            auto pos = take().pos;
            f = binary(BoolOp::Or, f, conjunction(), pos);
        }
        return f;
    }

    FormulaPtr conjunction() {
        auto f = unary();
        while (at("&")) {
            auto pos = take().pos;
            f = binary(BoolOp::And, f, unary(), pos);
        }
        return f;
    }

    void annotation() {
        auto pos = take().pos;  // '?'
        if (peek().kind != Token::Kind::Ident) fail("expected a number system after '?'");
        try {
            base_ = NumberSystem::parse(take().text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), pos);
        }
    }

    bool quantifier_ahead() const {
        const Token& t = peek();
        if (t.kind != Token::Kind::Ident || (t.text[0] != 'A' && t.text[0] != 'E')) return false;
        if (peek(1).kind == Token::Kind::Symbol && (peek(1).text == "[" || is_relop(peek(1)))) return false;
        return t.text.size() > 1 || peek(1).kind == Token::Kind::Ident;
    }

    FormulaPtr unary() {
        if (at("~")) {
            auto pos = take().pos;
            auto f = std::make_shared<Formula>();
            f->kind = Formula::Kind::Not;
            f->a = unary();
            f->pos = pos;
            return f;
        }
        if (at("?")) {
            annotation();
            return unary();
        }
        if (quantifier_ahead()) return quantifier();
        return primary();
    }

    FormulaPtr quantifier() {
        const Token& q = take();
        auto f = std::make_shared<Formula>();
        f->kind = Formula::Kind::Quantifier;
        f->universal = q.text[0] == 'A';
        f->pos = q.pos;
        f->system = base_;
        if (q.text.size() > 1) {
            f->vars.push_back(q.text.substr(1));
        } else {
            f->vars.push_back(take().text);
        }
        while (at(",")) {
            take();
            if (peek().kind != Token::Kind::Ident) fail("expected a variable name");
            f->vars.push_back(take().text);
        }
        // The body extends as far as possible.
        f->a = iff();
        return f;
    }

    FormulaPtr primary() {
        if (at("(")) {
            take();
            NumberSystem saved = base_;
            auto f = iff();
            expect(")");
            base_ = saved;
            return f;
        }
        if (at("$")) {
            auto pos = take().pos;
            if (peek().kind != Token::Kind::Ident) fail("expected a relation name after '$'");
            auto f = std::make_shared<Formula>();
            f->kind = Formula::Kind::Relation;
            f->name = take().text;
            f->pos = pos;
            expect("(");
            NumberSystem saved = base_;
            if (!at(")")) {
                while (true) {
                    base_ = saved;  // each argument is its own group
                    f->args.push_back(term());
                    if (!at(",")) break;
                    take();
                }
            }
            expect(")");
            base_ = saved;
            return f;
        }
        if (peek().kind == Token::Kind::Ident && peek(1).kind == Token::Kind::Symbol && peek(1).text == "[") {
            auto f = std::make_shared<Formula>();
            f->kind = Formula::Kind::DfaoTest;
            f->pos = peek().pos;
            f->name = take().text;
            take();
            NumberSystem saved = base_;
            f->args.push_back(term());
            base_ = saved;
            expect("]");
            if (at("=")) {
                take();
            } else if (at("!=")) {
                take();
                f->negate = true;
            } else {
                fail("expected '=' or '!=' after a sequence index");
            }
            expect("@");
            bool minus = false;
            if (at("-")) {
                take();
                minus = true;
            }
            if (peek().kind != Token::Kind::Number) fail("expected an integer after '@'");
            auto v = take().number;
            if (v > std::numeric_limits<int>::max()) fail("sequence value too large");
            f->value = static_cast<int>(minus ? -v : v);
            return f;
        }
        auto f = std::make_shared<Formula>();
        f->kind = Formula::Kind::Compare;
        f->pos = peek().pos;
        f->left = term();
        if (!is_relop(peek())) fail("expected a comparison operator");
        f->relation = to_relation(take().text);
        f->right = term();
        f->system = base_;
        return f;
    }

    TermPtr make(Term::Kind kind, TermPtr l, TermPtr r, SourcePos pos) {
        auto t = std::make_shared<Term>();
        t->kind = kind;
        t->lhs = std::move(l);
        t->rhs = std::move(r);
        t->pos = pos;
        return t;
    }

    TermPtr term() {
        auto t = product();
        while (at("+") || at("-")) {
            const Token& op = take();
            auto kind = op.text == "+" ? Term::Kind::Add : Term::Kind::Sub;
            t = make(kind, t, product(), op.pos);
        }
        return t;
    }

    TermPtr product() {
        auto t = factor();
        while (at("*")) {
            auto pos = take().pos;
            t = make(Term::Kind::Mul, t, factor(), pos);
        }
        return t;
    }

    TermPtr factor() {
        if (at("?")) {
            annotation();
            return factor();
        }
        if (at("(")) {
            take();
            NumberSystem saved = base_;
            auto t = term();
            expect(")");
            base_ = saved;
            return t;
        }
        auto t = std::make_shared<Term>();
        t->pos = peek().pos;
        if (peek().kind == Token::Kind::Number) {
            t->kind = Term::Kind::Const;
            t->value = take().number;
            return t;
        }
        if (peek().kind == Token::Kind::Ident) {
            t->kind = Term::Kind::Var;
            t->name = take().text;
            return t;
        }
        fail(peek().kind == Token::Kind::End ? "expected a term" : "unexpected '" + peek().text + "' in a term");
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    NumberSystem base_{2};
};

class ScriptParser {
public:
    explicit ScriptParser(std::string_view text) : text_(text) {}

    QueryScript parse() {
        QueryScript script;
        while (true) {
            skip_space_and_comments();
            if (i_ >= text_.size()) return script;
            script.commands.push_back(command());
        }
    }

private:
    char advance() {
        char c = text_[i_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (i_ < text_.size()) {
            char c = text_[i_];
            if (c == '#') {
                while (i_ < text_.size() && text_[i_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    std::string word() {
        std::string w;
        while (i_ < text_.size()) {
            char c = text_[i_];
            if (std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == ':' || c == ';' || c == '#') break;
            w += advance();
        }
        return w;
    }

    static bool is_identifier(const std::string& w) {
        if (w.empty() || !(std::isalpha(static_cast<unsigned char>(w[0])) || w[0] == '_')) return false;
        for (char c : w)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
        return true;
    }

    Command command() {
        Command cmd;
        cmd.pos = pos_;
        std::string kw = word();
        if (kw == "def") {
            cmd.kind = Command::Kind::Def;
        } else if (kw == "eval") {
            cmd.kind = Command::Kind::Eval;
        } else if (kw == "reg") {
            cmd.kind = Command::Kind::Reg;
        } else {
            throw ParseError("unknown command '" + (kw.empty() ? std::string(1, text_[i_]) : kw) + "'", cmd.pos);
        }
        skip_space_and_comments();
        SourcePos name_pos = pos_;
        cmd.name = word();
        if (!is_identifier(cmd.name)) throw ParseError("expected a name after '" + kw + "'", name_pos);
        while (true) {
            skip_space_and_comments();
            if (i_ >= text_.size()) throw ParseError("expected a quoted body", pos_);
            if (text_[i_] == '"') break;
            SourcePos arg_pos = pos_;
            std::string arg = word();
            if (arg.empty()) throw ParseError(std::string("unexpected '") + text_[i_] + "'", arg_pos);
            if (cmd.kind == Command::Kind::Reg) {
                try {
                    NumberSystem::parse(arg);
                } catch (const std::invalid_argument&) {
                    throw ParseError("expected a number system, got '" + arg + "'", arg_pos);
                }
                cmd.systems.push_back(arg);
            } else {
                if (!is_identifier(arg)) throw ParseError("expected a variable name, got '" + arg + "'", arg_pos);
                cmd.vars.push_back(arg);
            }
        }
        if (cmd.kind == Command::Kind::Reg && cmd.systems.empty())
            throw ParseError("reg needs at least one number system", pos_);
        SourcePos open = pos_;
        advance();
        cmd.body_pos = pos_;
        while (i_ < text_.size() && text_[i_] != '"') cmd.body += advance();
        if (i_ >= text_.size()) throw ParseError("unbalanced quotes", open);
        advance();
        skip_space_and_comments();
        if (i_ >= text_.size() || (text_[i_] != ':' && text_[i_] != ';'))
            throw ParseError("expected ':' after command '" + cmd.name + "'", pos_);
        advance();
        if (cmd.kind != Command::Kind::Reg) cmd.formula = parse_formula(cmd.body, cmd.body_pos);
        return cmd;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    SourcePos pos_;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text, SourcePos start) { return FormulaParser(text, start).parse(); }

QueryScript parse_script(std::string_view text) { return ScriptParser(text).parse(); }

}  // namespace autoseq
