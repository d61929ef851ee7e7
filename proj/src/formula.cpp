#include "graphlogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace graphlogic::logic {

std::string sort_name(VarSort s) {
    switch (s) {
        case VarSort::Vertex: return "vertex";
        case VarSort::Edge: return "edge";
        case VarSort::VertexSet: return "vertex-set";
        case VarSort::EdgeSet: return "edge-set";
        case VarSort::Orientation: return "orientation";
    }
    return "?";
}

namespace {

enum class Tok {
    End, Ident, Int,
    LParen, RParen, Dot, Comma, Pipe, Amp, Bang, Arrow, Iff,
    Eq, Neq, Le, Lt, Ge, Gt, Minus,
};

struct Token {
    Tok kind;
    std::string text;
    long value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {  // comment to end of line
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= text_.size()) {
            cur_.kind = Tok::End;
            cur_.text.clear();
            return;
        }
        char c = text_[pos_];
        auto two = [&](char a, char b) {
            return c == a && pos_ + 1 < text_.size() && text_[pos_ + 1] == b;
        };
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            cur_.kind = Tok::Ident;
            cur_.text = text_.substr(start, pos_ - start);
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            cur_.kind = Tok::Int;
            cur_.text = text_.substr(start, pos_ - start);
            cur_.value = std::stol(cur_.text);
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        if (two('<', '-') && pos_ + 2 < text_.size() && text_[pos_ + 2] == '>') {
            cur_.kind = Tok::Iff;
            pos_ += 3;
            col_ += 3;
            return;
        }
        auto emit2 = [&](Tok k) {
            cur_.kind = k;
            pos_ += 2;
            col_ += 2;
        };
        if (two('-', '>')) return emit2(Tok::Arrow);
        if (two('!', '=')) return emit2(Tok::Neq);
        if (two('<', '=')) return emit2(Tok::Le);
        if (two('>', '=')) return emit2(Tok::Ge);
        auto emit1 = [&](Tok k) {
            cur_.kind = k;
            ++pos_;
            ++col_;
        };
        switch (c) {
            case '(': return emit1(Tok::LParen);
            case ')': return emit1(Tok::RParen);
            case '.': return emit1(Tok::Dot);
            case ',': return emit1(Tok::Comma);
            case '|': return emit1(Tok::Pipe);
            case '&': return emit1(Tok::Amp);
            case '!': return emit1(Tok::Bang);
            case '=': return emit1(Tok::Eq);
            case '<': return emit1(Tok::Lt);
            case '>': return emit1(Tok::Gt);
            case '-': return emit1(Tok::Minus);
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr mk(Op op) {
    auto n = std::make_unique<Node>();
    n->op = op;
    return n;
}

bool is_builtin(const std::string& name) {
    return name == "connected" || name == "co_connected" || name == "cycle" ||
           name == "rainbow_connected" || name == "no_induced_cycle_above";
}

bool is_reserved(const std::string& name) {
    return name == "forall" || name == "exists" || name == "subset" || name == "member" ||
           name == "in" || name == "abs" || name == "true" || name == "false" || name == "with" ||
           name == "orientation" || name == "E" || name == "V" || is_builtin(name);
}

class Parser {
public:
    Parser(const std::string& text, const std::vector<FreeVar>& declared) : lex_(text) {
        for (const auto& fv : declared) {
            if (fv.sort != VarSort::Vertex && fv.sort != VarSort::Edge)
                throw InputError("only element variables may be pre-declared free");
            note_free(fv.name, fv.sort, 1, 1);
        }
    }

    std::pair<NodePtr, std::vector<FreeVar>> parse() {
        parse_orientation_header();
        NodePtr root = parse_formula();
        expect(Tok::End, "end of input");
        std::vector<FreeVar> frees;
        for (const auto& [name, sort] : free_) frees.push_back({name, sort});
        return {std::move(root), std::move(frees)};
    }

private:
    Lexer lex_;
    std::vector<std::pair<std::string, VarSort>> scope_;
    std::map<std::string, VarSort> free_;

    [[noreturn]] void fail(const std::string& msg) {
        const Token& t = lex_.peek();
        throw ParseError(msg, t.line, t.col);
    }

    Token expect(Tok kind, const char* what) {
        if (lex_.peek().kind != kind) fail(std::string("expected ") + what);
        return lex_.take();
    }

    bool accept(Tok kind) {
        if (lex_.peek().kind == kind) {
            lex_.take();
            return true;
        }
        return false;
    }

    bool peek_ident(const char* word) const {
        return lex_.peek().kind == Tok::Ident && lex_.peek().text == word;
    }

    void parse_orientation_header() {
        if (!peek_ident("with")) return;
        lex_.take();
        if (!peek_ident("orientation")) fail("expected 'orientation' after 'with'");
        lex_.take();
        while (true) {
            Token t = expect(Tok::Ident, "orientation symbol");
            if (is_reserved(t.text)) fail("'" + t.text + "' is reserved");
            note_free(t.text, VarSort::Orientation, t.line, t.col);
            if (!accept(Tok::Comma)) break;
        }
        expect(Tok::Dot, "'.' after orientation header");
    }

    const VarSort* lookup_bound(const std::string& name) const {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
            if (it->first == name) return &it->second;
        return nullptr;
    }

    void note_free(const std::string& name, VarSort sort, int line, int col) {
        auto it = free_.find(name);
        if (it == free_.end()) {
            free_.emplace(name, sort);
        } else if (it->second != sort) {
            throw ParseError("'" + name + "' used both as " + sort_name(it->second) + " and as " +
                                 sort_name(sort),
                             line, col);
        }
    }

    // name in term position: must denote a bound or pre-declared element var
    VarSort term_sort(const Token& t) {
        if (const VarSort* s = lookup_bound(t.text)) {
            if (*s != VarSort::Vertex && *s != VarSort::Edge)
                throw ParseError("set variable '" + t.text + "' used as element", t.line, t.col);
            return *s;
        }
        auto it = free_.find(t.text);
        if (it != free_.end() && (it->second == VarSort::Vertex || it->second == VarSort::Edge))
            return it->second;
        throw ParseError("unbound variable '" + t.text + "'", t.line, t.col);
    }

    // name applied as a set: bound set var, or free set var (sort inferred)
    VarSort set_sort(const Token& t, VarSort inferred) {
        if (const VarSort* s = lookup_bound(t.text)) {
            if (*s != VarSort::VertexSet && *s != VarSort::EdgeSet)
                throw ParseError("element variable '" + t.text + "' used as a set", t.line, t.col);
            if (*s != inferred && inferred != VarSort::Orientation)
                throw ParseError("'" + t.text + "' is a " + sort_name(*s) + " but is used as a " +
                                     sort_name(inferred),
                                 t.line, t.col);
            return *s;
        }
        auto it = free_.find(t.text);
        if (it != free_.end() && it->second == VarSort::Orientation) return VarSort::Orientation;
        note_free(t.text, inferred, t.line, t.col);
        return inferred;
    }

    NodePtr parse_formula() { return parse_iff(); }

    NodePtr parse_iff() {
        NodePtr lhs = parse_implies();
        while (lex_.peek().kind == Tok::Iff) {
            lex_.take();
            NodePtr rhs = parse_implies();
            NodePtr n = mk(Op::Iff);
            n->children.push_back(std::move(lhs));
            n->children.push_back(std::move(rhs));
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr parse_implies() {
        NodePtr lhs = parse_or();
        if (lex_.peek().kind == Tok::Arrow) {
            lex_.take();
            NodePtr rhs = parse_implies();  // right associative
            NodePtr n = mk(Op::Implies);
            n->children.push_back(std::move(lhs));
            n->children.push_back(std::move(rhs));
            return n;
        }
        return lhs;
    }

    NodePtr parse_or() {
        NodePtr lhs = parse_and();
        while (lex_.peek().kind == Tok::Pipe) {
            lex_.take();
            NodePtr rhs = parse_and();
            NodePtr n = mk(Op::Or);
            n->children.push_back(std::move(lhs));
            n->children.push_back(std::move(rhs));
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr parse_and() {
        NodePtr lhs = parse_unary();
        while (lex_.peek().kind == Tok::Amp) {
            lex_.take();
            NodePtr rhs = parse_unary();
            NodePtr n = mk(Op::And);
            n->children.push_back(std::move(lhs));
            n->children.push_back(std::move(rhs));
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr parse_unary() {
        if (accept(Tok::Bang)) {
            NodePtr n = mk(Op::Not);
            n->children.push_back(parse_unary());
            return n;
        }
        return parse_primary();
    }

    NodePtr parse_quantifier(bool universal) {
        Token name = expect(Tok::Ident, "variable name");
        if (is_reserved(name.text)) fail("'" + name.text + "' is reserved");
        if (lookup_bound(name.text) || free_.count(name.text))
            throw ParseError("variable '" + name.text + "' rebound", name.line, name.col);
        VarSort sort = VarSort::Vertex;
        if (peek_ident("subset")) {
            lex_.take();
            Token dom = expect(Tok::Ident, "'V' or 'E' after subset");
            if (dom.text == "V")
                sort = VarSort::VertexSet;
            else if (dom.text == "E")
                sort = VarSort::EdgeSet;
            else
                fail("expected 'V' or 'E' after subset");
        } else if (peek_ident("in")) {
            lex_.take();
            Token dom = expect(Tok::Ident, "'E' after in");
            if (dom.text != "E") fail("only 'in E' (edge variables) is supported");
            sort = VarSort::Edge;
        }
        expect(Tok::Dot, "'.' after quantifier binder");
        scope_.emplace_back(name.text, sort);
        NodePtr body = parse_formula();
        scope_.pop_back();
        NodePtr n = mk(universal ? Op::Forall : Op::Exists);
        n->var = name.text;
        n->var_sort = sort;
        n->children.push_back(std::move(body));
        return n;
    }

    NodePtr parse_cardinality() {
        Token name = expect(Tok::Ident, "set name between bars");
        expect(Tok::Pipe, "closing '|'");
        Cmp cmp;
        switch (lex_.peek().kind) {
            case Tok::Le: cmp = Cmp::Le; break;
            case Tok::Lt: cmp = Cmp::Lt; break;
            case Tok::Eq: cmp = Cmp::Eq; break;
            case Tok::Ge: cmp = Cmp::Ge; break;
            case Tok::Gt: cmp = Cmp::Gt; break;
            case Tok::Neq: cmp = Cmp::Ne; break;
            default: fail("expected comparison after |X|");
        }
        lex_.take();
        Token k = expect(Tok::Int, "integer bound");
        NodePtr n = mk(Op::Card);
        // set sort comes from the binder or other uses; a first use here
        // defaults to vertex-set
        if (const VarSort* bound = lookup_bound(name.text)) {
            if (*bound != VarSort::VertexSet && *bound != VarSort::EdgeSet)
                throw ParseError("cardinality of non-set '" + name.text + "'", name.line, name.col);
        } else if (!free_.count(name.text)) {
            note_free(name.text, VarSort::VertexSet, name.line, name.col);
        }
        n->set_names.push_back(name.text);
        n->cmp = cmp;
        n->int_arg = static_cast<int>(k.value);
        return n;
    }

    NodePtr parse_abs() {
        expect(Tok::LParen, "'(' after abs");
        expect(Tok::Pipe, "'|'");
        Token a = expect(Tok::Ident, "set name");
        expect(Tok::Pipe, "closing '|'");
        expect(Tok::Minus, "'-'");
        expect(Tok::Pipe, "'|'");
        Token b = expect(Tok::Ident, "set name");
        expect(Tok::Pipe, "closing '|'");
        expect(Tok::RParen, "')'");
        expect(Tok::Le, "'<=' after abs(...)");
        Token one = expect(Tok::Int, "integer");
        if (one.value != 1) throw ParseError("only abs(|X| - |Y|) <= 1 is supported", one.line, one.col);
        NodePtr n = mk(Op::CardDiffLe1);
        n->set_names.push_back(a.text);
        n->set_names.push_back(b.text);
        for (const Token& t : {a, b}) {
            if (const VarSort* s = lookup_bound(t.text)) {
                if (*s != VarSort::VertexSet && *s != VarSort::EdgeSet)
                    throw ParseError("cardinality of non-set '" + t.text + "'", t.line, t.col);
            } else {
                note_free(t.text, VarSort::VertexSet, t.line, t.col);
            }
        }
        return n;
    }

    NodePtr parse_builtin(const Token& name) {
        expect(Tok::LParen, "'('");
        NodePtr n;
        if (name.text == "no_induced_cycle_above") {
            Token k = expect(Tok::Int, "integer");
            n = mk(Op::NoInducedCycleAbove);
            n->int_arg = static_cast<int>(k.value);
        } else if (name.text == "rainbow_connected") {
            n = mk(Op::RainbowConnected);
            while (true) {
                Token t = expect(Tok::Ident, "edge-set name");
                set_sort(t, VarSort::EdgeSet);
                n->set_names.push_back(t.text);
                if (!accept(Tok::Comma)) break;
            }
        } else {
            Op op = name.text == "connected"      ? Op::Connected
                    : name.text == "co_connected" ? Op::CoConnected
                                                  : Op::InducesCycle;
            n = mk(op);
            Token t = expect(Tok::Ident, "vertex-set name");
            set_sort(t, VarSort::VertexSet);
            n->set_names.push_back(t.text);
        }
        expect(Tok::RParen, "')'");
        return n;
    }

    NodePtr finish_equality(const Token& lhs) {
        VarSort ls = term_sort(lhs);
        bool neq = lex_.take().kind == Tok::Neq;
        Token rhs = expect(Tok::Ident, "variable");
        VarSort rs = term_sort(rhs);
        if (ls != rs) throw ParseError("equality between different sorts", rhs.line, rhs.col);
        NodePtr n = mk(neq ? Op::NotEqual : Op::Equal);
        n->terms.push_back(lhs.text);
        n->terms.push_back(rhs.text);
        return n;
    }

    NodePtr parse_primary() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::LParen: {
                lex_.take();
                NodePtr inner = parse_formula();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Pipe:
                lex_.take();
                return parse_cardinality();
            case Tok::Ident:
                break;
            default:
                fail("expected a formula");
        }
        Token name = lex_.take();
        if (name.text == "forall") return parse_quantifier(true);
        if (name.text == "exists") return parse_quantifier(false);
        if (name.text == "true") return mk(Op::True);
        if (name.text == "false") return mk(Op::False);
        if (name.text == "abs") return parse_abs();
        if (is_builtin(name.text)) return parse_builtin(name);
        if (name.text == "member") {
            expect(Tok::LParen, "'('");
            Token elem = expect(Tok::Ident, "element variable");
            VarSort es = term_sort(elem);
            expect(Tok::Comma, "','");
            Token set = expect(Tok::Ident, "set name");
            expect(Tok::RParen, "')'");
            VarSort want = es == VarSort::Vertex ? VarSort::VertexSet : VarSort::EdgeSet;
            VarSort got = set_sort(set, want);
            if (got == VarSort::Orientation)
                throw ParseError("orientation '" + set.text + "' needs two arguments", set.line, set.col);
            NodePtr n = mk(Op::Member);
            n->terms.push_back(elem.text);
            n->set_names.push_back(set.text);
            return n;
        }
        if (name.text == "E") {
            expect(Tok::LParen, "'('");
            Token a = expect(Tok::Ident, "vertex variable");
            if (term_sort(a) != VarSort::Vertex)
                throw ParseError("E expects vertex variables", a.line, a.col);
            expect(Tok::Comma, "','");
            Token b = expect(Tok::Ident, "vertex variable");
            if (term_sort(b) != VarSort::Vertex)
                throw ParseError("E expects vertex variables", b.line, b.col);
            expect(Tok::RParen, "')'");
            NodePtr n = mk(Op::Adjacent);
            n->terms.push_back(a.text);
            n->terms.push_back(b.text);
            return n;
        }
        if (lex_.peek().kind == Tok::LParen) {
            // set application: S(x) or S(x,y) / O(x,y)
            lex_.take();
            Token a = expect(Tok::Ident, "variable");
            if (accept(Tok::Comma)) {
                Token b = expect(Tok::Ident, "variable");
                expect(Tok::RParen, "')'");
                if (term_sort(a) != VarSort::Vertex || term_sort(b) != VarSort::Vertex)
                    throw ParseError("pair application expects vertex variables", a.line, a.col);
                VarSort got = set_sort(name, VarSort::EdgeSet);
                NodePtr n = mk(Op::PairMember);
                n->set_names.push_back(name.text);
                n->var_sort = got;  // EdgeSet or Orientation
                n->terms.push_back(a.text);
                n->terms.push_back(b.text);
                return n;
            }
            expect(Tok::RParen, "')'");
            VarSort es = term_sort(a);
            VarSort want = es == VarSort::Vertex ? VarSort::VertexSet : VarSort::EdgeSet;
            VarSort got = set_sort(name, want);
            if (got == VarSort::Orientation)
                throw ParseError("orientation '" + name.text + "' needs two arguments", name.line,
                                 name.col);
            NodePtr n = mk(Op::Member);
            n->terms.push_back(a.text);
            n->set_names.push_back(name.text);
            return n;
        }
        if (lex_.peek().kind == Tok::Eq || lex_.peek().kind == Tok::Neq) return finish_equality(name);
        throw ParseError("unbound variable '" + name.text + "'", name.line, name.col);
    }
};

const char* cmp_text(Cmp c) {
    switch (c) {
        case Cmp::Le: return "<=";
        case Cmp::Lt: return "<";
        case Cmp::Eq: return "=";
        case Cmp::Ge: return ">=";
        case Cmp::Gt: return ">";
        case Cmp::Ne: return "!=";
    }
    return "?";
}

void unparse_node(const Node& n, std::ostream& out) {
    switch (n.op) {
        case Op::True: out << "true"; return;
        case Op::False: out << "false"; return;
        case Op::Not:
            out << "!";
            unparse_node(*n.children[0], out);
            return;
        default: break;
    }
    switch (n.op) {
        case Op::And:
        case Op::Or:
        case Op::Implies:
        case Op::Iff: {
            const char* op = n.op == Op::And       ? " & "
                             : n.op == Op::Or      ? " | "
                             : n.op == Op::Implies ? " -> "
                                                   : " <-> ";
            out << '(';
            unparse_node(*n.children[0], out);
            out << op;
            unparse_node(*n.children[1], out);
            out << ')';
            return;
        }
        case Op::Forall:
        case Op::Exists: {
            out << '(' << (n.op == Op::Forall ? "forall " : "exists ") << n.var;
            if (n.var_sort == VarSort::VertexSet) out << " subset V";
            if (n.var_sort == VarSort::EdgeSet) out << " subset E";
            if (n.var_sort == VarSort::Edge) out << " in E";
            out << ". ";
            unparse_node(*n.children[0], out);
            out << ')';
            return;
        }
        case Op::Adjacent: out << "E(" << n.terms[0] << "," << n.terms[1] << ")"; return;
        case Op::Equal: out << n.terms[0] << " = " << n.terms[1]; return;
        case Op::NotEqual: out << n.terms[0] << " != " << n.terms[1]; return;
        case Op::Member: out << "member(" << n.terms[0] << "," << n.set_names[0] << ")"; return;
        case Op::PairMember:
            out << n.set_names[0] << "(" << n.terms[0] << "," << n.terms[1] << ")";
            return;
        case Op::Card: out << '|' << n.set_names[0] << "| " << cmp_text(n.cmp) << ' ' << n.int_arg; return;
        case Op::CardDiffLe1:
            out << "abs(|" << n.set_names[0] << "| - |" << n.set_names[1] << "|) <= 1";
            return;
        case Op::Connected: out << "connected(" << n.set_names[0] << ")"; return;
        case Op::CoConnected: out << "co_connected(" << n.set_names[0] << ")"; return;
        case Op::InducesCycle: out << "cycle(" << n.set_names[0] << ")"; return;
        case Op::RainbowConnected: {
            out << "rainbow_connected(";
            for (size_t i = 0; i < n.set_names.size(); ++i)
                out << (i ? "," : "") << n.set_names[i];
            out << ')';
            return;
        }
        case Op::NoInducedCycleAbove: out << "no_induced_cycle_above(" << n.int_arg << ")"; return;
        default: throw InternalError("unparse: unhandled node");
    }
}

bool same_node(const Node& a, const Node& b) {
    if (a.op != b.op || a.var != b.var || a.var_sort != b.var_sort || a.terms != b.terms ||
        a.set_names != b.set_names || a.cmp != b.cmp || a.int_arg != b.int_arg ||
        a.children.size() != b.children.size())
        return false;
    for (size_t i = 0; i < a.children.size(); ++i)
        if (!same_node(*a.children[i], *b.children[i])) return false;
    return true;
}

}  // namespace

std::optional<FreeVar> Formula::free_var(const std::string& name) const {
    for (const auto& fv : free_)
        if (fv.name == name) return fv;
    return std::nullopt;
}

std::vector<FreeVar> Formula::free_set_vars() const {
    std::vector<FreeVar> out;
    for (const auto& fv : free_)
        if (fv.sort == VarSort::VertexSet || fv.sort == VarSort::EdgeSet) out.push_back(fv);
    return out;
}

std::string Formula::unparse() const {
    std::ostringstream out;
    std::vector<std::string> orient;
    for (const auto& fv : free_)
        if (fv.sort == VarSort::Orientation) orient.push_back(fv.name);
    if (!orient.empty()) {
        out << "with orientation ";
        for (size_t i = 0; i < orient.size(); ++i) out << (i ? ", " : "") << orient[i];
        out << ". ";
    }
    unparse_node(root(), out);
    return out.str();
}

bool same_ast(const Formula& a, const Formula& b) {
    return a.free_vars() == b.free_vars() && same_node(a.root(), b.root());
}

Formula parse_formula(const std::string& text, const std::vector<FreeVar>& declared_free) {
    Parser p(text, declared_free);
    auto [root, frees] = p.parse();
    Formula f;
    f.root_ = std::shared_ptr<const Node>(root.release());
    std::sort(frees.begin(), frees.end(),
              [](const FreeVar& a, const FreeVar& b) { return a.name < b.name; });
    f.free_ = std::move(frees);
    return f;
}

}  // namespace graphlogic::logic
