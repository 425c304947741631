// Copyright 2026 The hopfq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hopfq/braket.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <variant>

#include "hopfq/errors.hpp"

namespace hopfq {

namespace {

using Kind = StateExpression::Kind;
using Node = StateExpression::Node;

constexpr int kMaxDepth = 200;

enum class Tok { number, imaginary, sqrt, lparen, rparen, plus, minus, star, slash, ket, end };

struct Token {
    Tok type = Tok::end;
    double value = 0;
    std::string bits;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
   public:
    explicit Lexer(std::string_view text) : text_(text) {
    }

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token t;
            t.line = line_;
            t.column = column_;
            if (pos_ >= text_.size()) {
                out.push_back(t);
                return out;
            }
            char c = text_[pos_];
            if (c == '(' || c == ')' || c == '+' || c == '-' || c == '*' || c == '/') {
                t.type = c == '('   ? Tok::lparen
                         : c == ')' ? Tok::rparen
                         : c == '+' ? Tok::plus
                         : c == '-' ? Tok::minus
                         : c == '*' ? Tok::star
                                    : Tok::slash;
                advance(1);
            } else if (is_digit(c) || c == '.') {
                lex_number(t);
            } else if (c == '|') {
                lex_ket(t);
            } else if (starts_with("\xE2\x88\x9A")) {  // √
                t.type = Tok::sqrt;
                advance(3);
            } else if (is_alpha(c)) {
                std::size_t end = pos_;
                while (end < text_.size() && is_alpha(text_[end])) {
                    end++;
                }
                std::string_view word = text_.substr(pos_, end - pos_);
                if (word == "i") {
                    t.type = Tok::imaginary;
                } else if (word == "sqrt") {
                    t.type = Tok::sqrt;
                } else {
                    fail("unknown identifier '" + std::string(word) + "'");
                }
                advance(word.size());
            } else {
                fail("unexpected character");
            }
            out.push_back(std::move(t));
        }
    }

   private:
    static bool is_digit(char c) {
        return c >= '0' && c <= '9';
    }
    static bool is_alpha(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    }

    bool starts_with(std::string_view s) const {
        return text_.substr(pos_).starts_with(s);
    }

    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(msg, line_, column_);
    }

    void advance(std::size_t bytes) {
        for (std::size_t k = 0; k < bytes && pos_ < text_.size(); k++, pos_++) {
            auto b = static_cast<unsigned char>(text_[pos_]);
            if (b == '\n') {
                line_++;
                column_ = 1;
            } else if ((b & 0xC0) != 0x80) {
                column_++;
            }
        }
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) {
            advance(1);
        }
    }

    void lex_number(Token &t) {
        std::size_t end = pos_;
        while (end < text_.size() && is_digit(text_[end])) {
            end++;
        }
        if (end < text_.size() && text_[end] == '.') {
            end++;
            while (end < text_.size() && is_digit(text_[end])) {
                end++;
            }
        }
        if (end == pos_ + 1 && text_[pos_] == '.') {
            fail("malformed number");
        }
        if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
            std::size_t e = end + 1;
            if (e < text_.size() && (text_[e] == '+' || text_[e] == '-')) {
                e++;
            }
            if (e < text_.size() && is_digit(text_[e])) {
                while (e < text_.size() && is_digit(text_[e])) {
                    e++;
                }
                end = e;
            }
        }
        const char *first = text_.data() + pos_;
        const char *last = text_.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, t.value);
        if (ec == std::errc::result_out_of_range) {
            fail("number out of range");
        }
        if (ec != std::errc{} || ptr != last) {
            fail("malformed number");
        }
        t.type = Tok::number;
        advance(end - pos_);
    }

    void lex_ket(Token &t) {
        std::size_t p = pos_ + 1;
        while (p < text_.size() && (text_[p] == '0' || text_[p] == '1')) {
            p++;
        }
        std::size_t close = 0;
        if (p < text_.size() && text_[p] == '>') {
            close = 1;
        } else if (text_.substr(p).starts_with("\xE2\x9F\xA9")) {  // ⟩
            close = 3;
        }
        if (close == 0 || p == pos_ + 1) {
            fail("malformed ket: expected '|' followed by bits 0/1 and '>'");
        }
        t.type = Tok::ket;
        t.bits = std::string(text_.substr(pos_ + 1, p - pos_ - 1));
        advance(p + close - pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
   public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {
    }

    StateExpression run() {
        StateExpression expr;
        expr.root = state(0);
        if (peek().type != Tok::end) {
            fail(peek(), peek().type == Tok::rparen ? "unbalanced ')'" : "unexpected token");
        }
        expr.num_qubits = num_qubits_;
        return expr;
    }

   private:
    const Token &peek() const {
        return toks_[pos_];
    }
    const Token &take() {
        return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_];
    }

    [[noreturn]] static void fail(const Token &t, const std::string &msg) {
        throw ParseError(msg, t.line, t.column);
    }

    static Node make(Kind kind, const Token &at) {
        Node n;
        n.kind = kind;
        n.line = at.line;
        n.column = at.column;
        return n;
    }

    static Node binary(Kind kind, const Token &at, Node lhs, Node rhs) {
        Node n = make(kind, at);
        n.children.push_back(std::move(lhs));
        n.children.push_back(std::move(rhs));
        return n;
    }

    void enter(int depth) const {
        if (depth > kMaxDepth) {
            fail(peek(), "expression nested too deeply");
        }
    }

    Node state(int depth) {
        enter(depth);
        Node lhs = product(depth + 1);
        while (peek().type == Tok::plus || peek().type == Tok::minus) {
            const Token &op = take();
            Node rhs = product(depth + 1);
            lhs = binary(op.type == Tok::plus ? Kind::add : Kind::subtract, op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    static bool starts_primary(Tok t) {
        return t == Tok::number || t == Tok::imaginary || t == Tok::sqrt || t == Tok::lparen || t == Tok::ket;
    }

    Node product(int depth) {
        enter(depth);
        Node lhs = unary(depth + 1);
        while (true) {
            const Token &next = peek();
            if (next.type == Tok::star || next.type == Tok::slash) {
                const Token &op = take();
                Node rhs = unary(depth + 1);
                lhs = binary(op.type == Tok::star ? Kind::multiply : Kind::divide, op, std::move(lhs), std::move(rhs));
            } else if (starts_primary(next.type)) {
                const Token &at = next;
                Node rhs = unary(depth + 1);
                lhs = binary(Kind::multiply, at, std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    Node unary(int depth) {
        enter(depth);
        if (peek().type == Tok::minus) {
            const Token &op = take();
            Node n = make(Kind::negate, op);
            n.children.push_back(unary(depth + 1));
            return n;
        }
        if (peek().type == Tok::plus) {
            take();
            return unary(depth + 1);
        }
        return primary(depth + 1);
    }

    Node primary(int depth) {
        enter(depth);
        const Token &t = take();
        switch (t.type) {
            case Tok::number: {
                Node n = make(Kind::scalar, t);
                n.value = t.value;
                return n;
            }
            case Tok::imaginary:
                return make(Kind::imaginary_unit, t);
            case Tok::sqrt: {
                Node n = make(Kind::sqrt, t);
                if (!starts_primary(peek().type)) {
                    fail(peek(), "expected an argument after sqrt");
                }
                n.children.push_back(primary(depth + 1));
                return n;
            }
            case Tok::lparen: {
                Node inner = state(depth + 1);
                if (peek().type != Tok::rparen) {
                    fail(peek(), "expected ')'");
                }
                take();
                return inner;
            }
            case Tok::ket: {
                int len = static_cast<int>(t.bits.size());
                if (len > kMaxQubits) {
                    fail(t, "ket |" + t.bits + "> has " + std::to_string(len) + " qubits; at most 4 are supported");
                }
                if (num_qubits_ == 0) {
                    num_qubits_ = len;
                } else if (len != num_qubits_) {
                    fail(
                        t, "ket |" + t.bits + "> has " + std::to_string(len) + " qubits but earlier kets have " +
                               std::to_string(num_qubits_));
                }
                Node n = make(Kind::ket, t);
                n.bits = t.bits;
                return n;
            }
            case Tok::end:
                fail(t, "unexpected end of input");
            default:
                fail(t, "unexpected token");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int num_qubits_ = 0;
};

struct KetVector {
    std::vector<Amplitude> amps;
};
using Value = std::variant<Amplitude, KetVector>;

class Evaluator {
   public:
    explicit Evaluator(int num_qubits) : dim_(std::size_t{1} << num_qubits) {
    }

    Value eval(const Node &n) const {
        switch (n.kind) {
            case Kind::scalar:
                return Amplitude{n.value, 0};
            case Kind::imaginary_unit:
                return Amplitude{0, 1};
            case Kind::ket: {
                KetVector v{std::vector<Amplitude>(dim_)};
                v.amps[std::stoul(n.bits, nullptr, 2)] = 1.0;
                return v;
            }
            case Kind::negate: {
                Value x = eval(n.children[0]);
                if (auto *s = std::get_if<Amplitude>(&x)) {
                    return -*s;
                }
                auto &v = std::get<KetVector>(x);
                for (auto &a : v.amps) {
                    a = -a;
                }
                return x;
            }
            case Kind::sqrt: {
                Value x = eval(n.children[0]);
                auto *s = std::get_if<Amplitude>(&x);
                if (s == nullptr || s->imag() != 0 || s->real() < 0) {
                    fail(n, "sqrt needs a nonnegative real argument");
                }
                return Amplitude{std::sqrt(s->real()), 0};
            }
            case Kind::add:
            case Kind::subtract:
                return add(n);
            case Kind::multiply:
                return multiply(n);
            case Kind::divide:
                return divide(n);
        }
        fail(n, "unknown node");
    }

   private:
    [[noreturn]] static void fail(const Node &n, const std::string &msg) {
        throw ParseError(msg, n.line, n.column);
    }

    Value add(const Node &n) const {
        Value x = eval(n.children[0]);
        Value y = eval(n.children[1]);
        const bool plus = n.kind == Kind::add;
        if (x.index() != y.index()) {
            fail(n, "cannot add a scalar to a ket");
        }
        if (auto *s = std::get_if<Amplitude>(&x)) {
            return plus ? *s + std::get<Amplitude>(y) : *s - std::get<Amplitude>(y);
        }
        auto &v = std::get<KetVector>(x);
        const auto &w = std::get<KetVector>(y);
        for (std::size_t k = 0; k < v.amps.size(); k++) {
            v.amps[k] = plus ? v.amps[k] + w.amps[k] : v.amps[k] - w.amps[k];
        }
        return x;
    }

    Value multiply(const Node &n) const {
        Value x = eval(n.children[0]);
        Value y = eval(n.children[1]);
        auto *sx = std::get_if<Amplitude>(&x);
        auto *sy = std::get_if<Amplitude>(&y);
        if (sx && sy) {
            return *sx * *sy;
        }
        if (!sx && !sy) {
            fail(n, "product of two kets (tensor product) is not supported");
        }
        Amplitude s = sx ? *sx : *sy;
        KetVector v = std::get<KetVector>(sx ? y : x);
        for (auto &a : v.amps) {
            a = s * a;
        }
        return v;
    }

    Value divide(const Node &n) const {
        Value x = eval(n.children[0]);
        Value y = eval(n.children[1]);
        auto *d = std::get_if<Amplitude>(&y);
        if (d == nullptr) {
            fail(n.children[1], "cannot divide by a ket");
        }
        if (*d == Amplitude{0, 0}) {
            fail(n.children[1], "division by zero");
        }
        if (auto *s = std::get_if<Amplitude>(&x)) {
            return *s / *d;
        }
        auto &v = std::get<KetVector>(x);
        for (auto &a : v.amps) {
            a /= *d;
        }
        return x;
    }

    std::size_t dim_;
};

void append_number(std::string &out, double v, int digits) {
    char buf[64];
    std::to_chars_result r = digits >= 17 ? std::to_chars(buf, buf + sizeof(buf), v)
                                          : std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
    out.append(buf, r.ptr);
}

}  // namespace

StateExpression parse_expression(std::string_view text) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        throw ParseError("empty expression", 1, 1);
    }
    return Parser(Lexer(text).run()).run();
}

std::vector<Amplitude> evaluate(const StateExpression &expr) {
    if (expr.num_qubits == 0) {
        throw ParseError("expression contains no ket", expr.root.line, expr.root.column);
    }
    Value v = Evaluator(expr.num_qubits).eval(expr.root);
    if (std::holds_alternative<Amplitude>(v)) {
        throw ParseError("expression evaluates to a scalar, not a state", expr.root.line, expr.root.column);
    }
    return std::get<KetVector>(std::move(v)).amps;
}

QubitState parse_state(std::string_view text, bool normalize) {
    StateExpression expr = parse_expression(text);
    std::vector<Amplitude> amps = evaluate(expr);
    return make_state(expr.num_qubits, amps, normalize);
}

std::string format_state(const QubitState &state, int digits) {
    digits = std::clamp(digits, 1, 17);
    const int n = state.num_qubits();
    std::string out;
    auto term = [&](double coeff, bool imaginary, std::size_t index) {
        if (out.empty()) {
            if (std::signbit(coeff)) {
                out += "-";
            }
        } else {
            out += std::signbit(coeff) ? " - " : " + ";
        }
        append_number(out, std::abs(coeff), digits);
        if (imaginary) {
            out += "i";
        }
        out += "|";
        for (int q = n - 1; q >= 0; q--) {
            out += ((index >> q) & 1) ? '1' : '0';
        }
        out += ">";
    };
    for (std::size_t k = 0; k < state.dim(); k++) {
        if (state[k].real() != 0) {
            term(state[k].real(), false, k);
        }
        if (state[k].imag() != 0) {
            term(state[k].imag(), true, k);
        }
    }
    return out;
}

}  // namespace hopfq
