#include "tango/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace tango {

std::string QasmError::format(Kind kind, int line, int col, const std::string& msg) {
    const char* what = kind == Kind::Syntax ? "syntax error"
                     : kind == Kind::UnsupportedGate ? "unsupported gate"
                                                     : "index out of range";
    std::ostringstream os;
    os << "qasm:" << line << ":" << col << ": " << what << ": " << msg;
    return os.str();
}

namespace {

struct Token {
    enum class Type { Ident, Number, Symbol, String, End };
    Type type = Type::End;
    std::string text;
    double value = 0.0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw QasmError(QasmError::Kind::Syntax, tok_.line, tok_.col, msg);
    }

private:
    void advance() {
        skip_space_and_comments();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.type = Token::Type::End;
            tok_.text.clear();
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                bump();
            tok_.type = Token::Type::Ident;
            tok_.text = src_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
                bump();
            // exponent
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                size_t save = pos_;
                bump();
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) bump();
                if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                        bump();
                } else {
                    pos_ = save; // not an exponent after all
                }
            }
            tok_.type = Token::Type::Number;
            tok_.text = src_.substr(start, pos_ - start);
            tok_.value = std::strtod(tok_.text.c_str(), nullptr);
        } else if (c == '"') {
            bump();
            size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] != '"') bump();
            if (pos_ >= src_.size())
                throw QasmError(QasmError::Kind::Syntax, tok_.line, tok_.col,
                                "unterminated string");
            tok_.type = Token::Type::String;
            tok_.text = src_.substr(start, pos_ - start);
            bump(); // closing quote
        } else {
            tok_.type = Token::Type::Symbol;
            if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                tok_.text = "->";
                bump();
                bump();
            } else {
                tok_.text = std::string(1, c);
                bump();
            }
        }
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

struct Reg {
    int offset = 0;
    int size = 0;
};

const std::map<std::string, GateKind>& gate_table() {
    static const std::map<std::string, GateKind> table = {
        {"x", GateKind::X},     {"y", GateKind::Y},     {"z", GateKind::Z},
        {"h", GateKind::H},     {"s", GateKind::S},     {"sdg", GateKind::Sdg},
        {"t", GateKind::T},     {"tdg", GateKind::Tdg}, {"rx", GateKind::RX},
        {"ry", GateKind::RY},   {"rz", GateKind::RZ},   {"u1", GateKind::U1},
        {"u2", GateKind::U2},   {"u3", GateKind::U3},   {"id", GateKind::Id},
        {"cx", GateKind::CX},   {"swap", GateKind::Swap},
    };
    return table;
}

class Parser {
public:
    Parser(const std::string& src, std::vector<std::string>* warnings)
        : lex_(src), warnings_(warnings) {}

    LogicalCircuit run() {
        expect_header();
        while (lex_.peek().type != Token::Type::End) statement();
        LogicalCircuit out;
        out.num_qubits = num_qubits_;
        out.num_cbits = num_cbits_;
        out.gates = std::move(gates_);
        // measures pinned to the end, original relative order kept
        for (Gate& m : measures_) out.gates.push_back(std::move(m));
        for (int i = 0; i < static_cast<int>(out.gates.size()); ++i)
            out.gates[i].id = i;
        return out;
    }

private:
    void expect_header() {
        Token t = lex_.next();
        if (t.type != Token::Type::Ident || t.text != "OPENQASM")
            throw QasmError(QasmError::Kind::Syntax, t.line, t.col,
                            "expected OPENQASM header");
        Token v = lex_.next();
        if (v.type != Token::Type::Number || v.text != "2.0")
            throw QasmError(QasmError::Kind::Syntax, v.line, v.col,
                            "only OPENQASM 2.0 is supported");
        expect_symbol(";");
    }

    void statement() {
        Token t = lex_.next();
        if (t.type != Token::Type::Ident)
            throw QasmError(QasmError::Kind::Syntax, t.line, t.col,
                            "expected statement");
        if (t.text == "include") {
            Token s = lex_.next();
            if (s.type != Token::Type::String)
                throw QasmError(QasmError::Kind::Syntax, s.line, s.col,
                                "expected include path");
            expect_symbol(";");
        } else if (t.text == "qreg" || t.text == "creg") {
            declare_register(t.text == "qreg");
        } else if (t.text == "measure") {
            parse_measure();
        } else if (t.text == "barrier") {
            parse_barrier(t);
        } else if (t.text == "gate" || t.text == "opaque" || t.text == "if" ||
                   t.text == "reset") {
            throw QasmError(QasmError::Kind::UnsupportedGate, t.line, t.col,
                            "'" + t.text + "' statements are not supported");
        } else {
            parse_gate(t);
        }
    }

    void declare_register(bool quantum) {
        Token name = lex_.next();
        if (name.type != Token::Type::Ident)
            throw QasmError(QasmError::Kind::Syntax, name.line, name.col,
                            "expected register name");
        expect_symbol("[");
        Token size = lex_.next();
        if (size.type != Token::Type::Number)
            throw QasmError(QasmError::Kind::Syntax, size.line, size.col,
                            "expected register size");
        int n = static_cast<int>(size.value);
        if (n <= 0)
            throw QasmError(QasmError::Kind::Syntax, size.line, size.col,
                            "register size must be positive");
        expect_symbol("]");
        expect_symbol(";");
        auto& regs = quantum ? qregs_ : cregs_;
        int& total = quantum ? num_qubits_ : num_cbits_;
        if (regs.count(name.text))
            throw QasmError(QasmError::Kind::Syntax, name.line, name.col,
                            "register '" + name.text + "' redeclared");
        regs[name.text] = Reg{total, n};
        total += n;
    }

    // Register operand: either name[idx] (one bit) or bare name (whole register).
    std::vector<int> operand(const std::map<std::string, Reg>& regs, const char* what) {
        Token name = lex_.next();
        if (name.type != Token::Type::Ident)
            throw QasmError(QasmError::Kind::Syntax, name.line, name.col,
                            std::string("expected ") + what + " operand");
        auto it = regs.find(name.text);
        if (it == regs.end())
            throw QasmError(QasmError::Kind::Syntax, name.line, name.col,
                            "unknown register '" + name.text + "'");
        const Reg& reg = it->second;
        if (lex_.peek().type == Token::Type::Symbol && lex_.peek().text == "[") {
            lex_.next();
            Token idx = lex_.next();
            if (idx.type != Token::Type::Number)
                throw QasmError(QasmError::Kind::Syntax, idx.line, idx.col,
                                "expected index");
            int i = static_cast<int>(idx.value);
            if (i < 0 || i >= reg.size)
                throw QasmError(QasmError::Kind::IndexOutOfRange, idx.line, idx.col,
                                name.text + "[" + std::to_string(i) + "] out of range");
            expect_symbol("]");
            return {reg.offset + i};
        }
        std::vector<int> all(reg.size);
        for (int i = 0; i < reg.size; ++i) all[i] = reg.offset + i;
        return all;
    }

    void parse_measure() {
        std::vector<int> q = operand(qregs_, "qubit");
        expect_symbol("->");
        std::vector<int> c = operand(cregs_, "bit");
        expect_symbol(";");
        if (q.size() != c.size())
            lex_.fail("measure operand sizes differ");
        for (size_t i = 0; i < q.size(); ++i) {
            Gate g;
            g.kind = GateKind::Measure;
            g.q0 = q[i];
            g.cbit = c[i];
            measures_.push_back(g);
        }
    }

    void parse_barrier(const Token& t) {
        // parse operand list, then drop the barrier
        operand(qregs_, "qubit");
        while (lex_.peek().type == Token::Type::Symbol && lex_.peek().text == ",") {
            lex_.next();
            operand(qregs_, "qubit");
        }
        expect_symbol(";");
        if (warnings_)
            warnings_->push_back("line " + std::to_string(t.line) +
                                 ": barrier dropped");
    }

    void parse_gate(const Token& name) {
        auto it = gate_table().find(name.text);
        if (it == gate_table().end())
            throw QasmError(QasmError::Kind::UnsupportedGate, name.line, name.col,
                            "gate '" + name.text + "' is not supported");
        GateKind kind = it->second;

        std::vector<double> params;
        if (lex_.peek().type == Token::Type::Symbol && lex_.peek().text == "(") {
            lex_.next();
            if (!(lex_.peek().type == Token::Type::Symbol && lex_.peek().text == ")")) {
                params.push_back(expression());
                while (lex_.peek().type == Token::Type::Symbol && lex_.peek().text == ",") {
                    lex_.next();
                    params.push_back(expression());
                }
            }
            expect_symbol(")");
        }
        if (static_cast<int>(params.size()) != param_count(kind))
            throw QasmError(QasmError::Kind::Syntax, name.line, name.col,
                            "gate '" + name.text + "' expects " +
                                std::to_string(param_count(kind)) + " parameter(s)");

        std::vector<std::vector<int>> operands;
        operands.push_back(operand(qregs_, "qubit"));
        while (lex_.peek().type == Token::Type::Symbol && lex_.peek().text == ",") {
            lex_.next();
            operands.push_back(operand(qregs_, "qubit"));
        }
        expect_symbol(";");

        const int arity = is_two_qubit(kind) ? 2 : 1;
        if (static_cast<int>(operands.size()) != arity)
            throw QasmError(QasmError::Kind::Syntax, name.line, name.col,
                            "gate '" + name.text + "' expects " +
                                std::to_string(arity) + " operand(s)");
        // broadcast a bare register over single-qubit gates
        size_t reps = 1;
        for (const auto& ops : operands) reps = std::max(reps, ops.size());
        for (const auto& ops : operands)
            if (ops.size() != 1 && ops.size() != reps)
                throw QasmError(QasmError::Kind::Syntax, name.line, name.col,
                                "operand register sizes differ");
        for (size_t r = 0; r < reps; ++r) {
            Gate g;
            g.kind = kind;
            g.params = params;
            g.q0 = operands[0][operands[0].size() == 1 ? 0 : r];
            if (arity == 2) {
                g.q1 = operands[1][operands[1].size() == 1 ? 0 : r];
                if (g.q0 == g.q1)
                    throw QasmError(QasmError::Kind::IndexOutOfRange, name.line, name.col,
                                    "two-qubit gate with identical operands");
            }
            gates_.push_back(g);
        }
    }

    // expr := term (('+'|'-') term)*
    double expression() {
        double v = term();
        while (lex_.peek().type == Token::Type::Symbol &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            std::string op = lex_.next().text;
            double rhs = term();
            v = op == "+" ? v + rhs : v - rhs;
        }
        return v;
    }

    // term := factor (('*'|'/') factor)*
    double term() {
        double v = factor();
        while (lex_.peek().type == Token::Type::Symbol &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            std::string op = lex_.next().text;
            double rhs = factor();
            v = op == "*" ? v * rhs : v / rhs;
        }
        return v;
    }

    double factor() {
        Token t = lex_.next();
        if (t.type == Token::Type::Symbol && t.text == "-") return -factor();
        if (t.type == Token::Type::Symbol && t.text == "+") return factor();
        if (t.type == Token::Type::Symbol && t.text == "(") {
            double v = expression();
            expect_symbol(")");
            return v;
        }
        if (t.type == Token::Type::Number) return t.value;
        if (t.type == Token::Type::Ident && t.text == "pi") return M_PI;
        throw QasmError(QasmError::Kind::Syntax, t.line, t.col,
                        "expected angle expression");
    }

    void expect_symbol(const std::string& s) {
        Token t = lex_.next();
        if (t.type != Token::Type::Symbol || t.text != s)
            throw QasmError(QasmError::Kind::Syntax, t.line, t.col,
                            "expected '" + s + "'");
    }

    Lexer lex_;
    std::vector<std::string>* warnings_;
    std::map<std::string, Reg> qregs_;
    std::map<std::string, Reg> cregs_;
    int num_qubits_ = 0;
    int num_cbits_ = 0;
    std::vector<Gate> gates_;
    std::vector<Gate> measures_;
};

void append_angle(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

} // namespace

LogicalCircuit parse_qasm(const std::string& text, std::vector<std::string>* warnings) {
    Parser p(text, warnings);
    return p.run();
}

LogicalCircuit parse_qasm_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_qasm(ss.str(), warnings);
}

std::string serialize_qasm(const std::vector<Gate>& gates, int num_qubits, int num_cbits) {
    std::string out;
    out += "OPENQASM 2.0;\n";
    out += "include \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(num_qubits) + "];\n";
    if (num_cbits > 0)
        out += "creg c[" + std::to_string(num_cbits) + "];\n";
    for (const Gate& g : gates) {
        switch (g.kind) {
        case GateKind::Barrier:
            continue;
        case GateKind::Measure:
            out += "measure q[" + std::to_string(g.q0) + "] -> c[" +
                   std::to_string(g.cbit) + "];\n";
            continue;
        default:
            break;
        }
        out += gate_name(g.kind);
        if (!g.params.empty()) {
            out += '(';
            for (size_t i = 0; i < g.params.size(); ++i) {
                if (i) out += ',';
                append_angle(out, g.params[i]);
            }
            out += ')';
        }
        out += " q[" + std::to_string(g.q0) + "]";
        if (g.q1 >= 0)
            out += ",q[" + std::to_string(g.q1) + "]";
        out += ";\n";
    }
    return out;
}

std::string serialize_qasm(const LogicalCircuit& circuit) {
    return serialize_qasm(circuit.gates, circuit.num_qubits, circuit.num_cbits);
}

} // namespace tango
