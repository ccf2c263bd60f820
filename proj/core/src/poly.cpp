#include "axkatz/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace axkatz {

namespace {

unsigned total_degree(const std::vector<unsigned>& exps) {
    unsigned d = 0;
    for (auto e : exps) d += e;
    return d;
}

// graded-lexicographic: total degree first, then the exponent vector itself
bool grlex_less(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

} // namespace

MultiPoly MultiPoly::from_terms(unsigned nvars, std::vector<Term> terms) {
    std::map<std::vector<unsigned>, mpz_class> collected;
    for (auto& t : terms) {
        if (t.exps.size() != nvars) throw InvalidInput("term exponent arity mismatch");
        collected[t.exps] += t.coeff;
    }
    MultiPoly out(nvars);
    for (auto& [exps, coeff] : collected) {
        if (coeff == 0) continue;
        out.terms_.push_back(Term{coeff, exps});
    }
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& a, const Term& b) { return grlex_less(a.exps, b.exps); });
    return out;
}

MultiPoly MultiPoly::constant(unsigned nvars, const mpz_class& value) {
    MultiPoly out(nvars);
    if (value != 0) out.terms_.push_back(Term{value, std::vector<unsigned>(nvars, 0)});
    return out;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned index) {
    if (index >= nvars) throw InvalidInput("variable index out of range");
    MultiPoly out(nvars);
    std::vector<unsigned> e(nvars, 0);
    e[index] = 1;
    out.terms_.push_back(Term{mpz_class(1), std::move(e)});
    return out;
}

MultiPoly MultiPoly::add(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) throw InvalidInput("arity mismatch in polynomial addition");
    std::vector<Term> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return from_terms(nvars_, std::move(all));
}

MultiPoly MultiPoly::neg() const {
    MultiPoly out(nvars_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

MultiPoly MultiPoly::sub(const MultiPoly& other) const { return add(other.neg()); }

MultiPoly MultiPoly::mul(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) throw InvalidInput("arity mismatch in polynomial product");
    std::vector<Term> prods;
    prods.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            Term t;
            t.coeff = a.coeff * b.coeff;
            t.exps.resize(nvars_);
            for (unsigned i = 0; i < nvars_; ++i) t.exps[i] = a.exps[i] + b.exps[i];
            prods.push_back(std::move(t));
        }
    }
    return from_terms(nvars_, std::move(prods));
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(nvars_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result.mul(base);
        if (e >>= 1) base = base.mul(base);
    }
    return result;
}

std::optional<unsigned> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) throw ZeroPolynomial();
    unsigned d = total_degree(terms_.front().exps);
    for (const auto& t : terms_)
        if (total_degree(t.exps) != d) return std::nullopt;
    return d;
}

unsigned MultiPoly::max_total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.exps));
    return d;
}

std::string MultiPoly::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpz_class mag = abs(t.coeff);
        bool negative = t.coeff < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        bool has_vars = total_degree(t.exps) > 0;
        bool printed_coeff = false;
        if (!has_vars || mag != 1) {
            os << mag.get_str();
            printed_coeff = true;
        }
        for (unsigned i = 0; i < nvars_; ++i) {
            if (t.exps[i] == 0) continue;
            if (printed_coeff) os << "*";
            printed_coeff = true;
            os << "x" << i;
            if (t.exps[i] > 1) os << "^" << t.exps[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Lexer {
    enum class Kind { Integer, Variable, Plus, Minus, Star, Caret, LParen, RParen, End };

    struct Token {
        Kind kind;
        std::size_t pos;
        mpz_class value;  // Integer
        unsigned index;   // Variable
    };

    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        tok_.pos = pos_;
        if (pos_ >= text_.size()) {
            tok_.kind = Kind::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': tok_.kind = Kind::Plus; ++pos_; return;
            case '-': tok_.kind = Kind::Minus; ++pos_; return;
            case '*': tok_.kind = Kind::Star; ++pos_; return;
            case '^': tok_.kind = Kind::Caret; ++pos_; return;
            case '(': tok_.kind = Kind::LParen; ++pos_; return;
            case ')': tok_.kind = Kind::RParen; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            tok_.kind = Kind::Integer;
            tok_.value = mpz_class(text_.substr(start, pos_ - start));
            return;
        }
        if (c == 'x') {
            std::size_t start = pos_ + 1;
            std::size_t end = start;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
            if (end == start) throw ParseError(pos_, "variable must be x followed by an index");
            unsigned long idx = std::stoul(text_.substr(start, end - start));
            tok_.kind = Kind::Variable;
            tok_.index = static_cast<unsigned>(idx);
            pos_ = end;
            return;
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& text, unsigned nvars) : lex_(text), nvars_(nvars) {}

    MultiPoly parse() {
        MultiPoly p = expression();
        if (lex_.peek().kind != Lexer::Kind::End)
            throw ParseError(lex_.peek().pos, "trailing input after expression");
        return p;
    }

private:
    using Kind = Lexer::Kind;

    // expression := term (('+' | '-') term)*
    MultiPoly expression() {
        MultiPoly acc = term();
        while (lex_.peek().kind == Kind::Plus || lex_.peek().kind == Kind::Minus) {
            bool minus = lex_.take().kind == Kind::Minus;
            MultiPoly rhs = term();
            acc = minus ? acc.sub(rhs) : acc.add(rhs);
        }
        return acc;
    }

    // term := unary ('*' unary)*
    MultiPoly term() {
        MultiPoly acc = unary();
        while (lex_.peek().kind == Kind::Star) {
            lex_.take();
            acc = acc.mul(unary());
        }
        return acc;
    }

    // unary := '-' unary | power     (with '^' binding tighter than '-')
    MultiPoly unary() {
        if (lex_.peek().kind == Kind::Minus) {
            lex_.take();
            return unary().neg();
        }
        return power();
    }

    // power := atom ('^' integer)?
    MultiPoly power() {
        MultiPoly base = atom();
        if (lex_.peek().kind == Kind::Caret) {
            lex_.take();
            auto t = lex_.peek();
            if (t.kind != Kind::Integer)
                throw ParseError(t.pos, "exponent must be a non-negative integer literal");
            lex_.take();
            if (t.value > 1024) throw ParseError(t.pos, "exponent too large");
            return base.pow(static_cast<unsigned>(t.value.get_ui()));
        }
        return base;
    }

    // atom := integer | variable | '(' expression ')'
    MultiPoly atom() {
        auto t = lex_.peek();
        switch (t.kind) {
            case Kind::Integer:
                lex_.take();
                return MultiPoly::constant(nvars_, t.value);
            case Kind::Variable:
                lex_.take();
                if (t.index >= nvars_) throw UnknownVariable(t.pos, t.index, nvars_);
                return MultiPoly::variable(nvars_, t.index);
            case Kind::LParen: {
                lex_.take();
                MultiPoly inner = expression();
                if (lex_.peek().kind != Kind::RParen)
                    throw ParseError(lex_.peek().pos, "expected ')'");
                lex_.take();
                return inner;
            }
            default:
                throw ParseError(t.pos, "expected an integer, a variable, or '('");
        }
    }

    Lexer lex_;
    unsigned nvars_;
};

} // namespace

MultiPoly parse_poly(const std::string& text, unsigned nvars) {
    if (nvars == 0) throw InvalidInput("polynomial needs at least one variable");
    return Parser(text, nvars).parse();
}

// ---------------------------------------------------------------------------

PolynomialSystem::PolynomialSystem(unsigned n, std::vector<MultiPoly> polys)
    : n_(n), polys_(std::move(polys)) {
    for (const auto& f : polys_) {
        if (f.nvars() != n_ + 1)
            throw InvalidInput("system polynomial arity does not match ambient dimension");
        auto d = f.homogeneous_degree();
        if (!d) throw InvalidInput("system polynomial is not homogeneous: " + f.render());
        if (*d < 1) throw InvalidInput("system polynomial must have degree >= 1");
        degrees_.push_back(*d);
    }
    std::sort(degrees_.begin(), degrees_.end(), std::greater<unsigned>());
}

// ---------------------------------------------------------------------------

EvaluationKernel::EvaluationKernel(const MultiPoly& poly, FieldPtr field)
    : field_(std::move(field)), nvars_(poly.nvars()) {
    for (const auto& t : poly.terms()) {
        FieldElement c = field_->from_integer(t.coeff);
        if (field_->is_zero(c)) continue;
        terms_.push_back(Term{std::move(c), t.exps});
        for (auto e : t.exps) max_degree_ = std::max(max_degree_, e);
    }
}

FieldElement EvaluationKernel::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != nvars_) throw InvalidInput("point arity mismatch in evaluation");
    // memoize coordinate powers up to the degree
    std::vector<std::vector<FieldElement>> powers(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
        powers[i].reserve(max_degree_ + 1);
        powers[i].push_back(field_->one());
        for (unsigned e = 1; e <= max_degree_; ++e)
            powers[i].push_back(field_->mul(powers[i].back(), point[i]));
    }
    FieldElement acc = field_->zero();
    for (const auto& t : terms_) {
        FieldElement v = t.coeff;
        for (unsigned i = 0; i < nvars_; ++i)
            if (t.exps[i] > 0) v = field_->mul(v, powers[i][t.exps[i]]);
        acc = field_->add(acc, v);
    }
    return acc;
}

EvaluationKernel reduce_and_compile(const MultiPoly& poly, FieldPtr field) {
    return EvaluationKernel(poly, std::move(field));
}

} // namespace axkatz
