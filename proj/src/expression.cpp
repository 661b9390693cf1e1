#include "hodgeforge/expression.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hodgeforge {

namespace {

ExprPtr make(Expr::Kind kind, int a = 0, int b = 0, ExprPtr left = nullptr, ExprPtr right = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->a = a;
    e->b = b;
    e->left = std::move(left);
    e->right = std::move(right);
    return e;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return e;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            const std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
            throw ParseError(std::string("expected '") + c + "', found " + found, pos_);
        }
    }

    int integer() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError("expected an integer", start);
        if (pos_ - digits > 6) throw ParseError("integer literal too large", start);
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    int nonnegative(const char* what) {
        const std::size_t at = pos_;
        const int n = integer();
        if (n < 0) throw ParseError(std::string(what) + " must be nonnegative", at);
        return n;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (accept('+')) lhs = make(Expr::Kind::Sum, 0, 0, lhs, term());
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (accept('*')) lhs = make(Expr::Kind::Product, 0, 0, lhs, factor());
        return lhs;
    }

    ExprPtr factor() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        if (accept('(')) {
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (text_[pos_] == '1' &&
            (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
            ++pos_;
            return make(Expr::Kind::Unit);
        }
        std::string name;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
        if (name.empty()) throw ParseError("expected an atom or operator", start);
        if (name == "V") {
            expect('(');
            const std::size_t at = pos_;
            const int n = integer();
            if (n == 0) throw ParseError("V(n) needs n != 0", at);
            expect(')');
            return make(Expr::Kind::V, n);
        }
        if (name == "H") {
            expect('(');
            const int p = integer();
            expect(',');
            const int q = integer();
            expect(')');
            return make(Expr::Kind::H, p, q);
        }
        if (name == "T") {
            expect('(');
            const int m = integer();
            expect(')');
            return make(Expr::Kind::Tate, m);
        }
        if (name == "sym" || name == "wedge") {
            expect('(');
            const int n = nonnegative("degree");
            expect(',');
            ExprPtr e = expr();
            expect(')');
            return make(name == "sym" ? Expr::Kind::Sym : Expr::Kind::Wedge, n, 0, e);
        }
        if (name == "twist") {
            expect('(');
            const int m = integer();
            expect(',');
            ExprPtr e = expr();
            expect(')');
            return make(Expr::Kind::Twist, m, 0, e);
        }
        if (name == "dual") {
            expect('(');
            ExprPtr e = expr();
            expect(')');
            return make(Expr::Kind::Dual, 0, 0, e);
        }
        throw ParseError("unknown name '" + name + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

RealizedObject tensor_realized(const RealizedObject& x, const RealizedObject& y) {
    RealizedObject r;
    r.k = x.k + y.k;
    r.dim = x.dim * y.dim;
    r.projector = kron(x.projector, y.projector);
    r.formal = tensor(x.formal, y.formal);
    return r;
}

RealizedObject unit_realized() { return realize_simple(0, 0); }

// Sym^n or Λ^n of one component: the (anti)symmetrizer over the n tensor
// blocks, composed with P^{⊗n}.
RealizedObject power_of_component(const RealizedObject& x, int n, bool exterior) {
    if (n == 0) return unit_realized();
    if (n == 1) return x;
    if (x.k == 0 && x.dim != 1) throw RealizationError("power of a multi-dimensional weight-0 block");
    RealizedObject r;
    r.k = x.k * n;
    r.dim = std::size_t{1} << r.k;
    r.formal = exterior ? ext_power(x.formal, n) : sym_power(x.formal, n);
    const QMatrix pn = kron_power(x.projector, n);
    const std::size_t block = x.dim;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    QMatrix acc(r.dim, r.dim);
    std::int64_t count = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
        const bool negative = exterior && (inversions % 2 == 1);
        for (std::size_t row = 0; row < r.dim; ++row) {
            // Split row into n digits in base `block`, most significant first.
            std::vector<std::size_t> digits(static_cast<std::size_t>(n));
            std::size_t rest = row;
            for (int i = n - 1; i >= 0; --i) {
                digits[static_cast<std::size_t>(i)] = rest % block;
                rest /= block;
            }
            std::size_t target = 0;
            for (int i = 0; i < n; ++i) target = target * block + digits[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            const auto src = pn.row(row);
            auto dst = acc.row(target);
            for (std::size_t c = 0; c < r.dim; ++c) {
                if (src[c].is_zero()) continue;
                if (negative) {
                    dst[c] -= src[c];
                } else {
                    dst[c] += src[c];
                }
            }
        }
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    r.projector = acc * Rational(1, count);
    return r;
}

std::vector<RealizedObject> power_of_sum(const std::vector<RealizedObject>& parts, std::size_t from, int n, bool exterior) {
    if (from == parts.size()) return n == 0 ? std::vector<RealizedObject>{unit_realized()} : std::vector<RealizedObject>{};
    std::vector<RealizedObject> out;
    for (int a = 0; a <= n; ++a) {
        const RealizedObject head = power_of_component(parts[from], a, exterior);
        if (head.formal.is_zero()) continue;
        for (const auto& tail : power_of_sum(parts, from + 1, n - a, exterior)) {
            RealizedObject t = tensor_realized(head, tail);
            if (!t.formal.is_zero()) out.push_back(std::move(t));
        }
    }
    return out;
}

RealizedObject realize_label(int p, int q) {
    const SimpleLabel l = SimpleLabel::canonical(p, q);
    if (!l.is_effective()) throw RealizationError("non-effective simple has no realization inside V^{⊗k}");
    return realize_simple(l.p, l.q);
}

}  // namespace

bool operator==(const Expr& x, const Expr& y) {
    if (x.kind != y.kind || x.a != y.a || x.b != y.b) return false;
    auto same = [](const ExprPtr& u, const ExprPtr& v) { return (!u && !v) || (u && v && *u == *v); };
    return same(x.left, y.left) && same(x.right, y.right);
}

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string print(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::V: return "V(" + std::to_string(e.a) + ")";
        case K::H: return "H(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
        case K::Tate: return "T(" + std::to_string(e.a) + ")";
        case K::Unit: return "1";
        case K::Sum: {
            const std::string rhs = print(*e.right);
            return print(*e.left) + " + " + (e.right->kind == K::Sum ? "(" + rhs + ")" : rhs);
        }
        case K::Product: {
            const std::string lhs = print(*e.left);
            const std::string rhs = print(*e.right);
            const bool wrap_right = e.right->kind == K::Sum || e.right->kind == K::Product;
            return (e.left->kind == K::Sum ? "(" + lhs + ")" : lhs) + " * " + (wrap_right ? "(" + rhs + ")" : rhs);
        }
        case K::Sym: return "sym(" + std::to_string(e.a) + ", " + print(*e.left) + ")";
        case K::Wedge: return "wedge(" + std::to_string(e.a) + ", " + print(*e.left) + ")";
        case K::Dual: return "dual(" + print(*e.left) + ")";
        case K::Twist: return "twist(" + std::to_string(e.a) + ", " + print(*e.left) + ")";
    }
    return {};
}

std::size_t atom_count(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::V:
        case Expr::Kind::H:
        case Expr::Kind::Tate:
        case Expr::Kind::Unit: return 1;
        default: break;
    }
    return (e.left ? atom_count(*e.left) : 0) + (e.right ? atom_count(*e.right) : 0);
}

RepObject evaluate(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::V: return simple(e.a, 0);
        case K::H: return simple(e.a, e.b);
        case K::Tate: return simple(e.a, e.a);
        case K::Unit: return unit();
        case K::Sum: return direct_sum(evaluate(*e.left), evaluate(*e.right));
        case K::Product: return tensor(evaluate(*e.left), evaluate(*e.right));
        case K::Sym: return sym_power(evaluate(*e.left), e.a);
        case K::Wedge: return ext_power(evaluate(*e.left), e.a);
        case K::Dual: return dual(evaluate(*e.left));
        case K::Twist: return tate_twist(evaluate(*e.left), e.a);
    }
    return {};
}

std::vector<RealizedObject> realize_expression(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::V:
            if (e.a < 0) throw RealizationError("V(n) with n < 0 is not effective");
            return {realize_simple(e.a, 0)};
        case K::H: return {realize_label(e.a, e.b)};
        case K::Tate: return {realize_label(e.a, e.a)};
        case K::Unit: return {unit_realized()};
        case K::Sum: {
            auto out = realize_expression(*e.left);
            for (auto& r : realize_expression(*e.right)) out.push_back(std::move(r));
            return out;
        }
        case K::Product: {
            const auto lhs = realize_expression(*e.left);
            const auto rhs = realize_expression(*e.right);
            std::vector<RealizedObject> out;
            for (const auto& x : lhs)
                for (const auto& y : rhs) out.push_back(tensor_realized(x, y));
            return out;
        }
        case K::Twist: {
            if (e.a < 0) throw RealizationError("positive Tate twists (negative m) are not effective");
            const RealizedObject tate = realize_simple(e.a, e.a);
            std::vector<RealizedObject> out;
            for (const auto& x : realize_expression(*e.left)) out.push_back(tensor_realized(x, tate));
            return out;
        }
        case K::Sym:
        case K::Wedge: return power_of_sum(realize_expression(*e.left), 0, e.a, e.kind == K::Wedge);
        case K::Dual: throw RealizationError("duals are not effective");
    }
    return {};
}

std::map<int, HodgeNumbers> realized_hodge_by_weight(const std::vector<RealizedObject>& parts, const TorusElement& t) {
    std::map<int, HodgeNumbers> out;
    for (const auto& part : parts) {
        const HodgeNumbers h = realized_hodge_numbers(part.projector, part.k, t);
        auto [it, fresh] = out.try_emplace(part.k, HodgeNumbers{part.k, std::vector<std::int64_t>(h.g.size(), 0)});
        for (std::size_t i = 0; i < h.g.size(); ++i) it->second.g[i] += h.g[i];
    }
    // Drop weights whose realized part is zero.
    for (auto it = out.begin(); it != out.end();) it = it->second.total() == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::map<int, HodgeNumbers> formal_hodge_by_weight(const RepObject& a) {
    std::map<int, RepObject> parts;
    for (const auto& [label, mult] : a.entries()) parts[label.weight()].add(label, mult);
    std::map<int, HodgeNumbers> out;
    for (const auto& [w, part] : parts) out.emplace(w, hodge_numbers(part, w));
    return out;
}

}  // namespace hodgeforge
