#include "segre/bundles.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace segre {

Factor make_factor(int l1, int l2, int t) {
    if (l1 < l2 || l2 < 0)
        throw ContradictionError("malformed partition for S_lam Omega");
    // S_{(l1,l2)}Omega = S^{l1-l2}Omega tensor (Wedge^2 Omega)^{l2}, Wedge^2 Omega = O(-3)
    int lam = l1 - l2;
    int tw = t - 3 * l2;
    if (lam > 2)
        throw ContradictionError("factor S^" + std::to_string(lam) +
                                 " Omega is outside the closed factor set");
    return Factor{lam, tw};
}

int factor_rank(const Factor& f) { return f.lam + 1; }

Factor factor_dual(const Factor& f) {
    switch (f.lam) {
        case 0: return Factor{0, -f.twist};
        case 1: return Factor{1, 3 - f.twist};
        default: return Factor{2, 6 - f.twist};
    }
}

std::vector<Factor> factor_tensor(const Factor& a, const Factor& b) {
    if (a.lam > b.lam) return factor_tensor(b, a);
    int t = a.twist + b.twist;
    if (a.lam == 0) return {Factor{b.lam, t}};
    if (a.lam == 1 && b.lam == 1)
        // Omega(s) ox Omega(t) = S^2 Omega(s+t) + O(s+t-3)
        return {Factor{2, t}, Factor{0, t - 3}};
    throw ContradictionError("tensor product " + factor_str(a) + " ox " + factor_str(b) +
                             " leaves the closed factor set");
}

std::string factor_str(const Factor& f) {
    const char* head = f.lam == 0 ? "O(" : f.lam == 1 ? "Om(" : "S2Om(";
    return head + std::to_string(f.twist) + ")";
}

SumExpr normalize(SumExpr e) {
    std::sort(e.begin(), e.end(), [](const BoxTerm& a, const BoxTerm& b) {
        return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    });
    SumExpr out;
    for (const auto& t : e) {
        if (t.mult == 0) continue;
        if (t.mult < 0) throw ContradictionError("negative multiplicity");
        if (!out.empty() && out.back().left == t.left && out.back().right == t.right)
            out.back().mult += t.mult;
        else
            out.push_back(t);
    }
    return out;
}

SumExpr box(const Factor& l, const Factor& r, long long mult) {
    if (mult == 0) return {};
    return {BoxTerm{l, r, mult}};
}

SumExpr line_bundle(int m, int n) { return box(Factor{0, m}, Factor{0, n}); }
SumExpr g1() { return box(Factor{0, 0}, Factor{1, 1}); }
SumExpr g2() { return box(Factor{1, 1}, Factor{0, 0}); }

SumExpr sum_twist(const SumExpr& e, int m, int n) {
    SumExpr out = e;
    for (auto& t : out) {
        t.left.twist += m;
        t.right.twist += n;
    }
    return normalize(out);
}

SumExpr sum_dual(const SumExpr& e) {
    SumExpr out;
    for (const auto& t : e)
        out.push_back(BoxTerm{factor_dual(t.left), factor_dual(t.right), t.mult});
    return normalize(out);
}

SumExpr sum_tensor(const SumExpr& a, const SumExpr& b) {
    SumExpr out;
    for (const auto& s : a)
        for (const auto& t : b) {
            auto ls = factor_tensor(s.left, t.left);
            auto rs = factor_tensor(s.right, t.right);
            for (const auto& lf : ls)
                for (const auto& rf : rs)
                    out.push_back(BoxTerm{lf, rf, s.mult * t.mult});
        }
    return normalize(out);
}

SumExpr sum_add(const SumExpr& a, const SumExpr& b) {
    SumExpr out = a;
    out.insert(out.end(), b.begin(), b.end());
    return normalize(out);
}

long long sum_rank(const SumExpr& e) {
    long long r = 0;
    for (const auto& t : e)
        r += t.mult * factor_rank(t.left) * factor_rank(t.right);
    return r;
}

static SesDecl ses_map(const SesDecl& d, const std::function<SumExpr(const SumExpr&)>& f) {
    SesDecl out = d;
    out.sub = f(d.sub);
    out.mid = f(d.mid);
    out.quot = f(d.quot);
    return out;
}

BundleExpr twist(const BundleExpr& e, int m, int n) {
    if (e.is_sum) return BundleExpr(sum_twist(e.sum, m, n));
    return BundleExpr(ses_map(*e.ses, [&](const SumExpr& s) { return sum_twist(s, m, n); }));
}

BundleExpr dual(const BundleExpr& e) {
    if (e.is_sum) return BundleExpr(sum_dual(e.sum));
    // 0 -> S -> M -> Q -> 0 dualizes to 0 -> Q^v -> M^v -> S^v -> 0.
    const SesDecl& d = *e.ses;
    SesDecl out;
    out.sub = sum_dual(d.quot);
    out.mid = sum_dual(d.mid);
    out.quot = sum_dual(d.sub);
    switch (d.unknown) {
        case SesSlot::Sub: out.unknown = SesSlot::Quot; break;
        case SesSlot::Mid: out.unknown = SesSlot::Mid; break;
        case SesSlot::Quot: out.unknown = SesSlot::Sub; break;
    }
    out.generic = d.generic;
    out.nontrivial = d.nontrivial;
    out.name = d.name.empty() ? "" : d.name + "^v";
    return BundleExpr(out);
}

BundleExpr tensor(const BundleExpr& a, const BundleExpr& b) {
    if (!a.is_sum || !b.is_sum)
        throw IndeterminateError("tensor requires sum-form expressions");
    return BundleExpr(sum_tensor(a.sum, b.sum));
}

BundleExpr add(const BundleExpr& a, const BundleExpr& b) {
    if (!a.is_sum || !b.is_sum)
        throw IndeterminateError("sum requires sum-form expressions");
    return BundleExpr(sum_add(a.sum, b.sum));
}

long long rank(const BundleExpr& e) {
    if (e.is_sum) return sum_rank(e.sum);
    const SesDecl& d = *e.ses;
    long long r = 0;
    switch (d.unknown) {
        case SesSlot::Sub: r = sum_rank(d.mid) - sum_rank(d.quot); break;
        case SesSlot::Mid: r = sum_rank(d.sub) + sum_rank(d.quot); break;
        case SesSlot::Quot: r = sum_rank(d.mid) - sum_rank(d.sub); break;
    }
    if (r < 0) throw ContradictionError("declared sequence has negative rank");
    return r;
}

bool is_line_bundle(const SumExpr& e, int& m, int& n) {
    if (e.size() != 1 || e[0].mult != 1) return false;
    if (e[0].left.lam != 0 || e[0].right.lam != 0) return false;
    m = e[0].left.twist;
    n = e[0].right.twist;
    return true;
}

std::string to_string(const SumExpr& e) {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : e) {
        if (!first) os << " + ";
        first = false;
        if (t.mult != 1) os << t.mult << "*";
        if (t.left.lam == 0 && t.right.lam == 0)
            os << "O(" << t.left.twist << "," << t.right.twist << ")";
        else
            os << factor_str(t.left) << "#" << factor_str(t.right);
    }
    return os.str();
}

std::string to_string(const BundleExpr& e) {
    if (e.is_sum) return to_string(e.sum);
    const SesDecl& d = *e.ses;
    std::ostringstream os;
    switch (d.unknown) {
        case SesSlot::Mid:
            os << "ext(" << to_string(d.sub) << "; " << to_string(d.quot) << "; "
               << (d.nontrivial ? "nontriv" : "triv") << ")";
            break;
        case SesSlot::Quot:
            os << "coker(" << to_string(d.sub) << " -> " << to_string(d.mid) << ")";
            break;
        case SesSlot::Sub:
            os << "ker(" << to_string(d.mid) << " -> " << to_string(d.quot) << ")";
            break;
    }
    return os.str();
}

namespace {

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text), pos_(0) { skip(); }

    bool eof() const { return pos_ >= s_.size(); }
    std::size_t pos() const { return pos_; }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            skip();
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' (" + what + ")", pos_);
    }
    bool accept_word(const char* w) {
        std::size_t n = std::string(w).size();
        if (s_.compare(pos_, n, w) == 0) {
            pos_ += n;
            skip();
            return true;
        }
        return false;
    }
    long long integer() {
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = (peek() == '-');
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer", start);
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            ++pos_;
        }
        skip();
        return neg ? -v : v;
    }

  private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    const std::string& s_;
    std::size_t pos_;
};

BundleExpr parse_expr(Lexer& lx);

// Factor or the start of a named line bundle.  Returns true and fills `f` for
// a single-variable factor "O(t)" / "Om(t)" / "S2Om(t)"; for "O(m,n)" fills
// the box term directly.
struct BoxOrFactor {
    bool is_box = false;
    SumExpr as_box;   // set if is_box
    Factor factor;    // set if !is_box
};

BoxOrFactor parse_factor_or_line(Lexer& lx) {
    BoxOrFactor out;
    int lam;
    if (lx.accept_word("S2Om(")) lam = 2;
    else if (lx.accept_word("Om(")) lam = 1;
    else if (lx.accept_word("O(")) lam = 0;
    else throw ParseError("expected factor O(..), Om(..), S2Om(..)", lx.pos());
    long long a = lx.integer();
    if (lam == 0 && lx.accept(',')) {
        long long b = lx.integer();
        lx.expect(')', "line bundle");
        out.is_box = true;
        out.as_box = line_bundle(static_cast<int>(a), static_cast<int>(b));
        return out;
    }
    lx.expect(')', "factor twist");
    out.factor = Factor{lam, static_cast<int>(a)};
    return out;
}

BundleExpr parse_box(Lexer& lx) {
    if (lx.accept_word("G1")) return BundleExpr(g1());
    if (lx.accept_word("G2")) return BundleExpr(g2());
    if (lx.accept_word("ext(")) {
        BundleExpr sub = parse_expr(lx);
        lx.expect(';', "ext sub/quot separator");
        BundleExpr quot = parse_expr(lx);
        lx.expect(';', "ext triviality flag");
        bool nontriv;
        if (lx.accept_word("nontriv")) nontriv = true;
        else if (lx.accept_word("triv")) nontriv = false;
        else throw ParseError("expected 'triv' or 'nontriv'", lx.pos());
        lx.expect(')', "ext");
        if (!sub.is_sum || !quot.is_sum)
            throw ParseError("nested constructions are not supported in ext()", lx.pos());
        SesDecl d;
        d.unknown = SesSlot::Mid;
        d.sub = sub.sum;
        d.quot = quot.sum;
        d.nontrivial = nontriv;
        d.name = "ext";
        return BundleExpr(std::move(d));
    }
    BoxOrFactor first = parse_factor_or_line(lx);
    if (first.is_box) return BundleExpr(first.as_box);
    lx.expect('#', "box product");
    BoxOrFactor second = parse_factor_or_line(lx);
    if (second.is_box)
        throw ParseError("right box factor must be a single-variable factor", lx.pos());
    return BundleExpr(box(first.factor, second.factor));
}

BundleExpr parse_term(Lexer& lx) {
    long long mult = 1;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        mult = lx.integer();
        lx.expect('*', "multiplicity");
    }
    BundleExpr b = parse_box(lx);
    if (mult == 1) return b;
    if (!b.is_sum) throw ParseError("multiplicity on a construction is not supported", lx.pos());
    SumExpr out = b.sum;
    for (auto& t : out) t.mult *= mult;
    return BundleExpr(normalize(out));
}

BundleExpr parse_expr(Lexer& lx) {
    BundleExpr acc = parse_term(lx);
    while (lx.accept('+')) {
        BundleExpr nxt = parse_term(lx);
        if (!acc.is_sum || !nxt.is_sum)
            throw ParseError("constructions cannot appear in sums", lx.pos());
        acc = BundleExpr(sum_add(acc.sum, nxt.sum));
    }
    return acc;
}

}  // namespace

BundleExpr parse(const std::string& text) {
    Lexer lx(text);
    BundleExpr e = parse_expr(lx);
    if (!lx.eof()) throw ParseError("trailing input", lx.pos());
    if (e.is_sum) e = BundleExpr(normalize(e.sum));
    return e;
}

}  // namespace segre
