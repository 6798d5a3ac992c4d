// Formal algebra of homogeneous bundle expressions on P^2 x P^2.
//
// A factor is an irreducible homogeneous bundle on one P^2, stored in the
// canonical form S^lam Omega(t) with lam in {0,1,2}:
//   lam = 0 : O(t),  lam = 1 : Omega(t),  lam = 2 : S^2 Omega(t).
// Wedge^2 Omega = O(-3), so S_{(l1,l2)}Omega(t) with l2 > 0 normalizes to
// S^{l1-l2}Omega(t - 3*l2).  This factor set {O, Omega, S^2 Omega} is closed
// under every tensor product we perform except S^2 Omega against a
// non-line-bundle, which is rejected.
//
// An expression is either a multiset of box terms L # R (sum form) or a
// declared short exact sequence with one unknown slot (kernel, middle
// extension, or cokernel), used for the extension/family constructions.
#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace segre {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg), position(pos) {}
    std::size_t position;
};
struct IndeterminateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ContradictionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Factor {
    int lam = 0;   // 0: O, 1: Omega, 2: S^2 Omega
    int twist = 0;

    friend auto operator<=>(const Factor&, const Factor&) = default;
};

// S_{(l1,l2)}Omega(t), any l1 >= l2 >= 0, reduced to the canonical factor set.
// Rejects l1 - l2 > 2 (outside the closed set).
Factor make_factor(int l1, int l2, int t);

int factor_rank(const Factor& f);
Factor factor_dual(const Factor& f);                    // O(t)^v=O(-t), Om(t)^v=Om(3-t), S2Om(t)^v=S2Om(6-t)
std::vector<Factor> factor_tensor(const Factor& a, const Factor& b);
std::string factor_str(const Factor& f);

struct BoxTerm {
    Factor left, right;
    long long mult = 1;

    friend auto operator<=>(const BoxTerm&, const BoxTerm&) = default;
};

using SumExpr = std::vector<BoxTerm>;  // canonical: sorted by (left, right), merged, mult >= 1

// Declared short exact sequence 0 -> sub -> mid -> quot -> 0 with one slot
// unknown; the two known slots are sum-form.  `generic` lets the LES chaser
// take unresolved map ranks maximal (set by operations whose defining data is
// a generic matrix or extension class).  `nontrivial` marks a nonsplit
// extension; the chaser turns it into a connecting-rank fact when the
// sequence is tensored by dual(quot).
enum class SesSlot { Sub, Mid, Quot };

struct SesDecl {
    SesSlot unknown = SesSlot::Mid;
    SumExpr sub, mid, quot;  // the unknown slot is left empty
    bool generic = false;
    bool nontrivial = false;
    std::string name;  // diagnostic tag, e.g. "aes", "e1[r=2]"
};

struct BundleExpr {
    bool is_sum = true;
    SumExpr sum;
    std::shared_ptr<const SesDecl> ses;  // set iff !is_sum

    BundleExpr() = default;
    BundleExpr(SumExpr s) : is_sum(true), sum(std::move(s)) {}
    BundleExpr(SesDecl d) : is_sum(false), ses(std::make_shared<SesDecl>(std::move(d))) {}
};

SumExpr normalize(SumExpr e);
SumExpr box(const Factor& l, const Factor& r, long long mult = 1);
SumExpr line_bundle(int m, int n);      // O(m,n)
SumExpr g1();                           // O # Omega(1)
SumExpr g2();                           // Omega(1) # O

SumExpr sum_twist(const SumExpr& e, int m, int n);
SumExpr sum_dual(const SumExpr& e);
SumExpr sum_tensor(const SumExpr& a, const SumExpr& b);
SumExpr sum_add(const SumExpr& a, const SumExpr& b);
long long sum_rank(const SumExpr& e);

BundleExpr twist(const BundleExpr& e, int m, int n);
BundleExpr dual(const BundleExpr& e);                       // constructions: dualized declared sequence
BundleExpr tensor(const BundleExpr& a, const BundleExpr& b);// sum forms only
BundleExpr add(const BundleExpr& a, const BundleExpr& b);   // sum forms only
long long rank(const BundleExpr& e);

bool is_line_bundle(const SumExpr& e, int& m, int& n);

std::string to_string(const SumExpr& e);
std::string to_string(const BundleExpr& e);

// Grammar (whitespace insignificant):
//   Expr  := Term ("+" Term)*
//   Term  := [int "*"] Box
//   Box   := Factor "#" Factor | NamedConst
//   Factor:= "O(" int ")" | "Om(" int ")" | "S2Om(" int ")"
//   NamedConst := "O(" int "," int ")" | "G1" | "G2"
//               | "ext(" Expr ";" Expr ";" ("triv"|"nontriv") ")"
BundleExpr parse(const std::string& text);

}  // namespace segre
