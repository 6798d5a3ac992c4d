#include "segre/weylbott.hpp"

#include <algorithm>

namespace segre {

namespace {
constexpr Weight kRho{2, 1, 0};
}

DottedWeyl dotted_weyl(const Weight& w) {
    Weight u{w[0] + kRho[0], w[1] + kRho[1], w[2] + kRho[2]};
    DottedWeyl out;
    if (u[0] == u[1] || u[0] == u[2] || u[1] == u[2]) {
        out.singular = true;
        return out;
    }
    int ell = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (u[i] < u[j]) ++ell;
    Weight s = u;
    std::sort(s.begin(), s.end(), std::greater<>());
    out.dominant = Weight{s[0] - kRho[0], s[1] - kRho[1], s[2] - kRho[2]};
    out.length = ell;
    return out;
}

long long weyl_dim(const Weight& w) {
    if (!(w[0] >= w[1] && w[1] >= w[2]))
        throw ContradictionError("weyl_dim requires a dominant weight");
    return (w[0] - w[1] + 1) * (w[1] - w[2] + 1) * (w[0] - w[2] + 2) / 2;
}

static BottOutcome bott_of_weight(const Weight& w) {
    DottedWeyl d = dotted_weyl(w);
    BottOutcome out;
    if (d.singular) return out;
    out.acyclic = false;
    out.degree = d.length;
    out.dim = weyl_dim(d.dominant);
    return out;
}

BottOutcome bott_p2(const Factor& f) {
    if (f.lam < 0 || f.lam > 2) throw ContradictionError("factor outside the closed set");
    return bott_of_weight(Weight{f.twist - f.lam, f.lam, 0});
}

Cohom3 cohomology_p2(const Factor& f) {
    Cohom3 h{0, 0, 0};
    BottOutcome b = bott_p2(f);
    if (!b.acyclic) {
        if (b.degree > 2)
            throw ContradictionError("impossible concentration degree on P^2");
        h[static_cast<std::size_t>(b.degree)] = b.dim;
    }
    return h;
}

BottOutcome bott_flag_line(int a, int b) {
    return bott_of_weight(Weight{a + b, b, 0});
}

Cohom4 cohomology_flag_line(int a, int b) {
    Cohom4 h{0, 0, 0, 0};
    BottOutcome o = bott_flag_line(a, b);
    if (!o.acyclic) h[static_cast<std::size_t>(o.degree)] = o.dim;
    return h;
}

}  // namespace segre
