#include "segre/chow.hpp"

namespace segre {

ChowClass ChowClass::scalar(const Rat& r) {
    ChowClass out;
    out.c[0][0] = r;
    return out;
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
    ChowClass out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.c[i][j] = c[i][j] + o.c[i][j];
    return out;
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
    ChowClass out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.c[i][j] = c[i][j] - o.c[i][j];
    return out;
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
    ChowClass out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; i + k < 3; ++k)
                for (int l = 0; j + l < 3; ++l)
                    out.c[i + k][j + l] += c[i][j] * o.c[k][l];
    return out;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c[i][j] += o.c[i][j];
    return *this;
}

bool ChowClass::operator==(const ChowClass& o) const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (c[i][j] != o.c[i][j]) return false;
    return true;
}

namespace {

FactorSeries series_mul(const FactorSeries& x, const FactorSeries& y) {
    FactorSeries out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; i + j < 3; ++j) out.a[i + j] += x.a[i] * y.a[j];
    return out;
}

FactorSeries exp_th(int t) {
    // exp(t h) truncated: 1 + t h + t^2/2 h^2
    FactorSeries s;
    s.a[0] = 1;
    s.a[1] = t;
    s.a[2] = Rat(Int(t) * t, 2);
    return s;
}

FactorSeries omega_series() {
    // From the cotangent sequence: ch(Omega) = 3 exp(-h) - 1 = 2 - 3h + (3/2)h^2
    FactorSeries s;
    s.a[0] = 2;
    s.a[1] = -3;
    s.a[2] = Rat(3, 2);
    return s;
}

}  // namespace

FactorSeries factor_ch(const Factor& f) {
    switch (f.lam) {
        case 0: return exp_th(f.twist);
        case 1: return series_mul(exp_th(f.twist), omega_series());
        default: {
            // ch(S^2 Omega) = ch(Omega)^2 - ch(O(-3)) = 3 - 9h + (21/2)h^2
            FactorSeries s = series_mul(omega_series(), omega_series());
            FactorSeries m3 = exp_th(-3);
            for (int i = 0; i < 3; ++i) s.a[i] -= m3.a[i];
            return series_mul(exp_th(f.twist), s);
        }
    }
}

ChowClass box_ch(const FactorSeries& l, const FactorSeries& r) {
    ChowClass out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.c[i][j] = l.a[i] * r.a[j];
    return out;
}

static ChowClass ch_sum(const SumExpr& e) {
    ChowClass out;
    for (const auto& t : e) {
        ChowClass b = box_ch(factor_ch(t.left), factor_ch(t.right));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) out.c[i][j] += Rat(t.mult) * b.c[i][j];
    }
    return out;
}

ChowClass ch(const BundleExpr& e) {
    if (e.is_sum) return ch_sum(e.sum);
    const SesDecl& d = *e.ses;
    // ch is additive in exact sequences.
    switch (d.unknown) {
        case SesSlot::Mid: return ch_sum(d.sub) + ch_sum(d.quot);
        case SesSlot::Sub: return ch_sum(d.mid) - ch_sum(d.quot);
        default: return ch_sum(d.mid) - ch_sum(d.sub);
    }
}

ChowClass td_x() {
    FactorSeries td;
    td.a[0] = 1;
    td.a[1] = Rat(3, 2);
    td.a[2] = 1;
    return box_ch(td, td);
}

static long long chi_of_class(const ChowClass& c) {
    Rat v = (c * td_x()).degree();
    if (denominator(v) != 1)
        throw ContradictionError("chi is not an integer: engine bug");
    Int n = numerator(v);
    return n.convert_to<long long>();
}

long long chi(const BundleExpr& e) { return chi_of_class(ch(e)); }
long long chi_sum(const SumExpr& e) { return chi_of_class(ch_sum(e)); }

long long degree_of_x() {
    // 4th finite difference of the quartic chi(O(t,t)) equals 4! * leading coeff.
    long long v[5];
    for (int t = 0; t <= 4; ++t) v[t] = chi_sum(line_bundle(t, t));
    for (int k = 0; k < 4; ++k)
        for (int t = 0; t < 4 - k; ++t) v[t] = v[t + 1] - v[t];
    return v[0];
}

}  // namespace segre
